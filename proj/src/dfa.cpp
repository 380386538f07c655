#include "automin/dfa.hpp"

#include <map>
#include <queue>

namespace automin::dfa {

Dfa minimize(const Dfa& m) {
  m.validate();
  return canonical_renumber(obs(reach(m)).machine);
}

Dfa residual(const Dfa& m, const Word& w) {
  Dfa r = m;
  r.init = m.step_word(m.init, w);
  return r;
}

std::optional<Word> equiv_witness(const Dfa& m1, const Dfa& m2) {
  if (!(m1.alphabet == m2.alphabet))
    throw std::invalid_argument("alphabet mismatch");
  struct Node {
    State p, q;
    int parent;
    Symbol via;
  };
  std::vector<Node> nodes{{m1.init, m2.init, -1, -1}};
  std::map<std::pair<State, State>, bool> visited;
  visited[{m1.init, m2.init}] = true;
  for (size_t i = 0; i < nodes.size(); ++i) {
    auto [p, q, parent, via] = nodes[i];
    if (m1.output(p) != m2.output(q)) {
      Word w;
      for (int n = static_cast<int>(i); nodes[n].parent >= 0;
           n = nodes[n].parent)
        w.push_back(nodes[n].via);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Symbol a = 0; a < m1.alphabet.size(); ++a) {
      std::pair<State, State> succ{m1.step(p, a), m2.step(q, a)};
      if (visited.emplace(succ, true).second)
        nodes.push_back({succ.first, succ.second, static_cast<int>(i), a});
    }
  }
  return std::nullopt;
}

bool equiv(const Dfa& m1, const Dfa& m2) {
  return !equiv_witness(m1, m2).has_value();
}

MachineMorphism<bool> min_divides(const Dfa& b) {
  Dfa reachable = reach(b);
  auto quotiented = obs(reachable);
  auto order = bfs_numbering(quotiented.machine);
  std::unordered_map<State, State> map;
  for (State q : reachable.states)
    map[q] = order.at(quotiented.partition.block_of.at(q));
  return {std::move(reachable), canonical_renumber(quotiented.machine),
          std::move(map)};
}

}  // namespace automin::dfa
