#include "automin/nfa.hpp"

#include <map>

namespace automin::nfa {

namespace {

bool sorted_unique(const std::vector<State>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

std::vector<State> image(const Nfa& n, const std::vector<State>& set,
                         Symbol a) {
  std::vector<State> result;
  for (State q : set) {
    const auto& targets = n.delta.at(q)[a];
    result.insert(result.end(), targets.begin(), targets.end());
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

bool intersects(const std::vector<State>& xs, const std::vector<State>& ys) {
  auto x = xs.begin();
  auto y = ys.begin();
  while (x != xs.end() && y != ys.end()) {
    if (*x == *y) return true;
    (*x < *y) ? ++x : ++y;
  }
  return false;
}

}  // namespace

void Nfa::validate() const {
  if (alphabet.size() == 0) throw std::invalid_argument("empty alphabet");
  std::vector<State> sorted = states;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate state id");
  auto known = [&](State q) {
    return std::binary_search(sorted.begin(), sorted.end(), q);
  };
  for (const auto* set : {&init, &final}) {
    if (!sorted_unique(*set))
      throw std::invalid_argument("state set not sorted");
    for (State q : *set)
      if (!known(q)) throw std::invalid_argument("state set member undeclared");
  }
  for (State q : states) {
    auto row = delta.find(q);
    if (row == delta.end() ||
        static_cast<int>(row->second.size()) != alphabet.size())
      throw std::invalid_argument("transition row missing or wrong arity");
    for (const auto& targets : row->second) {
      if (!sorted_unique(targets))
        throw std::invalid_argument("target list not sorted");
      for (State t : targets)
        if (!known(t))
          throw std::invalid_argument("transition target is not a state");
    }
  }
  if (delta.size() != states.size())
    throw std::invalid_argument("rows for undeclared states");
}

bool accepts(const Nfa& n, const Word& w) {
  std::vector<State> current = n.init;
  for (Symbol a : w) {
    if (!n.alphabet.contains(a))
      throw std::invalid_argument("word symbol outside the alphabet");
    current = image(n, current, a);
  }
  return intersects(current, n.final);
}

Nfa transpose(const Nfa& n) {
  Nfa r;
  r.alphabet = n.alphabet;
  r.states = n.states;
  r.init = n.final;
  r.final = n.init;
  for (State q : n.states)
    r.delta.emplace(
        q, std::vector<std::vector<State>>(n.alphabet.size()));
  for (State q : n.states) {
    const auto& row = n.delta.at(q);
    for (Symbol a = 0; a < n.alphabet.size(); ++a)
      for (State t : row[a]) r.delta.at(t)[a].push_back(q);
  }
  for (State q : n.states)
    for (auto& targets : r.delta.at(q)) std::sort(targets.begin(), targets.end());
  return r;
}

dfa::Dfa determinize(const Nfa& n) {
  n.validate();
  const int arity = n.alphabet.size();
  std::map<std::vector<State>, State> subset_id{{n.init, 0}};
  std::vector<std::vector<State>> subsets{n.init};
  dfa::Dfa d;
  d.alphabet = n.alphabet;
  d.init = 0;
  for (size_t i = 0; i < subsets.size(); ++i) {
    std::vector<State> current = subsets[i];
    std::vector<State> row(arity);
    for (Symbol a = 0; a < arity; ++a) {
      std::vector<State> succ = image(n, current, a);
      auto [it, fresh] =
          subset_id.emplace(succ, static_cast<State>(subsets.size()));
      if (fresh) subsets.push_back(std::move(succ));
      row[a] = it->second;
    }
    State id = static_cast<State>(i);
    d.states.push_back(id);
    d.next.emplace(id, std::move(row));
    d.out.emplace(id, intersects(current, n.final));
  }
  return d;
}

Nfa embed(const dfa::Dfa& m) {
  m.validate();
  Nfa n;
  n.alphabet = m.alphabet;
  n.states = m.states;
  n.init = {m.init};
  for (State q : m.states) {
    std::vector<std::vector<State>> row(m.alphabet.size());
    for (Symbol a = 0; a < m.alphabet.size(); ++a) row[a] = {m.step(q, a)};
    n.delta.emplace(q, std::move(row));
    if (m.output(q)) n.final.push_back(q);
  }
  std::sort(n.final.begin(), n.final.end());
  return n;
}

BackwardDfa codeterminize(const Nfa& n) {
  return {transpose(embed(determinize(transpose(n))))};
}

dfa::Dfa brzozowski(const Nfa& n) {
  return determinize(codeterminize(n).machine);
}

std::vector<State> accessible_states(const Nfa& n) {
  std::vector<State> frontier = n.init;
  std::unordered_set<State> seen(frontier.begin(), frontier.end());
  for (size_t i = 0; i < frontier.size(); ++i)
    for (const auto& targets : n.delta.at(frontier[i]))
      for (State t : targets)
        if (seen.insert(t).second) frontier.push_back(t);
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

std::vector<State> coaccessible_states(const Nfa& n) {
  return accessible_states(transpose(n));
}

}  // namespace automin::nfa
