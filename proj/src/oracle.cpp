#include "automin/oracle.hpp"

#include <unordered_set>

namespace automin::oracle {

std::vector<Word> words_up_to(const Alphabet& alphabet, int bound) {
  if (bound < 0) throw std::invalid_argument("negative enumeration bound");
  std::vector<Word> all{Word{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= bound; ++len) {
    std::vector<Word> next;
    next.reserve(layer.size() * static_cast<size_t>(alphabet.size()));
    for (const Word& w : layer)
      for (Symbol a = 0; a < alphabet.size(); ++a) {
        Word extended = w;
        extended.push_back(a);
        next.push_back(std::move(extended));
      }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

LanguageTable enumerate(const dfa::Dfa& m, int bound) {
  m.validate();
  LanguageTable t{m.alphabet, bound, {}};
  for (Word& w : words_up_to(m.alphabet, bound)) {
    bool accepted = run(m, w);
    t.entries.emplace_back(std::move(w), accepted);
  }
  return t;
}

LanguageTable enumerate(const nfa::Nfa& n, int bound) {
  n.validate();
  LanguageTable t{n.alphabet, bound, {}};
  for (Word& w : words_up_to(n.alphabet, bound)) {
    bool accepted = nfa::accepts(n, w);
    t.entries.emplace_back(std::move(w), accepted);
  }
  return t;
}

SemanticsTable enumerate(const kleisli::SubseqTransducer& t, int bound) {
  t.validate();
  SemanticsTable table{t.input_alphabet, bound, {}};
  for (Word& w : words_up_to(t.input_alphabet, bound)) {
    auto value = kleisli::transduce(t, w);
    table.entries.emplace_back(std::move(w), std::move(value));
  }
  return table;
}

int nerode_count(const dfa::Dfa& m) {
  m.validate();
  std::vector<State> reachable{m.init};
  std::unordered_set<State> seen{m.init};
  for (size_t i = 0; i < reachable.size(); ++i)
    for (Symbol a = 0; a < m.alphabet.size(); ++a) {
      State t = m.step(reachable[i], a);
      if (seen.insert(t).second) reachable.push_back(t);
    }
  std::vector<State> reps;
  for (State q : reachable) {
    dfa::Dfa rooted_q = m;
    rooted_q.init = q;
    bool fresh = true;
    for (State r : reps) {
      dfa::Dfa rooted_r = m;
      rooted_r.init = r;
      if (dfa::equiv(rooted_q, rooted_r)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(q);
  }
  return static_cast<int>(reps.size());
}

namespace {

using kleisli::KleisliValue;
using kleisli::SubseqTransducer;
using kleisli::Unit;

// Quotient by the partition when every block agrees on termination and,
// per symbol, on edge definedness, edge word, and successor block.
std::optional<SubseqTransducer> quotient_if_congruence(
    const SubseqTransducer& n, const std::vector<int>& block_of, int blocks) {
  const int arity = n.input_alphabet.size();
  std::unordered_map<State, int> position;
  for (size_t i = 0; i < n.states.size(); ++i)
    position[n.states[i]] = static_cast<int>(i);

  std::vector<int> rep(static_cast<size_t>(blocks), -1);
  for (size_t i = 0; i < n.states.size(); ++i)
    if (rep[static_cast<size_t>(block_of[i])] < 0)
      rep[static_cast<size_t>(block_of[i])] = static_cast<int>(i);

  for (size_t i = 0; i < n.states.size(); ++i) {
    State q = n.states[i];
    State r = n.states[static_cast<size_t>(rep[static_cast<size_t>(
        block_of[i])])];
    if (!(n.term.at(q) == n.term.at(r))) return std::nullopt;
    for (Symbol a = 0; a < arity; ++a) {
      const auto& eq = n.edge(q, a);
      const auto& er = n.edge(r, a);
      if (eq.defined() != er.defined()) return std::nullopt;
      if (!eq.defined()) continue;
      if (eq.word() != er.word()) return std::nullopt;
      if (block_of[static_cast<size_t>(position.at(eq.value()))] !=
          block_of[static_cast<size_t>(position.at(er.value()))])
        return std::nullopt;
    }
  }

  SubseqTransducer quotient;
  quotient.input_alphabet = n.input_alphabet;
  quotient.output_alphabet = n.output_alphabet;
  quotient.states.resize(static_cast<size_t>(blocks));
  for (int b = 0; b < blocks; ++b)
    quotient.states[static_cast<size_t>(b)] = b;
  quotient.init = {n.init.word(),
                   block_of[static_cast<size_t>(
                       position.at(n.init.value()))]};
  for (int b = 0; b < blocks; ++b) {
    State source = n.states[static_cast<size_t>(rep[static_cast<size_t>(b)])];
    quotient.term.emplace(b, n.term.at(source));
    std::vector<KleisliValue<State>> row;
    row.reserve(static_cast<size_t>(arity));
    for (Symbol a = 0; a < arity; ++a) {
      const auto& e = n.edge(source, a);
      row.push_back(e.defined()
                        ? KleisliValue<State>(
                              e.word(),
                              block_of[static_cast<size_t>(
                                  position.at(e.value()))])
                        : KleisliValue<State>());
    }
    quotient.trans.emplace(b, std::move(row));
  }
  return quotient;
}

}  // namespace

int partition_search_min(const kleisli::SubseqTransducer& t) {
  t.validate();
  if (t.states.size() > 5)
    throw std::invalid_argument("partition search is capped at 5 states");
  SubseqTransducer n = kleisli::trim(t);
  if (n.states.empty()) return 0;
  n = kleisli::normalize(n);

  const int k = static_cast<int>(n.states.size());
  int best = k;
  // restricted growth strings enumerate every partition exactly once
  std::vector<int> rgs(static_cast<size_t>(k), 0);
  auto search = [&](auto&& self, int i, int used) -> void {
    if (i == k) {
      if (used >= best) return;
      auto quotient = quotient_if_congruence(n, rgs, used);
      if (quotient && kleisli::equiv(n, *quotient)) best = used;
      return;
    }
    for (int b = 0; b <= used && b <= i; ++b) {
      rgs[static_cast<size_t>(i)] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  search(search, 0, 0);
  return best;
}

}  // namespace automin::oracle
