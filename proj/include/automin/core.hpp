// Core types shared by every machine kind: alphabets, words, total
// deterministic machines with an arbitrary output type, and machine
// morphisms. A DetMachine<bool> is a classical DFA; other output types
// reuse the same stepping and quotienting machinery.
#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace automin {

using Symbol = int;  // index into an Alphabet
using State = int;
using Word = std::vector<Symbol>;

// Finite ordered set of symbol names. Order is part of the identity: it
// fixes iteration order everywhere, which keeps every algorithm in the
// library deterministic.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& name(Symbol a) const;
  std::optional<Symbol> find(std::string_view name) const;
  const std::vector<std::string>& symbols() const { return symbols_; }
  bool contains(Symbol a) const { return a >= 0 && a < size(); }

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Symbol> index_;
};

inline bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Total deterministic machine: every state has a successor for every
// symbol and an output value. Partiality is modelled by the caller with
// an explicit sink state. State ids are arbitrary ints; `states` fixes
// their order. Restriction operations keep surviving ids unchanged.
template <typename Output>
struct DetMachine {
  Alphabet alphabet;
  std::vector<State> states;  // declaration order, no duplicates
  State init = 0;
  std::unordered_map<State, std::vector<State>> next;  // per state, per symbol
  std::unordered_map<State, Output> out;

  State step(State q, Symbol a) const { return next.at(q)[a]; }

  State step_word(State q, const Word& w) const {
    for (Symbol a : w) {
      if (!alphabet.contains(a))
        throw std::invalid_argument("word symbol outside the alphabet");
      q = step(q, a);
    }
    return q;
  }

  const Output& output(State q) const { return out.at(q); }

  bool operator==(const DetMachine& other) const {
    return alphabet == other.alphabet && states == other.states &&
           init == other.init && next == other.next && out == other.out;
  }

  // Throws std::invalid_argument when the machine is malformed.
  void validate() const;
};

template <typename Output>
void DetMachine<Output>::validate() const {
  if (alphabet.size() == 0) throw std::invalid_argument("empty alphabet");
  if (states.empty()) throw std::invalid_argument("machine has no states");
  std::vector<State> sorted = states;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate state id");
  auto known = [&](State q) {
    return std::binary_search(sorted.begin(), sorted.end(), q);
  };
  if (!known(init)) throw std::invalid_argument("init is not a state");
  for (State q : states) {
    auto row = next.find(q);
    if (row == next.end() ||
        static_cast<int>(row->second.size()) != alphabet.size())
      throw std::invalid_argument("transition row missing or wrong arity");
    for (State target : row->second)
      if (!known(target))
        throw std::invalid_argument("transition target is not a state");
    if (!out.count(q)) throw std::invalid_argument("output missing for state");
  }
  if (next.size() != states.size() || out.size() != states.size())
    throw std::invalid_argument("rows for undeclared states");
}

template <typename Output>
Output run(const DetMachine<Output>& m, const Word& w) {
  return m.output(m.step_word(m.init, w));
}

template <typename Output>
struct MachineMorphism {
  DetMachine<Output> source;
  DetMachine<Output> target;
  std::unordered_map<State, State> map;
};

// A morphism must send init to init, commute with every step, and
// preserve outputs; checked exhaustively over states x symbols.
template <typename Output>
bool check_morphism(const MachineMorphism<Output>& h) {
  const auto& s = h.source;
  const auto& t = h.target;
  if (!(s.alphabet == t.alphabet)) return false;
  for (State q : s.states)
    if (!h.map.count(q)) return false;
  auto in_target = [&](State q) {
    return std::find(t.states.begin(), t.states.end(), q) != t.states.end();
  };
  for (State q : s.states) {
    State hq = h.map.at(q);
    if (!in_target(hq)) return false;
    if (!(s.output(q) == t.output(hq))) return false;
    for (Symbol a = 0; a < s.alphabet.size(); ++a)
      if (h.map.at(s.step(q, a)) != t.step(hq, a)) return false;
  }
  if (h.map.at(s.init) != t.init) return false;
  return true;
}

// Returns the unique init-, step-, and out-preserving bijection when one
// exists. Synchronized BFS from the init pair forces the candidate on the
// reachable parts; leftover unreachable states are paired in declaration
// order, and the whole candidate is verified before being returned.
template <typename Output>
std::optional<std::unordered_map<State, State>> isomorphic(
    const DetMachine<Output>& m1, const DetMachine<Output>& m2) {
  if (!(m1.alphabet == m2.alphabet)) return std::nullopt;
  if (m1.states.size() != m2.states.size()) return std::nullopt;

  std::unordered_map<State, State> fwd, bwd;
  std::queue<std::pair<State, State>> queue;
  auto pair_up = [&](State p, State q) {
    auto it = fwd.find(p);
    if (it != fwd.end()) return it->second == q;
    auto jt = bwd.find(q);
    if (jt != bwd.end()) return false;
    fwd.emplace(p, q);
    bwd.emplace(q, p);
    queue.emplace(p, q);
    return true;
  };
  if (!pair_up(m1.init, m2.init)) return std::nullopt;
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop();
    for (Symbol a = 0; a < m1.alphabet.size(); ++a)
      if (!pair_up(m1.step(p, a), m2.step(q, a))) return std::nullopt;
  }

  std::vector<State> rest1, rest2;
  for (State p : m1.states)
    if (!fwd.count(p)) rest1.push_back(p);
  for (State q : m2.states)
    if (!bwd.count(q)) rest2.push_back(q);
  if (rest1.size() != rest2.size()) return std::nullopt;
  for (size_t i = 0; i < rest1.size(); ++i)
    fwd.emplace(rest1[i], rest2[i]);

  MachineMorphism<Output> candidate{m1, m2, fwd};
  if (!check_morphism(candidate)) return std::nullopt;
  std::unordered_map<State, State> seen;
  for (const auto& [p, q] : fwd)
    if (!seen.emplace(q, p).second) return std::nullopt;
  return fwd;
}

}  // namespace automin
