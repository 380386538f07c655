// Reachability and observability quotients for total deterministic
// machines, and the DFA operations built from them. reach keeps the
// accessible part, obs merges output-equivalent states, and minimize is
// their composite with a canonical renumbering; the two quotients
// commute up to isomorphism.
#pragma once

#include <unordered_set>

#include "automin/core.hpp"

namespace automin::dfa {

using Dfa = DetMachine<bool>;

struct Partition {
  // Disjoint nonempty blocks covering all states. Each block is sorted
  // ascending and blocks are ordered by least member.
  std::vector<std::vector<State>> blocks;
  std::unordered_map<State, int> block_of;
};

// Restriction to the states reachable from init, BFS in symbol order.
// State ids survive unchanged.
template <typename Output>
DetMachine<Output> reach(const DetMachine<Output>& m) {
  std::unordered_set<State> seen{m.init};
  std::vector<State> frontier{m.init};
  for (size_t i = 0; i < frontier.size(); ++i)
    for (Symbol a = 0; a < m.alphabet.size(); ++a) {
      State t = m.step(frontier[i], a);
      if (seen.insert(t).second) frontier.push_back(t);
    }
  DetMachine<Output> r;
  r.alphabet = m.alphabet;
  r.init = m.init;
  for (State q : m.states)
    if (seen.count(q)) {
      r.states.push_back(q);
      r.next.emplace(q, m.next.at(q));
      r.out.emplace(q, m.out.at(q));
    }
  return r;
}

template <typename Output>
bool is_reachable(const DetMachine<Output>& m) {
  return reach(m).states.size() == m.states.size();
}

template <typename Output>
struct ObsResult {
  DetMachine<Output> machine;
  Partition partition;
};

// Quotient by the coarsest partition where merged states agree on out
// and have merged successors (Moore refinement; quadratic, plenty at the
// sizes this library targets). Quotient states are block indices.
template <typename Output>
ObsResult<Output> obs(const DetMachine<Output>& m) {
  const int arity = m.alphabet.size();
  std::unordered_map<State, int> block_of;
  size_t count = 0;
  {
    std::vector<State> reps;
    for (State q : m.states) {
      int b = -1;
      for (size_t i = 0; i < reps.size(); ++i)
        if (m.output(reps[i]) == m.output(q)) {
          b = static_cast<int>(i);
          break;
        }
      if (b < 0) {
        b = static_cast<int>(reps.size());
        reps.push_back(q);
      }
      block_of[q] = b;
    }
    count = reps.size();
  }
  for (;;) {
    using Signature = std::vector<int>;  // old block, then successor blocks
    std::vector<Signature> sigs;
    std::unordered_map<State, int> refined;
    for (State q : m.states) {
      Signature sig{block_of.at(q)};
      for (Symbol a = 0; a < arity; ++a)
        sig.push_back(block_of.at(m.step(q, a)));
      int b = -1;
      for (size_t i = 0; i < sigs.size(); ++i)
        if (sigs[i] == sig) {
          b = static_cast<int>(i);
          break;
        }
      if (b < 0) {
        b = static_cast<int>(sigs.size());
        sigs.push_back(sig);
      }
      refined[q] = b;
    }
    if (sigs.size() == count) break;  // refinement only ever splits
    count = sigs.size();
    block_of = std::move(refined);
  }

  Partition p;
  p.blocks.resize(count);
  std::vector<State> all = m.states;
  std::sort(all.begin(), all.end());
  for (State q : all) p.blocks[block_of.at(q)].push_back(q);
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  p.block_of.clear();
  for (int b = 0; b < static_cast<int>(p.blocks.size()); ++b)
    for (State q : p.blocks[b]) p.block_of[q] = b;

  DetMachine<Output> quotient;
  quotient.alphabet = m.alphabet;
  quotient.init = p.block_of.at(m.init);
  for (int b = 0; b < static_cast<int>(p.blocks.size()); ++b) {
    State rep = p.blocks[b].front();
    quotient.states.push_back(b);
    std::vector<State> row(arity);
    for (Symbol a = 0; a < arity; ++a) row[a] = p.block_of.at(m.step(rep, a));
    quotient.next.emplace(b, std::move(row));
    quotient.out.emplace(b, m.output(rep));
  }
  return {std::move(quotient), std::move(p)};
}

template <typename Output>
bool is_observable(const DetMachine<Output>& m) {
  return obs(m).partition.blocks.size() == m.states.size();
}

// BFS discovery order from init, symbols in alphabet order. Requires
// every state to be reachable.
template <typename Output>
std::unordered_map<State, State> bfs_numbering(const DetMachine<Output>& m) {
  std::unordered_map<State, State> order;
  std::vector<State> bfs{m.init};
  order[m.init] = 0;
  for (size_t i = 0; i < bfs.size(); ++i)
    for (Symbol a = 0; a < m.alphabet.size(); ++a) {
      State t = m.step(bfs[i], a);
      if (order.emplace(t, static_cast<State>(order.size())).second)
        bfs.push_back(t);
    }
  if (order.size() != m.states.size())
    throw std::invalid_argument("machine has unreachable states");
  return order;
}

template <typename Output>
DetMachine<Output> canonical_renumber(const DetMachine<Output>& m) {
  auto order = bfs_numbering(m);
  DetMachine<Output> r;
  r.alphabet = m.alphabet;
  r.init = 0;
  r.states.resize(m.states.size());
  for (int i = 0; i < static_cast<int>(r.states.size()); ++i) r.states[i] = i;
  for (State q : m.states) {
    State nq = order.at(q);
    std::vector<State> row(m.alphabet.size());
    for (Symbol a = 0; a < m.alphabet.size(); ++a)
      row[a] = order.at(m.step(q, a));
    r.next.emplace(nq, std::move(row));
    r.out.emplace(nq, m.output(q));
  }
  return r;
}

// Unique minimal machine for m's language: observability quotient of the
// reachable part, states renumbered canonically.
Dfa minimize(const Dfa& m);

// The same machine started after reading w.
Dfa residual(const Dfa& m, const Word& w);

// Shortest word (length, then symbol order) accepted by exactly one of
// the machines; nullopt when the languages coincide.
std::optional<Word> equiv_witness(const Dfa& m1, const Dfa& m2);
bool equiv(const Dfa& m1, const Dfa& m2);

// Witness that the minimal machine divides b: the morphism from reach(b)
// onto minimize(b) sending each state to its block.
MachineMorphism<bool> min_divides(const Dfa& b);

}  // namespace automin::dfa
