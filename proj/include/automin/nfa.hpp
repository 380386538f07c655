// Nondeterministic automata and the double-reversal route to the minimal
// DFA: determinize restricts the powerset machine to its reachable part,
// codeterminize is the same construction run against the arrows, and
// their composite lands on the minimal machine directly.
#pragma once

#include "automin/core.hpp"
#include "automin/dfa.hpp"

namespace automin::nfa {

struct Nfa {
  Alphabet alphabet;
  std::vector<State> states;  // declaration order, no duplicates
  std::vector<State> init;    // sorted ascending
  std::vector<State> final;   // sorted ascending
  // Full row per state, one sorted target list per symbol.
  std::unordered_map<State, std::vector<std::vector<State>>> delta;

  bool operator==(const Nfa& other) const {
    return alphabet == other.alphabet && states == other.states &&
           init == other.init && final == other.final && delta == other.delta;
  }

  void validate() const;
};

bool accepts(const Nfa& n, const Word& w);

// Reverse every arrow and swap init with final. An involution on the
// nose, not just up to isomorphism.
Nfa transpose(const Nfa& n);

// Reachable subset construction. Subset states are named by discovery
// order (BFS from the initial subset, symbols in alphabet order); the
// empty subset is an ordinary sink state when it comes up.
dfa::Dfa determinize(const Nfa& n);

// A DFA is an Nfa with singleton structure.
Nfa embed(const dfa::Dfa& m);

// Result of determinizing against the arrows: an Nfa that is
// backward-deterministic and backward-reachable.
struct BackwardDfa {
  Nfa machine;
};

BackwardDfa codeterminize(const Nfa& n);

// determinize after codeterminize: yields the minimal DFA for n's
// language without a separate minimization pass.
dfa::Dfa brzozowski(const Nfa& n);

// States reachable from init / states that can reach final, both as
// sorted lists. Used for trim diagnostics.
std::vector<State> accessible_states(const Nfa& n);
std::vector<State> coaccessible_states(const Nfa& n);

}  // namespace automin::nfa
