// Cross-checking oracles. These recompute answers by routes deliberately
// different from the algorithms under test: bounded word enumeration,
// residual counting through pairwise equivalence, and exhaustive merge
// search over all state partitions.
#pragma once

#include "automin/dfa.hpp"
#include "automin/kleisli.hpp"
#include "automin/nfa.hpp"

namespace automin::oracle {

// Every word up to the length bound, in length-then-lex order.
std::vector<Word> words_up_to(const Alphabet& alphabet, int bound);

struct LanguageTable {
  Alphabet alphabet;
  int bound = 0;
  std::vector<std::pair<Word, bool>> entries;  // length-then-lex order

  bool operator==(const LanguageTable&) const = default;
};

struct SemanticsTable {
  Alphabet alphabet;
  int bound = 0;
  std::vector<std::pair<Word, kleisli::KleisliValue<kleisli::Unit>>> entries;

  bool operator==(const SemanticsTable&) const = default;
};

LanguageTable enumerate(const dfa::Dfa& m, int bound);
LanguageTable enumerate(const nfa::Nfa& n, int bound);
SemanticsTable enumerate(const kleisli::SubseqTransducer& t, int bound);

// Number of distinct residual languages, counted by re-rooting the
// machine at each reachable state and comparing pairwise. Equals the
// state count of the minimal machine.
int nerode_count(const dfa::Dfa& m);

// Minimum block count over all state partitions of the normalized trim
// form of t whose quotient is well defined and equivalent to t. Capped
// at 5 input states (52 partitions); larger input is rejected.
int partition_search_min(const kleisli::SubseqTransducer& t);

}  // namespace automin::oracle
