// Machinery for word-producing machines. Values of shape "output word
// plus payload, or undefined" form a monad; subsequential transducers
// are deterministic machines whose steps live in its Kleisli category.
// Minimization factors through trim, output normalization, and a Moore
// style merge, mirroring the reach/obs split on plain DFAs.
#pragma once

#include <map>

#include "automin/core.hpp"

namespace automin::kleisli {

struct Unit {
  bool operator==(const Unit&) const = default;
  auto operator<=>(const Unit&) const = default;
};

// Either undefined (bottom) or a word over the output alphabet paired
// with a payload. Default construction is bottom.
template <typename X>
class KleisliValue {
 public:
  KleisliValue() = default;
  KleisliValue(Word w, X x) : v_(std::in_place, std::move(w), std::move(x)) {}
  static KleisliValue bot() { return {}; }

  bool defined() const { return v_.has_value(); }
  const Word& word() const { return v_->first; }
  const X& value() const { return v_->second; }

  bool operator==(const KleisliValue&) const = default;
  auto operator<=>(const KleisliValue&) const = default;

 private:
  std::optional<std::pair<Word, X>> v_;
};

// Finite map between index sets 0..domain-1 and 0..codomain-1 whose
// values carry output words or are undefined.
struct KleisliMorphism {
  Alphabet output_alphabet;
  int domain = 0;
  int codomain = 0;
  std::vector<KleisliValue<int>> map;  // one entry per domain element

  bool operator==(const KleisliMorphism&) const = default;
  void validate() const;
};

// g after f. The word produced by f comes first in the concatenation.
KleisliMorphism compose(const KleisliMorphism& g, const KleisliMorphism& f);

// Deterministic transducer with possibly undefined steps: an optional
// initial state with a prompt word, a termination output per state, and
// per-symbol edges that each produce a word and move to a state.
struct SubseqTransducer {
  Alphabet input_alphabet;
  Alphabet output_alphabet;
  std::vector<State> states;  // declaration order, no duplicates
  KleisliValue<State> init;
  std::unordered_map<State, KleisliValue<Unit>> term;
  std::unordered_map<State, std::vector<KleisliValue<State>>> trans;

  const KleisliValue<State>& edge(State q, Symbol a) const {
    return trans.at(q)[a];
  }

  bool operator==(const SubseqTransducer&) const = default;
  void validate() const;
};

// Full output for w: init word, then one word per consumed symbol, then
// the termination word; undefined as soon as any piece is.
KleisliValue<Unit> transduce(const SubseqTransducer& t, const Word& w);

// The transducer seen as a deterministic machine over lifted states
// (pending output word plus state, or dead). The state space is infinite
// in general, so it is presented lazily through step/output.
class LiftedMachine {
 public:
  using LState = KleisliValue<State>;

  explicit LiftedMachine(SubseqTransducer t) : t_(std::move(t)) {}

  const LState& initial() const { return t_.init; }
  LState step(const LState& s, Symbol a) const;
  KleisliValue<Unit> output(const LState& s) const;
  KleisliValue<Unit> run(const Word& w) const;
  const SubseqTransducer& transducer() const { return t_; }

 private:
  SubseqTransducer t_;
};

LiftedMachine lift_to_set(const SubseqTransducer& t);

// A finite machine whose outputs are already Kleisli values embeds as a
// transducer with trivial edge words. The output alphabet is passed
// separately because the machine's values only carry symbol indices.
SubseqTransducer free_transducer(const DetMachine<KleisliValue<Unit>>& m,
                                 const Alphabet& output_alphabet);

// Longest common prefix of a nonempty collection.
Word lcp(const std::vector<Word>& words);

struct LengthLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Finite window of a function from input words to output words or
// bottom, keyed in length-then-lex order.
struct OutputTable {
  std::map<Word, KleisliValue<Unit>, LengthLexLess> entries;

  bool all_bot() const;
  // Some entry is defined and the lcp over defined entries is empty.
  bool is_irreducible() const;

  bool operator==(const OutputTable&) const = default;
};

// Prepend v to every defined entry.
OutputTable pstar(const Word& v, const OutputTable& table);

struct Reduced {
  Word prefix;
  OutputTable table;
};

// Split a table into its lcp and the irreducible remainder; pstar puts
// them back together. Rejects the nowhere-defined table.
Reduced reduce(const OutputTable& table);

// Surjective on payloads.
bool is_epi(const KleisliMorphism& f);
// Total, every word empty, injective on payloads.
bool is_mono(const KleisliMorphism& f);

struct Factorization {
  KleisliMorphism e;  // epi onto the image
  KleisliMorphism m;  // mono embedding the image
};

// f = m after e through the set of payloads f actually hits, listed in
// ascending order.
Factorization factorize(const KleisliMorphism& f);

// Unique diagonal for a commuting square g.e = m.f with e epi and m
// mono; both triangles are verified before returning.
KleisliMorphism diagonal_fill(const KleisliMorphism& e,
                              const KleisliMorphism& f,
                              const KleisliMorphism& g,
                              const KleisliMorphism& m);

// Drop states that are unreachable from init or cannot finish a defined
// output; surviving ids are kept. A nowhere-defined transducer trims to
// the empty one (no states, bottom init).
SubseqTransducer trim(const SubseqTransducer& t);
bool is_trim(const SubseqTransducer& t);

// Per state, the lcp of every output the state can still produce.
// Requires a trim transducer. Seeded with one shortest completion per
// state, then contracted to the fixpoint of the one-step lcp recurrence.
std::unordered_map<State, Word> maximal_outputs(const SubseqTransducer& t);

// Push outputs as early as possible: prepend the maximal output of the
// target into each edge (and the init prompt), strip it from the source.
// Requires a trim transducer; the result is onward.
SubseqTransducer normalize(const SubseqTransducer& t);
bool is_onward(const SubseqTransducer& t);

// Minimal transducer for t's semantics: trim, normalize, merge states
// with identical termination and edge signatures, renumber canonically.
SubseqTransducer choffrut_minimize(const SubseqTransducer& t);

// Exact structural bijection up to state renaming.
std::optional<std::unordered_map<State, State>> isomorphic(
    const SubseqTransducer& t1, const SubseqTransducer& t2);

// An input word on which the two semantics disagree (value or
// definedness); nullopt when equivalent. Decided on the normalized trim
// forms, where equivalence forces matching outputs edge by edge.
std::optional<Word> equiv_witness(const SubseqTransducer& t1,
                                  const SubseqTransducer& t2);
bool equiv(const SubseqTransducer& t1, const SubseqTransducer& t2);

}  // namespace automin::kleisli
