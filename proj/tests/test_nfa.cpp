#include "automin/nfa.hpp"

#include "doctest.h"
#include "support/generators.hpp"

using namespace automin;
namespace tt = automin::testing;

namespace {

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// minimal "ends with a" over {a, b}
dfa::Dfa ends_with_a() {
  return tt::make_dfa(2, {{1, 0}, {1, 0}}, {false, true});
}

}  // namespace

TEST_CASE("transpose reverses edges and swaps the two state sets") {
  nfa::Nfa path = tt::make_nfa(1, 2, {0}, {1}, {{0, 0, 1}});
  nfa::Nfa back = nfa::transpose(path);
  CHECK(back.init == std::vector<State>{1});
  CHECK(back.final == std::vector<State>{0});
  CHECK(back.delta.at(1)[0] == std::vector<State>{0});
  CHECK(back.delta.at(0)[0].empty());

  // accepts {ab} -> transpose accepts {ba}
  nfa::Nfa ab = tt::make_nfa(2, 3, {0}, {2}, {{0, 0, 1}, {1, 1, 2}});
  auto table = oracle::enumerate(nfa::transpose(ab), 2);
  for (const auto& [w, accepted] : table.entries)
    CHECK(accepted == (w == Word{1, 0}));

  tt::Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    nfa::Nfa n = tt::random_nfa(rng, 6);
    CHECK(nfa::transpose(nfa::transpose(n)) == n);
    Word w = tt::random_word(rng, 2, 6);
    CHECK(nfa::accepts(nfa::transpose(n), w) == nfa::accepts(n, reversed(w)));
  }
}

TEST_CASE("determinize explores reachable subsets in discovery order") {
  // one letter; delta(q0,a)={q0,q1}, q1 dead, final {q1}: accepts a+
  nfa::Nfa plus = tt::make_nfa(1, 2, {0}, {1}, {{0, 0, 0}, {0, 0, 1}});
  dfa::Dfa d = nfa::determinize(plus);
  REQUIRE(d.states.size() == 2);
  CHECK(d.init == 0);
  CHECK(!d.output(0));
  CHECK(d.output(1));
  CHECK(d.step(0, 0) == 1);
  CHECK(d.step(1, 0) == 1);
  for (const auto& [w, accepted] : oracle::enumerate(plus, 5).entries)
    CHECK(accepted == !w.empty());

  // empty initial set: a single rejecting sink
  nfa::Nfa dead = tt::make_nfa(2, 1, {}, {0}, {});
  dfa::Dfa sink = nfa::determinize(dead);
  CHECK(sink.states.size() == 1);
  for (const auto& [w, accepted] : oracle::enumerate(sink, 3).entries)
    CHECK(!accepted);
}

TEST_CASE("embed and determinize cancel on deterministic machines") {
  dfa::Dfa parity = tt::make_dfa(1, {{1}, {0}}, {false, true});
  nfa::Nfa n = nfa::embed(parity);
  CHECK(n.init == std::vector<State>{0});
  CHECK(n.final == std::vector<State>{1});
  for (State q : n.states)
    for (Symbol a = 0; a < n.alphabet.size(); ++a)
      CHECK(n.delta.at(q)[static_cast<size_t>(a)].size() == 1);
  CHECK(isomorphic(nfa::determinize(n), dfa::reach(parity)).has_value());

  tt::Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    dfa::Dfa m = tt::random_dfa(rng, 6);
    CHECK(dfa::equiv(nfa::determinize(nfa::embed(m)), m));
  }
}

TEST_CASE("codeterminize yields a backward deterministic machine") {
  // a backward deterministic co-reachable input comes back unchanged
  nfa::Nfa fixed = nfa::transpose(nfa::embed(ends_with_a()));
  CHECK(nfa::codeterminize(fixed).machine == fixed);

  nfa::Nfa ends_a = tt::make_nfa(2, 2, {0}, {1}, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  nfa::BackwardDfa co = nfa::codeterminize(ends_a);
  CHECK(oracle::enumerate(co.machine, 6) == oracle::enumerate(ends_a, 6));
  // backward determinism: unique final state, one a-predecessor per state
  nfa::Nfa flipped = nfa::transpose(co.machine);
  CHECK(flipped.init.size() == 1);
  for (State q : flipped.states)
    for (Symbol a = 0; a < flipped.alphabet.size(); ++a)
      CHECK(flipped.delta.at(q)[static_cast<size_t>(a)].size() == 1);

  nfa::Nfa dead = tt::make_nfa(1, 1, {0}, {}, {});
  nfa::Nfa gone = nfa::codeterminize(dead).machine;
  CHECK(gone.states.size() == 1);
  CHECK(gone.init.empty());
  for (const auto& [w, accepted] : oracle::enumerate(gone, 3).entries)
    CHECK(!accepted);
}

TEST_CASE("brzozowski lands on the minimal machine directly") {
  dfa::Dfa direct = nfa::brzozowski(nfa::embed(ends_with_a()));
  CHECK(isomorphic(direct, ends_with_a()).has_value());

  nfa::Nfa dead = tt::make_nfa(2, 1, {0}, {}, {});
  dfa::Dfa none = nfa::brzozowski(dead);
  CHECK(none.states.size() == 1);
  CHECK(!none.output(none.init));

  tt::Rng rng(33);
  for (int i = 0; i < 60; ++i) {
    nfa::Nfa n = tt::random_nfa(rng, 5);
    dfa::Dfa b = nfa::brzozowski(n);
    CHECK(isomorphic(b, dfa::minimize(nfa::determinize(n))).has_value());
    CHECK(dfa::is_reachable(b));
    CHECK(dfa::is_observable(b));
  }
}

TEST_CASE("accepts matches the determinized run") {
  nfa::Nfa touching = tt::make_nfa(1, 2, {0, 1}, {1}, {});
  CHECK(nfa::accepts(touching, {}));
  CHECK(!nfa::accepts(touching, {0}));

  tt::Rng rng(34);
  for (int i = 0; i < 25; ++i) {
    nfa::Nfa n = tt::random_nfa(rng, 6);
    dfa::Dfa d = nfa::determinize(n);
    for (const Word& w : oracle::words_up_to(n.alphabet, 8))
      CHECK(nfa::accepts(n, w) == run(d, w));
  }
}
