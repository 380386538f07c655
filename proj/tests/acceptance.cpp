// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "automin/format.hpp"
#include "automin/oracle.hpp"
#include "support/generators.hpp"

using namespace automin;
namespace tt = automin::testing;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  [" << detail
            << "]\n";
  if (!ok) ++failures;
}

long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

kleisli::KleisliMorphism arrow(tt::Rng& rng, int dom, int cod) {
  kleisli::KleisliMorphism f;
  f.output_alphabet = tt::output_letters(2);
  f.domain = dom;
  f.codomain = cod;
  for (int i = 0; i < dom; ++i)
    f.map.push_back(tt::chance(rng, 3, 4)
                        ? kleisli::KleisliValue<int>(tt::random_word(rng, 2, 3),
                                                     tt::pick(rng, cod))
                        : kleisli::KleisliValue<int>());
  return f;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(AUTOMIN_GOLDEN_DIR) + "/" + name,
                   std::ios::binary);
  std::ostringstream bytes;
  bytes << in.rdbuf();
  return bytes.str();
}

void double_reversal() {
  auto start = Clock::now();
  bool ok = true;
  tt::Rng rng(101);
  const int rounds = 200;
  for (int i = 0; i < rounds; ++i) {
    nfa::Nfa m = tt::random_nfa(rng, 6, 30);
    dfa::Dfa direct = nfa::brzozowski(m);
    dfa::Dfa stepwise = dfa::minimize(nfa::determinize(m));
    ok = ok && isomorphic(direct, stepwise).has_value();
  }
  long t = ms_since(start);
  report("double reversal lands on the minimal dfa", ok && t < 10000,
         std::to_string(rounds) + " machines, " + std::to_string(t) +
             " ms, limit 10000 ms");
}

void residual_count() {
  bool ok = true;
  tt::Rng rng(102);
  const int rounds = 200;
  for (int i = 0; i < rounds; ++i) {
    dfa::Dfa m = tt::random_dfa(rng, 8);
    dfa::Dfa small = dfa::minimize(m);
    ok = ok && static_cast<int>(small.states.size()) == oracle::nerode_count(m);
    dfa::Dfa observable_first = dfa::reach(dfa::obs(m).machine);
    dfa::Dfa reachable_first = dfa::obs(dfa::reach(m)).machine;
    ok = ok && isomorphic(observable_first, reachable_first).has_value();
  }
  report("minimal state count equals the residual count",
         ok, std::to_string(rounds) + " machines, both reduction orders");
}

void transducer_minimization() {
  auto start = Clock::now();
  bool ok = true;
  tt::Rng rng(103);
  const int rounds = 100;
  for (int i = 0; i < rounds; ++i) {
    kleisli::SubseqTransducer t = tt::random_transducer(rng, 5, 3);
    kleisli::SubseqTransducer small = kleisli::choffrut_minimize(t);
    ok = ok && kleisli::equiv(t, small);
    ok = ok && (small.states.empty() || kleisli::is_onward(small));
    ok = ok &&
         kleisli::isomorphic(kleisli::choffrut_minimize(small), small)
             .has_value();
    ok = ok && static_cast<int>(small.states.size()) ==
                   oracle::partition_search_min(t);
  }
  long t = ms_since(start);
  report("transducer minimization is sound, onward, minimal, and idempotent",
         ok && t < 60000,
         std::to_string(rounds) + " machines against exhaustive merge search, " +
             std::to_string(t) + " ms, limit 60000 ms");
}

void factorization() {
  bool ok = true;
  tt::Rng rng(104);
  const int rounds = 500;
  for (int i = 0; i < rounds; ++i) {
    kleisli::KleisliMorphism f = tt::random_morphism(rng, 6, 3);
    kleisli::Factorization fz = kleisli::factorize(f);
    ok = ok && kleisli::compose(fz.m, fz.e) == f;
    ok = ok && kleisli::is_epi(fz.e) && kleisli::is_mono(fz.m);
  }
  int squares = 0;
  while (squares < 200) {
    kleisli::KleisliMorphism raw = arrow(rng, 1 + tt::pick(rng, 4),
                                         1 + tt::pick(rng, 4));
    kleisli::KleisliMorphism e = kleisli::factorize(raw).e;
    if (e.codomain == 0) continue;
    ++squares;
    int z2 = 1 + tt::pick(rng, 4);
    int offset = tt::pick(rng, 3);
    kleisli::KleisliMorphism d0 = arrow(rng, e.codomain, z2);
    kleisli::KleisliMorphism m;
    m.output_alphabet = e.output_alphabet;
    m.domain = z2;
    m.codomain = z2 + offset;
    for (int j = 0; j < z2; ++j) m.map.emplace_back(Word{}, j + offset);
    kleisli::KleisliMorphism d = kleisli::diagonal_fill(
        e, kleisli::compose(d0, e), kleisli::compose(m, d0), m);
    ok = ok && d == d0;
  }
  report("morphisms factor as epi then mono with a unique diagonal", ok,
         std::to_string(rounds) + " factorizations, " +
             std::to_string(squares) + " filled squares");
}

void semantics_transport() {
  bool ok = true;
  tt::Rng rng(105);
  const int transducers = 100, acceptors = 100;
  for (int i = 0; i < transducers; ++i) {
    kleisli::SubseqTransducer t = tt::random_transducer(rng, 5, 3);
    kleisli::LiftedMachine lifted = kleisli::lift_to_set(t);
    for (const Word& w : oracle::words_up_to(t.input_alphabet, 8))
      ok = ok && lifted.run(w) == kleisli::transduce(t, w);
  }
  for (int i = 0; i < acceptors; ++i) {
    nfa::Nfa n = tt::random_nfa(rng, 6, 30);
    dfa::Dfa d = nfa::determinize(n);
    for (const Word& w : oracle::words_up_to(n.alphabet, 8))
      ok = ok && nfa::accepts(n, w) == run(d, w);
  }
  report("lifted and powerset machines compute the original semantics", ok,
         std::to_string(transducers) + " transducers and " +
             std::to_string(acceptors) + " nfas, words up to length 8");
}

void table_reduction() {
  bool ok = true;
  tt::Rng rng(106);
  const int rounds = 500;
  Alphabet input = tt::letters(2);
  for (int i = 0; i < rounds; ++i) {
    kleisli::OutputTable k = tt::random_defined_table(rng, input, 2, 2, 3);
    kleisli::Reduced r = kleisli::reduce(k);
    ok = ok && kleisli::pstar(r.prefix, r.table) == k;
    ok = ok && r.table.is_irreducible();
    Word v = tt::random_word(rng, 2, 3);
    kleisli::Reduced rv = kleisli::reduce(kleisli::pstar(v, k));
    ok = ok && rv.prefix == concat(v, r.prefix) && rv.table == r.table;
  }
  report("table reduction and prefixing are mutually inverse", ok,
         std::to_string(rounds) + " tables, both composition orders");
}

void divisibility() {
  bool ok = true;
  tt::Rng rng(107);
  const int rounds = 50;
  for (int i = 0; i < rounds; ++i) {
    kleisli::SubseqTransducer t = tt::random_transducer(rng, 4, 3);
    kleisli::SubseqTransducer noisy = tt::noised_transducer(rng, t);
    kleisli::SubseqTransducer from = kleisli::trim(noisy);
    if (!from.states.empty()) from = kleisli::normalize(from);
    kleisli::SubseqTransducer onto = kleisli::choffrut_minimize(t);
    auto h = tt::class_map(from, onto);
    bool good = h.has_value() && tt::check_transducer_morphism(*h);
    if (good) {
      std::set<State> image;
      for (const auto& [q, hq] : h->map) image.insert(hq);
      good = image.size() == onto.states.size();
    }
    ok = ok && good;
  }
  report("the minimal transducer divides every equivalent machine", ok,
         std::to_string(rounds) + " noised pairs, onto morphism each time");
}

void file_roundtrip() {
  bool ok = true;
  tt::Rng rng(108);
  const int per_kind = 100;
  for (int i = 0; i < per_kind; ++i) {
    dfa::Dfa m = tt::random_dfa(rng, 6, 1 + tt::pick(rng, 3));
    std::string text = format::print(m);
    ok = ok && std::get<dfa::Dfa>(format::parse(text)) == m;
    ok = ok && format::print(format::parse(text)) == text;
  }
  for (int i = 0; i < per_kind; ++i) {
    nfa::Nfa n = tt::random_nfa(rng, 6, 40, 1 + tt::pick(rng, 3));
    std::string text = format::print(n);
    ok = ok && std::get<nfa::Nfa>(format::parse(text)) == n;
    ok = ok && format::print(format::parse(text)) == text;
  }
  for (int i = 0; i < per_kind; ++i) {
    kleisli::SubseqTransducer t = tt::random_transducer(
        rng, 5, 3, 1 + tt::pick(rng, 3), 1 + tt::pick(rng, 3));
    std::string text = format::print(t);
    ok = ok && std::get<kleisli::SubseqTransducer>(format::parse(text)) == t;
    ok = ok && format::print(format::parse(text)) == text;
  }
  for (const char* name : {"parity.aut", "ends_a.aut", "ends_ab.aut",
                           "duplicate.aut", "empty.aut"}) {
    std::string bytes = golden(name);
    ok = ok && !bytes.empty() && format::print(format::parse(bytes)) == bytes;
  }
  ok = ok && format::print(format::parse(golden("messy.aut"))) ==
                 golden("messy_expected.aut");
  report("machine files round-trip byte for byte", ok,
         std::to_string(3 * per_kind) + " random machines plus golden files");
}

}  // namespace

int main() {
  double_reversal();
  residual_count();
  transducer_minimization();
  factorization();
  semantics_transport();
  table_reduction();
  divisibility();
  file_roundtrip();
  if (failures > 0) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
