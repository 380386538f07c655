#include "automin/kleisli.hpp"

#include <set>
#include <unordered_set>

namespace automin::kleisli {

namespace {

// precondition elsewhere guarantees p is a prefix; violation means a bug
// in the normalization pipeline, not bad input
Word strip_prefix(const Word& p, const Word& w) {
  if (!is_prefix(p, w))
    throw std::logic_error("output normalization stripped a non-prefix");
  return Word(w.begin() + static_cast<long>(p.size()), w.end());
}

SubseqTransducer empty_like(const SubseqTransducer& t) {
  SubseqTransducer e;
  e.input_alphabet = t.input_alphabet;
  e.output_alphabet = t.output_alphabet;
  return e;
}

struct PathNode {
  int parent;
  Symbol via;
};

Word rebuild_path(const std::vector<PathNode>& nodes, size_t i) {
  Word w;
  for (size_t n = i; nodes[n].parent >= 0;
       n = static_cast<size_t>(nodes[n].parent))
    w.push_back(nodes[n].via);
  std::reverse(w.begin(), w.end());
  return w;
}

// Shortest input word with a defined run from q into a defined
// termination. Exists for every state of a trim transducer.
Word shortest_domain_word(const SubseqTransducer& t, State q) {
  std::vector<PathNode> nodes{{-1, -1}};
  std::vector<State> frontier{q};
  std::unordered_set<State> seen{q};
  for (size_t i = 0; i < frontier.size(); ++i) {
    State p = frontier[i];
    if (t.term.at(p).defined()) return rebuild_path(nodes, i);
    for (Symbol a = 0; a < t.input_alphabet.size(); ++a) {
      const auto& e = t.edge(p, a);
      if (e.defined() && seen.insert(e.value()).second) {
        nodes.push_back({static_cast<int>(i), a});
        frontier.push_back(e.value());
      }
    }
  }
  throw std::logic_error("no completion from a supposedly useful state");
}

// Shortest continuation in exactly one of the two domains, starting from
// the given states; nullopt when the domains coincide. State -1 marks a
// run that has already fallen out of its domain.
std::optional<Word> domain_diff_witness(const SubseqTransducer& t1, State s1,
                                        const SubseqTransducer& t2,
                                        State s2) {
  std::vector<PathNode> nodes{{-1, -1}};
  std::vector<std::pair<State, State>> frontier{{s1, s2}};
  std::set<std::pair<State, State>> seen{{s1, s2}};
  for (size_t i = 0; i < frontier.size(); ++i) {
    auto [p, q] = frontier[i];
    bool in1 = p >= 0 && t1.term.at(p).defined();
    bool in2 = q >= 0 && t2.term.at(q).defined();
    if (in1 != in2) return rebuild_path(nodes, i);
    for (Symbol a = 0; a < t1.input_alphabet.size(); ++a) {
      State p2 = -1, q2 = -1;
      if (p >= 0) {
        const auto& e = t1.edge(p, a);
        if (e.defined()) p2 = e.value();
      }
      if (q >= 0) {
        const auto& e = t2.edge(q, a);
        if (e.defined()) q2 = e.value();
      }
      if (p2 < 0 && q2 < 0) continue;
      if (seen.emplace(p2, q2).second) {
        nodes.push_back({static_cast<int>(i), a});
        frontier.push_back({p2, q2});
      }
    }
  }
  return std::nullopt;
}

// Shortest domain word from s whose full produced output is empty or
// starts with a letter other than b. Exists whenever the lcp of the
// outputs from s is empty, which normalization guarantees.
Word first_letter_witness(const SubseqTransducer& t, State s, Symbol b) {
  std::vector<PathNode> nodes{{-1, -1}};
  std::vector<std::pair<State, int>> frontier{{s, -1}};  // -1: output empty
  std::set<std::pair<State, int>> seen{{s, -1}};
  for (size_t i = 0; i < frontier.size(); ++i) {
    auto [p, produced] = frontier[i];
    const auto& z = t.term.at(p);
    if (z.defined()) {
      int first = produced;
      if (first < 0 && !z.word().empty()) first = z.word().front();
      if (first < 0 || first != b) return rebuild_path(nodes, i);
    }
    for (Symbol a = 0; a < t.input_alphabet.size(); ++a) {
      const auto& e = t.edge(p, a);
      if (!e.defined()) continue;
      int next = produced;
      if (next < 0 && !e.word().empty()) next = e.word().front();
      if (seen.emplace(e.value(), next).second) {
        nodes.push_back({static_cast<int>(i), a});
        frontier.push_back({e.value(), next});
      }
    }
  }
  throw std::logic_error(
      "separating continuation must exist on a normalized machine");
}

// Two runs with equal output so far just produced w1 versus w2. Build a
// continuation from (s1, s2) on which the full semantics disagree.
Word resolve_output_mismatch(const SubseqTransducer& n1, State s1,
                             const SubseqTransducer& n2, State s2,
                             const Word& w1, const Word& w2, Word prefix) {
  size_t k = 0;
  while (k < w1.size() && k < w2.size() && w1[k] == w2[k]) ++k;
  Word d1(w1.begin() + static_cast<long>(k), w1.end());
  Word d2(w2.begin() + static_cast<long>(k), w2.end());
  if (auto dd = domain_diff_witness(n1, s1, n2, s2))
    return concat(std::move(prefix), *dd);
  // the domains from here coincide; any continuation keeps the
  // divergence when both sides differ immediately
  if (!d1.empty() && !d2.empty())
    return concat(std::move(prefix), shortest_domain_word(n1, s1));
  // one side lags by d: some continuation refuses to reproduce d
  if (d1.empty())
    return concat(std::move(prefix), first_letter_witness(n1, s1, d2.front()));
  return concat(std::move(prefix), first_letter_witness(n2, s2, d1.front()));
}

}  // namespace

void KleisliMorphism::validate() const {
  if (output_alphabet.size() == 0)
    throw std::invalid_argument("empty output alphabet");
  if (domain < 0 || codomain < 0)
    throw std::invalid_argument("negative carrier size");
  if (static_cast<int>(map.size()) != domain)
    throw std::invalid_argument("map size disagrees with the domain");
  for (const auto& v : map) {
    if (!v.defined()) continue;
    if (v.value() < 0 || v.value() >= codomain)
      throw std::invalid_argument("value outside the codomain");
    for (Symbol b : v.word())
      if (!output_alphabet.contains(b))
        throw std::invalid_argument("word symbol outside the output alphabet");
  }
}

KleisliMorphism compose(const KleisliMorphism& g, const KleisliMorphism& f) {
  f.validate();
  g.validate();
  if (f.codomain != g.domain)
    throw std::invalid_argument("composition carriers do not match");
  if (!(f.output_alphabet == g.output_alphabet))
    throw std::invalid_argument("alphabet mismatch");
  KleisliMorphism r{f.output_alphabet, f.domain, g.codomain, {}};
  r.map.reserve(static_cast<size_t>(f.domain));
  for (const auto& fv : f.map) {
    if (!fv.defined()) {
      r.map.emplace_back();
      continue;
    }
    const auto& gv = g.map[static_cast<size_t>(fv.value())];
    if (!gv.defined())
      r.map.emplace_back();
    else
      r.map.emplace_back(concat(fv.word(), gv.word()), gv.value());
  }
  return r;
}

void SubseqTransducer::validate() const {
  if (input_alphabet.size() == 0 || output_alphabet.size() == 0)
    throw std::invalid_argument("empty alphabet");
  std::vector<State> sorted = states;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate state id");
  auto known = [&](State q) {
    return std::binary_search(sorted.begin(), sorted.end(), q);
  };
  auto check_word = [&](const Word& w) {
    for (Symbol b : w)
      if (!output_alphabet.contains(b))
        throw std::invalid_argument("word symbol outside the output alphabet");
  };
  if (init.defined()) {
    if (!known(init.value()))
      throw std::invalid_argument("init is not a state");
    check_word(init.word());
  }
  for (State q : states) {
    auto z = term.find(q);
    if (z == term.end())
      throw std::invalid_argument("termination missing for state");
    if (z->second.defined()) check_word(z->second.word());
    auto row = trans.find(q);
    if (row == trans.end() ||
        static_cast<int>(row->second.size()) != input_alphabet.size())
      throw std::invalid_argument("transition row missing or wrong arity");
    for (const auto& e : row->second) {
      if (!e.defined()) continue;
      if (!known(e.value()))
        throw std::invalid_argument("transition target is not a state");
      check_word(e.word());
    }
  }
  if (term.size() != states.size() || trans.size() != states.size())
    throw std::invalid_argument("rows for undeclared states");
}

KleisliValue<Unit> transduce(const SubseqTransducer& t, const Word& w) {
  for (Symbol a : w)
    if (!t.input_alphabet.contains(a))
      throw std::invalid_argument("word symbol outside the alphabet");
  if (!t.init.defined()) return {};
  Word out = t.init.word();
  State q = t.init.value();
  for (Symbol a : w) {
    const auto& e = t.edge(q, a);
    if (!e.defined()) return {};
    out = concat(std::move(out), e.word());
    q = e.value();
  }
  const auto& z = t.term.at(q);
  if (!z.defined()) return {};
  return {concat(std::move(out), z.word()), Unit{}};
}

LiftedMachine::LState LiftedMachine::step(const LState& s, Symbol a) const {
  if (!t_.input_alphabet.contains(a))
    throw std::invalid_argument("word symbol outside the alphabet");
  if (!s.defined()) return {};
  const auto& e = t_.edge(s.value(), a);
  if (!e.defined()) return {};
  return {concat(s.word(), e.word()), e.value()};
}

KleisliValue<Unit> LiftedMachine::output(const LState& s) const {
  if (!s.defined()) return {};
  const auto& z = t_.term.at(s.value());
  if (!z.defined()) return {};
  return {concat(s.word(), z.word()), Unit{}};
}

KleisliValue<Unit> LiftedMachine::run(const Word& w) const {
  LState s = initial();
  for (Symbol a : w) s = step(s, a);
  return output(s);
}

LiftedMachine lift_to_set(const SubseqTransducer& t) {
  t.validate();
  return LiftedMachine(t);
}

SubseqTransducer free_transducer(const DetMachine<KleisliValue<Unit>>& m,
                                 const Alphabet& output_alphabet) {
  m.validate();
  SubseqTransducer t;
  t.input_alphabet = m.alphabet;
  t.output_alphabet = output_alphabet;
  t.states = m.states;
  t.init = {{}, m.init};
  for (State q : m.states) {
    t.term.emplace(q, m.output(q));
    std::vector<KleisliValue<State>> row;
    row.reserve(static_cast<size_t>(m.alphabet.size()));
    for (Symbol a = 0; a < m.alphabet.size(); ++a)
      row.emplace_back(Word{}, m.step(q, a));
    t.trans.emplace(q, std::move(row));
  }
  t.validate();  // also checks the outputs against the output alphabet
  return t;
}

Word lcp(const std::vector<Word>& words) {
  if (words.empty()) throw std::invalid_argument("lcp of an empty collection");
  Word p = words.front();
  for (size_t i = 1; i < words.size() && !p.empty(); ++i) {
    const Word& w = words[i];
    size_t k = 0;
    while (k < p.size() && k < w.size() && p[k] == w[k]) ++k;
    p.resize(k);
  }
  return p;
}

bool OutputTable::all_bot() const {
  for (const auto& [w, v] : entries)
    if (v.defined()) return false;
  return true;
}

bool OutputTable::is_irreducible() const {
  std::vector<Word> defined;
  for (const auto& [w, v] : entries)
    if (v.defined()) defined.push_back(v.word());
  return !defined.empty() && lcp(defined).empty();
}

OutputTable pstar(const Word& v, const OutputTable& table) {
  OutputTable r;
  for (const auto& [w, val] : table.entries)
    r.entries.emplace(w, val.defined()
                             ? KleisliValue<Unit>(concat(v, val.word()), Unit{})
                             : KleisliValue<Unit>());
  return r;
}

Reduced reduce(const OutputTable& table) {
  std::vector<Word> defined;
  for (const auto& [w, v] : table.entries)
    if (v.defined()) defined.push_back(v.word());
  if (defined.empty())
    throw std::invalid_argument("reduce of a nowhere-defined table");
  Word p = lcp(defined);
  OutputTable rest;
  for (const auto& [w, v] : table.entries)
    rest.entries.emplace(
        w, v.defined()
               ? KleisliValue<Unit>(strip_prefix(p, v.word()), Unit{})
               : KleisliValue<Unit>());
  return {std::move(p), std::move(rest)};
}

bool is_epi(const KleisliMorphism& f) {
  f.validate();
  std::vector<bool> hit(static_cast<size_t>(f.codomain), false);
  for (const auto& v : f.map)
    if (v.defined()) hit[static_cast<size_t>(v.value())] = true;
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

bool is_mono(const KleisliMorphism& f) {
  f.validate();
  std::vector<bool> used(static_cast<size_t>(f.codomain), false);
  for (const auto& v : f.map) {
    if (!v.defined() || !v.word().empty()) return false;
    if (used[static_cast<size_t>(v.value())]) return false;
    used[static_cast<size_t>(v.value())] = true;
  }
  return true;
}

Factorization factorize(const KleisliMorphism& f) {
  f.validate();
  std::vector<int> image;
  for (const auto& v : f.map)
    if (v.defined()) image.push_back(v.value());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::unordered_map<int, int> index;
  for (size_t i = 0; i < image.size(); ++i)
    index[image[i]] = static_cast<int>(i);

  KleisliMorphism e{f.output_alphabet, f.domain,
                    static_cast<int>(image.size()), {}};
  for (const auto& v : f.map) {
    if (v.defined())
      e.map.emplace_back(v.word(), index.at(v.value()));
    else
      e.map.emplace_back();
  }
  KleisliMorphism m{f.output_alphabet, static_cast<int>(image.size()),
                    f.codomain, {}};
  for (int y : image) m.map.emplace_back(Word{}, y);
  return {std::move(e), std::move(m)};
}

KleisliMorphism diagonal_fill(const KleisliMorphism& e,
                              const KleisliMorphism& f,
                              const KleisliMorphism& g,
                              const KleisliMorphism& m) {
  for (const auto* h : {&e, &f, &g, &m}) h->validate();
  if (e.domain != f.domain || g.domain != e.codomain ||
      m.domain != f.codomain || g.codomain != m.codomain)
    throw std::invalid_argument("square carriers do not match");
  if (!(e.output_alphabet == f.output_alphabet) ||
      !(e.output_alphabet == g.output_alphabet) ||
      !(e.output_alphabet == m.output_alphabet))
    throw std::invalid_argument("alphabet mismatch");
  if (!is_epi(e)) throw std::invalid_argument("left leg is not an epi");
  if (!is_mono(m)) throw std::invalid_argument("right leg is not a mono");
  if (!(compose(g, e) == compose(m, f)))
    throw std::invalid_argument("square does not commute");

  KleisliMorphism d{e.output_alphabet, e.codomain, f.codomain, {}};
  for (int y = 0; y < e.codomain; ++y) {
    const auto& gy = g.map[static_cast<size_t>(y)];
    if (!gy.defined()) {
      d.map.emplace_back();
      continue;
    }
    int x = -1;
    for (int i = 0; i < e.domain; ++i) {
      const auto& ev = e.map[static_cast<size_t>(i)];
      if (ev.defined() && ev.value() == y) {
        x = i;
        break;
      }
    }
    if (x < 0) throw std::logic_error("epi lost a preimage");
    const auto& fx = f.map[static_cast<size_t>(x)];
    if (!fx.defined())
      throw std::logic_error("diagonal preimage vanished under f");
    d.map.emplace_back(gy.word(), fx.value());
  }
  if (!(compose(d, e) == f) || !(compose(m, d) == g))
    throw std::logic_error("diagonal failed to split the square");
  return d;
}

SubseqTransducer trim(const SubseqTransducer& t) {
  t.validate();
  if (!t.init.defined()) return empty_like(t);

  std::unordered_set<State> reachable{t.init.value()};
  std::vector<State> frontier{t.init.value()};
  for (size_t i = 0; i < frontier.size(); ++i)
    for (Symbol a = 0; a < t.input_alphabet.size(); ++a) {
      const auto& e = t.edge(frontier[i], a);
      if (e.defined() && reachable.insert(e.value()).second)
        frontier.push_back(e.value());
    }

  std::unordered_map<State, std::vector<State>> rev;
  std::unordered_set<State> useful;
  std::vector<State> back;
  for (State q : t.states) {
    if (t.term.at(q).defined()) {
      useful.insert(q);
      back.push_back(q);
    }
    for (Symbol a = 0; a < t.input_alphabet.size(); ++a) {
      const auto& e = t.edge(q, a);
      if (e.defined()) rev[e.value()].push_back(q);
    }
  }
  for (size_t i = 0; i < back.size(); ++i) {
    auto it = rev.find(back[i]);
    if (it == rev.end()) continue;
    for (State q : it->second)
      if (useful.insert(q).second) back.push_back(q);
  }

  auto keep = [&](State q) { return reachable.count(q) && useful.count(q); };
  if (!keep(t.init.value())) return empty_like(t);

  SubseqTransducer r = empty_like(t);
  r.init = t.init;
  for (State q : t.states) {
    if (!keep(q)) continue;
    r.states.push_back(q);
    r.term.emplace(q, t.term.at(q));
    std::vector<KleisliValue<State>> row;
    row.reserve(static_cast<size_t>(t.input_alphabet.size()));
    for (Symbol a = 0; a < t.input_alphabet.size(); ++a) {
      const auto& e = t.edge(q, a);
      row.push_back(e.defined() && keep(e.value()) ? e
                                                   : KleisliValue<State>());
    }
    r.trans.emplace(q, std::move(row));
  }
  return r;
}

bool is_trim(const SubseqTransducer& t) { return trim(t) == t; }

std::unordered_map<State, Word> maximal_outputs(const SubseqTransducer& t) {
  t.validate();
  std::unordered_map<State, Word> m;
  if (t.states.empty()) return m;
  if (!t.init.defined())
    throw std::invalid_argument("transducer is not trim");

  std::unordered_set<State> reachable{t.init.value()};
  std::vector<State> frontier{t.init.value()};
  for (size_t i = 0; i < frontier.size(); ++i)
    for (Symbol a = 0; a < t.input_alphabet.size(); ++a) {
      const auto& e = t.edge(frontier[i], a);
      if (e.defined() && reachable.insert(e.value()).second)
        frontier.push_back(e.value());
    }
  if (reachable.size() != t.states.size())
    throw std::invalid_argument("transducer is not trim");

  // seeds: the output of one shortest completion per state
  std::unordered_map<State, std::vector<std::pair<State, Symbol>>> rev;
  for (State q : t.states)
    for (Symbol a = 0; a < t.input_alphabet.size(); ++a) {
      const auto& e = t.edge(q, a);
      if (e.defined()) rev[e.value()].emplace_back(q, a);
    }
  std::vector<State> back;
  for (State q : t.states)
    if (t.term.at(q).defined()) {
      m.emplace(q, t.term.at(q).word());
      back.push_back(q);
    }
  for (size_t i = 0; i < back.size(); ++i) {
    auto it = rev.find(back[i]);
    if (it == rev.end()) continue;
    for (auto [q, a] : it->second)
      if (!m.count(q)) {
        m.emplace(q, concat(t.edge(q, a).word(), m.at(back[i])));
        back.push_back(q);
      }
  }
  if (m.size() != t.states.size())
    throw std::invalid_argument("transducer is not trim");

  // contract to the fixpoint of m(q) = lcp(term word, edge word + m(next))
  for (bool changed = true; changed;) {
    changed = false;
    for (State q : t.states) {
      std::vector<Word> branches;
      if (t.term.at(q).defined()) branches.push_back(t.term.at(q).word());
      for (Symbol a = 0; a < t.input_alphabet.size(); ++a) {
        const auto& e = t.edge(q, a);
        if (e.defined()) branches.push_back(concat(e.word(), m.at(e.value())));
      }
      Word refined = lcp(branches);
      if (refined != m.at(q)) {
        m.at(q) = std::move(refined);
        changed = true;
      }
    }
  }
  return m;
}

SubseqTransducer normalize(const SubseqTransducer& t) {
  auto maximal = maximal_outputs(t);  // validates trimness
  SubseqTransducer r = t;
  if (t.states.empty()) return r;
  r.init = {concat(t.init.word(), maximal.at(t.init.value())),
            t.init.value()};
  for (State q : t.states) {
    const Word& drop = maximal.at(q);
    if (t.term.at(q).defined())
      r.term.at(q) = {strip_prefix(drop, t.term.at(q).word()), Unit{}};
    for (Symbol a = 0; a < t.input_alphabet.size(); ++a) {
      const auto& e = t.edge(q, a);
      if (e.defined())
        r.trans.at(q)[static_cast<size_t>(a)] = {
            strip_prefix(drop, concat(e.word(), maximal.at(e.value()))),
            e.value()};
    }
  }
  return r;
}

bool is_onward(const SubseqTransducer& t) {
  for (const auto& [q, w] : maximal_outputs(t))
    if (!w.empty()) return false;
  return true;
}

SubseqTransducer choffrut_minimize(const SubseqTransducer& t) {
  SubseqTransducer n = trim(t);
  if (n.states.empty()) return n;
  n = normalize(n);

  const int arity = n.input_alphabet.size();
  std::unordered_map<State, int> block_of;
  size_t count = 0;
  {
    std::vector<State> reps;
    for (State q : n.states) {
      int b = -1;
      for (size_t i = 0; i < reps.size(); ++i)
        if (n.term.at(reps[i]) == n.term.at(q)) {
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
    using Signature = std::pair<int, std::vector<KleisliValue<int>>>;
    std::vector<Signature> sigs;
    std::unordered_map<State, int> refined;
    for (State q : n.states) {
      Signature sig{block_of.at(q), {}};
      for (Symbol a = 0; a < arity; ++a) {
        const auto& e = n.edge(q, a);
        sig.second.push_back(e.defined()
                                 ? KleisliValue<int>(e.word(),
                                                     block_of.at(e.value()))
                                 : KleisliValue<int>());
      }
      int b = -1;
      for (size_t i = 0; i < sigs.size(); ++i)
        if (sigs[i] == sig) {
          b = static_cast<int>(i);
          break;
        }
      if (b < 0) {
        b = static_cast<int>(sigs.size());
        sigs.push_back(std::move(sig));
      }
      refined[q] = b;
    }
    if (sigs.size() == count) break;
    count = sigs.size();
    block_of = std::move(refined);
  }

  // representative per block: first member in declaration order
  std::vector<State> rep(count, -1);
  for (State q : n.states)
    if (rep[static_cast<size_t>(block_of.at(q))] < 0)
      rep[static_cast<size_t>(block_of.at(q))] = q;

  // canonical renumbering: BFS over blocks from the initial block
  std::unordered_map<int, State> order;
  std::vector<int> bfs{block_of.at(n.init.value())};
  order[bfs[0]] = 0;
  for (size_t i = 0; i < bfs.size(); ++i)
    for (Symbol a = 0; a < arity; ++a) {
      const auto& e = n.edge(rep[static_cast<size_t>(bfs[i])], a);
      if (!e.defined()) continue;
      int b = block_of.at(e.value());
      if (order.emplace(b, static_cast<State>(order.size())).second)
        bfs.push_back(b);
    }
  if (order.size() != count)
    throw std::logic_error("unreachable block in a trim transducer");

  SubseqTransducer r = empty_like(n);
  r.init = {n.init.word(), order.at(block_of.at(n.init.value()))};
  r.states.resize(count);
  for (size_t i = 0; i < count; ++i) r.states[i] = static_cast<State>(i);
  for (int b : bfs) {
    State id = order.at(b);
    State source = rep[static_cast<size_t>(b)];
    r.term.emplace(id, n.term.at(source));
    std::vector<KleisliValue<State>> row;
    row.reserve(static_cast<size_t>(arity));
    for (Symbol a = 0; a < arity; ++a) {
      const auto& e = n.edge(source, a);
      row.push_back(e.defined()
                        ? KleisliValue<State>(
                              e.word(), order.at(block_of.at(e.value())))
                        : KleisliValue<State>());
    }
    r.trans.emplace(id, std::move(row));
  }
  return r;
}

std::optional<std::unordered_map<State, State>> isomorphic(
    const SubseqTransducer& t1, const SubseqTransducer& t2) {
  if (!(t1.input_alphabet == t2.input_alphabet) ||
      !(t1.output_alphabet == t2.output_alphabet))
    return std::nullopt;
  if (t1.states.size() != t2.states.size()) return std::nullopt;
  if (t1.init.defined() != t2.init.defined()) return std::nullopt;

  std::unordered_map<State, State> fwd, bwd;
  std::vector<std::pair<State, State>> queue;
  auto pair_up = [&](State p, State q) {
    auto it = fwd.find(p);
    if (it != fwd.end()) return it->second == q;
    if (bwd.count(q)) return false;
    fwd.emplace(p, q);
    bwd.emplace(q, p);
    queue.emplace_back(p, q);
    return true;
  };
  if (t1.init.defined()) {
    if (t1.init.word() != t2.init.word()) return std::nullopt;
    if (!pair_up(t1.init.value(), t2.init.value())) return std::nullopt;
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    auto [p, q] = queue[i];
    for (Symbol a = 0; a < t1.input_alphabet.size(); ++a) {
      const auto& e1 = t1.edge(p, a);
      const auto& e2 = t2.edge(q, a);
      if (e1.defined() != e2.defined()) return std::nullopt;
      if (e1.defined() && !pair_up(e1.value(), e2.value()))
        return std::nullopt;
    }
  }
  std::vector<State> rest1, rest2;
  for (State p : t1.states)
    if (!fwd.count(p)) rest1.push_back(p);
  for (State q : t2.states)
    if (!bwd.count(q)) rest2.push_back(q);
  if (rest1.size() != rest2.size()) return std::nullopt;
  for (size_t i = 0; i < rest1.size(); ++i)
    fwd.emplace(rest1[i], rest2[i]);

  for (State p : t1.states) {
    State q = fwd.at(p);
    if (!(t1.term.at(p) == t2.term.at(q))) return std::nullopt;
    for (Symbol a = 0; a < t1.input_alphabet.size(); ++a) {
      const auto& e1 = t1.edge(p, a);
      const auto& e2 = t2.edge(q, a);
      if (e1.defined() != e2.defined()) return std::nullopt;
      if (!e1.defined()) continue;
      if (e1.word() != e2.word() || fwd.at(e1.value()) != e2.value())
        return std::nullopt;
    }
  }
  std::unordered_set<State> targets;
  for (const auto& [p, q] : fwd)
    if (!targets.insert(q).second) return std::nullopt;
  return fwd;
}

std::optional<Word> equiv_witness(const SubseqTransducer& t1,
                                  const SubseqTransducer& t2) {
  if (!(t1.input_alphabet == t2.input_alphabet) ||
      !(t1.output_alphabet == t2.output_alphabet))
    throw std::invalid_argument("alphabet mismatch");
  SubseqTransducer n1 = trim(t1);
  SubseqTransducer n2 = trim(t2);
  if (!n1.states.empty()) n1 = normalize(n1);
  if (!n2.states.empty()) n2 = normalize(n2);

  bool live1 = n1.init.defined();
  bool live2 = n2.init.defined();
  if (!live1 && !live2) return std::nullopt;
  if (live1 != live2)
    return live1 ? shortest_domain_word(n1, n1.init.value())
                 : shortest_domain_word(n2, n2.init.value());
  State q1 = n1.init.value();
  State q2 = n2.init.value();
  if (n1.init.word() != n2.init.word())
    return resolve_output_mismatch(n1, q1, n2, q2, n1.init.word(),
                                   n2.init.word(), {});

  std::vector<PathNode> nodes{{-1, -1}};
  std::vector<std::pair<State, State>> frontier{{q1, q2}};
  std::set<std::pair<State, State>> seen{{q1, q2}};
  for (size_t i = 0; i < frontier.size(); ++i) {
    auto [p, q] = frontier[i];
    const auto& z1 = n1.term.at(p);
    const auto& z2 = n2.term.at(q);
    if (z1.defined() != z2.defined()) return rebuild_path(nodes, i);
    if (z1.defined() && z1.word() != z2.word()) return rebuild_path(nodes, i);
    for (Symbol a = 0; a < n1.input_alphabet.size(); ++a) {
      const auto& e1 = n1.edge(p, a);
      const auto& e2 = n2.edge(q, a);
      if (e1.defined() != e2.defined()) {
        Word w = rebuild_path(nodes, i);
        w.push_back(a);
        return concat(std::move(w),
                      e1.defined() ? shortest_domain_word(n1, e1.value())
                                   : shortest_domain_word(n2, e2.value()));
      }
      if (!e1.defined()) continue;
      if (e1.word() != e2.word()) {
        Word w = rebuild_path(nodes, i);
        w.push_back(a);
        return resolve_output_mismatch(n1, e1.value(), n2, e2.value(),
                                       e1.word(), e2.word(), std::move(w));
      }
      if (seen.emplace(e1.value(), e2.value()).second) {
        nodes.push_back({static_cast<int>(i), a});
        frontier.push_back({e1.value(), e2.value()});
      }
    }
  }
  return std::nullopt;
}

bool equiv(const SubseqTransducer& t1, const SubseqTransducer& t2) {
  return !equiv_witness(t1, t2).has_value();
}

}  // namespace automin::kleisli
