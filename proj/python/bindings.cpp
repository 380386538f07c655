#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "automin/format.hpp"

namespace py = pybind11;
using namespace automin;

namespace {

nfa::Nfa as_nfa(const format::Machine& machine, const char* verb) {
  if (const auto* n = std::get_if<nfa::Nfa>(&machine)) return *n;
  if (const auto* m = std::get_if<dfa::Dfa>(&machine)) return nfa::embed(*m);
  throw std::invalid_argument(std::string(verb) +
                              " expects a dfa or nfa description");
}

dfa::Dfa as_dfa(const format::Machine& machine) {
  if (const auto* m = std::get_if<dfa::Dfa>(&machine)) return *m;
  return nfa::determinize(std::get<nfa::Nfa>(machine));
}

std::string minimize(const std::string& text) {
  format::Machine machine = format::parse(text);
  if (const auto* m = std::get_if<dfa::Dfa>(&machine))
    return format::print(dfa::minimize(*m));
  if (const auto* n = std::get_if<nfa::Nfa>(&machine))
    return format::print(nfa::brzozowski(*n));
  return format::print(
      kleisli::choffrut_minimize(std::get<kleisli::SubseqTransducer>(machine)));
}

std::string determinize(const std::string& text) {
  return format::print(
      nfa::determinize(as_nfa(format::parse(text), "determinize")));
}

std::string codeterminize(const std::string& text) {
  return format::print(
      nfa::codeterminize(as_nfa(format::parse(text), "codeterminize")).machine);
}

std::string brzozowski(const std::string& text) {
  return format::print(
      nfa::brzozowski(as_nfa(format::parse(text), "brzozowski")));
}

std::string canonical(const std::string& text) {
  return format::print(format::parse(text));
}

bool accepts(const std::string& text, const std::string& word) {
  format::Machine machine = format::parse(text);
  if (const auto* m = std::get_if<dfa::Dfa>(&machine))
    return run(*m, format::parse_word(m->alphabet, word));
  if (const auto* n = std::get_if<nfa::Nfa>(&machine))
    return nfa::accepts(*n, format::parse_word(n->alphabet, word));
  throw std::invalid_argument("accepts expects a dfa or nfa description");
}

std::optional<std::string> transduce(const std::string& text,
                                     const std::string& word) {
  format::Machine machine = format::parse(text);
  const auto* t = std::get_if<kleisli::SubseqTransducer>(&machine);
  if (t == nullptr)
    throw std::invalid_argument("transduce expects a subseq description");
  auto r = kleisli::transduce(*t, format::parse_word(t->input_alphabet, word));
  if (!r.defined()) return std::nullopt;
  return format::format_word(t->output_alphabet, r.word());
}

std::optional<std::string> witness(const std::string& first,
                                   const std::string& second) {
  format::Machine m1 = format::parse(first);
  format::Machine m2 = format::parse(second);
  const auto* t1 = std::get_if<kleisli::SubseqTransducer>(&m1);
  const auto* t2 = std::get_if<kleisli::SubseqTransducer>(&m2);
  if ((t1 == nullptr) != (t2 == nullptr))
    throw std::invalid_argument("cannot compare an acceptor with a transducer");
  std::optional<Word> w;
  Alphabet alphabet;
  if (t1) {
    w = kleisli::equiv_witness(*t1, *t2);
    alphabet = t1->input_alphabet;
  } else {
    dfa::Dfa d1 = as_dfa(m1);
    w = dfa::equiv_witness(d1, as_dfa(m2));
    alphabet = d1.alphabet;
  }
  if (!w) return std::nullopt;
  return format::format_word(alphabet, *w);
}

bool equivalent(const std::string& first, const std::string& second) {
  return !witness(first, second).has_value();
}

int state_count(const std::string& text) {
  format::Machine machine = format::parse(text);
  if (const auto* m = std::get_if<dfa::Dfa>(&machine))
    return static_cast<int>(m->states.size());
  if (const auto* n = std::get_if<nfa::Nfa>(&machine))
    return static_cast<int>(n->states.size());
  return static_cast<int>(
      std::get<kleisli::SubseqTransducer>(machine).states.size());
}

}  // namespace

PYBIND11_MODULE(_automin, m) {
  m.doc() =
      "Finite state machines and subsequential transducers: minimization, "
      "determinization, and equivalence over a small text format.";
  m.def("minimize", &minimize, py::arg("machine"),
        "Minimal equivalent machine of the same kind, in canonical form.");
  m.def("determinize", &determinize, py::arg("machine"),
        "Reachable powerset machine of a dfa or nfa description.");
  m.def("codeterminize", &codeterminize, py::arg("machine"),
        "Machine deterministic against the arrows, as an nfa description.");
  m.def("brzozowski", &brzozowski, py::arg("machine"),
        "Minimal dfa by double reversal.");
  m.def("canonical", &canonical, py::arg("machine"),
        "Parse and reprint a machine in canonical form.");
  m.def("accepts", &accepts, py::arg("machine"), py::arg("word"),
        "Whether a dfa or nfa accepts the word ('_' for the empty word).");
  m.def("transduce", &transduce, py::arg("machine"), py::arg("word"),
        "Output of a subseq machine on the word, or None where undefined.");
  m.def("equivalent", &equivalent, py::arg("first"), py::arg("second"),
        "Whether two machine descriptions have the same semantics.");
  m.def("witness", &witness, py::arg("first"), py::arg("second"),
        "An input word on which the two machines disagree, or None.");
  m.def("state_count", &state_count, py::arg("machine"),
        "Number of states in the description.");
}
