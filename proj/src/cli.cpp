#include "automin/cli.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "CLI11.hpp"
#include "automin/format.hpp"
#include "automin/oracle.hpp"

namespace automin::cli {

namespace {

format::Machine load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return format::parse(buf.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(path + ": cannot open for writing");
  file << text;
}

nfa::Nfa as_nfa(const format::Machine& machine, const std::string& verb) {
  if (const auto* n = std::get_if<nfa::Nfa>(&machine)) return *n;
  if (const auto* m = std::get_if<dfa::Dfa>(&machine)) return nfa::embed(*m);
  throw std::runtime_error(verb + " needs a dfa or nfa file");
}

dfa::Dfa as_dfa(const format::Machine& machine) {
  if (const auto* m = std::get_if<dfa::Dfa>(&machine)) return *m;
  return nfa::determinize(std::get<nfa::Nfa>(machine));
}

std::string minimized(const format::Machine& machine) {
  if (const auto* m = std::get_if<dfa::Dfa>(&machine))
    return format::print(dfa::minimize(*m));
  if (const auto* n = std::get_if<nfa::Nfa>(&machine))
    return format::print(nfa::brzozowski(*n));
  return format::print(
      kleisli::choffrut_minimize(std::get<kleisli::SubseqTransducer>(machine)));
}

int run_word(const format::Machine& machine, const std::string& text,
             std::ostream& out) {
  if (const auto* t = std::get_if<kleisli::SubseqTransducer>(&machine)) {
    auto r = kleisli::transduce(*t, format::parse_word(t->input_alphabet, text));
    if (r.defined())
      out << format::format_word(t->output_alphabet, r.word()) << "\n";
    else
      out << "undefined\n";
    return 0;
  }
  bool accepted;
  if (const auto* m = std::get_if<dfa::Dfa>(&machine))
    accepted = run(*m, format::parse_word(m->alphabet, text));
  else {
    const auto& n = std::get<nfa::Nfa>(machine);
    accepted = nfa::accepts(n, format::parse_word(n.alphabet, text));
  }
  out << (accepted ? "accept" : "reject") << "\n";
  return 0;
}

int run_equiv(const format::Machine& m1, const format::Machine& m2,
              std::ostream& out) {
  const auto* t1 = std::get_if<kleisli::SubseqTransducer>(&m1);
  const auto* t2 = std::get_if<kleisli::SubseqTransducer>(&m2);
  if ((t1 == nullptr) != (t2 == nullptr))
    throw std::runtime_error("cannot compare an acceptor with a transducer");
  std::optional<Word> witness;
  Alphabet alphabet;
  if (t1) {
    witness = kleisli::equiv_witness(*t1, *t2);
    alphabet = t1->input_alphabet;
  } else {
    dfa::Dfa d1 = as_dfa(m1);
    witness = dfa::equiv_witness(d1, as_dfa(m2));
    alphabet = d1.alphabet;
  }
  if (!witness) {
    out << "equivalent\n";
    return 0;
  }
  out << format::format_word(alphabet, *witness) << "\n";
  return 1;
}

std::vector<State> forward_states(const kleisli::SubseqTransducer& t) {
  std::vector<State> frontier;
  std::unordered_set<State> seen;
  if (t.init.defined()) {
    seen.insert(t.init.value());
    frontier.push_back(t.init.value());
  }
  for (size_t i = 0; i < frontier.size(); ++i)
    for (Symbol a = 0; a < t.input_alphabet.size(); ++a) {
      const auto& e = t.edge(frontier[i], a);
      if (e.defined() && seen.insert(e.value()).second)
        frontier.push_back(e.value());
    }
  return frontier;
}

// Pairwise behavioral comparison of states, each taken as initial.
bool behaviors_distinct(const kleisli::SubseqTransducer& t) {
  for (size_t i = 0; i < t.states.size(); ++i)
    for (size_t j = i + 1; j < t.states.size(); ++j) {
      kleisli::SubseqTransducer a = t;
      kleisli::SubseqTransducer b = t;
      a.init = {Word{}, t.states[i]};
      b.init = {Word{}, t.states[j]};
      if (kleisli::equiv(a, b)) return false;
    }
  return true;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int run_info(const format::Machine& machine, int oracle_bound,
             std::ostream& out) {
  const Alphabet* input = nullptr;
  auto oracle_line = [&](auto&& reference, auto&& candidate) {
    out << "oracle agreement (words <= " << oracle_bound << "): ";
    for (const Word& w : oracle::words_up_to(*input, oracle_bound))
      if (!(reference(w) == candidate(w))) {
        out << "no, differs at " << format::format_word(*input, w) << "\n";
        return;
      }
    out << "yes\n";
  };

  if (const auto* m = std::get_if<dfa::Dfa>(&machine)) {
    input = &m->alphabet;
    out << "kind: dfa\n";
    out << "states: " << m->states.size() << "\n";
    out << "reachable: " << yes_no(dfa::is_reachable(*m)) << "\n";
    out << "observable: " << yes_no(dfa::is_observable(*m)) << "\n";
    if (oracle_bound >= 0) {
      dfa::Dfa small = dfa::minimize(*m);
      oracle_line([&](const Word& w) { return run(*m, w); },
                  [&](const Word& w) { return run(small, w); });
    }
    return 0;
  }
  if (const auto* n = std::get_if<nfa::Nfa>(&machine)) {
    input = &n->alphabet;
    out << "kind: nfa\n";
    out << "states: " << n->states.size() << "\n";
    out << "reachable: "
        << yes_no(nfa::accessible_states(*n).size() == n->states.size())
        << "\n";
    out << "observable: "
        << yes_no(nfa::coaccessible_states(*n).size() == n->states.size())
        << "\n";
    if (oracle_bound >= 0) {
      dfa::Dfa small = nfa::brzozowski(*n);
      oracle_line([&](const Word& w) { return nfa::accepts(*n, w); },
                  [&](const Word& w) { return run(small, w); });
    }
    return 0;
  }
  const auto& t = std::get<kleisli::SubseqTransducer>(machine);
  input = &t.input_alphabet;
  out << "kind: subseq\n";
  out << "states: " << t.states.size() << "\n";
  out << "reachable: "
      << yes_no(forward_states(t).size() == t.states.size()) << "\n";
  out << "observable: " << yes_no(behaviors_distinct(t)) << "\n";
  if (oracle_bound >= 0) {
    kleisli::SubseqTransducer small = kleisli::choffrut_minimize(t);
    oracle_line([&](const Word& w) { return kleisli::transduce(t, w); },
                [&](const Word& w) { return kleisli::transduce(small, w); });
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite state machines: minimize, determinize, run, compare"};
  app.name("automin");
  app.require_subcommand(1);

  std::string file, other, word_text, out_path;
  int oracle_bound = -1;

  CLI::App* cmd_minimize =
      app.add_subcommand("minimize", "write the minimal equivalent machine");
  CLI::App* cmd_determinize = app.add_subcommand(
      "determinize", "reachable powerset construction (dfa or nfa input)");
  CLI::App* cmd_codeterminize = app.add_subcommand(
      "codeterminize", "determinize against the arrows (dfa or nfa input)");
  CLI::App* cmd_brzozowski = app.add_subcommand(
      "brzozowski", "minimal dfa by double reversal (dfa or nfa input)");
  for (CLI::App* cmd :
       {cmd_minimize, cmd_determinize, cmd_codeterminize, cmd_brzozowski}) {
    cmd->add_option("file", file, "machine file")->required();
    cmd->add_option("-o,--out", out_path, "output path (default stdout)");
  }

  CLI::App* cmd_run =
      app.add_subcommand("run", "run a machine on one input word");
  cmd_run->add_option("file", file, "machine file")->required();
  cmd_run->add_option("word", word_text, "input word, _ for the empty word")
      ->required();

  CLI::App* cmd_equiv =
      app.add_subcommand("equiv", "test two machines for equal semantics");
  cmd_equiv->add_option("first", file, "machine file")->required();
  cmd_equiv->add_option("second", other, "machine file")->required();

  CLI::App* cmd_info =
      app.add_subcommand("info", "report kind, size, and structure flags");
  cmd_info->add_option("file", file, "machine file")->required();
  cmd_info->add_option(
      "--oracle-bound", oracle_bound,
      "also compare against the minimized machine on all words up to this "
      "length");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_minimize->parsed()) {
      emit(minimized(load(file)), out_path, out);
      return 0;
    }
    if (cmd_determinize->parsed()) {
      emit(format::print(nfa::determinize(as_nfa(load(file), "determinize"))),
           out_path, out);
      return 0;
    }
    if (cmd_codeterminize->parsed()) {
      emit(format::print(
               nfa::codeterminize(as_nfa(load(file), "codeterminize")).machine),
           out_path, out);
      return 0;
    }
    if (cmd_brzozowski->parsed()) {
      emit(format::print(nfa::brzozowski(as_nfa(load(file), "brzozowski"))),
           out_path, out);
      return 0;
    }
    if (cmd_run->parsed()) return run_word(load(file), word_text, out);
    if (cmd_equiv->parsed()) return run_equiv(load(file), load(other), out);
    if (cmd_info->parsed()) return run_info(load(file), oracle_bound, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace automin::cli
