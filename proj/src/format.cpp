#include "automin/format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace automin::format {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    std::string token;
    while (words >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Symbol need_symbol(const Alphabet& alphabet, const std::string& token,
                   int line) {
  auto a = alphabet.find(token);
  if (!a) throw ParseError("undeclared symbol " + token, line);
  return *a;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lines_(tokenize(text)) {}

  Machine parse();

 private:
  const Line& expect_header(const std::string& keyword) {
    if (at_ >= lines_.size())
      throw ParseError("expected '" + keyword + ":'",
                       lines_.empty() ? 1 : lines_.back().number);
    const Line& line = lines_[at_];
    if (line.tokens[0] != keyword + ":")
      throw ParseError("expected '" + keyword + ":' before '" +
                           line.tokens[0] + "'",
                       line.number);
    ++at_;
    return line;
  }

  Alphabet read_alphabet(const Line& line) {
    if (line.tokens.size() < 2)
      throw ParseError("alphabet needs at least one symbol", line.number);
    try {
      return Alphabet(
          std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line.number);
    }
  }

  void read_states(const Line& line) {
    for (size_t i = 1; i < line.tokens.size(); ++i) {
      const std::string& name = line.tokens[i];
      if (!state_ids_.emplace(name, static_cast<State>(state_names_.size()))
               .second)
        throw ParseError("duplicate state " + name, line.number);
      state_names_.push_back(name);
    }
  }

  State need_state(const std::string& token, int line) const {
    auto it = state_ids_.find(token);
    if (it == state_ids_.end())
      throw ParseError("undeclared state " + token, line);
    return it->second;
  }

  Word read_word(const Alphabet& alphabet, const std::string& token,
                 int line) const {
    try {
      return parse_word(alphabet, token);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line);
    }
  }

  Machine parse_dfa_or_nfa(bool deterministic);
  Machine parse_subseq();

  std::vector<Line> lines_;
  size_t at_ = 0;
  std::vector<std::string> state_names_;
  std::unordered_map<std::string, State> state_ids_;
  Alphabet input_;
};

Machine Parser::parse() {
  const Line& kind = expect_header("kind");
  if (kind.tokens.size() != 2)
    throw ParseError("kind line needs exactly one value", kind.number);
  const std::string& value = kind.tokens[1];
  if (value == "dfa") return parse_dfa_or_nfa(true);
  if (value == "nfa") return parse_dfa_or_nfa(false);
  if (value == "subseq") return parse_subseq();
  throw ParseError("unknown kind '" + value + "'", kind.number);
}

Machine Parser::parse_dfa_or_nfa(bool deterministic) {
  input_ = read_alphabet(expect_header("input"));
  read_states(expect_header("states"));

  const Line& init_line = expect_header("init");
  std::vector<State> init;
  for (size_t i = 1; i < init_line.tokens.size(); ++i)
    init.push_back(need_state(init_line.tokens[i], init_line.number));
  if (deterministic && init.size() != 1)
    throw ParseError("a dfa needs exactly one initial state",
                     init_line.number);

  std::vector<State> final;
  bool saw_final = false;
  // transitions keyed (source, symbol); nfa targets may repeat per key
  std::map<std::pair<State, Symbol>, std::vector<State>> edges;
  while (at_ < lines_.size()) {
    const Line& line = lines_[at_++];
    if (line.tokens[0] == "final:") {
      if (saw_final)
        throw ParseError("duplicate final line", line.number);
      saw_final = true;
      for (size_t i = 1; i < line.tokens.size(); ++i)
        final.push_back(need_state(line.tokens[i], line.number));
      continue;
    }
    if (line.tokens.size() != 4 || line.tokens[2] != "->")
      throw ParseError("expected 'state symbol -> state'", line.number);
    State src = need_state(line.tokens[0], line.number);
    Symbol a = need_symbol(input_, line.tokens[1], line.number);
    State dst = need_state(line.tokens[3], line.number);
    auto& targets = edges[{src, a}];
    if (deterministic && !targets.empty())
      throw ParseError("duplicate transition for " + line.tokens[0] + " " +
                           line.tokens[1],
                       line.number);
    targets.push_back(dst);
  }

  std::sort(final.begin(), final.end());
  final.erase(std::unique(final.begin(), final.end()), final.end());

  const int n = static_cast<int>(state_names_.size());
  if (deterministic) {
    if (n == 0) throw ParseError("a dfa needs at least one state", 1);
    dfa::Dfa m;
    m.alphabet = input_;
    m.init = init[0];
    for (State q = 0; q < n; ++q) {
      m.states.push_back(q);
      std::vector<State> row(static_cast<size_t>(input_.size()));
      for (Symbol a = 0; a < input_.size(); ++a) {
        auto it = edges.find({q, a});
        if (it == edges.end())
          throw ParseError("missing transition for " + state_names_[q] +
                               " on " + input_.name(a),
                           lines_.empty() ? 1 : lines_.back().number);
        row[static_cast<size_t>(a)] = it->second[0];
      }
      m.next.emplace(q, std::move(row));
      m.out.emplace(q, std::binary_search(final.begin(), final.end(), q));
    }
    m.validate();
    return m;
  }

  nfa::Nfa m;
  m.alphabet = input_;
  std::sort(init.begin(), init.end());
  init.erase(std::unique(init.begin(), init.end()), init.end());
  m.init = std::move(init);
  m.final = std::move(final);
  for (State q = 0; q < n; ++q) {
    m.states.push_back(q);
    std::vector<std::vector<State>> row(static_cast<size_t>(input_.size()));
    for (Symbol a = 0; a < input_.size(); ++a) {
      auto it = edges.find({q, a});
      if (it == edges.end()) continue;
      auto targets = it->second;
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()),
                    targets.end());
      row[static_cast<size_t>(a)] = std::move(targets);
    }
    m.delta.emplace(q, std::move(row));
  }
  m.validate();
  return m;
}

Machine Parser::parse_subseq() {
  input_ = read_alphabet(expect_header("input"));
  Alphabet output = read_alphabet(expect_header("output"));
  read_states(expect_header("states"));

  kleisli::SubseqTransducer t;
  t.input_alphabet = input_;
  t.output_alphabet = output;

  const Line& init_line = expect_header("init");
  if (init_line.tokens.size() == 2 && init_line.tokens[1] == "-") {
    // nowhere-defined machine; keep init at bottom
  } else if (init_line.tokens.size() == 4 && init_line.tokens[2] == "/") {
    State q = need_state(init_line.tokens[1], init_line.number);
    t.init = {read_word(output, init_line.tokens[3], init_line.number), q};
  } else {
    throw ParseError("expected 'init: state / word' or 'init: -'",
                     init_line.number);
  }

  const int n = static_cast<int>(state_names_.size());
  for (State q = 0; q < n; ++q) {
    t.states.push_back(q);
    t.term.emplace(q, kleisli::KleisliValue<kleisli::Unit>());
    t.trans.emplace(q, std::vector<kleisli::KleisliValue<State>>(
                           static_cast<size_t>(input_.size())));
  }

  while (at_ < lines_.size()) {
    const Line& line = lines_[at_++];
    if (line.tokens[0] == "final:") {
      if (line.tokens.size() != 4 || line.tokens[2] != "/")
        throw ParseError("expected 'final: state / word'", line.number);
      State q = need_state(line.tokens[1], line.number);
      if (t.term.at(q).defined())
        throw ParseError("duplicate final line for " + line.tokens[1],
                         line.number);
      t.term.at(q) = {read_word(output, line.tokens[3], line.number),
                      kleisli::Unit{}};
      continue;
    }
    if (line.tokens.size() != 5 || line.tokens[2] != "->")
      throw ParseError("expected 'state symbol -> word state'", line.number);
    State src = need_state(line.tokens[0], line.number);
    Symbol a = need_symbol(input_, line.tokens[1], line.number);
    Word w = read_word(output, line.tokens[3], line.number);
    State dst = need_state(line.tokens[4], line.number);
    auto& edge = t.trans.at(src)[static_cast<size_t>(a)];
    if (edge.defined())
      throw ParseError("duplicate transition for " + line.tokens[0] + " " +
                           line.tokens[1],
                       line.number);
    edge = {std::move(w), dst};
  }
  t.validate();
  return t;
}

// positional canonical names
std::string state_label(const std::vector<State>& states, State q) {
  for (size_t i = 0; i < states.size(); ++i)
    if (states[i] == q) return "q" + std::to_string(i);
  throw std::logic_error("state missing from the declaration order");
}

void print_alphabet(std::ostream& out, const char* keyword,
                    const Alphabet& alphabet) {
  out << keyword << ":";
  for (const std::string& s : alphabet.symbols()) out << " " << s;
  out << "\n";
}

void print_states_line(std::ostream& out, size_t count) {
  out << "states:";
  for (size_t i = 0; i < count; ++i) out << " q" << i;
  out << "\n";
}

}  // namespace

Machine parse(const std::string& text) { return Parser(text).parse(); }

std::string print(const dfa::Dfa& m) {
  m.validate();
  std::ostringstream out;
  out << "kind: dfa\n";
  print_alphabet(out, "input", m.alphabet);
  print_states_line(out, m.states.size());
  out << "init: " << state_label(m.states, m.init) << "\n";
  out << "final:";
  for (State q : m.states)
    if (m.output(q)) out << " " << state_label(m.states, q);
  out << "\n";
  for (State q : m.states)
    for (Symbol a = 0; a < m.alphabet.size(); ++a)
      out << state_label(m.states, q) << " " << m.alphabet.name(a) << " -> "
          << state_label(m.states, m.step(q, a)) << "\n";
  return out.str();
}

std::string print(const nfa::Nfa& n) {
  n.validate();
  std::ostringstream out;
  out << "kind: nfa\n";
  print_alphabet(out, "input", n.alphabet);
  print_states_line(out, n.states.size());
  auto member = [](const std::vector<State>& set, State q) {
    return std::binary_search(set.begin(), set.end(), q);
  };
  out << "init:";
  for (State q : n.states)
    if (member(n.init, q)) out << " " << state_label(n.states, q);
  out << "\n";
  out << "final:";
  for (State q : n.states)
    if (member(n.final, q)) out << " " << state_label(n.states, q);
  out << "\n";
  std::unordered_map<State, size_t> position;
  for (size_t i = 0; i < n.states.size(); ++i) position[n.states[i]] = i;
  for (State q : n.states)
    for (Symbol a = 0; a < n.alphabet.size(); ++a) {
      std::vector<State> targets = n.delta.at(q)[static_cast<size_t>(a)];
      std::sort(targets.begin(), targets.end(),
                [&](State x, State y) { return position[x] < position[y]; });
      for (State target : targets)
        out << state_label(n.states, q) << " " << n.alphabet.name(a) << " -> "
            << state_label(n.states, target) << "\n";
    }
  return out.str();
}

std::string print(const kleisli::SubseqTransducer& t) {
  t.validate();
  std::ostringstream out;
  out << "kind: subseq\n";
  print_alphabet(out, "input", t.input_alphabet);
  print_alphabet(out, "output", t.output_alphabet);
  print_states_line(out, t.states.size());
  if (t.init.defined())
    out << "init: " << state_label(t.states, t.init.value()) << " / "
        << format_word(t.output_alphabet, t.init.word()) << "\n";
  else
    out << "init: -\n";
  for (State q : t.states) {
    const auto& z = t.term.at(q);
    if (z.defined())
      out << "final: " << state_label(t.states, q) << " / "
          << format_word(t.output_alphabet, z.word()) << "\n";
  }
  for (State q : t.states)
    for (Symbol a = 0; a < t.input_alphabet.size(); ++a) {
      const auto& e = t.edge(q, a);
      if (!e.defined()) continue;
      out << state_label(t.states, q) << " " << t.input_alphabet.name(a)
          << " -> " << format_word(t.output_alphabet, e.word()) << " "
          << state_label(t.states, e.value()) << "\n";
    }
  return out.str();
}

std::string print(const Machine& machine) {
  return std::visit([](const auto& m) { return print(m); }, machine);
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  if (text == "_") return w;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t best = 0;
    Symbol matched = -1;
    for (Symbol a = 0; a < alphabet.size(); ++a) {
      const std::string& s = alphabet.name(a);
      if (s.size() > best && text.substr(i, s.size()) == s) {
        best = s.size();
        matched = a;
      }
    }
    if (matched < 0)
      throw std::invalid_argument("cannot read a symbol at '" +
                                  std::string(text.substr(i)) + "'");
    w.push_back(matched);
    i += best;
  }
  return w;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "_";
  std::string s;
  for (Symbol b : w) s += alphabet.name(b);
  return s;
}

}  // namespace automin::format
