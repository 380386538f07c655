// Text format shared by the CLI and the python module. One machine per
// file: a kind line, alphabet and state declarations, init/final lines,
// then transitions. `_` stands for the empty word wherever a word is
// expected, `#` starts a comment. print emits a canonical form (states
// renamed positionally to q0..qN-1, transitions sorted by state then
// symbol) that is byte-stable across runs.
#pragma once

#include <string>
#include <variant>

#include "automin/dfa.hpp"
#include "automin/kleisli.hpp"
#include "automin/nfa.hpp"

namespace automin::format {

using Machine = std::variant<dfa::Dfa, nfa::Nfa, kleisli::SubseqTransducer>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error(message + ", line " + std::to_string(line)),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

Machine parse(const std::string& text);

std::string print(const dfa::Dfa& m);
std::string print(const nfa::Nfa& n);
std::string print(const kleisli::SubseqTransducer& t);
std::string print(const Machine& machine);

// Concatenated symbol names; also accepts comma or space separated
// symbols. Greedy longest match, so alphabets where no symbol is a
// prefix of another are always unambiguous.
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, const Word& w);

}  // namespace automin::format
