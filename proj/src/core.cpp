#include "automin/core.hpp"

#include <cctype>

namespace automin {

namespace {

bool valid_symbol_name(const std::string& s) {
  if (s.empty()) return false;
  if (s == "_" || s == "-" || s == "->" || s == "/") return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("empty alphabet");
  for (Symbol a = 0; a < size(); ++a) {
    if (!valid_symbol_name(symbols_[a]))
      throw std::invalid_argument("invalid symbol name '" + symbols_[a] + "'");
    if (!index_.emplace(symbols_[a], a).second)
      throw std::invalid_argument("duplicate symbol '" + symbols_[a] + "'");
  }
}

const std::string& Alphabet::name(Symbol a) const {
  if (!contains(a)) throw std::invalid_argument("symbol outside the alphabet");
  return symbols_[a];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace automin
