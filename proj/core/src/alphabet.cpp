#include "dendrifam/alphabet.hpp"

#include <set>

#include "dendrifam/errors.hpp"
#include "dendrifam/semigroup.hpp"

namespace dendrifam {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ValidationError("decoration alphabet is empty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_token(n) || n == "1") throw ValidationError("invalid decoration symbol '" + n + "'");
    if (!seen.insert(n).second) throw ValidationError("duplicate decoration symbol '" + n + "'");
  }
}

Symbol Alphabet::symbol(std::string_view token) const {
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == token) return Symbol{i};
  }
  throw InvalidElement("undeclared decoration symbol '" + std::string(token) + "'");
}

std::vector<Symbol> Alphabet::symbols() const {
  std::vector<Symbol> out;
  for (std::uint32_t i = 0; i < names_.size(); ++i) out.push_back(Symbol{i});
  return out;
}

}  // namespace dendrifam
