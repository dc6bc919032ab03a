#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dendrifam {

/// Index of a decoration symbol in its alphabet; order is declaration order.
struct Symbol {
  std::uint32_t index = 0;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Ordered set of distinct decoration tokens.
class Alphabet {
 public:
  /// Throws ValidationError when empty, non-token, or duplicated.
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Symbol s) const { return names_.at(s.index); }
  /// Throws InvalidElement for undeclared tokens.
  Symbol symbol(std::string_view token) const;
  std::vector<Symbol> symbols() const;

 private:
  std::vector<std::string> names_;
};

}  // namespace dendrifam
