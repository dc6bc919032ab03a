#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dendrifam {

/// An element of the index semigroup.
///
/// Free semigroups store the word as generator indices; finite kinds store a
/// single element index. Ordering is shortlex, which for finite kinds is the
/// configured element order.
struct OmegaElem {
  std::vector<std::uint32_t> word;

  OmegaElem() = default;
  explicit OmegaElem(std::uint32_t index) : word{index} {}
  explicit OmegaElem(std::vector<std::uint32_t> w) : word(std::move(w)) {}

  friend bool operator==(const OmegaElem&, const OmegaElem&) = default;
  friend std::strong_ordering operator<=>(const OmegaElem& a, const OmegaElem& b) {
    if (auto c = a.word.size() <=> b.word.size(); c != 0) return c;
    return a.word <=> b.word;
  }
};

/// Element of the monoid obtained by adjoining a fresh identity `1`.
///
/// The identity is a formal symbol distinct from every semigroup element and
/// sorts before all of them.
class ExtElem {
 public:
  ExtElem() = default;  // identity
  ExtElem(OmegaElem e) : value_(std::move(e)) {}  // NOLINT(google-explicit-constructor)

  static ExtElem identity() { return ExtElem(); }

  bool is_identity() const { return !value_.has_value(); }
  const OmegaElem& elem() const;

  friend bool operator==(const ExtElem&, const ExtElem&) = default;
  friend std::strong_ordering operator<=>(const ExtElem& a, const ExtElem& b) {
    if (a.is_identity() || b.is_identity()) return b.is_identity() <=> a.is_identity();
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<OmegaElem> value_;
};

enum class SemigroupKind { Free, Cyclic, Table };

/// Raw description of a semigroup, as read from a config file or flag.
struct SemigroupSpec {
  SemigroupKind kind = SemigroupKind::Cyclic;
  std::vector<std::string> generators;  // free
  std::size_t order = 1;                // cyclic
  std::vector<std::string> elements;    // table
  std::vector<std::vector<std::string>> table;  // table[i][j] names elements[i]*elements[j]
};

/// A failing entry found by validate(): either a product outside the element
/// list (closure) or a non-associative triple.
struct SemigroupViolation {
  enum class Kind { Structure, Closure, Associativity };
  Kind kind = Kind::Structure;
  std::string a, b, c;
  std::string message;
};

/// Structural check of a spec; table kinds are checked for closure and
/// associativity over every triple.
std::optional<SemigroupViolation> validate(const SemigroupSpec& spec);

/// Parses the line-oriented config format (`kind=`, `generators=`, `order=`)
/// or a CSV Cayley table whose header row and column list the element names.
SemigroupSpec parse_semigroup_config(std::string_view text);

/// A validated semigroup together with its formatting rules.
class Semigroup {
 public:
  static Semigroup free(std::vector<std::string> generators);
  static Semigroup cyclic(std::size_t order);
  static Semigroup trivial() { return cyclic(1); }
  /// Throws ValidationError naming the first violation.
  static Semigroup from_spec(const SemigroupSpec& spec);

  SemigroupKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != SemigroupKind::Free; }
  /// Number of elements; throws InfiniteSemigroup for free kinds.
  std::size_t order() const;

  bool contains(const OmegaElem& e) const;

  OmegaElem mul(const OmegaElem& a, const OmegaElem& b) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;

  /// All elements in configured order; throws InfiniteSemigroup for free kinds.
  std::vector<OmegaElem> elements() const;
  /// Finite kinds: elements(). Free kinds: every word of length 1..max_length, shortlex.
  std::vector<OmegaElem> sample(std::size_t max_length) const;

  /// Free kinds only: the generator with the given token.
  OmegaElem generator(std::string_view token) const;
  const std::vector<std::string>& generators() const { return names_; }

  std::string format(const OmegaElem& e) const;
  std::string format(const ExtElem& e) const;
  /// Inverse of format(); throws InvalidElement.
  OmegaElem parse_element(std::string_view token) const;

 private:
  Semigroup() = default;

  SemigroupKind kind_ = SemigroupKind::Cyclic;
  std::vector<std::string> names_;  // generator tokens or element names
  std::size_t order_ = 1;
  std::vector<std::vector<std::uint32_t>> table_;
};

/// Convenience wrappers mirroring the operation names.
inline OmegaElem mul_omega(const Semigroup& s, const OmegaElem& a, const OmegaElem& b) { return s.mul(a, b); }
inline ExtElem mul_ext(const Semigroup& s, const ExtElem& a, const ExtElem& b) { return s.mul(a, b); }

/// Token rule shared by generators, element names and decoration symbols.
bool is_token(std::string_view s);

}  // namespace dendrifam
