#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dendrifam {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An edge type disagrees with its child: leaf edges carry 1, internal edges carry an Omega element.
class TypingViolation : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// A token or index that does not name an element of the configured semigroup.
class InvalidElement : public Error {
 public:
  using Error::Error;
};

/// Enumeration or exhaustive checking was requested over an infinite semigroup.
class InfiniteSemigroup : public Error {
 public:
  using Error::Error;
};

/// The adjoined identity was used as a family index with two genuine trees.
class IdentityMisuse : public Error {
 public:
  using Error::Error;
};

/// A Leaf was passed to a public product while the algebra runs in strict mode.
class LeafArgument : public Error {
 public:
  using Error::Error;
};

/// A semigroup, algebra or operator family failed validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A constructed structure failed its axiom check.
class AxiomFailure : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dendrifam
