#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dendrifam/alphabet.hpp"
#include "dendrifam/errors.hpp"
#include "dendrifam/expr.hpp"
#include "dendrifam/pbtree.hpp"
#include "dendrifam/schroder.hpp"
#include "dendrifam/semigroup.hpp"

namespace dendrifam {

/// Declared decoration symbols and index semigroup. Parsing rejects any token
/// not declared here.
struct Signature {
  Alphabet alphabet;
  Semigroup omega;
};

// Canonical text, no whitespace:
//   B[x;1:|,a:B[y;1:|,1:|]]       binary tree
//   S[x,y;1:|,1:|,1:|]            Schroder tree
//   1*T + -1/2*U                  span (empty span is 0)
//   prec[a](gen(x),dot(gen(y),gen(z)))

std::string print_tree(const BinTree& t, const Signature& sig);
std::string print_tree(const SchroderTree& t, const Signature& sig);
std::string print_span(const SpanB& s, const Signature& sig);
std::string print_span(const SpanS& s, const Signature& sig);
std::string print_expr(const Expr& e, const Signature& sig);

/// Parsers skip whitespace between tokens. Malformed text raises SyntaxError
/// with a 1-based line and column; ill-typed edges raise TypingViolation.
/// A tree parser returns the Leaf for the text `|`.
BinTree parse_bin_tree(std::string_view text, const Signature& sig);
SchroderTree parse_sch_tree(std::string_view text, const Signature& sig);
/// Terms are `c*T` or a bare `T` (coefficient 1) joined by `+`; the result
/// is normalized, so repeated trees merge and `2/4` becomes `1/2`.
SpanB parse_bin_span(std::string_view text, const Signature& sig);
SpanS parse_sch_span(std::string_view text, const Signature& sig);
Expr parse_expr(std::string_view text, const Signature& sig);

enum class TermKind { Binary, Schroder };

/// Looks at the first tree in a term to choose the grammar; throws SyntaxError when there is none.
TermKind detect_kind(std::string_view text);

struct CorpusEntry {
  std::size_t line = 0;
  std::string text;
};

/// One term per line; blank lines and `#` comments are dropped.
std::vector<CorpusEntry> read_corpus(std::string_view text);

}  // namespace dendrifam
