#pragma once

#include <memory>

#include "dendrifam/alphabet.hpp"
#include "dendrifam/semigroup.hpp"

namespace dendrifam {

/// Expression over the generators and the family operations:
/// `gen(x)`, `prec[w](E1,E2)`, `succ[w](E1,E2)`, `dot(E1,E2)`.
class Expr {
 public:
  enum class Op { Gen, Prec, Succ, Dot };

  static Expr gen(Symbol x);
  static Expr prec(OmegaElem w, Expr lhs, Expr rhs);
  static Expr succ(OmegaElem w, Expr lhs, Expr rhs);
  static Expr dot(Expr lhs, Expr rhs);

  Op op() const;
  Symbol symbol() const;
  const OmegaElem& omega() const;
  const Expr& lhs() const;
  const Expr& rhs() const;

  /// Number of gen() leaves.
  std::size_t generator_count() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Op op = Op::Gen;
  Symbol x;
  OmegaElem w;
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
};

inline Expr::Op Expr::op() const { return node_->op; }

}  // namespace dendrifam
