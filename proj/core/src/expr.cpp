#include "dendrifam/expr.hpp"

#include <stdexcept>

namespace dendrifam {

namespace {

template <class Node>
std::shared_ptr<const Node> binary(Expr::Op op, OmegaElem w, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->w = std::move(w);
  n->lhs = std::make_unique<Expr>(std::move(lhs));
  n->rhs = std::make_unique<Expr>(std::move(rhs));
  return n;
}

}  // namespace

Expr Expr::gen(Symbol x) {
  auto n = std::make_shared<Node>();
  n->op = Op::Gen;
  n->x = x;
  return Expr(std::move(n));
}

Expr Expr::prec(OmegaElem w, Expr lhs, Expr rhs) {
  return Expr(binary<Node>(Op::Prec, std::move(w), std::move(lhs), std::move(rhs)));
}

Expr Expr::succ(OmegaElem w, Expr lhs, Expr rhs) {
  return Expr(binary<Node>(Op::Succ, std::move(w), std::move(lhs), std::move(rhs)));
}

Expr Expr::dot(Expr lhs, Expr rhs) { return Expr(binary<Node>(Op::Dot, OmegaElem(), std::move(lhs), std::move(rhs))); }

Symbol Expr::symbol() const {
  if (node_->op != Op::Gen) throw std::logic_error("only gen() carries a symbol");
  return node_->x;
}

const OmegaElem& Expr::omega() const {
  if (node_->op != Op::Prec && node_->op != Op::Succ) throw std::logic_error("only prec/succ carry an index");
  return node_->w;
}

const Expr& Expr::lhs() const {
  if (node_->op == Op::Gen) throw std::logic_error("gen() has no operands");
  return *node_->lhs;
}

const Expr& Expr::rhs() const {
  if (node_->op == Op::Gen) throw std::logic_error("gen() has no operands");
  return *node_->rhs;
}

std::size_t Expr::generator_count() const {
  if (node_->op == Op::Gen) return 1;
  return node_->lhs->generator_count() + node_->rhs->generator_count();
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op) return false;
  if (x.op == Expr::Op::Gen) return x.x == y.x;
  return x.w == y.w && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
}

}  // namespace dendrifam
