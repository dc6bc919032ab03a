#include "dendrifam/dendriform.hpp"

#include <stdexcept>

namespace dendrifam {

FreeDendriform::FreeDendriform(Semigroup omega, LeafPolicy policy) : omega_(std::move(omega)), policy_(policy) {}

void FreeDendriform::check_public(const BinTree& t, const BinTree& u, const ExtElem& w) const {
  if (policy_ == LeafPolicy::Strict && (t.is_leaf() || u.is_leaf())) {
    throw LeafArgument("strict mode: the leaf | is not an element of the algebra");
  }
  if (t.is_leaf() && u.is_leaf()) throw LeafArgument("both arguments are the leaf |");
  if (w.is_identity() && t.is_node() && u.is_node()) {
    throw IdentityMisuse("the identity 1 is not a family index for two trees");
  }
  if (!w.is_identity() && !omega_.contains(w.elem())) throw InvalidElement("index is not a semigroup element");
}

SpanB FreeDendriform::prec(const BinTree& t, const BinTree& u, const ExtElem& w) const {
  check_public(t, u, w);
  return prec_any(t, u, w);
}

SpanB FreeDendriform::succ(const BinTree& t, const BinTree& u, const ExtElem& w) const {
  check_public(t, u, w);
  return succ_any(t, u, w);
}

SpanB FreeDendriform::prec_any(const BinTree& t, const BinTree& u, const ExtElem& w) const {
  if (t.is_leaf() && u.is_leaf()) throw std::logic_error("prec of two leaves is unreachable");
  if (u.is_leaf()) return SpanB(t);
  if (t.is_leaf()) return {};
  if (w.is_identity()) throw IdentityMisuse("the identity 1 reached a product of two trees");

  const ExtElem& a2 = t.right_type();
  SpanB inner = prec_any(t.right(), u, w);
  inner += succ_any(t.right(), u, a2);
  const ExtElem new_type = omega_.mul(a2, w);
  std::vector<SpanB::Term> terms;
  terms.reserve(inner.size());
  for (const auto& term : inner) {
    terms.push_back({term.coeff, BinTree::graft(t.left(), t.decoration(), t.left_type(), new_type, term.basis)});
  }
  return SpanB::from_terms(std::move(terms));
}

SpanB FreeDendriform::succ_any(const BinTree& t, const BinTree& u, const ExtElem& w) const {
  if (t.is_leaf() && u.is_leaf()) throw std::logic_error("succ of two leaves is unreachable");
  if (t.is_leaf()) return SpanB(u);
  if (u.is_leaf()) return {};
  if (w.is_identity()) throw IdentityMisuse("the identity 1 reached a product of two trees");

  const ExtElem& b1 = u.left_type();
  SpanB inner = prec_any(t, u.left(), b1);
  inner += succ_any(t, u.left(), w);
  const ExtElem new_type = omega_.mul(w, b1);
  std::vector<SpanB::Term> terms;
  terms.reserve(inner.size());
  for (const auto& term : inner) {
    terms.push_back({term.coeff, BinTree::graft(term.basis, u.decoration(), new_type, u.right_type(), u.right())});
  }
  return SpanB::from_terms(std::move(terms));
}

SpanB FreeDendriform::prec(const SpanB& t, const SpanB& u, const OmegaElem& w) const {
  SpanB out;
  for (const auto& a : t) {
    for (const auto& b : u) out.add_scaled(a.coeff * b.coeff, prec_any(a.basis, b.basis, ExtElem(w)));
  }
  return out;
}

SpanB FreeDendriform::succ(const SpanB& t, const SpanB& u, const OmegaElem& w) const {
  SpanB out;
  for (const auto& a : t) {
    for (const auto& b : u) out.add_scaled(a.coeff * b.coeff, succ_any(a.basis, b.basis, ExtElem(w)));
  }
  return out;
}

std::array<SpanB, 3> check_dendriform_axioms(const FreeDendriform& algebra, const BinTree& t, const BinTree& u,
                                             const BinTree& w, const OmegaElem& a, const OmegaElem& b) {
  return dendriform_residuals(algebra, SpanB(t), SpanB(u), SpanB(w), a, b);
}

Expr express_in_generators(const BinTree& t) {
  if (t.is_leaf()) throw TypingViolation("the leaf | is not generated");
  Expr x = Expr::gen(t.decoration());
  const bool left_leaf = t.left().is_leaf();
  const bool right_leaf = t.right().is_leaf();
  if (left_leaf && right_leaf) return x;
  if (left_leaf) return Expr::prec(t.right_type().elem(), std::move(x), express_in_generators(t.right()));
  if (right_leaf) return Expr::succ(t.left_type().elem(), express_in_generators(t.left()), std::move(x));
  return Expr::prec(t.right_type().elem(),
                    Expr::succ(t.left_type().elem(), express_in_generators(t.left()), std::move(x)),
                    express_in_generators(t.right()));
}

SpanB evaluate_free(const Expr& e, const FreeDendriform& algebra) {
  return evaluate(e, algebra, [&](Symbol x) { return algebra.generator(x); });
}

}  // namespace dendrifam
