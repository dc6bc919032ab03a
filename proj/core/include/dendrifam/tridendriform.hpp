#pragma once

#include <vector>

#include "dendrifam/dendriform.hpp"
#include "dendrifam/expr.hpp"
#include "dendrifam/oracle.hpp"
#include "dendrifam/schroder.hpp"
#include "dendrifam/semigroup.hpp"

namespace dendrifam {

/// The free tridendriform family algebra on typed valently decorated
/// Schröder trees. With T = v(x1..xm; a0..am; T0..Tm) and U = v(y1..yn; b0..bn; U0..Un):
///
///   T prec_w U : last child Tm becomes Tm succ_{am} U + Tm prec_w U + Tm . U, typed am w
///   T succ_w U : first child U0 becomes T succ_w U0 + T prec_{b0} U0 + T . U0, typed w b0
///   T . U      : roots fuse, the middle child is Tm succ_{am} U0 + Tm prec_{b0} U0 + Tm . U0, typed am b0
///
/// Leaves follow the same base cases as the dendriform algebra, with
/// `| . T = T . | = 0`. Two leaf middle children fuse into a single leaf.
class FreeTridendriform {
 public:
  using Element = SpanS;

  explicit FreeTridendriform(Semigroup omega, LeafPolicy policy = LeafPolicy::Normalize);

  const Semigroup& semigroup() const { return omega_; }
  LeafPolicy leaf_policy() const { return policy_; }

  SpanS prec(const SpanS& t, const SpanS& u, const OmegaElem& w) const;
  SpanS succ(const SpanS& t, const SpanS& u, const OmegaElem& w) const;
  SpanS dot(const SpanS& t, const SpanS& u) const;

  SpanS prec(const SchroderTree& t, const SchroderTree& u, const ExtElem& w) const;
  SpanS succ(const SchroderTree& t, const SchroderTree& u, const ExtElem& w) const;
  SpanS dot(const SchroderTree& t, const SchroderTree& u) const;

  SpanS generator(Symbol x) const { return SpanS(sch_generator(x)); }

  SpanS add(const SpanS& a, const SpanS& b) const { return a + b; }
  SpanS sub(const SpanS& a, const SpanS& b) const { return a - b; }
  SpanS scale(const Coefficient& c, const SpanS& a) const { return c * a; }
  SpanS zero() const { return {}; }
  bool is_zero(const SpanS& a) const { return a.empty(); }

 private:
  SpanS prec_any(const SchroderTree& t, const SchroderTree& u, const ExtElem& w) const;
  SpanS succ_any(const SchroderTree& t, const SchroderTree& u, const ExtElem& w) const;
  SpanS dot_any(const SchroderTree& t, const SchroderTree& u) const;
  void check_public(const SchroderTree& t, const SchroderTree& u, const ExtElem* w) const;

  Semigroup omega_;
  LeafPolicy policy_;
};

static_assert(TridendriformFamily<FreeTridendriform>);

/// The seven axiom residuals on one instance of the free algebra.
std::array<SpanS, 7> check_tridendriform_axioms(const FreeTridendriform& algebra, const SchroderTree& t,
                                                const SchroderTree& u, const SchroderTree& w, const OmegaElem& a,
                                                const OmegaElem& b);

/// Order in which the breadth-2 factors of a wide tree are multiplied.
enum class ProductFold { LeftToRight, RightToLeft };

/// Breadth-2 pieces of T whose dot product is T:
///   v(x1; a0, a1; T0, T1), v(x2; 1, a2; |, T2), ..., v(xm; 1, am; |, Tm)
std::vector<SchroderTree> central_factors(const SchroderTree& t);

/// Writes T in the single-vertex generators. Breadth 2 follows the binary
/// rule; wider trees are dot products of their central factors.
Expr texpress_in_generators(const SchroderTree& t, ProductFold fold = ProductFold::LeftToRight);

SpanS evaluate_free(const Expr& e, const FreeTridendriform& algebra);

namespace detail {

template <TridendriformFamily O, class F>
typename O::Element extend_breadth2(const F& f, const O& target, const SchroderTree& t, ProductFold fold);

template <TridendriformFamily O, class F>
typename O::Element tfree_extend_tree(const F& f, const O& target, const SchroderTree& t, ProductFold fold) {
  if (t.is_leaf()) throw TypingViolation("the leaf | has no image under the extension");
  if (t.breadth() == 2) return extend_breadth2(f, target, t, fold);
  const auto factors = central_factors(t);
  if (fold == ProductFold::LeftToRight) {
    auto acc = extend_breadth2(f, target, factors.front(), fold);
    for (std::size_t i = 1; i < factors.size(); ++i) acc = target.dot(acc, extend_breadth2(f, target, factors[i], fold));
    return acc;
  }
  auto acc = extend_breadth2(f, target, factors.back(), fold);
  for (std::size_t i = factors.size() - 1; i-- > 0;) acc = target.dot(extend_breadth2(f, target, factors[i], fold), acc);
  return acc;
}

template <TridendriformFamily O, class F>
typename O::Element extend_breadth2(const F& f, const O& target, const SchroderTree& t, ProductFold fold) {
  const auto& left = t.child(0);
  const auto& right = t.child(1);
  auto fx = f(t.decorations().front());
  if (left.is_leaf() && right.is_leaf()) return fx;
  if (left.is_leaf()) return target.prec(fx, tfree_extend_tree(f, target, right, fold), t.type(1).elem());
  if (right.is_leaf()) return target.succ(tfree_extend_tree(f, target, left, fold), fx, t.type(0).elem());
  return target.prec(target.succ(tfree_extend_tree(f, target, left, fold), fx, t.type(0).elem()),
                     tfree_extend_tree(f, target, right, fold), t.type(1).elem());
}

}  // namespace detail

/// The unique morphism extending f : X -> target.
template <TridendriformFamily O, class F>
typename O::Element tfree_extend(const F& f, const O& target, const SchroderTree& t,
                                 ProductFold fold = ProductFold::LeftToRight) {
  return detail::tfree_extend_tree(f, target, t, fold);
}

template <TridendriformFamily O, class F>
typename O::Element tfree_extend(const F& f, const O& target, const SpanS& span,
                                 ProductFold fold = ProductFold::LeftToRight) {
  auto out = target.zero();
  for (const auto& term : span) {
    out = target.add(out, target.scale(term.coeff, detail::tfree_extend_tree(f, target, term.basis, fold)));
  }
  return out;
}

}  // namespace dendrifam
