#pragma once

#include "dendrifam/expr.hpp"
#include "dendrifam/oracle.hpp"
#include "dendrifam/pbtree.hpp"
#include "dendrifam/semigroup.hpp"

namespace dendrifam {

/// How public products treat a Leaf argument: `T prec_w |` is normalized to T
/// (and `| prec_w U` to 0), or rejected with LeafArgument.
enum class LeafPolicy { Normalize, Strict };

/// The free dendriform family algebra on typed decorated planar binary trees.
///
/// Products are computed recursively on depth(T) + depth(U):
///
///   T prec_w U = T^l  v_{x, (a1, a2 w)}  (T^r prec_w U + T^r succ_{a2} U)
///   T succ_w U = (T prec_{b1} U^l + T succ_w U^l)  v_{y, (w b1, b2)}  U^r
///
/// with `| succ_w T = T prec_w | = T` and `| prec_w T = T succ_w | = 0`, the
/// same rules applying to the adjoined identity index inside the recursion.
class FreeDendriform {
 public:
  using Element = SpanB;

  explicit FreeDendriform(Semigroup omega, LeafPolicy policy = LeafPolicy::Normalize);

  const Semigroup& semigroup() const { return omega_; }
  LeafPolicy leaf_policy() const { return policy_; }

  SpanB prec(const SpanB& t, const SpanB& u, const OmegaElem& w) const;
  SpanB succ(const SpanB& t, const SpanB& u, const OmegaElem& w) const;

  /// Tree-level products. Leaf arguments follow the base cases (or throw in
  /// strict mode); the identity index is accepted only when one side is a
  /// Leaf, otherwise IdentityMisuse.
  SpanB prec(const BinTree& t, const BinTree& u, const ExtElem& w) const;
  SpanB succ(const BinTree& t, const BinTree& u, const ExtElem& w) const;

  SpanB generator(Symbol x) const { return SpanB(bin_generator(x)); }

  SpanB add(const SpanB& a, const SpanB& b) const { return a + b; }
  SpanB sub(const SpanB& a, const SpanB& b) const { return a - b; }
  SpanB scale(const Coefficient& c, const SpanB& a) const { return c * a; }
  SpanB zero() const { return {}; }
  bool is_zero(const SpanB& a) const { return a.empty(); }

 private:
  SpanB prec_any(const BinTree& t, const BinTree& u, const ExtElem& w) const;
  SpanB succ_any(const BinTree& t, const BinTree& u, const ExtElem& w) const;
  void check_public(const BinTree& t, const BinTree& u, const ExtElem& w) const;

  Semigroup omega_;
  LeafPolicy policy_;
};

static_assert(DendriformFamily<FreeDendriform>);

/// The three axiom residuals on one instance of the free algebra.
std::array<SpanB, 3> check_dendriform_axioms(const FreeDendriform& algebra, const BinTree& t, const BinTree& u,
                                             const BinTree& w, const OmegaElem& a, const OmegaElem& b);

/// Writes T as an expression in the single-vertex generators:
///   | v_{x,(1,a2)} T^r      = gen(x) prec_{a2} T^r
///   T^l v_{x,(a1,1)} |      = T^l succ_{a1} gen(x)
///   T^l v_{x,(a1,a2)} T^r   = (T^l succ_{a1} gen(x)) prec_{a2} T^r
Expr express_in_generators(const BinTree& t);

/// Evaluates an expression inside the free algebra.
SpanB evaluate_free(const Expr& e, const FreeDendriform& algebra);

/// The unique morphism extending f : X -> D, on a single tree.
template <DendriformFamily O, class F>
typename O::Element free_extend(const F& f, const O& target, const BinTree& t) {
  if (t.is_leaf()) throw TypingViolation("the leaf | has no image under the extension");
  const bool left_leaf = t.left().is_leaf();
  const bool right_leaf = t.right().is_leaf();
  auto fx = f(t.decoration());
  if (left_leaf && right_leaf) return fx;
  if (left_leaf) return target.prec(fx, free_extend(f, target, t.right()), t.right_type().elem());
  if (right_leaf) return target.succ(free_extend(f, target, t.left()), fx, t.left_type().elem());
  return target.prec(target.succ(free_extend(f, target, t.left()), fx, t.left_type().elem()),
                     free_extend(f, target, t.right()), t.right_type().elem());
}

/// Linear extension to spans.
template <DendriformFamily O, class F>
typename O::Element free_extend(const F& f, const O& target, const SpanB& span) {
  auto out = target.zero();
  for (const auto& term : span) out = target.add(out, target.scale(term.coeff, free_extend(f, target, term.basis)));
  return out;
}

}  // namespace dendrifam
