#include "dendrifam/tridendriform.hpp"

#include <stdexcept>

namespace dendrifam {

namespace {

// Rebuilds t with child i replaced by each basis tree of `replacement`.
SpanS replace_child(const SchroderTree& t, std::size_t i, const ExtElem& type, const SpanS& replacement) {
  auto parts = decompose_nary(t);
  parts.types[i] = type;
  std::vector<SpanS::Term> terms;
  terms.reserve(replacement.size());
  for (const auto& term : replacement) {
    parts.children[i] = term.basis;
    terms.push_back({term.coeff, graft_nary(parts.children, parts.decs, parts.types)});
  }
  return SpanS::from_terms(std::move(terms));
}

}  // namespace

FreeTridendriform::FreeTridendriform(Semigroup omega, LeafPolicy policy)
    : omega_(std::move(omega)), policy_(policy) {}

void FreeTridendriform::check_public(const SchroderTree& t, const SchroderTree& u, const ExtElem* w) const {
  if (policy_ == LeafPolicy::Strict && (t.is_leaf() || u.is_leaf())) {
    throw LeafArgument("strict mode: the leaf | is not an element of the algebra");
  }
  if (t.is_leaf() && u.is_leaf()) throw LeafArgument("both arguments are the leaf |");
  if (w == nullptr) return;
  if (w->is_identity() && t.is_node() && u.is_node()) {
    throw IdentityMisuse("the identity 1 is not a family index for two trees");
  }
  if (!w->is_identity() && !omega_.contains(w->elem())) throw InvalidElement("index is not a semigroup element");
}

SpanS FreeTridendriform::prec(const SchroderTree& t, const SchroderTree& u, const ExtElem& w) const {
  check_public(t, u, &w);
  return prec_any(t, u, w);
}

SpanS FreeTridendriform::succ(const SchroderTree& t, const SchroderTree& u, const ExtElem& w) const {
  check_public(t, u, &w);
  return succ_any(t, u, w);
}

SpanS FreeTridendriform::dot(const SchroderTree& t, const SchroderTree& u) const {
  check_public(t, u, nullptr);
  return dot_any(t, u);
}

SpanS FreeTridendriform::prec_any(const SchroderTree& t, const SchroderTree& u, const ExtElem& w) const {
  if (t.is_leaf() && u.is_leaf()) throw std::logic_error("prec of two leaves is unreachable");
  if (u.is_leaf()) return SpanS(t);
  if (t.is_leaf()) return {};
  if (w.is_identity()) throw IdentityMisuse("the identity 1 reached a product of two trees");

  const std::size_t m = t.breadth() - 1;
  const SchroderTree& last = t.child(m);
  const ExtElem& am = t.type(m);
  SpanS inner = succ_any(last, u, am);
  inner += prec_any(last, u, w);
  inner += dot_any(last, u);
  return replace_child(t, m, omega_.mul(am, w), inner);
}

SpanS FreeTridendriform::succ_any(const SchroderTree& t, const SchroderTree& u, const ExtElem& w) const {
  if (t.is_leaf() && u.is_leaf()) throw std::logic_error("succ of two leaves is unreachable");
  if (t.is_leaf()) return SpanS(u);
  if (u.is_leaf()) return {};
  if (w.is_identity()) throw IdentityMisuse("the identity 1 reached a product of two trees");

  const SchroderTree& first = u.child(0);
  const ExtElem& b0 = u.type(0);
  SpanS inner = succ_any(t, first, w);
  inner += prec_any(t, first, b0);
  inner += dot_any(t, first);
  return replace_child(u, 0, omega_.mul(w, b0), inner);
}

SpanS FreeTridendriform::dot_any(const SchroderTree& t, const SchroderTree& u) const {
  if (t.is_leaf() && u.is_leaf()) throw std::logic_error("dot of two leaves is unreachable");
  if (t.is_leaf() || u.is_leaf()) return {};

  auto tp = decompose_nary(t);
  auto up = decompose_nary(u);
  const SchroderTree last = tp.children.back();
  const ExtElem am = tp.types.back();
  const SchroderTree& first = up.children.front();
  const ExtElem& b0 = up.types.front();

  std::vector<SchroderTree> children(tp.children.begin(), tp.children.end() - 1);
  std::vector<ExtElem> types(tp.types.begin(), tp.types.end() - 1);
  std::vector<Symbol> decs = tp.decs;
  decs.insert(decs.end(), up.decs.begin(), up.decs.end());
  const std::size_t mid = children.size();
  children.push_back(SchroderTree::leaf());
  types.push_back(ExtElem::identity());
  children.insert(children.end(), up.children.begin() + 1, up.children.end());
  types.insert(types.end(), up.types.begin() + 1, up.types.end());

  if (last.is_leaf() && first.is_leaf()) {
    // Two leaf middle children fuse into one leaf.
    return SpanS(graft_nary(std::move(children), std::move(decs), std::move(types)));
  }

  SpanS inner = succ_any(last, first, am);
  inner += prec_any(last, first, b0);
  inner += dot_any(last, first);
  types[mid] = omega_.mul(am, b0);
  std::vector<SpanS::Term> terms;
  terms.reserve(inner.size());
  for (const auto& term : inner) {
    children[mid] = term.basis;
    terms.push_back({term.coeff, graft_nary(children, decs, types)});
  }
  return SpanS::from_terms(std::move(terms));
}

SpanS FreeTridendriform::prec(const SpanS& t, const SpanS& u, const OmegaElem& w) const {
  SpanS out;
  const ExtElem e(w);
  for (const auto& a : t) {
    for (const auto& b : u) out.add_scaled(a.coeff * b.coeff, prec_any(a.basis, b.basis, e));
  }
  return out;
}

SpanS FreeTridendriform::succ(const SpanS& t, const SpanS& u, const OmegaElem& w) const {
  SpanS out;
  const ExtElem e(w);
  for (const auto& a : t) {
    for (const auto& b : u) out.add_scaled(a.coeff * b.coeff, succ_any(a.basis, b.basis, e));
  }
  return out;
}

SpanS FreeTridendriform::dot(const SpanS& t, const SpanS& u) const {
  SpanS out;
  for (const auto& a : t) {
    for (const auto& b : u) out.add_scaled(a.coeff * b.coeff, dot_any(a.basis, b.basis));
  }
  return out;
}

std::array<SpanS, 7> check_tridendriform_axioms(const FreeTridendriform& algebra, const SchroderTree& t,
                                                const SchroderTree& u, const SchroderTree& w, const OmegaElem& a,
                                                const OmegaElem& b) {
  return tridendriform_residuals(algebra, SpanS(t), SpanS(u), SpanS(w), a, b);
}

std::vector<SchroderTree> central_factors(const SchroderTree& t) {
  if (t.is_leaf()) throw TypingViolation("the leaf | has no factors");
  const auto& decs = t.decorations();
  std::vector<SchroderTree> out;
  out.reserve(decs.size());
  out.push_back(graft_nary({t.child(0), t.child(1)}, {decs[0]}, {t.type(0), t.type(1)}));
  for (std::size_t i = 1; i < decs.size(); ++i) {
    out.push_back(graft_nary({SchroderTree::leaf(), t.child(i + 1)}, {decs[i]}, {ExtElem::identity(), t.type(i + 1)}));
  }
  return out;
}

namespace {

Expr express_breadth2(const SchroderTree& t, ProductFold fold) {
  const auto& left = t.child(0);
  const auto& right = t.child(1);
  Expr x = Expr::gen(t.decorations().front());
  if (left.is_leaf() && right.is_leaf()) return x;
  if (left.is_leaf()) return Expr::prec(t.type(1).elem(), std::move(x), texpress_in_generators(right, fold));
  if (right.is_leaf()) return Expr::succ(t.type(0).elem(), texpress_in_generators(left, fold), std::move(x));
  return Expr::prec(t.type(1).elem(), Expr::succ(t.type(0).elem(), texpress_in_generators(left, fold), std::move(x)),
                    texpress_in_generators(right, fold));
}

}  // namespace

Expr texpress_in_generators(const SchroderTree& t, ProductFold fold) {
  if (t.is_leaf()) throw TypingViolation("the leaf | is not generated");
  if (t.breadth() == 2) return express_breadth2(t, fold);
  const auto factors = central_factors(t);
  if (fold == ProductFold::LeftToRight) {
    Expr acc = express_breadth2(factors.front(), fold);
    for (std::size_t i = 1; i < factors.size(); ++i) acc = Expr::dot(std::move(acc), express_breadth2(factors[i], fold));
    return acc;
  }
  Expr acc = express_breadth2(factors.back(), fold);
  for (std::size_t i = factors.size() - 1; i-- > 0;) acc = Expr::dot(express_breadth2(factors[i], fold), std::move(acc));
  return acc;
}

SpanS evaluate_free(const Expr& e, const FreeTridendriform& algebra) {
  return evaluate(e, algebra, [&](Symbol x) { return algebra.generator(x); });
}

}  // namespace dendrifam
