#pragma once

// A second, deliberately plain implementation of the typed free algebras,
// with switches that break the construction in known ways. With no mutation
// it must agree with the library; with one, the axiom checks must notice.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dendrifam/coefficient.hpp"
#include "dendrifam/pbtree.hpp"
#include "dendrifam/schroder.hpp"
#include "dendrifam/semigroup.hpp"

namespace reference {

using dendrifam::ExtElem;
using dendrifam::OmegaElem;

enum class Mutation {
  None,
  SwapSuccType,     // succ types the new edge b*w instead of w*b
  DropLeafFusion,   // two leaf middle children in dot give 0
  DoubleLeafFusion,  // two leaf middle children in dot give 2*|
  SwapDotType,       // the fused middle edge is typed b0*am instead of am*b0
  DropMiddleDot      // the fused middle child omits its own dot term
};

struct Tree {
  std::vector<std::uint32_t> decs;  // empty for the leaf
  std::vector<ExtElem> types;
  std::vector<Tree> kids;

  bool leaf() const { return decs.empty(); }
  friend bool operator==(const Tree&, const Tree&) = default;
  friend std::strong_ordering operator<=>(const Tree&, const Tree&) = default;
};

using Span = std::map<Tree, long>;

inline void add_into(Span& out, const Span& s, long c = 1) {
  for (const auto& [t, k] : s) {
    long& v = out[t];
    v += c * k;
    if (v == 0) out.erase(t);
  }
}

class Algebra {
 public:
  using Element = Span;

  Algebra(dendrifam::Semigroup omega, bool tri, Mutation m = Mutation::None)
      : omega_(std::move(omega)), tri_(tri), m_(m) {}

  const dendrifam::Semigroup& semigroup() const { return omega_; }

  Span prec(const Span& a, const Span& b, const OmegaElem& w) const {
    return lift(a, b, [&](auto& t, auto& u) { return prec_t(t, u, w); });
  }
  Span succ(const Span& a, const Span& b, const OmegaElem& w) const {
    return lift(a, b, [&](auto& t, auto& u) { return succ_t(t, u, w); });
  }
  Span dot(const Span& a, const Span& b) const {
    return lift(a, b, [&](auto& t, auto& u) { return dot_t(t, u); });
  }

  Span add(const Span& a, const Span& b) const {
    Span out = a;
    add_into(out, b);
    return out;
  }
  Span sub(const Span& a, const Span& b) const {
    Span out = a;
    add_into(out, b, -1);
    return out;
  }
  Span scale(const dendrifam::Coefficient& c, const Span& a) const {
    Span out;
    add_into(out, a, std::stol(c.numerator()));
    return out;
  }
  Span zero() const { return {}; }
  bool is_zero(const Span& a) const { return a.empty(); }

 private:
  template <class F>
  static Span lift(const Span& a, const Span& b, const F& f) {
    Span out;
    for (const auto& [t, c] : a) {
      for (const auto& [u, d] : b) add_into(out, f(t, u), c * d);
    }
    return out;
  }

  static Span unit(const Tree& t, long c = 1) { return Span{{t, c}}; }

  static Span replace(const Tree& t, std::size_t i, const ExtElem& type, const Span& inner) {
    Span out;
    for (const auto& [v, c] : inner) {
      Tree w = t;
      w.kids[i] = v;
      w.types[i] = type;
      out[w] += c;
    }
    return out;
  }

  Span prec_t(const Tree& t, const Tree& u, const ExtElem& w) const {
    if (u.leaf()) return unit(t);
    if (t.leaf()) return {};
    const Tree& r = t.kids.back();
    const ExtElem& a = t.types.back();
    Span inner = prec_t(r, u, w);
    add_into(inner, succ_t(r, u, a));
    if (tri_) add_into(inner, dot_t(r, u));
    return replace(t, t.kids.size() - 1, omega_.mul(a, w), inner);
  }

  Span succ_t(const Tree& t, const Tree& u, const ExtElem& w) const {
    if (t.leaf()) return unit(u);
    if (u.leaf()) return {};
    const Tree& l = u.kids.front();
    const ExtElem& b = u.types.front();
    Span inner = prec_t(t, l, b);
    add_into(inner, succ_t(t, l, w));
    if (tri_) add_into(inner, dot_t(t, l));
    const ExtElem type = m_ == Mutation::SwapSuccType ? omega_.mul(b, w) : omega_.mul(w, b);
    return replace(u, 0, type, inner);
  }

  Span dot_t(const Tree& t, const Tree& u) const {
    if (t.leaf() || u.leaf()) return {};
    Tree fused;
    fused.decs = t.decs;
    fused.decs.insert(fused.decs.end(), u.decs.begin(), u.decs.end());
    fused.kids.assign(t.kids.begin(), t.kids.end() - 1);
    fused.types.assign(t.types.begin(), t.types.end() - 1);
    const std::size_t mid = fused.kids.size();
    fused.kids.push_back(Tree{});
    fused.types.push_back(ExtElem::identity());
    fused.kids.insert(fused.kids.end(), u.kids.begin() + 1, u.kids.end());
    fused.types.insert(fused.types.end(), u.types.begin() + 1, u.types.end());
    const Tree& r = t.kids.back();
    const Tree& l = u.kids.front();
    if (r.leaf() && l.leaf()) {
      if (m_ == Mutation::DropLeafFusion) return {};
      return unit(fused, m_ == Mutation::DoubleLeafFusion ? 2 : 1);
    }
    Span inner = succ_t(r, l, t.types.back());
    add_into(inner, prec_t(r, l, u.types.front()));
    if (m_ != Mutation::DropMiddleDot) add_into(inner, dot_t(r, l));
    const ExtElem type = m_ == Mutation::SwapDotType ? omega_.mul(u.types.front(), t.types.back())
                                                     : omega_.mul(t.types.back(), u.types.front());
    return replace(fused, mid, type, inner);
  }

  dendrifam::Semigroup omega_;
  bool tri_;
  Mutation m_;
};

inline Tree from(const dendrifam::SchroderTree& t) {
  if (t.is_leaf()) return {};
  Tree out;
  for (auto d : t.decorations()) out.decs.push_back(d.index);
  for (std::size_t i = 0; i < t.breadth(); ++i) {
    out.types.push_back(t.type(i));
    out.kids.push_back(from(t.child(i)));
  }
  return out;
}

inline Tree from(const dendrifam::BinTree& t) { return from(dendrifam::to_schroder(t)); }

template <class Basis>
Span from(const dendrifam::LinComb<Basis>& s) {
  Span out;
  for (const auto& term : s) {
    if (term.coeff.denominator() != "1") throw std::logic_error("non-integral coefficient");
    out[from(term.basis)] += std::stol(term.coeff.numerator());
  }
  return out;
}

}  // namespace reference
