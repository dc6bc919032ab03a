#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "dendrifam/coefficient.hpp"

namespace dendrifam {

/// Hook for rejecting values that are representable but not basis elements
/// (the bare Leaf, for tree spans).
template <class Basis>
struct BasisTraits {
  static void check(const Basis&) {}
};

/// Finite formal linear combination over an ordered basis.
///
/// Always normalized: terms strictly increasing by basis order, no zero
/// coefficients, no duplicates.
template <class Basis>
class LinComb {
 public:
  struct Term {
    Coefficient coeff;
    Basis basis;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LinComb() = default;
  explicit LinComb(Basis b, Coefficient c = Coefficient(1)) {
    BasisTraits<Basis>::check(b);
    if (!c.is_zero()) terms_.push_back(Term{std::move(c), std::move(b)});
  }

  /// Sorts, merges equal basis elements and drops zeros.
  static LinComb from_terms(std::vector<Term> terms) {
    for (const auto& t : terms) BasisTraits<Basis>::check(t.basis);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.basis < b.basis; });
    LinComb out;
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().basis == t.basis) {
        out.terms_.back().coeff += t.coeff;
      } else {
        if (!out.terms_.empty() && out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
        out.terms_.push_back(std::move(t));
      }
    }
    if (!out.terms_.empty() && out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    return out;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Coefficient coefficient(const Basis& b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, const Basis& key) { return t.basis < key; });
    if (it != terms_.end() && it->basis == b) return it->coeff;
    return Coefficient();
  }

  LinComb& operator+=(const LinComb& o) {
    merge(o, Coefficient(1));
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    merge(o, Coefficient(-1));
    return *this;
  }

  /// this += c * o, in one pass.
  LinComb& add_scaled(const Coefficient& c, const LinComb& o) {
    if (!c.is_zero()) merge(o, c);
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(const LinComb& a) { return Coefficient(-1) * a; }
  friend LinComb operator*(const Coefficient& c, const LinComb& a) {
    LinComb out;
    if (c.is_zero()) return out;
    out.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) out.terms_.push_back(Term{c * t.coeff, t.basis});
    return out;
  }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  void merge(const LinComb& o, const Coefficient& scale) {
    if (o.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->basis < b->basis)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->basis < a->basis) {
        out.push_back(Term{scale * b->coeff, b->basis});
        ++b;
      } else {
        Coefficient c = a->coeff + scale * b->coeff;
        if (!c.is_zero()) out.push_back(Term{std::move(c), std::move(a->basis)});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

template <class Basis>
LinComb<Basis> lincomb_add(const LinComb<Basis>& a, const LinComb<Basis>& b) {
  return a + b;
}

template <class Basis>
LinComb<Basis> lincomb_scale(const Coefficient& c, const LinComb<Basis>& a) {
  return c * a;
}

}  // namespace dendrifam
