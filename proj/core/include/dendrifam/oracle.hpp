#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dendrifam/coefficient.hpp"
#include "dendrifam/errors.hpp"
#include "dendrifam/expr.hpp"
#include "dendrifam/semigroup.hpp"

namespace dendrifam {

/// A target algebra with a family of operations {prec_w, succ_w} indexed by
/// the semigroup, over an opaque element type with module operations.
template <class O>
concept DendriformFamily = requires(const O& o, const typename O::Element& a, const OmegaElem& w,
                                    const Coefficient& c) {
  { o.semigroup() } -> std::convertible_to<const Semigroup&>;
  { o.prec(a, a, w) } -> std::convertible_to<typename O::Element>;
  { o.succ(a, a, w) } -> std::convertible_to<typename O::Element>;
  { o.add(a, a) } -> std::convertible_to<typename O::Element>;
  { o.sub(a, a) } -> std::convertible_to<typename O::Element>;
  { o.scale(c, a) } -> std::convertible_to<typename O::Element>;
  { o.zero() } -> std::convertible_to<typename O::Element>;
  { o.is_zero(a) } -> std::convertible_to<bool>;
};

/// A dendriform family plus the middle product `dot`.
template <class O>
concept TridendriformFamily = DendriformFamily<O> && requires(const O& o, const typename O::Element& a) {
  { o.dot(a, a) } -> std::convertible_to<typename O::Element>;
};

/// Ordinary (non-family) dendriform structure.
template <class O>
concept ClassicalDendriform = requires(const O& o, const typename O::Element& a) {
  { o.prec(a, a) } -> std::convertible_to<typename O::Element>;
  { o.succ(a, a) } -> std::convertible_to<typename O::Element>;
  { o.add(a, a) } -> std::convertible_to<typename O::Element>;
  { o.sub(a, a) } -> std::convertible_to<typename O::Element>;
  { o.is_zero(a) } -> std::convertible_to<bool>;
};

template <class O>
concept ClassicalTridendriform = ClassicalDendriform<O> && requires(const O& o, const typename O::Element& a) {
  { o.dot(a, a) } -> std::convertible_to<typename O::Element>;
};

/// LHS - RHS of the three dendriform family axioms for (x, y, z) and indices (a, b).
template <DendriformFamily O>
std::array<typename O::Element, 3> dendriform_residuals(const O& o, const typename O::Element& x,
                                                        const typename O::Element& y,
                                                        const typename O::Element& z, const OmegaElem& a,
                                                        const OmegaElem& b) {
  const OmegaElem ab = o.semigroup().mul(a, b);
  // (x <_a y) <_b z = x <_ab (y <_b z + y >_a z)
  auto r1 = o.sub(o.prec(o.prec(x, y, a), z, b), o.prec(x, o.add(o.prec(y, z, b), o.succ(y, z, a)), ab));
  // (x >_a y) <_b z = x >_a (y <_b z)
  auto r2 = o.sub(o.prec(o.succ(x, y, a), z, b), o.succ(x, o.prec(y, z, b), a));
  // (x <_b y + x >_a y) >_ab z = x >_a (y >_b z)
  auto r3 = o.sub(o.succ(o.add(o.prec(x, y, b), o.succ(x, y, a)), z, ab), o.succ(x, o.succ(y, z, b), a));
  return {std::move(r1), std::move(r2), std::move(r3)};
}

/// LHS - RHS of the seven tridendriform family axioms.
template <TridendriformFamily O>
std::array<typename O::Element, 7> tridendriform_residuals(const O& o, const typename O::Element& x,
                                                           const typename O::Element& y,
                                                           const typename O::Element& z, const OmegaElem& a,
                                                           const OmegaElem& b) {
  const OmegaElem ab = o.semigroup().mul(a, b);
  const auto y_dot_z = o.dot(y, z);
  auto r1 = o.sub(o.prec(o.prec(x, y, a), z, b),
                  o.prec(x, o.add(o.add(o.prec(y, z, b), o.succ(y, z, a)), y_dot_z), ab));
  auto r2 = o.sub(o.prec(o.succ(x, y, a), z, b), o.succ(x, o.prec(y, z, b), a));
  auto r3 = o.sub(o.succ(o.add(o.add(o.prec(x, y, b), o.succ(x, y, a)), o.dot(x, y)), z, ab),
                  o.succ(x, o.succ(y, z, b), a));
  auto r4 = o.sub(o.dot(o.succ(x, y, a), z), o.succ(x, y_dot_z, a));
  auto r5 = o.sub(o.dot(o.prec(x, y, a), z), o.dot(x, o.succ(y, z, a)));
  auto r6 = o.sub(o.prec(o.dot(x, y), z, a), o.dot(x, o.prec(y, z, a)));
  auto r7 = o.sub(o.dot(o.dot(x, y), z), o.dot(x, y_dot_z));
  return {std::move(r1), std::move(r2), std::move(r3), std::move(r4), std::move(r5), std::move(r6), std::move(r7)};
}

template <ClassicalDendriform O>
std::array<typename O::Element, 3> classical_dendriform_residuals(const O& o, const typename O::Element& x,
                                                                  const typename O::Element& y,
                                                                  const typename O::Element& z) {
  auto r1 = o.sub(o.prec(o.prec(x, y), z), o.prec(x, o.add(o.prec(y, z), o.succ(y, z))));
  auto r2 = o.sub(o.prec(o.succ(x, y), z), o.succ(x, o.prec(y, z)));
  auto r3 = o.sub(o.succ(o.add(o.prec(x, y), o.succ(x, y)), z), o.succ(x, o.succ(y, z)));
  return {std::move(r1), std::move(r2), std::move(r3)};
}

template <ClassicalTridendriform O>
std::array<typename O::Element, 7> classical_tridendriform_residuals(const O& o, const typename O::Element& x,
                                                                     const typename O::Element& y,
                                                                     const typename O::Element& z) {
  const auto y_dot_z = o.dot(y, z);
  auto r1 = o.sub(o.prec(o.prec(x, y), z), o.prec(x, o.add(o.add(o.prec(y, z), o.succ(y, z)), y_dot_z)));
  auto r2 = o.sub(o.prec(o.succ(x, y), z), o.succ(x, o.prec(y, z)));
  auto r3 = o.sub(o.succ(o.add(o.add(o.prec(x, y), o.succ(x, y)), o.dot(x, y)), z), o.succ(x, o.succ(y, z)));
  auto r4 = o.sub(o.dot(o.succ(x, y), z), o.succ(x, y_dot_z));
  auto r5 = o.sub(o.dot(o.prec(x, y), z), o.dot(x, o.succ(y, z)));
  auto r6 = o.sub(o.prec(o.dot(x, y), z), o.dot(x, o.prec(y, z)));
  auto r7 = o.sub(o.dot(o.dot(x, y), z), o.dot(x, y_dot_z));
  return {std::move(r1), std::move(r2), std::move(r3), std::move(r4), std::move(r5), std::move(r6), std::move(r7)};
}

/// First failing instance of an axiom sweep. Indices point into the sample
/// vectors handed to the validator; axiom is 1-based.
struct AxiomViolation {
  std::size_t axiom = 0;
  std::size_t x = 0, y = 0, z = 0;
  OmegaElem a, b;
};

struct SweepReport {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::optional<AxiomViolation> first;
};

/// Checks every axiom on every (x, y, z, a, b) drawn from the samples.
template <DendriformFamily O>
SweepReport sweep_dendriform(const O& o, const std::vector<typename O::Element>& elements,
                             const std::vector<OmegaElem>& indices) {
  SweepReport report;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      for (std::size_t k = 0; k < elements.size(); ++k) {
        for (const auto& a : indices) {
          for (const auto& b : indices) {
            ++report.instances;
            const auto r = dendriform_residuals(o, elements[i], elements[j], elements[k], a, b);
            for (std::size_t ax = 0; ax < r.size(); ++ax) {
              if (!o.is_zero(r[ax])) {
                ++report.failures;
                if (!report.first) report.first = AxiomViolation{ax + 1, i, j, k, a, b};
                break;
              }
            }
          }
        }
      }
    }
  }
  return report;
}

template <TridendriformFamily O>
SweepReport sweep_tridendriform(const O& o, const std::vector<typename O::Element>& elements,
                                const std::vector<OmegaElem>& indices) {
  SweepReport report;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      for (std::size_t k = 0; k < elements.size(); ++k) {
        for (const auto& a : indices) {
          for (const auto& b : indices) {
            ++report.instances;
            const auto r = tridendriform_residuals(o, elements[i], elements[j], elements[k], a, b);
            for (std::size_t ax = 0; ax < r.size(); ++ax) {
              if (!o.is_zero(r[ax])) {
                ++report.failures;
                if (!report.first) report.first = AxiomViolation{ax + 1, i, j, k, a, b};
                break;
              }
            }
          }
        }
      }
    }
  }
  return report;
}

/// Classical sweeps report the axiom and element indices; a and b stay empty.
template <ClassicalDendriform O>
SweepReport sweep_classical_dendriform(const O& o, const std::vector<typename O::Element>& elements) {
  SweepReport report;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      for (std::size_t k = 0; k < elements.size(); ++k) {
        ++report.instances;
        const auto r = classical_dendriform_residuals(o, elements[i], elements[j], elements[k]);
        for (std::size_t ax = 0; ax < r.size(); ++ax) {
          if (!o.is_zero(r[ax])) {
            ++report.failures;
            if (!report.first) report.first = AxiomViolation{ax + 1, i, j, k, {}, {}};
            break;
          }
        }
      }
    }
  }
  return report;
}

template <ClassicalTridendriform O>
SweepReport sweep_classical_tridendriform(const O& o, const std::vector<typename O::Element>& elements) {
  SweepReport report;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      for (std::size_t k = 0; k < elements.size(); ++k) {
        ++report.instances;
        const auto r = classical_tridendriform_residuals(o, elements[i], elements[j], elements[k]);
        for (std::size_t ax = 0; ax < r.size(); ++ax) {
          if (!o.is_zero(r[ax])) {
            ++report.failures;
            if (!report.first) report.first = AxiomViolation{ax + 1, i, j, k, {}, {}};
            break;
          }
        }
      }
    }
  }
  return report;
}

/// Validation entry points: nullopt when every sampled instance holds.
template <DendriformFamily O>
std::optional<AxiomViolation> validate_dendriform(const O& o, const std::vector<typename O::Element>& elements,
                                                  const std::vector<OmegaElem>& indices) {
  return sweep_dendriform(o, elements, indices).first;
}

template <TridendriformFamily O>
std::optional<AxiomViolation> validate_tridendriform(const O& o, const std::vector<typename O::Element>& elements,
                                                     const std::vector<OmegaElem>& indices) {
  return sweep_tridendriform(o, elements, indices).first;
}

/// Evaluates an expression in a target algebra, sending gen(x) to gen(x).
template <DendriformFamily O, class GenMap>
typename O::Element evaluate(const Expr& e, const O& o, const GenMap& gen) {
  switch (e.op()) {
    case Expr::Op::Gen:
      return gen(e.symbol());
    case Expr::Op::Prec:
      return o.prec(evaluate(e.lhs(), o, gen), evaluate(e.rhs(), o, gen), e.omega());
    case Expr::Op::Succ:
      return o.succ(evaluate(e.lhs(), o, gen), evaluate(e.rhs(), o, gen), e.omega());
    case Expr::Op::Dot:
      if constexpr (TridendriformFamily<O>) {
        return o.dot(evaluate(e.lhs(), o, gen), evaluate(e.rhs(), o, gen));
      } else {
        throw ValidationError("dot() has no meaning in a dendriform family algebra");
      }
  }
  throw std::logic_error("unknown expression operator");
}

/// Dendriform family induced by a tridendriform one: prec' = prec + dot, succ' = succ.
template <TridendriformFamily O>
class Gamma {
 public:
  using Element = typename O::Element;

  explicit Gamma(const O& inner) : inner_(&inner) {}

  const Semigroup& semigroup() const { return inner_->semigroup(); }
  Element prec(const Element& a, const Element& b, const OmegaElem& w) const {
    return inner_->add(inner_->prec(a, b, w), inner_->dot(a, b));
  }
  Element succ(const Element& a, const Element& b, const OmegaElem& w) const { return inner_->succ(a, b, w); }
  Element add(const Element& a, const Element& b) const { return inner_->add(a, b); }
  Element sub(const Element& a, const Element& b) const { return inner_->sub(a, b); }
  Element scale(const Coefficient& c, const Element& a) const { return inner_->scale(c, a); }
  Element zero() const { return inner_->zero(); }
  bool is_zero(const Element& a) const { return inner_->is_zero(a); }

  const O& inner() const { return *inner_; }

 private:
  const O* inner_;
};

template <TridendriformFamily O>
Gamma<O> gamma(const O& oracle) {
  return Gamma<O>(oracle);
}

}  // namespace dendrifam
