#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "dendrifam/alphabet.hpp"
#include "dendrifam/coefficient.hpp"
#include "dendrifam/dendriform.hpp"
#include "dendrifam/lincomb.hpp"
#include "dendrifam/oracle.hpp"
#include "dendrifam/semigroup.hpp"
#include "dendrifam/tridendriform.hpp"

namespace dendrifam {

/// Coordinates in the basis e_0 .. e_{d-1}.
using Vector = std::vector<Coefficient>;

Vector basis_vector(std::size_t dim, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Coefficient& c, const Vector& a);
bool is_zero(const Vector& a);

/// Dense square matrix over the rationals, acting on column vectors.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  /// Row-major entries; throws ValidationError unless there are dim^2 of them.
  Matrix(std::size_t dim, std::vector<Coefficient> row_major);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Coefficient& at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  Coefficient& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }

  Vector apply(const Vector& v) const;
  friend Matrix operator*(const Coefficient& c, const Matrix& m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Coefficient> data_;
};

/// Associative algebra given by structure constants e_i e_j = sum_k c[i][j][k] e_k.
class FiniteAlgebra {
 public:
  /// `constants[(i * d + j) * d + k]` is c[i][j][k]. Throws ValidationError
  /// when the size is wrong or associativity fails on a basis triple.
  FiniteAlgebra(std::size_t dim, std::vector<Coefficient> constants);

  /// k^d with the coordinatewise product.
  static FiniteAlgebra pointwise(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Coefficient& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector basis(std::size_t i) const { return basis_vector(dim_, i); }

  /// First basis triple with (e_i e_j) e_k != e_i (e_j e_k).
  static std::optional<std::array<std::size_t, 3>> associativity_violation(std::size_t dim,
                                                                           const std::vector<Coefficient>& constants);

 private:
  std::size_t dim_;
  std::vector<Coefficient> c_;
};

/// A family of operators {P_w} of weight lambda on a finite algebra. A
/// constant operator, when present, serves every index without an override.
class RBFamily {
 public:
  RBFamily(FiniteAlgebra algebra, Coefficient lambda);

  /// P_w = m for every w.
  static RBFamily constant(FiniteAlgebra algebra, Coefficient lambda, Matrix m);
  /// P_w = -lambda * id.
  static RBFamily negative_lambda_identity(FiniteAlgebra algebra, Coefficient lambda);
  /// On k^d pointwise: P_w(a)_i = -lambda * (a_0 + ... + a_i).
  static RBFamily cascaded_sum(std::size_t dim, Coefficient lambda);

  void set_constant(Matrix m);
  void set(const OmegaElem& w, Matrix m);

  const FiniteAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  const Coefficient& lambda() const { return lambda_; }

  bool has(const OmegaElem& w) const;
  /// Throws InvalidElement when no operator is defined for w.
  const Matrix& op(const OmegaElem& w) const;
  Vector apply(const OmegaElem& w, const Vector& v) const { return op(w).apply(v); }

 private:
  void check_dim(const Matrix& m) const;

  FiniteAlgebra algebra_;
  Coefficient lambda_;
  std::optional<Matrix> constant_;
  std::map<OmegaElem, Matrix> ops_;
};

/// Basis pair (e_i, e_j) and indices (a, b) where the family identity fails.
struct RBCounterexample {
  OmegaElem a, b;
  std::size_t i = 0, j = 0;
};

struct RBReport {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::optional<RBCounterexample> first;
};

/// Checks P_a(x)P_b(y) = P_ab(P_a(x)y + xP_b(y) + lambda xy) on all basis
/// pairs and all a, b in the sample.
RBReport sweep_rb_family(const RBFamily& rb, const Semigroup& omega, const std::vector<OmegaElem>& sample);
std::optional<RBCounterexample> validate_rb_family(const RBFamily& rb, const Semigroup& omega,
                                                   const std::vector<OmegaElem>& sample);

/// x prec_w y = x P_w(y) + lambda xy, x succ_w y = P_w(x) y.
class EtaOracle {
 public:
  using Element = Vector;

  EtaOracle(RBFamily rb, Semigroup omega) : rb_(std::move(rb)), omega_(std::move(omega)) {}

  const Semigroup& semigroup() const { return omega_; }
  const RBFamily& family() const { return rb_; }

  Vector prec(const Vector& x, const Vector& y, const OmegaElem& w) const;
  Vector succ(const Vector& x, const Vector& y, const OmegaElem& w) const;
  Vector add(const Vector& a, const Vector& b) const { return dendrifam::add(a, b); }
  Vector sub(const Vector& a, const Vector& b) const { return dendrifam::sub(a, b); }
  Vector scale(const Coefficient& c, const Vector& a) const { return dendrifam::scale(c, a); }
  Vector zero() const { return Vector(rb_.dim()); }
  bool is_zero(const Vector& a) const { return dendrifam::is_zero(a); }

 private:
  RBFamily rb_;
  Semigroup omega_;
};

/// x prec_w y = x P_w(y), x succ_w y = P_w(x) y, x . y = lambda xy.
class EpsilonOracle {
 public:
  using Element = Vector;

  EpsilonOracle(RBFamily rb, Semigroup omega) : rb_(std::move(rb)), omega_(std::move(omega)) {}

  const Semigroup& semigroup() const { return omega_; }
  const RBFamily& family() const { return rb_; }

  Vector prec(const Vector& x, const Vector& y, const OmegaElem& w) const;
  Vector succ(const Vector& x, const Vector& y, const OmegaElem& w) const;
  Vector dot(const Vector& x, const Vector& y) const;
  Vector add(const Vector& a, const Vector& b) const { return dendrifam::add(a, b); }
  Vector sub(const Vector& a, const Vector& b) const { return dendrifam::sub(a, b); }
  Vector scale(const Coefficient& c, const Vector& a) const { return dendrifam::scale(c, a); }
  Vector zero() const { return Vector(rb_.dim()); }
  bool is_zero(const Vector& a) const { return dendrifam::is_zero(a); }

 private:
  RBFamily rb_;
  Semigroup omega_;
};

static_assert(DendriformFamily<EtaOracle>);
static_assert(TridendriformFamily<EpsilonOracle>);

std::vector<Vector> basis_vectors(std::size_t dim);

/// Throws ValidationError when rb fails the family identity on the sample,
/// and AxiomFailure when the induced structure breaks an axiom on basis triples.
EtaOracle eta(const RBFamily& rb, const Semigroup& omega, const std::vector<OmegaElem>& sample);
/// As eta, checking all seven axioms.
EpsilonOracle epsilon(const RBFamily& rb, const Semigroup& omega, const std::vector<OmegaElem>& sample);

/// Basis element e_i (x) w of R (x) kOmega.
struct TensorBasis {
  std::size_t index = 0;
  OmegaElem w;
  friend auto operator<=>(const TensorBasis&, const TensorBasis&) = default;
};

using TensorSpan = LinComb<TensorBasis>;

/// R (x) kOmega with the single operator P(x (x) w) = P_w(x) (x) w.
class TensorRB {
 public:
  TensorRB(RBFamily rb, Semigroup omega) : rb_(std::move(rb)), omega_(std::move(omega)) {}

  const Coefficient& lambda() const { return rb_.lambda(); }
  TensorSpan pure(std::size_t i, const OmegaElem& w) const { return TensorSpan(TensorBasis{i, w}); }
  TensorSpan apply(const TensorSpan& u) const;
  TensorSpan multiply(const TensorSpan& u, const TensorSpan& v) const;

 private:
  TensorSpan embed(const Vector& v, const OmegaElem& w) const;

  RBFamily rb_;
  Semigroup omega_;
};

/// Checks P(u)P(v) = P(P(u)v + uP(v) + lambda uv) on every pair e_i (x) a, e_j (x) b.
RBReport sweep_tensor_rb(const TensorRB& p, std::size_t dim, const std::vector<OmegaElem>& sample);
std::optional<RBCounterexample> validate_tensor_rb(const TensorRB& p, std::size_t dim,
                                                   const std::vector<OmegaElem>& sample);

/// Basis element T (x) w of a free family algebra tensored with kOmega.
template <class Tree>
struct Tagged {
  Tree tree;
  OmegaElem w;
  friend bool operator==(const Tagged&, const Tagged&) = default;
  friend auto operator<=>(const Tagged& a, const Tagged& b) {
    if (auto c = a.tree <=> b.tree; c != 0) return c;
    return a.w <=> b.w;
  }
};

template <class Tree>
struct BasisTraits<Tagged<Tree>> {
  static void check(const Tagged<Tree>& t) { BasisTraits<Tree>::check(t.tree); }
};

/// Ordinary (tri)dendriform structure on A (x) kOmega:
///   (x (x) a) prec (y (x) b) = (x prec_b y) (x) ab
///   (x (x) a) succ (y (x) b) = (x succ_a y) (x) ab
///   (x (x) a) . (y (x) b)    = (x . y) (x) ab
template <class Algebra, class Tree>
class TensorFamily {
 public:
  using Element = LinComb<Tagged<Tree>>;

  explicit TensorFamily(const Algebra& algebra) : algebra_(&algebra) {}

  static Element pure(const Tree& t, const OmegaElem& w) { return Element(Tagged<Tree>{t, w}); }

  Element prec(const Element& u, const Element& v) const {
    return combine(u, v, [&](const auto& x, const auto& y, const OmegaElem&, const OmegaElem& b) {
      return algebra_->prec(x, y, b);
    });
  }
  Element succ(const Element& u, const Element& v) const {
    return combine(u, v, [&](const auto& x, const auto& y, const OmegaElem& a, const OmegaElem&) {
      return algebra_->succ(x, y, a);
    });
  }
  Element dot(const Element& u, const Element& v) const
    requires TridendriformFamily<Algebra>
  {
    return combine(u, v, [&](const auto& x, const auto& y, const OmegaElem&, const OmegaElem&) {
      return algebra_->dot(x, y);
    });
  }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  bool is_zero(const Element& a) const { return a.empty(); }

 private:
  template <class Op>
  Element combine(const Element& u, const Element& v, const Op& op) const {
    std::vector<typename Element::Term> terms;
    for (const auto& s : u) {
      for (const auto& t : v) {
        const OmegaElem ab = algebra_->semigroup().mul(s.basis.w, t.basis.w);
        const auto product = op(LinComb<Tree>(s.basis.tree), LinComb<Tree>(t.basis.tree), s.basis.w, t.basis.w);
        for (const auto& term : product) terms.push_back({s.coeff * t.coeff * term.coeff, Tagged<Tree>{term.basis, ab}});
      }
    }
    return Element::from_terms(std::move(terms));
  }

  const Algebra* algebra_;
};

using TensorDendriform = TensorFamily<FreeDendriform, BinTree>;
using TensorTridendriform = TensorFamily<FreeTridendriform, SchroderTree>;

static_assert(ClassicalDendriform<TensorDendriform>);
static_assert(ClassicalTridendriform<TensorTridendriform>);

/// Parses the operator file format:
///
///   dim 3
///   lambda 1            (optional)
///   pointwise           (or one `mult i j k c` line per nonzero constant)
///   op * <d*d entries>  (constant operator, row-major)
///   op a <d*d entries>  (operator for one semigroup element)
///
/// `#` starts a comment. A lambda_override wins over the file; with neither,
/// lambda is 1. Throws ValidationError.
RBFamily parse_rb_family(std::string_view text, const Semigroup& omega,
                         std::optional<Coefficient> lambda_override = std::nullopt);

/// Parses `x c0 c1 ... c(d-1)` lines into generator images. Throws ValidationError.
std::map<Symbol, Vector> parse_generator_map(std::string_view text, const Alphabet& alphabet, std::size_t dim);

}  // namespace dendrifam
