#include "dendrifam/rotabaxter.hpp"

#include <sstream>
#include <string>
#include <tuple>

namespace dendrifam {

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = Coefficient(1);
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.at(i);
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.at(i);
  return out;
}

Vector scale(const Coefficient& c, const Vector& a) {
  Vector out(a);
  for (auto& x : out) x = c * x;
  return out;
}

bool is_zero(const Vector& a) {
  for (const auto& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<Vector> basis_vectors(std::size_t dim) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(basis_vector(dim, i));
  return out;
}

Matrix::Matrix(std::size_t dim, std::vector<Coefficient> row_major) : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim * dim) {
    throw ValidationError("matrix needs " + std::to_string(dim * dim) + " entries, got " +
                          std::to_string(data_.size()));
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Coefficient(1);
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != dim_) throw ValidationError("vector dimension does not match matrix");
  Vector out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

Matrix operator*(const Coefficient& c, const Matrix& m) {
  Matrix out(m);
  for (auto& x : out.data_) x = c * x;
  return out;
}

namespace {

Vector multiply_raw(std::size_t d, const std::vector<Coefficient>& c, const Vector& a, const Vector& b) {
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      const Coefficient ab = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k) {
        const auto& cijk = c[(i * d + j) * d + k];
        if (!cijk.is_zero()) out[k] += ab * cijk;
      }
    }
  }
  return out;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::size_t dim, std::vector<Coefficient> constants) : dim_(dim), c_(std::move(constants)) {
  if (dim_ == 0) throw ValidationError("algebra dimension must be positive");
  if (c_.size() != dim_ * dim_ * dim_) throw ValidationError("structure constants have the wrong size");
  if (auto bad = associativity_violation(dim_, c_)) {
    throw ValidationError("not associative on basis triple (" + std::to_string((*bad)[0]) + ", " +
                          std::to_string((*bad)[1]) + ", " + std::to_string((*bad)[2]) + ")");
  }
}

FiniteAlgebra FiniteAlgebra::pointwise(std::size_t dim) {
  std::vector<Coefficient> c(dim * dim * dim);
  for (std::size_t i = 0; i < dim; ++i) c[(i * dim + i) * dim + i] = Coefficient(1);
  return FiniteAlgebra(dim, std::move(c));
}

Vector FiniteAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw ValidationError("vector dimension does not match algebra");
  return multiply_raw(dim_, c_, a, b);
}

std::optional<std::array<std::size_t, 3>> FiniteAlgebra::associativity_violation(
    std::size_t dim, const std::vector<Coefficient>& constants) {
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        const auto ei = basis_vector(dim, i);
        const auto ej = basis_vector(dim, j);
        const auto ek = basis_vector(dim, k);
        const auto lhs = multiply_raw(dim, constants, multiply_raw(dim, constants, ei, ej), ek);
        const auto rhs = multiply_raw(dim, constants, ei, multiply_raw(dim, constants, ej, ek));
        if (lhs != rhs) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

RBFamily::RBFamily(FiniteAlgebra algebra, Coefficient lambda) : algebra_(std::move(algebra)), lambda_(std::move(lambda)) {}

RBFamily RBFamily::constant(FiniteAlgebra algebra, Coefficient lambda, Matrix m) {
  RBFamily rb(std::move(algebra), std::move(lambda));
  rb.set_constant(std::move(m));
  return rb;
}

RBFamily RBFamily::negative_lambda_identity(FiniteAlgebra algebra, Coefficient lambda) {
  const std::size_t d = algebra.dim();
  Matrix m = (-lambda) * Matrix::identity(d);
  return constant(std::move(algebra), std::move(lambda), std::move(m));
}

RBFamily RBFamily::cascaded_sum(std::size_t dim, Coefficient lambda) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m.at(i, j) = -lambda;
  }
  return constant(FiniteAlgebra::pointwise(dim), std::move(lambda), std::move(m));
}

void RBFamily::check_dim(const Matrix& m) const {
  if (m.dim() != dim()) throw ValidationError("operator dimension does not match algebra");
}

void RBFamily::set_constant(Matrix m) {
  check_dim(m);
  constant_ = std::move(m);
}

void RBFamily::set(const OmegaElem& w, Matrix m) {
  check_dim(m);
  ops_.insert_or_assign(w, std::move(m));
}

bool RBFamily::has(const OmegaElem& w) const { return constant_.has_value() || ops_.contains(w); }

const Matrix& RBFamily::op(const OmegaElem& w) const {
  if (auto it = ops_.find(w); it != ops_.end()) return it->second;
  if (constant_) return *constant_;
  throw InvalidElement("no operator defined for this semigroup element");
}

RBReport sweep_rb_family(const RBFamily& rb, const Semigroup& omega, const std::vector<OmegaElem>& sample) {
  RBReport report;
  const auto& alg = rb.algebra();
  const auto basis = basis_vectors(rb.dim());
  for (const auto& a : sample) {
    for (const auto& b : sample) {
      const OmegaElem ab = omega.mul(a, b);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const Vector pa = rb.apply(a, basis[i]);
        for (std::size_t j = 0; j < basis.size(); ++j) {
          const Vector pb = rb.apply(b, basis[j]);
          const Vector lhs = alg.multiply(pa, pb);
          Vector inner = add(alg.multiply(pa, basis[j]), alg.multiply(basis[i], pb));
          inner = add(inner, scale(rb.lambda(), alg.multiply(basis[i], basis[j])));
          ++report.instances;
          if (lhs != rb.apply(ab, inner)) {
            ++report.failures;
            if (!report.first) report.first = RBCounterexample{a, b, i, j};
          }
        }
      }
    }
  }
  return report;
}

std::optional<RBCounterexample> validate_rb_family(const RBFamily& rb, const Semigroup& omega,
                                                   const std::vector<OmegaElem>& sample) {
  return sweep_rb_family(rb, omega, sample).first;
}

Vector EtaOracle::prec(const Vector& x, const Vector& y, const OmegaElem& w) const {
  const auto& alg = rb_.algebra();
  return add(alg.multiply(x, rb_.apply(w, y)), scale(rb_.lambda(), alg.multiply(x, y)));
}

Vector EtaOracle::succ(const Vector& x, const Vector& y, const OmegaElem& w) const {
  return rb_.algebra().multiply(rb_.apply(w, x), y);
}

Vector EpsilonOracle::prec(const Vector& x, const Vector& y, const OmegaElem& w) const {
  return rb_.algebra().multiply(x, rb_.apply(w, y));
}

Vector EpsilonOracle::succ(const Vector& x, const Vector& y, const OmegaElem& w) const {
  return rb_.algebra().multiply(rb_.apply(w, x), y);
}

Vector EpsilonOracle::dot(const Vector& x, const Vector& y) const {
  return scale(rb_.lambda(), rb_.algebra().multiply(x, y));
}

namespace {

void require_rb(const RBFamily& rb, const Semigroup& omega, const std::vector<OmegaElem>& sample) {
  if (auto bad = validate_rb_family(rb, omega, sample)) {
    throw ValidationError("not a Rota-Baxter family: identity fails at (" + omega.format(bad->a) + ", " +
                          omega.format(bad->b) + ") on basis pair (" + std::to_string(bad->i) + ", " +
                          std::to_string(bad->j) + ")");
  }
}

}  // namespace

EtaOracle eta(const RBFamily& rb, const Semigroup& omega, const std::vector<OmegaElem>& sample) {
  require_rb(rb, omega, sample);
  EtaOracle out(rb, omega);
  if (auto bad = validate_dendriform(out, basis_vectors(rb.dim()), sample)) {
    throw AxiomFailure("induced dendriform structure fails axiom " + std::to_string(bad->axiom) +
                       " on basis triple (" + std::to_string(bad->x) + ", " + std::to_string(bad->y) + ", " +
                       std::to_string(bad->z) + ")");
  }
  return out;
}

EpsilonOracle epsilon(const RBFamily& rb, const Semigroup& omega, const std::vector<OmegaElem>& sample) {
  require_rb(rb, omega, sample);
  EpsilonOracle out(rb, omega);
  if (auto bad = validate_tridendriform(out, basis_vectors(rb.dim()), sample)) {
    throw AxiomFailure("induced tridendriform structure fails axiom " + std::to_string(bad->axiom) +
                       " on basis triple (" + std::to_string(bad->x) + ", " + std::to_string(bad->y) + ", " +
                       std::to_string(bad->z) + ")");
  }
  return out;
}

TensorSpan TensorRB::embed(const Vector& v, const OmegaElem& w) const {
  std::vector<TensorSpan::Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) terms.push_back({v[i], TensorBasis{i, w}});
  }
  return TensorSpan::from_terms(std::move(terms));
}

TensorSpan TensorRB::apply(const TensorSpan& u) const {
  TensorSpan out;
  for (const auto& t : u) {
    out.add_scaled(t.coeff, embed(rb_.apply(t.basis.w, rb_.algebra().basis(t.basis.index)), t.basis.w));
  }
  return out;
}

TensorSpan TensorRB::multiply(const TensorSpan& u, const TensorSpan& v) const {
  TensorSpan out;
  const auto& alg = rb_.algebra();
  for (const auto& s : u) {
    for (const auto& t : v) {
      const auto xy = alg.multiply(alg.basis(s.basis.index), alg.basis(t.basis.index));
      out.add_scaled(s.coeff * t.coeff, embed(xy, omega_.mul(s.basis.w, t.basis.w)));
    }
  }
  return out;
}

RBReport sweep_tensor_rb(const TensorRB& p, std::size_t dim, const std::vector<OmegaElem>& sample) {
  RBReport report;
  for (const auto& a : sample) {
    for (const auto& b : sample) {
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          const auto u = p.pure(i, a);
          const auto v = p.pure(j, b);
          const auto pu = p.apply(u);
          const auto pv = p.apply(v);
          const auto lhs = p.multiply(pu, pv);
          auto inner = p.multiply(pu, v) + p.multiply(u, pv);
          inner.add_scaled(p.lambda(), p.multiply(u, v));
          ++report.instances;
          if (lhs != p.apply(inner)) {
            ++report.failures;
            if (!report.first) report.first = RBCounterexample{a, b, i, j};
          }
        }
      }
    }
  }
  return report;
}

std::optional<RBCounterexample> validate_tensor_rb(const TensorRB& p, std::size_t dim,
                                                   const std::vector<OmegaElem>& sample) {
  return sweep_tensor_rb(p, dim, sample).first;
}

namespace {

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  throw ValidationError("line " + std::to_string(line) + ": " + what);
}

std::vector<Coefficient> read_coefficients(std::istringstream& in, std::size_t line) {
  std::vector<Coefficient> out;
  std::string tok;
  while (in >> tok) {
    try {
      out.push_back(Coefficient::parse(tok));
    } catch (const ValidationError& e) {
      fail_line(line, e.what());
    }
  }
  return out;
}

std::size_t read_index(std::istringstream& in, std::size_t line) {
  std::string tok;
  if (!(in >> tok)) fail_line(line, "missing index");
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    fail_line(line, "bad index '" + tok + "'");
  }
  if (pos != tok.size() || tok.front() == '-' || tok.front() == '+') fail_line(line, "bad index '" + tok + "'");
  return v;
}

template <class F>
void for_each_line(std::string_view text, const F& f) {
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    f(line_no, head, words);
  }
}

}  // namespace

RBFamily parse_rb_family(std::string_view text, const Semigroup& omega, std::optional<Coefficient> lambda_override) {
  std::optional<std::size_t> dim;
  std::optional<Coefficient> lambda;
  bool pointwise = false;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Coefficient>> mults;
  std::optional<std::vector<Coefficient>> constant;
  std::size_t constant_line = 0;
  std::vector<std::tuple<std::size_t, OmegaElem, std::vector<Coefficient>>> ops;

  for_each_line(text, [&](std::size_t line, const std::string& head, std::istringstream& words) {
    if (head == "dim") {
      if (dim) fail_line(line, "duplicate dim");
      dim = read_index(words, line);
      if (*dim == 0) fail_line(line, "dim must be positive");
    } else if (head == "lambda") {
      auto c = read_coefficients(words, line);
      if (c.size() != 1) fail_line(line, "lambda takes one rational");
      lambda = c.front();
    } else if (head == "pointwise") {
      pointwise = true;
    } else if (head == "mult") {
      const auto i = read_index(words, line);
      const auto j = read_index(words, line);
      const auto k = read_index(words, line);
      auto c = read_coefficients(words, line);
      if (c.size() != 1) fail_line(line, "mult takes i j k c");
      mults.emplace_back(i, j, k, c.front());
    } else if (head == "op") {
      std::string who;
      if (!(words >> who)) fail_line(line, "op needs an index or *");
      auto entries = read_coefficients(words, line);
      if (who == "*") {
        if (constant) fail_line(line, "duplicate constant operator");
        constant = std::move(entries);
        constant_line = line;
      } else {
        OmegaElem w;
        try {
          w = omega.parse_element(who);
        } catch (const Error& e) {
          fail_line(line, e.what());
        }
        ops.emplace_back(line, std::move(w), std::move(entries));
      }
    } else {
      fail_line(line, "unknown directive '" + head + "'");
    }
  });

  if (!dim) throw ValidationError("missing dim");
  const std::size_t d = *dim;
  std::vector<Coefficient> c(d * d * d);
  if (pointwise) {
    for (std::size_t i = 0; i < d; ++i) c[(i * d + i) * d + i] = Coefficient(1);
  }
  for (const auto& [i, j, k, v] : mults) {
    if (i >= d || j >= d || k >= d) throw ValidationError("mult index out of range");
    c[(i * d + j) * d + k] = v;
  }
  RBFamily rb(FiniteAlgebra(d, std::move(c)), lambda_override.value_or(lambda.value_or(Coefficient(1))));
  auto matrix = [d](std::size_t line, std::vector<Coefficient> entries) {
    try {
      return Matrix(d, std::move(entries));
    } catch (const ValidationError& e) {
      fail_line(line, e.what());
    }
  };
  if (constant) rb.set_constant(matrix(constant_line, std::move(*constant)));
  for (auto& [line, w, entries] : ops) rb.set(w, matrix(line, std::move(entries)));
  if (!constant && ops.empty()) throw ValidationError("no operators defined");
  return rb;
}

std::map<Symbol, Vector> parse_generator_map(std::string_view text, const Alphabet& alphabet, std::size_t dim) {
  std::map<Symbol, Vector> out;
  for_each_line(text, [&](std::size_t line, const std::string& head, std::istringstream& words) {
    Symbol x;
    try {
      x = alphabet.symbol(head);
    } catch (const Error& e) {
      fail_line(line, e.what());
    }
    auto v = read_coefficients(words, line);
    if (v.size() != dim) fail_line(line, "expected " + std::to_string(dim) + " coordinates");
    if (!out.emplace(x, std::move(v)).second) fail_line(line, "duplicate generator '" + head + "'");
  });
  return out;
}

}  // namespace dendrifam
