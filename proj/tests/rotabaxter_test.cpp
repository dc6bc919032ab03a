#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "dendrifam/errors.hpp"
#include "dendrifam/rotabaxter.hpp"
#include "support/fixtures.hpp"

using namespace dendrifam;

namespace {

const Semigroup kZ2 = Semigroup::cyclic(2);

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(DENDRIFAM_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Weight-lambda identity for one operator M on pointwise k^d, in plain integers.
bool brute_force_rb(std::size_t d, long lambda, const std::vector<long>& m) {
  auto at = [&](std::size_t r, std::size_t c) { return m[r * d + c]; };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<long> u(d, 0);
      u[j] += at(j, i);
      u[i] += at(i, j);
      if (i == j) u[i] += lambda;
      for (std::size_t k = 0; k < d; ++k) {
        long rhs = 0;
        for (std::size_t l = 0; l < d; ++l) rhs += at(k, l) * u[l];
        if (at(k, i) * at(k, j) != rhs) return false;
      }
    }
  }
  return true;
}

Matrix to_matrix(std::size_t d, const std::vector<long>& m) {
  std::vector<Coefficient> c;
  for (long v : m) c.emplace_back(v);
  return Matrix(d, c);
}

const std::vector<long> kCascaded3 = {-1, 0, 0, -1, -1, 0, -1, -1, -1};

}  // namespace

TEST(Matrix, Basics) {
  const auto id = Matrix::identity(2);
  const Vector v = {Coefficient(1, 2), Coefficient(3)};
  EXPECT_EQ(id.apply(v), v);
  EXPECT_EQ((Coefficient(2) * id).apply(v), scale(Coefficient(2), v));
  EXPECT_THROW(Matrix(2, {Coefficient(1)}), ValidationError);
  EXPECT_THROW(id.apply({Coefficient(1)}), ValidationError);
}

TEST(FiniteAlgebra, Associativity) {
  const auto a = FiniteAlgebra::pointwise(3);
  EXPECT_EQ(a.multiply(a.basis(1), a.basis(1)), a.basis(1));
  EXPECT_TRUE(is_zero(a.multiply(a.basis(0), a.basis(2))));
  // e0 e0 = e1, everything else zero except e1 e0 = e0: (e1 e0) e0 = e1 but e1 (e0 e0) = 0.
  std::vector<Coefficient> c(8);
  c[(0 * 2 + 0) * 2 + 1] = Coefficient(1);
  c[(1 * 2 + 0) * 2 + 0] = Coefficient(1);
  EXPECT_TRUE(FiniteAlgebra::associativity_violation(2, c).has_value());
  EXPECT_THROW(FiniteAlgebra(2, c), ValidationError);
  EXPECT_THROW(FiniteAlgebra(2, std::vector<Coefficient>(7)), ValidationError);
}

TEST(RBFamily, ListedInstancesPass) {
  const auto alg = FiniteAlgebra::pointwise(3);
  const auto zero = RBFamily::constant(alg, Coefficient(1), Matrix(3));
  const auto neg = RBFamily::negative_lambda_identity(alg, Coefficient(1));
  const auto cas = RBFamily::cascaded_sum(3, Coefficient(1));
  EXPECT_EQ(cas.op(OmegaElem(0)), to_matrix(3, kCascaded3));
  for (const auto* rb : {&zero, &neg, &cas}) {
    const auto r = sweep_rb_family(*rb, kZ2, kZ2.elements());
    EXPECT_EQ(r.instances, 9u * 4);
    EXPECT_EQ(r.failures, 0u);
  }
  EXPECT_TRUE(brute_force_rb(3, 1, kCascaded3));
  EXPECT_TRUE(brute_force_rb(3, 1, {-1, 0, 0, 0, -1, 0, 0, 0, -1}));
}

TEST(RBFamily, OtherWeights) {
  for (long lambda : {2L, -3L}) {
    const auto cas = RBFamily::cascaded_sum(4, Coefficient(lambda));
    EXPECT_FALSE(validate_rb_family(cas, kZ2, kZ2.elements()).has_value()) << lambda;
    const auto neg = RBFamily::negative_lambda_identity(FiniteAlgebra::pointwise(2), Coefficient(lambda));
    EXPECT_FALSE(validate_rb_family(neg, kZ2, kZ2.elements()).has_value()) << lambda;
  }
}

TEST(RBFamily, OneEntryMutationsMatchBruteForce) {
  std::size_t rejected = 0;
  for (std::size_t e = 0; e < kCascaded3.size(); ++e) {
    for (long delta : {1L, -1L}) {
      auto m = kCascaded3;
      m[e] += delta;
      const auto rb = RBFamily::constant(FiniteAlgebra::pointwise(3), Coefficient(1), to_matrix(3, m));
      const bool ok = !validate_rb_family(rb, kZ2, kZ2.elements()).has_value();
      EXPECT_EQ(ok, brute_force_rb(3, 1, m)) << "entry " << e << " delta " << delta;
      rejected += !ok;
    }
  }
  // Every diagonal change breaks the identity on (e_i, e_i).
  EXPECT_GE(rejected, 6u);
}

TEST(RBFamily, NonConstantFamilies) {
  // P_e = 0 with P_g = -id: P_g(x)P_g(y) = xy but P_e(...) = 0.
  RBFamily rb(FiniteAlgebra::pointwise(2), Coefficient(1));
  rb.set(OmegaElem(0), Matrix(2));
  rb.set(OmegaElem(1), Coefficient(-1) * Matrix::identity(2));
  const auto r = sweep_rb_family(rb, kZ2, kZ2.elements());
  EXPECT_GT(r.failures, 0u);
  ASSERT_TRUE(r.first.has_value());
  EXPECT_EQ(r.first->a, OmegaElem(1));
  EXPECT_EQ(r.first->b, OmegaElem(1));
  RBFamily partial(FiniteAlgebra::pointwise(2), Coefficient(1));
  partial.set(OmegaElem(0), Matrix(2));
  EXPECT_FALSE(partial.has(OmegaElem(1)));
  EXPECT_THROW(partial.op(OmegaElem(1)), InvalidElement);
}

TEST(Eta, NegativeIdentityIsDegenerate) {
  const auto rb = RBFamily::negative_lambda_identity(FiniteAlgebra::pointwise(3), Coefficient(1));
  const auto o = eta(rb, kZ2, kZ2.elements());
  for (const auto& x : basis_vectors(3)) {
    for (const auto& y : basis_vectors(3)) {
      for (const auto& w : kZ2.elements()) EXPECT_TRUE(is_zero(o.prec(x, y, w)));
    }
  }
}

TEST(Eta, CascadedSumAxioms) {
  const auto o = eta(RBFamily::cascaded_sum(3, Coefficient(1)), kZ2, kZ2.elements());
  const auto r = sweep_dendriform(o, basis_vectors(3), kZ2.elements());
  EXPECT_EQ(r.instances, 27u * 4);
  EXPECT_EQ(r.failures, 0u);
}

TEST(Eta, RejectsNonRBFamily) {
  // The identity with weight 0 is not a Rota-Baxter operator on k^2.
  const auto rb = RBFamily::constant(FiniteAlgebra::pointwise(2), Coefficient(0), Matrix::identity(2));
  EXPECT_THROW(eta(rb, kZ2, kZ2.elements()), ValidationError);
  EXPECT_THROW(epsilon(rb, kZ2, kZ2.elements()), ValidationError);
}

TEST(Epsilon, CascadedSumAxioms) {
  const auto o = epsilon(RBFamily::cascaded_sum(3, Coefficient(1)), kZ2, kZ2.elements());
  const auto r = sweep_tridendriform(o, basis_vectors(3), kZ2.elements());
  EXPECT_EQ(r.instances, 27u * 4);
  EXPECT_EQ(r.failures, 0u);
}

TEST(Epsilon, WeightZeroHasZeroDot) {
  const auto rb = RBFamily::constant(FiniteAlgebra::pointwise(2), Coefficient(0), Matrix(2));
  const auto o = epsilon(rb, kZ2, kZ2.elements());
  for (const auto& x : basis_vectors(2))
    for (const auto& y : basis_vectors(2)) EXPECT_TRUE(is_zero(o.dot(x, y)));
}

TEST(Epsilon, GammaOfEpsilonIsEta) {
  for (const auto& [name, rb] : fixtures::rb_targets()) {
    const auto e = epsilon(rb, kZ2, kZ2.elements());
    const auto h = eta(rb, kZ2, kZ2.elements());
    const auto g = gamma(e);
    for (const auto& x : basis_vectors(3)) {
      for (const auto& y : basis_vectors(3)) {
        for (const auto& w : kZ2.elements()) {
          EXPECT_EQ(g.prec(x, y, w), h.prec(x, y, w)) << name;
          EXPECT_EQ(g.succ(x, y, w), h.succ(x, y, w)) << name;
        }
      }
    }
  }
}

TEST(TensorRB, NegativeIdentityOnLine) {
  const auto rb = RBFamily::negative_lambda_identity(FiniteAlgebra::pointwise(1), Coefficient(1));
  const TensorRB p(rb, kZ2);
  const auto r = sweep_tensor_rb(p, 1, kZ2.elements());
  EXPECT_EQ(r.instances, 4u);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(p.apply(p.pure(0, OmegaElem(1))), TensorSpan(TensorBasis{0, OmegaElem(1)}, Coefficient(-1)));
}

TEST(TensorRB, CascadedSumOverFreeOmega) {
  const auto omega = Semigroup::free({"a"});
  const TensorRB p(RBFamily::cascaded_sum(3, Coefficient(1)), omega);
  const auto r = sweep_tensor_rb(p, 3, omega.sample(3));
  EXPECT_EQ(r.instances, 9u * 9);
  EXPECT_EQ(r.failures, 0u);
}

TEST(TensorRB, ZeroAndMutant) {
  const TensorRB zero(RBFamily::constant(FiniteAlgebra::pointwise(2), Coefficient(1), Matrix(2)), kZ2);
  EXPECT_FALSE(validate_tensor_rb(zero, 2, kZ2.elements()).has_value());
  auto m = kCascaded3;
  m[8] = -2;
  const TensorRB bad(RBFamily::constant(FiniteAlgebra::pointwise(3), Coefficient(1), to_matrix(3, m)), kZ2);
  EXPECT_TRUE(validate_tensor_rb(bad, 3, kZ2.elements()).has_value());
}

TEST(TensorFamily, GoldenGeneratorProducts) {
  const auto omega = Semigroup::free({"a", "b"});
  const FreeDendriform d(omega);
  const TensorDendriform t(d);
  const auto x = bin_generator(Symbol{0}), y = bin_generator(Symbol{1});
  const auto a = omega.generator("a"), b = omega.generator("b");
  const auto ab = omega.mul(a, b);
  const auto lhs = TensorDendriform::pure(x, a), rhs = TensorDendriform::pure(y, b);
  TensorDendriform::Element expect_prec, expect_succ;
  for (const auto& term : d.prec(x, y, b)) expect_prec += TensorDendriform::pure(term.basis, ab);
  for (const auto& term : d.succ(x, y, a)) expect_succ += TensorDendriform::pure(term.basis, ab);
  EXPECT_EQ(t.prec(lhs, rhs), expect_prec);
  EXPECT_EQ(t.succ(lhs, rhs), expect_succ);
  // x prec_b y has x at the root with y on a b-typed right edge.
  EXPECT_EQ(expect_prec.terms().front().basis.tree.right_type(), ExtElem(b));
}

TEST(TensorFamily, ClassicalAxioms) {
  const auto omega = Semigroup::free({"a", "b"});
  const FreeDendriform d(omega);
  const FreeTridendriform td(omega);
  const TensorDendriform t(d);
  const TensorTridendriform tt(td);
  std::vector<TensorDendriform::Element> bins;
  std::vector<TensorTridendriform::Element> schs;
  for (const auto& w : omega.sample(1)) {
    for (const auto& tree : enumerate_bin_up_to(3, fixtures::letters(1), omega.sample(1))) {
      bins.push_back(TensorDendriform::pure(tree, w));
    }
    for (const auto& tree : enumerate_sch_up_to(2, fixtures::letters(2), omega.sample(1))) {
      schs.push_back(TensorTridendriform::pure(tree, w));
    }
  }
  EXPECT_EQ(sweep_classical_dendriform(t, bins).failures, 0u);
  const auto r = sweep_classical_tridendriform(tt, schs);
  EXPECT_EQ(r.instances, 64u);
  EXPECT_EQ(r.failures, 0u);
}

TEST(RBFile, ParsesDataFiles) {
  const auto rb = parse_rb_family(slurp("cascaded3.rb"), kZ2);
  EXPECT_EQ(rb.dim(), 3u);
  EXPECT_EQ(rb.lambda(), Coefficient(1));
  EXPECT_EQ(rb.op(OmegaElem(1)), to_matrix(3, kCascaded3));
  EXPECT_FALSE(validate_rb_family(rb, kZ2, kZ2.elements()).has_value());
  EXPECT_TRUE(validate_rb_family(parse_rb_family(slurp("cascaded3_mutant.rb"), kZ2), kZ2, kZ2.elements()).has_value());
  EXPECT_EQ(parse_rb_family(slurp("cascaded3.rb"), kZ2, Coefficient(1, 2)).lambda(), Coefficient(1, 2));
  const auto one = parse_rb_family(slurp("neg_identity1.rb"), kZ2);
  EXPECT_FALSE(validate_rb_family(one, kZ2, kZ2.elements()).has_value());
}

TEST(RBFile, PerElementOperators) {
  const auto rb = parse_rb_family("dim 1\nmult 0 0 0 1\nop c0 0\nop c1 -1\n", kZ2);
  EXPECT_EQ(rb.op(OmegaElem(0)), Matrix(1));
  EXPECT_EQ(rb.op(OmegaElem(1)), Coefficient(-1) * Matrix::identity(1));
}

TEST(RBFile, Errors) {
  auto message = [](std::string_view text) {
    try {
      parse_rb_family(text, kZ2);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  EXPECT_EQ(message("pointwise\nop * 1\n"), "missing dim");
  EXPECT_EQ(message("dim 2\npointwise\nop * 1 0 0\n").rfind("line 3:", 0), 0u);
  EXPECT_EQ(message("dim 1\nfrobnicate\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(message("dim 1\nlambda 1/0\nop * 0\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(message("dim 1\nop c7 0\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(message("dim -1\n").rfind("line 1:", 0), 0u);
  EXPECT_EQ(message("dim 1\ndim 1\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(message("dim 1\nop * 0\nop * 0\n").rfind("line 3:", 0), 0u);
  EXPECT_EQ(message("dim 1\npointwise\n"), "no operators defined");
  EXPECT_EQ(message("dim 2\nop * 0 0 0 0\nop c1 1 0\n").rfind("line 3:", 0), 0u);
  EXPECT_NE(message("dim 2\nmult 0 0 5 1\nop * 0 0 0 0\n"), "accepted");
  // e0 e0 = e1 and e1 e0 = e0 is not associative.
  EXPECT_NE(message("dim 2\nmult 0 0 1 1\nmult 1 0 0 1\nop * 0 0 0 0\n"), "accepted");
}

TEST(MapFile, ParsesAndRejects) {
  const Alphabet x({"x", "y"});
  const auto m = parse_generator_map(slurp("map3.txt"), x, 3);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.at(Symbol{1}), (Vector{Coefficient(0), Coefficient(1, 2), Coefficient(-1)}));
  EXPECT_THROW(parse_generator_map("x 1 0\n", x, 3), ValidationError);
  EXPECT_THROW(parse_generator_map("q 1 0 0\n", x, 3), ValidationError);
  EXPECT_THROW(parse_generator_map("x 1 0 0\nx 0 0 1\n", x, 3), ValidationError);
  EXPECT_THROW(parse_generator_map("x 1 zero 0\n", x, 3), ValidationError);
}
