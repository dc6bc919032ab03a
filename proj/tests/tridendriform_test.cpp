#include <gtest/gtest.h>

#include "dendrifam/errors.hpp"
#include "dendrifam/rotabaxter.hpp"
#include "dendrifam/termio.hpp"
#include "dendrifam/tridendriform.hpp"
#include "support/classical.hpp"
#include "support/fixtures.hpp"
#include "support/golden.hpp"
#include "support/reference.hpp"

using namespace dendrifam;

namespace {

const ExtElem kOne = ExtElem::identity();

std::vector<reference::Span> reference_elements(const std::vector<SchroderTree>& trees) {
  std::vector<reference::Span> out;
  for (const auto& t : trees) out.push_back({{reference::from(t), 1}});
  return out;
}

// Leaves strictly between the first and last child of some vertex. Leaf
// fusion in dot is the only step that creates one.
std::size_t inner_leaves(const reference::Tree& t) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < t.kids.size(); ++i) {
    if (t.kids[i].leaf()) {
      n += i > 0 && i + 1 < t.kids.size();
    } else {
      n += inner_leaves(t.kids[i]);
    }
  }
  return n;
}

SpanS dot_all(const FreeTridendriform& d, const std::vector<SchroderTree>& factors) {
  SpanS acc(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) acc = d.dot(acc, SpanS(factors[i]));
  return acc;
}

}  // namespace

TEST(FreeTridendriform, GoldenProducts) {
  const auto sig = golden::signature();
  const FreeTridendriform d(sig.omega);
  for (const auto& c : golden::schroder_cases()) {
    const auto t = parse_sch_tree(c.lhs, sig);
    const auto u = parse_sch_tree(c.rhs, sig);
    SpanS got;
    if (c.op == "dot") {
      got = d.dot(t, u);
    } else {
      const auto w = sig.omega.parse_element(c.omega);
      got = c.op == "prec" ? d.prec(t, u, w) : d.succ(t, u, w);
    }
    EXPECT_EQ(print_span(got, sig), c.expected) << c.name;
  }
}

TEST(FreeTridendriform, AxiomsCyclicGenerators) {
  const FreeTridendriform d(Semigroup::cyclic(2));
  const auto trees = fixtures::singletons(enumerate_sch_up_to(2, fixtures::letters(2), d.semigroup()));
  const auto r = sweep_tridendriform(d, trees, d.semigroup().elements());
  EXPECT_EQ(r.instances, 32u);
  EXPECT_EQ(r.failures, 0u);
}

TEST(FreeTridendriform, AxiomsTrivialThreeLeaves) {
  const FreeTridendriform d(Semigroup::trivial());
  const auto trees = fixtures::singletons(enumerate_sch_up_to(3, fixtures::letters(1), d.semigroup()));
  const auto r = sweep_tridendriform(d, trees, d.semigroup().elements());
  EXPECT_EQ(r.instances, 64u);
  EXPECT_EQ(r.failures, 0u);
}

TEST(FreeTridendriform, AxiomsCyclicThreeLeaves) {
  const FreeTridendriform d(Semigroup::cyclic(2));
  const auto trees = fixtures::singletons(enumerate_sch_up_to(3, fixtures::letters(1), d.semigroup()));
  const auto r = sweep_tridendriform(d, trees, d.semigroup().elements());
  EXPECT_EQ(r.instances, 6u * 6 * 6 * 4);
  EXPECT_EQ(r.failures, 0u);
}

TEST(FreeTridendriform, AxiomsFreeOmega) {
  const auto omega = Semigroup::free({"a", "b"});
  const FreeTridendriform d(omega);
  const auto trees = fixtures::singletons(enumerate_sch_up_to(3, fixtures::letters(1), omega.sample(1)));
  const auto r = sweep_tridendriform(d, trees, omega.sample(1));
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(r.instances, 864u);
}

TEST(FreeTridendriform, ResidualHelper) {
  const FreeTridendriform d(Semigroup::cyclic(2));
  const auto g = sch_generator(Symbol{0});
  const auto c = sch_corolla({Symbol{0}, Symbol{0}});
  for (const auto& r : check_tridendriform_axioms(d, c, g, c, OmegaElem(1), OmegaElem(1))) EXPECT_TRUE(r.empty());
}

TEST(FreeTridendriform, ClassicalSpecialization) {
  const FreeTridendriform d(Semigroup::trivial());
  const OmegaElem w(0);
  const auto trees = enumerate_sch_up_to(3, fixtures::letters(2), d.semigroup());
  for (const auto& t : trees) {
    for (const auto& u : trees) {
      const auto ct = classical::from(t), cu = classical::from(u);
      EXPECT_EQ(classical::from(d.prec(t, u, w)), classical::tprec(ct, cu));
      EXPECT_EQ(classical::from(d.succ(t, u, w)), classical::tsucc(ct, cu));
      EXPECT_EQ(classical::from(d.dot(t, u)), classical::tdot(ct, cu));
    }
  }
}

TEST(FreeTridendriform, AgreesWithReference) {
  const auto omega = Semigroup::free({"a", "b"});
  const FreeTridendriform d(omega);
  const reference::Algebra ref(omega, true);
  const auto trees = enumerate_sch_up_to(3, fixtures::letters(2), omega.sample(1));
  for (const auto& t : trees) {
    for (const auto& u : trees) {
      const reference::Span rt{{reference::from(t), 1}}, ru{{reference::from(u), 1}};
      EXPECT_EQ(reference::from(d.dot(t, u)), ref.dot(rt, ru));
      for (const auto& w : omega.sample(1)) {
        EXPECT_EQ(reference::from(d.prec(t, u, w)), ref.prec(rt, ru, w));
        EXPECT_EQ(reference::from(d.succ(t, u, w)), ref.succ(rt, ru, w));
      }
    }
  }
}

TEST(FreeTridendriform, TypeMutantsAreCaught) {
  const auto omega = Semigroup::free({"a", "b"});
  const auto elems = reference_elements(enumerate_sch_up_to(3, fixtures::letters(1), omega.sample(1)));
  for (auto m : {reference::Mutation::SwapSuccType, reference::Mutation::SwapDotType,
                 reference::Mutation::DropMiddleDot}) {
    const reference::Algebra bad(omega, true, m);
    EXPECT_GT(sweep_tridendriform(bad, elems, omega.sample(1)).failures, 0u) << static_cast<int>(m);
  }
}

// Both dot mutants break the mixed axiom (x prec_a y) . z = x . (y succ_a z).
TEST(FreeTridendriform, DotMutantsBreakMixedAxiom) {
  const auto omega = Semigroup::free({"a", "b"});
  const auto elems = reference_elements(enumerate_sch_up_to(3, fixtures::letters(1), omega.sample(1)));
  for (auto m : {reference::Mutation::SwapDotType, reference::Mutation::DropMiddleDot}) {
    const reference::Algebra bad(omega, true, m);
    bool seen = false;
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        for (const auto& z : elems) {
          for (const auto& a : omega.sample(1)) {
            seen = seen || !tridendriform_residuals(bad, x, y, z, a, a)[4].empty();
          }
        }
      }
    }
    EXPECT_TRUE(seen) << static_cast<int>(m);
  }
}

// Rescaling the fused leaf by c is conjugation by T -> c^k T with k the number
// of inner leaves, so no axiom can see it; c = 0 keeps exactly the terms where
// no new inner leaf appears.
TEST(FreeTridendriform, LeafFusionScaleIsInvisible) {
  const auto omega = Semigroup::cyclic(2);
  const reference::Algebra good(omega, true);
  const reference::Algebra doubled(omega, true, reference::Mutation::DoubleLeafFusion);
  const reference::Algebra dropped(omega, true, reference::Mutation::DropLeafFusion);
  const auto elems = reference_elements(enumerate_sch_up_to(3, fixtures::letters(1), omega));
  EXPECT_EQ(sweep_tridendriform(doubled, elems, omega.elements()).failures, 0u);
  EXPECT_EQ(sweep_tridendriform(dropped, elems, omega.elements()).failures, 0u);

  bool differs = false;
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      const auto& [t, c1] = *x.begin();
      const auto& [u, c2] = *y.begin();
      const std::size_t base = inner_leaves(t) + inner_leaves(u);
      for (const auto& op : {0, 1, 2}) {
        auto pick = [&](const reference::Algebra& a) {
          return op == 0 ? a.dot(x, y) : op == 1 ? a.prec(x, y, OmegaElem(1)) : a.succ(x, y, OmegaElem(0));
        };
        reference::Span scaled, kept;
        for (const auto& [s, c] : pick(good)) {
          const std::size_t extra = inner_leaves(s) - base;
          scaled[s] = c << extra;
          if (extra == 0) kept[s] = c;
        }
        EXPECT_EQ(pick(doubled), scaled);
        EXPECT_EQ(pick(dropped), kept);
        differs = differs || pick(doubled) != pick(good);
      }
    }
  }
  EXPECT_TRUE(differs);
}

TEST(FreeTridendriform, CentralFactors) {
  const FreeTridendriform d(Semigroup::cyclic(2));
  for (const auto& t : enumerate_sch_up_to(4, fixtures::letters(2), d.semigroup())) {
    const auto f = central_factors(t);
    ASSERT_EQ(f.size(), breadth(t) - 1);
    for (const auto& piece : f) EXPECT_EQ(breadth(piece), 2u);
    EXPECT_EQ(dot_all(d, f), SpanS(t));
  }
}

TEST(FreeTridendriform, ExpressRoundTrip) {
  for (const auto& omega : {Semigroup::cyclic(2), Semigroup::free({"a", "b"})}) {
    const FreeTridendriform d(omega);
    for (const auto& t : enumerate_sch_up_to(4, fixtures::letters(2), omega.sample(1))) {
      for (auto fold : {ProductFold::LeftToRight, ProductFold::RightToLeft}) {
        const auto e = texpress_in_generators(t, fold);
        EXPECT_EQ(e.generator_count(), t.decoration_count());
        EXPECT_EQ(evaluate_free(e, d), SpanS(t));
      }
    }
  }
}

TEST(FreeTridendriform, FoldsDifferOnlyInBracketing) {
  const auto c = sch_corolla({Symbol{0}, Symbol{1}, Symbol{0}});
  const auto l = texpress_in_generators(c, ProductFold::LeftToRight);
  const auto r = texpress_in_generators(c, ProductFold::RightToLeft);
  EXPECT_FALSE(l == r);
  EXPECT_EQ(l.op(), Expr::Op::Dot);
  EXPECT_EQ(l.lhs().op(), Expr::Op::Dot);
  EXPECT_EQ(r.rhs().op(), Expr::Op::Dot);
}

TEST(FreeTridendriform, UniversalPropertyIntoEpsilon) {
  const auto omega = Semigroup::cyclic(2);
  const FreeTridendriform d(omega);
  const auto trees = enumerate_sch_up_to(3, fixtures::letters(2), omega);
  for (const auto& [name, rb] : fixtures::rb_targets()) {
    const auto target = epsilon(rb, omega, omega.elements());
    auto fbar = [&](const auto& x) { return tfree_extend(fixtures::image, target, x); };
    for (std::uint32_t x = 0; x < 2; ++x) EXPECT_EQ(fbar(sch_generator(Symbol{x})), fixtures::image(Symbol{x}));
    for (const auto& t : trees) {
      for (const auto& u : trees) {
        EXPECT_EQ(fbar(d.dot(t, u)), target.dot(fbar(t), fbar(u))) << name;
        for (const auto& w : omega.elements()) {
          EXPECT_EQ(fbar(d.prec(t, u, w)), target.prec(fbar(t), fbar(u), w)) << name;
          EXPECT_EQ(fbar(d.succ(t, u, w)), target.succ(fbar(t), fbar(u), w)) << name;
        }
      }
    }
  }
}

TEST(FreeTridendriform, ExtensionIndependentOfFold) {
  const auto omega = Semigroup::cyclic(2);
  const auto target = epsilon(RBFamily::cascaded_sum(3, Coefficient(1)), omega, omega.elements());
  for (const auto& t : enumerate_sch_up_to(4, fixtures::letters(2), omega)) {
    EXPECT_EQ(tfree_extend(fixtures::image, target, t, ProductFold::LeftToRight),
              tfree_extend(fixtures::image, target, t, ProductFold::RightToLeft));
  }
}

TEST(FreeTridendriform, GammaIsDendriform) {
  const FreeTridendriform d(Semigroup::cyclic(2));
  const auto trees = fixtures::singletons(enumerate_sch_up_to(3, fixtures::letters(1), d.semigroup()));
  const auto g = gamma(d);
  const auto r = sweep_dendriform(g, trees, d.semigroup().elements());
  EXPECT_EQ(r.failures, 0u);
}

TEST(FreeTridendriform, LeafBaseCases) {
  const FreeTridendriform d(Semigroup::cyclic(2));
  const auto g = sch_generator(Symbol{0});
  const SchroderTree leaf;
  EXPECT_EQ(d.prec(g, leaf, OmegaElem(0)), SpanS(g));
  EXPECT_TRUE(d.prec(leaf, g, OmegaElem(0)).empty());
  EXPECT_EQ(d.succ(leaf, g, kOne), SpanS(g));
  EXPECT_TRUE(d.succ(g, leaf, kOne).empty());
  EXPECT_TRUE(d.dot(g, leaf).empty());
  EXPECT_TRUE(d.dot(leaf, g).empty());
  EXPECT_THROW(d.dot(leaf, leaf), LeafArgument);
}

TEST(FreeTridendriform, Misuse) {
  const FreeTridendriform strict(Semigroup::cyclic(2), LeafPolicy::Strict);
  const auto g = sch_generator(Symbol{0});
  EXPECT_THROW(strict.dot(g, SchroderTree()), LeafArgument);
  EXPECT_THROW(strict.prec(SchroderTree(), g, OmegaElem(0)), LeafArgument);
  EXPECT_THROW(strict.prec(g, g, kOne), IdentityMisuse);
  EXPECT_THROW(strict.succ(g, g, OmegaElem(3)), InvalidElement);
}
