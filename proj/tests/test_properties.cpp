#include <gtest/gtest.h>

#include "support.hpp"

using namespace biamalg;
using biamalg::testing::a1_ring;
using biamalg::testing::corpus_up_to;
using biamalg::testing::ideal_of;
using biamalg::testing::labels;

TEST(Poly, TrimAndMultiply) {
  auto r = a1_ring();
  Poly f(r, {r.elem("y"), r.elem("x"), r.zero()});
  EXPECT_EQ(f.degree(), 1);
  EXPECT_EQ(f.to_string(), "y+x*X");
  auto sq = f * f;
  // (xX + y)^2 = x^2 X^2 + 2xy X + y^2 = 0 over F_2 with x^2 = y^2 = 0.
  EXPECT_TRUE(sq.is_zero());
  EXPECT_EQ(Poly(r, {r.zero()}).degree(), -1);
}

TEST(Content, ExplicitWitnessInA1) {
  auto r = a1_ring();
  Poly f(r, {r.elem("y"), r.elem("x")});
  EXPECT_TRUE(content(f * f).is_zero());
  auto prod = ideal_product(content(f), content(f));
  EXPECT_EQ(prod, ideal_of(r, {"x*y"}));
  auto v = content_equation(f, f);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->polynomials.size(), 2u);
}

TEST(Content, EquationHoldsForMonicFactor) {
  auto r = a1_ring();
  Poly f(r, {r.elem("x"), r.one()});
  Poly g(r, {r.elem("y"), r.elem("x")});
  EXPECT_TRUE(content_equation(f, g).holds);
}

TEST(Local, ZmodPrimePowersAreLocal) {
  EXPECT_TRUE(is_local(make_zmod(8)).verdict.holds);
  EXPECT_TRUE(is_local(make_zmod(9)).verdict.holds);
  auto v = is_local(make_zmod(6));
  EXPECT_FALSE(v.verdict.holds);
  ASSERT_TRUE(v.verdict.witness.has_value());
  const auto& w = *v.verdict.witness;
  ASSERT_EQ(w.elements.size(), 2u);
  auto r = make_zmod(6);
  EXPECT_FALSE(r.is_unit(w.elements[0]));
  EXPECT_FALSE(r.is_unit(w.elements[1]));
  EXPECT_TRUE(r.is_unit(r.add(w.elements[0], w.elements[1])));
}

TEST(Local, ZeroRingIsNotLocal) { EXPECT_FALSE(is_local(make_zmod(1)).verdict.holds); }

TEST(Local, MaximalIdealIsTheNonUnits) {
  auto v = is_local(a1_ring());
  ASSERT_TRUE(v.maximal_ideal.has_value());
  EXPECT_EQ(v.maximal_ideal->size(), 8u);
}

TEST(Gaussian, A1FailsWithPairXY) {
  auto v = is_gaussian_local(a1_ring());
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->element_labels(), (std::vector<std::string>{"x", "y"}));
}

TEST(Gaussian, LocalCheckRejectsNonLocalRing) { EXPECT_THROW(is_gaussian_local(make_zmod(6)), Error); }

TEST(Gaussian, ProductWitnessIsLiftedIntoTheProduct) {
  auto p = make_product(make_zmod(2), a1_ring());
  auto v = is_gaussian(p);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->element_labels(), (std::vector<std::string>{"(0,x)", "(0,y)"}));
}

TEST(Arithmetical, SquareZeroMaximalIdealOfRankTwo) {
  // F2[x,y]/(x,y)^2 is not a chain ring; the lattice oracle agrees.
  std::vector<std::string> vars = {"x", "y"};
  std::vector<Monomial> rels = {parse_monomial("x^2", vars), parse_monomial("x*y", vars), parse_monomial("y^2", vars)};
  auto r = make_monomial_quotient(2, vars, rels);
  auto chain = is_arithmetical(r);
  auto lattice = is_arithmetical_bruteforce(r);
  EXPECT_FALSE(chain.holds);
  EXPECT_FALSE(lattice.holds);
  ASSERT_TRUE(chain.witness.has_value());
  EXPECT_EQ(chain.witness->elements.size(), 2u);
  EXPECT_TRUE(is_gaussian(r).holds);
}

TEST(Arithmetical, BruteForceWitnessInA1) {
  auto v = is_arithmetical_bruteforce(a1_ring());
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->ideals.size(), 3u);
}

TEST(Arithmetical, BruteForceRefusesLargeRings) {
  std::vector<std::string> vars = {"x"};
  std::vector<Monomial> rels = {parse_monomial("x^7", vars)};
  auto big = make_monomial_quotient(2, vars, rels);
  ASSERT_GT(big.size(), kOracleCap);
  try {
    is_arithmetical_bruteforce(big);
    FAIL() << "expected size-limit";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::size_limit);
  }
}

TEST(ContentSampler, FindsWitnessInA1) {
  auto v = content_equation_sample(a1_ring(), 3, 10000, 1);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->polynomials.size(), 2u);
}

TEST(ContentSampler, IsDeterministicInTheSeed) {
  auto a = content_equation_sample(a1_ring(), 3, 500, 42);
  auto b = content_equation_sample(a1_ring(), 3, 500, 42);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(a.witness->detail, b.witness->detail);
}

TEST(ContentSampler, InconclusiveOnGaussianRing) {
  auto v = content_equation_sample(make_zmod(8), 3, 300, 3);
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(v.conclusive);
}

TEST(Prufer, ExampleDIsPruferAndTotalQuotientRing) {
  auto d = biamalg::biamalg(build_prufer_example().config).ring();
  EXPECT_TRUE(is_prufer(d).holds);
  EXPECT_TRUE(is_total_quotient_ring(d).holds);
}

// Properties over the corpus.

TEST(PropertyOracle, ChainCriterionMatchesLatticeDistributivity) {
  for (const auto& c : corpus_up_to(kOracleCap))
    EXPECT_EQ(is_arithmetical(c.ring).holds, is_arithmetical_bruteforce(c.ring).holds) << c.name;
}

TEST(PropertyOracle, ImplicationChain) {
  for (const auto& c : test_corpus()) {
    const bool arith = is_arithmetical(c.ring).holds;
    const bool gauss = is_gaussian(c.ring).holds;
    const bool prufer = is_prufer(c.ring).holds;
    EXPECT_TRUE(!arith || gauss) << c.name;
    EXPECT_TRUE(!gauss || prufer) << c.name;
  }
}

TEST(PropertyOracle, PairCriterionAgreesWithExhaustiveLinearContent) {
  for (const auto& c : corpus_up_to(16)) {
    if (!is_gaussian(c.ring).holds) continue;
    const auto& r = c.ring;
    for (Elem a0 : r.elements())
      for (Elem a1 : r.elements())
        for (Elem b0 : r.elements())
          for (Elem b1 : r.elements()) {
            if (b0 < a0 || (b0 == a0 && b1 < a1)) continue;
            ASSERT_TRUE(content_equation(Poly(r, {a0, a1}), Poly(r, {b0, b1})).holds) << c.name;
          }
  }
}

TEST(PropertyOracle, SamplerNeverContradictsPairCriterion) {
  for (const auto& c : corpus_up_to(64)) {
    const bool gauss = is_gaussian(c.ring).holds;
    auto v = content_equation_sample(c.ring, 3, 500, 9);
    if (gauss) EXPECT_TRUE(v.holds) << c.name;
  }
}

TEST(PropertyOracle, FiniteRingsAreTotalQuotientRingsAndPrufer) {
  for (const auto& c : test_corpus()) {
    EXPECT_TRUE(is_total_quotient_ring(c.ring).holds) << c.name;
    EXPECT_TRUE(is_prufer(c.ring).holds) << c.name;
  }
}

TEST(PropertyOracle, LocalDecompositionMultipliesOut) {
  for (const auto& c : test_corpus()) {
    auto parts = local_decomposition(c.ring);
    std::size_t product = 1;
    for (const auto& p : parts) {
      product *= p.ring.size();
      EXPECT_TRUE(is_local(p.ring).verdict.holds) << c.name;
    }
    EXPECT_EQ(product, c.ring.size()) << c.name;
    EXPECT_EQ(parts.size() == 1, is_local(c.ring).verdict.holds) << c.name;
  }
}

TEST(PropertyOracle, ExampleRingVerdicts) {
  auto g = build_gaussian_example();
  auto d = biamalg::biamalg(g.config).ring();
  EXPECT_TRUE(is_gaussian(d).holds);
  auto arith = is_arithmetical(d);
  EXPECT_FALSE(arith.holds);
  ASSERT_TRUE(arith.witness.has_value());
  EXPECT_EQ(labels(d, arith.witness->elements).size(), 2u);
  EXPECT_FALSE(is_arithmetical_bruteforce(d).holds);
}
