#include <gtest/gtest.h>

#include "biamalg/constructions.hpp"
#include "support.hpp"

using namespace biamalg;
using biamalg::testing::ideal_of;

TEST(BiAmalg, ConductorMismatchIsRejected) {
  auto z4 = make_zmod(4);
  auto id = identity_hom(z4);
  try {
    BiAmalgConfig::make(id, id, ideal_of(z4, {"2"}), Ideal::zero(z4));
    FAIL() << "expected conductor-mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::conductor_mismatch);
  }
}

TEST(BiAmalg, DuplicationOfZ6) {
  auto z6 = make_zmod(6);
  auto d = duplicate(z6, ideal_of(z6, {"2"}));
  EXPECT_EQ(d.ring().size(), 18u);
  EXPECT_EQ(check_ring_axioms(d.ring()), std::nullopt);
  EXPECT_EQ(d.config().conductor(), ideal_of(z6, {"2"}));
}

TEST(BiAmalg, AmalgamationAlongIdeal) {
  auto z4 = make_zmod(4);
  auto d = amalg(identity_hom(z4), ideal_of(z4, {"2"}));
  EXPECT_EQ(d.ring().size(), 8u);
}

TEST(BiAmalg, ElementsHaveTheStatedShape) {
  auto ex = build_gaussian_example();
  auto d = biamalg::biamalg(ex.config);
  const auto& cfg = d.config();
  for (Elem x : d.ring().elements()) {
    auto [b, c] = d.components(x);
    const auto& p = d.provenance(x);
    EXPECT_TRUE(cfg.j().contains(p.j));
    EXPECT_TRUE(cfg.j_prime().contains(p.j_prime));
    EXPECT_EQ(b, cfg.b().add(cfg.f()(p.a), p.j));
    EXPECT_EQ(c, cfg.c().add(cfg.g()(p.a), p.j_prime));
    EXPECT_EQ(d.find(b, c), x);
  }
  EXPECT_TRUE(d.projection_b().domain() == d.ring());
}

TEST(BiAmalg, CanonicalQuotients) {
  auto ex = build_gaussian_example();
  auto d = biamalg::biamalg(ex.config);
  auto [zero_jp, j_zero] = canonical_ideals(d);
  auto fa_j = subring_of_fA_plus_J(ex.config.f(), ex.config.j());
  auto ga_jp = subring_of_fA_plus_J(ex.config.g(), ex.config.j_prime());
  EXPECT_EQ(d.ring().size() / zero_jp.size(), fa_j.ring.size());
  EXPECT_EQ(d.ring().size() / j_zero.size(), ga_jp.ring.size());
}

TEST(BiAmalg, ExtendedPrimeIsMaximal) {
  auto ex = build_gaussian_example();
  auto d = biamalg::biamalg(ex.config);
  auto p = extend_prime(d, ex.m);
  EXPECT_TRUE(is_maximal_ideal(p));
  EXPECT_EQ(d.ring().size() / p.size(), ex.a.size() / ex.m.size());
}

TEST(BiAmalg, ExtendPrimeRejectsIdealMissingConductor) {
  auto z6 = make_zmod(6);
  auto d = duplicate(z6, ideal_of(z6, {"2"}));
  EXPECT_THROW(extend_prime(d, ideal_of(z6, {"3"})), Error);
}

TEST(BiAmalg, ExamplesHaveSpecifiedSizes) {
  auto g = build_gaussian_example();
  EXPECT_EQ(g.a.size(), 8u);
  EXPECT_EQ(g.config.b().size(), 16u);
  EXPECT_EQ(g.config.c().size(), 4u);
  EXPECT_EQ(g.config.j().size(), 8u);
  EXPECT_EQ(g.config.j_prime().size(), 2u);
  EXPECT_EQ(biamalg::biamalg(g.config).ring().size(), 32u);
  auto p = build_prufer_example();
  EXPECT_TRUE(p.config.conductor().is_zero());
  EXPECT_EQ(biamalg::biamalg(p.config).ring().size(), 256u);
}

// Properties over seeded random configurations.

TEST(BiAmalgProperty, SizeFormulaAndAxioms) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto rc = random_config(seed);
    auto d = biamalg::biamalg(rc.config);
    EXPECT_EQ(d.ring().size(), rc.config.expected_size()) << rc.description;
    EXPECT_EQ(check_ring_axioms(d.ring(), 2000), std::nullopt) << rc.description;
    EXPECT_EQ(preimage_ideal(rc.config.f(), rc.config.j()), preimage_ideal(rc.config.g(), rc.config.j_prime()));
  }
}

TEST(BiAmalgProperty, ProjectionsAreHomomorphisms) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto rc = random_config(seed);
    auto d = biamalg::biamalg(rc.config);
    for (const auto& h : {d.projection_b(), d.projection_c()})
      EXPECT_EQ(check_hom_axioms(h.domain(), h.codomain(), h.table()), std::nullopt) << rc.description;
  }
}
