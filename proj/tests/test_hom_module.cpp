#include <gtest/gtest.h>

#include "biamalg/constructions.hpp"
#include "support.hpp"

using namespace biamalg;
using biamalg::testing::a1_ring;
using biamalg::testing::corpus_up_to;
using biamalg::testing::ideal_of;

TEST(Hom, TableValidationRejectsNonHomomorphisms) {
  auto z2 = make_zmod(2), z4 = make_zmod(4);
  // 1 ↦ 1 from Z/2 to Z/4 is not additive.
  try {
    hom_from_table(z2, z4, {z4.elem("0"), z4.elem("1")});
    FAIL() << "expected not-a-homomorphism";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_homomorphism);
  }
  // Unit not preserved.
  EXPECT_THROW(hom_from_table(z4, z2, {z2.elem("0"), z2.elem("0"), z2.elem("0"), z2.elem("0")}), Error);
  auto h = hom_from_table(z4, z2, {z2.elem("0"), z2.elem("1"), z2.elem("0"), z2.elem("1")});
  EXPECT_TRUE(h.is_surjective());
  EXPECT_FALSE(h.is_injective());
}

TEST(Hom, FromLabels) {
  auto z6 = make_zmod(6), z3 = make_zmod(3);
  auto h = hom_from_labels(z6, z3, {{"0", "0"}, {"1", "1"}, {"2", "2"}, {"3", "0"}, {"4", "1"}, {"5", "2"}});
  EXPECT_EQ(kernel(h), ideal_of(z6, {"3"}));
}

TEST(Hom, ComposeIsAssociativeAndIdentityIsNeutral) {
  auto z12 = make_zmod(12);
  auto q1 = quotient_ring(z12, ideal_of(z12, {"6"}));
  auto q2 = quotient_ring(q1.ring, Ideal::span(q1.ring, {q1.surjection(z12.elem("2"))}));
  auto id = identity_hom(z12);
  auto h = hom_compose(q2.surjection, q1.surjection);
  EXPECT_EQ(hom_compose(h, id).table(), h.table());
  EXPECT_EQ(hom_compose(identity_hom(q2.ring), h).table(), h.table());
  EXPECT_EQ(q2.ring.size(), 2u);
  EXPECT_EQ(kernel(h), ideal_of(z12, {"2"}));
}

TEST(Hom, ComposeRejectsMismatchedRings) {
  auto z4 = make_zmod(4), z6 = make_zmod(6);
  EXPECT_THROW(hom_compose(identity_hom(z4), identity_hom(z6)), Error);
}

TEST(Hom, ProductProjections) {
  auto p = make_product(make_zmod(2), make_zmod(3));
  auto [p1, p2] = product_projections(p);
  EXPECT_EQ(kernel(p1).size(), 3u);
  EXPECT_EQ(kernel(p2).size(), 2u);
}

TEST(HomProperty, PreimagesAndExtensionsOfIdeals) {
  for (const auto& c : corpus_up_to(32))
    for (const auto& i : all_ideals(c.ring)) {
      auto q = quotient_ring(c.ring, i);
      for (const auto& k : all_ideals(q.ring)) {
        auto pre = preimage_ideal(q.surjection, k);
        EXPECT_TRUE(i.is_subset_of(pre)) << c.name;
        EXPECT_EQ(extend_ideal(q.surjection, pre), k) << c.name;
      }
    }
}

TEST(Module, SizesAndRank) {
  auto a = a1_ring();
  auto m = ideal_of(a, {"x", "y"});
  auto e = make_module(a, {m}, 3);
  EXPECT_EQ(e.size(), 8u);
  EXPECT_EQ(e.rank(), 3u);
  auto f = make_module(a, {Ideal::zero(a), m});
  EXPECT_EQ(f.size(), 32u);
}

TEST(Module, RejectsForeignIdeal) {
  auto a = make_zmod(4), b = make_zmod(4);
  EXPECT_THROW(make_module(a, {Ideal::span(b, {b.elem("2")})}), Error);
}

TEST(ModuleProperty, ActionAxioms) {
  auto a = make_zmod(8);
  auto e = make_module(a, {ideal_of(a, {"2"}), ideal_of(a, {"4"})});
  for (Elem r : a.elements())
    for (ModuleElem x : e.elements()) {
      EXPECT_EQ(e.act(a.one(), x), x);
      for (ModuleElem y : e.elements()) EXPECT_EQ(e.act(r, e.add(x, y)), e.add(e.act(r, x), e.act(r, y)));
      for (Elem s : a.elements()) {
        EXPECT_EQ(e.act(a.add(r, s), x), e.add(e.act(r, x), e.act(s, x)));
        EXPECT_EQ(e.act(a.mul(r, s), x), e.act(r, e.act(s, x)));
      }
    }
}

TEST(TrivialExtension, StructureOfCyclicExtension) {
  auto z4 = make_zmod(4);
  auto m = ideal_of(z4, {"2"});
  auto t = trivext(z4, make_module(z4, {m}));
  ASSERT_EQ(t.ring.size(), 8u);
  EXPECT_EQ(check_ring_axioms(t.ring), std::nullopt);
  auto n = t.module_ideal();
  EXPECT_EQ(n.size(), 2u);
  EXPECT_TRUE(ideal_square(n).is_zero());
  EXPECT_EQ(hom_compose(t.projection, t.inclusion).table(), identity_hom(z4).table());
  EXPECT_TRUE(t.inclusion.is_injective());
  EXPECT_EQ(kernel(t.projection), n);
  EXPECT_EQ(t.ring.label(t.element(z4.elem("2"), ModuleElem{1})), "(2,e1)");
}

TEST(TrivialExtension, MultiplicationRule) {
  auto z8 = make_zmod(8);
  auto e = make_module(z8, {ideal_of(z8, {"4"})});
  auto t = trivext(z8, e);
  for (Elem x : t.ring.elements())
    for (Elem y : t.ring.elements()) {
      auto [a, u] = t.components(x);
      auto [b, v] = t.components(y);
      auto [c, w] = t.components(t.ring.mul(x, y));
      EXPECT_EQ(c, z8.mul(a, b));
      EXPECT_EQ(w, e.add(e.act(a, v), e.act(b, u)));
    }
}
