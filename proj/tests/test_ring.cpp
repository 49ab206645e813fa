#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "support.hpp"

using namespace biamalg;
using biamalg::testing::a1_ring;
using biamalg::testing::corpus_up_to;

TEST(Ring, ZmodArithmeticMatchesIntegers) {
  for (std::uint32_t n : {1u, 2u, 6u, 12u, 25u}) {
    auto r = make_zmod(n);
    ASSERT_EQ(r.size(), n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        EXPECT_EQ(r.label(r.add(r.elem(std::to_string(a)), r.elem(std::to_string(b)))), std::to_string((a + b) % n));
        EXPECT_EQ(r.label(r.mul(r.elem(std::to_string(a)), r.elem(std::to_string(b)))), std::to_string((a * b) % n));
      }
  }
}

TEST(Ring, ZeroIsIndexZeroAndOneIsNeutral) {
  for (const auto& c : corpus_up_to(64)) {
    const auto& r = c.ring;
    EXPECT_EQ(r.zero().index, 0u) << c.name;
    for (Elem x : r.elements()) EXPECT_EQ(r.mul(r.one(), x), x) << c.name;
  }
}

TEST(Ring, ZmodRejectsZero) {
  try {
    make_zmod(0);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
  }
}

TEST(Ring, UnitsOfZmodAreCoprimeResidues) {
  for (std::uint32_t n : {2u, 9u, 12u, 30u, 64u}) {
    auto r = make_zmod(n);
    std::size_t coprime = 0;
    for (std::uint32_t a = 0; a < n; ++a) coprime += std::gcd(a, n) == 1;
    EXPECT_EQ(r.units().count(), coprime) << n;
  }
}

TEST(Ring, MonomialQuotientSizes) {
  EXPECT_EQ(a1_ring().size(), 16u);
  std::vector<std::string> x = {"x"};
  std::vector<Monomial> cube = {parse_monomial("x^3", x)};
  EXPECT_EQ(make_monomial_quotient(3, x, cube).size(), 27u);
  std::vector<std::string> xy = {"x", "y"};
  std::vector<Monomial> m2 = {parse_monomial("x^2", xy), parse_monomial("x*y", xy), parse_monomial("y^2", xy)};
  EXPECT_EQ(make_monomial_quotient(2, xy, m2).size(), 8u);
}

TEST(Ring, MonomialLabelsAndProducts) {
  auto r = a1_ring();
  EXPECT_EQ(r.label(r.mul(r.elem("x"), r.elem("y"))), "x*y");
  EXPECT_EQ(r.label(r.mul(r.elem("x"), r.elem("x"))), "0");
  EXPECT_EQ(r.label(r.add(r.elem("x"), r.elem("x"))), "0");
  EXPECT_TRUE(r.find("x+y").has_value());
  EXPECT_FALSE(r.find("z").has_value());
}

TEST(Ring, ParseMonomialForms) {
  std::vector<std::string> vars = {"x", "y"};
  EXPECT_EQ(parse_monomial("x^2*y", vars), (Monomial{2, 1}));
  EXPECT_EQ(parse_monomial("x^2y", vars), (Monomial{2, 1}));
  EXPECT_EQ(parse_monomial("1", vars), (Monomial{0, 0}));
  EXPECT_THROW(parse_monomial("z", vars), Error);
}

TEST(Ring, ProductComponentsRoundTrip) {
  auto z2 = make_zmod(2), z3 = make_zmod(3);
  auto p = make_product(z2, z3);
  ASSERT_EQ(p.size(), 6u);
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (Elem x : p.elements()) {
    auto [a, b] = product_components(p, x);
    seen.insert({a.index, b.index});
    EXPECT_EQ(p.label(x), "(" + z2.label(a) + "," + z3.label(b) + ")");
  }
  EXPECT_EQ(seen.size(), 6u);
}

TEST(Ring, ElementCapIsEnforced) {
  ScopedElementCap cap(10);
  try {
    make_zmod(11);
    FAIL() << "expected size-limit";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::size_limit);
  }
  EXPECT_EQ(make_zmod(10).size(), 10u);
}

TEST(Ring, ScopedCapRestores) {
  const auto before = element_cap();
  {
    ScopedElementCap cap(5);
    EXPECT_EQ(element_cap(), 5u);
  }
  EXPECT_EQ(element_cap(), before);
}

// Properties over the corpus.

TEST(RingProperty, AxiomsHoldOnCorpus) {
  for (const auto& c : test_corpus()) EXPECT_EQ(check_ring_axioms(c.ring), std::nullopt) << c.name;
}

TEST(RingProperty, EveryElementIsZeroUnitOrZeroDivisor) {
  for (const auto& c : test_corpus()) {
    const auto& r = c.ring;
    for (Elem x : r.elements()) {
      auto cls = classify_element(r, x);
      if (x == r.zero())
        EXPECT_EQ(cls, ElementClass::zero);
      else
        EXPECT_EQ(cls == ElementClass::unit, r.is_unit(x)) << c.name << " " << r.label(x);
    }
  }
}

TEST(RingProperty, RegularElementsAreUnits) {
  for (const auto& c : test_corpus()) {
    auto reg = regular_elements(c.ring);
    EXPECT_EQ(reg.size(), c.ring.units().count()) << c.name;
    for (Elem x : reg) EXPECT_TRUE(c.ring.is_unit(x)) << c.name;
  }
}

TEST(RingProperty, InversesAreInverses) {
  for (const auto& c : corpus_up_to(64)) {
    const auto& r = c.ring;
    for (Elem x : r.elements()) {
      auto inv = r.inverse(x);
      EXPECT_EQ(inv.has_value(), r.is_unit(x));
      if (inv) EXPECT_EQ(r.mul(x, *inv), r.one());
    }
  }
}

TEST(RingProperty, IdempotentsSquareToThemselves) {
  for (const auto& c : test_corpus()) {
    auto es = idempotents(c.ring);
    std::size_t brute = 0;
    for (Elem x : c.ring.elements()) brute += c.ring.mul(x, x) == x;
    EXPECT_EQ(es.size(), brute) << c.name;
  }
}

TEST(RingProperty, AdditiveOrderDividesSize) {
  for (const auto& c : test_corpus())
    for (Elem x : c.ring.elements()) {
      auto k = c.ring.additive_order(x);
      EXPECT_EQ(c.ring.size() % k, 0u);
      EXPECT_EQ(c.ring.times(k, x), c.ring.zero());
    }
}
