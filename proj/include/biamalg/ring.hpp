#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biamalg/elem.hpp"
#include "biamalg/error.hpp"

namespace biamalg {

inline constexpr std::size_t kDefaultElementCap = 4096;
/// Rings at or below this size get full addition/multiplication tables.
inline constexpr std::size_t kTableLimit = 512;
/// Brute-force oracles (ideal enumeration, lattice distributivity) refuse larger rings.
inline constexpr std::size_t kOracleCap = 64;
inline constexpr std::size_t kIsomorphismCap = 256;

/// Global element cap guarding every constructor.
std::size_t element_cap() noexcept;
void set_element_cap(std::size_t cap);

/// Restores the previous element cap on scope exit.
class ScopedElementCap {
 public:
  explicit ScopedElementCap(std::size_t cap) : saved_(element_cap()) { set_element_cap(cap); }
  ~ScopedElementCap() { set_element_cap(saved_); }
  ScopedElementCap(const ScopedElementCap&) = delete;
  ScopedElementCap& operator=(const ScopedElementCap&) = delete;

 private:
  std::size_t saved_;
};

namespace detail {
class RingStructure;
struct RingData;
}  // namespace detail

class FiniteRing;

namespace detail {
FiniteRing make_ring(std::unique_ptr<const RingStructure> structure, std::size_t size, std::uint32_t one,
                     std::vector<std::string> labels, std::string provenance);
const RingStructure& structure_of(const FiniteRing& ring);
}  // namespace detail

/// A finite commutative unital ring. Elements are the indices 0..size()-1;
/// the handle is cheap to copy and the underlying ring is immutable.
class FiniteRing {
 public:
  std::size_t size() const noexcept { return size_; }
  bool is_zero_ring() const noexcept { return size_ == 1; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{one_}; }

  Elem add(Elem a, Elem b) const {
    if (add_table_) return Elem{add_table_[a.index * size_ + b.index]};
    return slow_add(a, b);
  }
  Elem mul(Elem a, Elem b) const {
    if (mul_table_) return Elem{mul_table_[a.index * size_ + b.index]};
    return slow_mul(a, b);
  }
  Elem neg(Elem a) const { return Elem{neg_table_[a.index]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  /// k·a for a non-negative integer k.
  Elem times(std::uint64_t k, Elem a) const;

  const std::string& label(Elem a) const;
  std::optional<Elem> find(std::string_view label) const;
  /// Resolves a label, throwing invalid-argument when it names no element.
  Elem elem(std::string_view label) const;
  const std::string& provenance() const;

  /// Process-unique identity; two handles compare equal iff they share one ring.
  std::uint64_t id() const noexcept;
  friend bool operator==(const FiniteRing& a, const FiniteRing& b) noexcept { return a.data_ == b.data_; }

  auto elements() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(size_)) |
           std::views::transform([](std::uint32_t i) { return Elem{i}; });
  }

  bool contains(Elem a) const noexcept { return a.index < size_; }

  const ElemSet& units() const;
  bool is_unit(Elem a) const { return units().contains(a); }
  std::optional<Elem> inverse(Elem a) const;
  bool is_zero_divisor(Elem a) const;
  std::size_t additive_order(Elem a) const;

 private:
  explicit FiniteRing(std::shared_ptr<const detail::RingData> data);
  Elem slow_add(Elem a, Elem b) const;
  Elem slow_mul(Elem a, Elem b) const;

  std::shared_ptr<const detail::RingData> data_;
  std::size_t size_ = 0;
  std::uint32_t one_ = 0;
  const std::uint16_t* add_table_ = nullptr;
  const std::uint16_t* mul_table_ = nullptr;
  const std::uint32_t* neg_table_ = nullptr;

  friend FiniteRing detail::make_ring(std::unique_ptr<const detail::RingStructure>, std::size_t, std::uint32_t,
                                      std::vector<std::string>, std::string);
  friend const detail::RingStructure& detail::structure_of(const FiniteRing&);
};

/// Z/nZ with elements labeled 0..n-1.
FiniteRing make_zmod(std::uint32_t n);

/// Exponent vector over the variables of a monomial quotient.
using Monomial = std::vector<unsigned>;

/// Parses "x^2*y" (or "x^2y", "1") against the variable list.
Monomial parse_monomial(std::string_view text, std::span<const std::string> vars);

/// F_p[vars] modulo x_i^{nilpotency[i]} and the extra monomial relations.
/// A nilpotency bound of 0 means the variable is not nilpotent.
FiniteRing make_monomial_quotient(std::uint32_t p, std::vector<std::string> vars, std::vector<unsigned> nilpotency,
                                  std::vector<Monomial> extra_relations);

/// Convenience form: pure powers among the relations become nilpotency bounds.
FiniteRing make_monomial_quotient(std::uint32_t p, std::vector<std::string> vars, std::span<const Monomial> relations);

/// Componentwise product; elements are labeled "(a,b)".
FiniteRing make_product(const FiniteRing& r1, const FiniteRing& r2);

/// For a ring built by make_product, the components of an element.
std::pair<Elem, Elem> product_components(const FiniteRing& product, Elem a);
std::pair<FiniteRing, FiniteRing> product_factors(const FiniteRing& product);

enum class ElementClass { zero, unit, zero_divisor };
std::string_view to_string(ElementClass c) noexcept;

ElementClass classify_element(const FiniteRing& ring, Elem a);
/// Elements with no nonzero annihilator.
std::vector<Elem> regular_elements(const FiniteRing& ring);
std::vector<Elem> idempotents(const FiniteRing& ring);

/// Checks commutative ring axioms: exhaustively for rings of at most 64
/// elements, otherwise on `samples` random triples. Returns a description of
/// the first failure.
std::optional<std::string> check_ring_axioms(const FiniteRing& ring, std::size_t samples = 10000,
                                             std::uint64_t seed = 1);

}  // namespace biamalg
