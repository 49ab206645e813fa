#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biamalg/hom.hpp"
#include "biamalg/ring.hpp"

namespace biamalg {

/// An ideal of a finite ring, carried with a generating set and its full
/// member set.
class Ideal {
 public:
  /// Smallest ideal containing `gens`.
  static Ideal span(const FiniteRing& ring, std::span<const Elem> gens);
  static Ideal span(const FiniteRing& ring, std::initializer_list<Elem> gens) {
    return span(ring, std::span<const Elem>(gens.begin(), gens.size()));
  }
  /// Validates that `members` is an ideal (throws invalid-argument otherwise)
  /// and picks a generating set.
  static Ideal from_set(const FiniteRing& ring, ElemSet members);
  static Ideal zero(const FiniteRing& ring) { return span(ring, {}); }
  static Ideal unit(const FiniteRing& ring) { return span(ring, {ring.one()}); }

  const FiniteRing& ring() const noexcept { return ring_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  const ElemSet& members() const noexcept { return members_; }
  std::vector<Elem> elements() const { return members_.to_vector(); }
  std::size_t size() const noexcept { return size_; }
  bool contains(Elem a) const noexcept { return members_.contains(a); }

  bool is_zero() const noexcept { return size_ == 1; }
  bool is_unit_ideal() const noexcept { return size_ == ring_.size(); }
  bool is_proper() const noexcept { return !is_unit_ideal(); }
  bool is_subset_of(const Ideal& other) const;

  /// Generator labels, e.g. "(x,y)".
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.ring_ == b.ring_ && a.members_ == b.members_; }

 private:
  Ideal(FiniteRing ring, std::vector<Elem> generators, ElemSet members);

  FiniteRing ring_;
  std::vector<Elem> generators_;
  ElemSet members_;
  std::size_t size_ = 0;
};

/// Sort by size, then by the sorted element-index sequence.
bool canonical_less(const Ideal& a, const Ideal& b);

enum class IdealOp { sum, product, intersect, colon };

/// Throws invalid-argument when the ideals live in different rings.
Ideal ideal_combine(IdealOp op, const Ideal& i, const Ideal& k);
Ideal ideal_sum(const Ideal& i, const Ideal& k);
Ideal ideal_product(const Ideal& i, const Ideal& k);
Ideal ideal_intersect(const Ideal& i, const Ideal& k);
/// (I : K) = {x : xK ⊆ I}.
Ideal ideal_colon(const Ideal& i, const Ideal& k);
Ideal ideal_square(const Ideal& i);

/// Principal ideal R·a as a member set.
ElemSet principal_set(const FiniteRing& ring, Elem a);

/// Every ideal of the ring in canonical order; refuses rings above `cap`.
std::vector<Ideal> all_ideals(const FiniteRing& ring, std::size_t cap = kOracleCap);

struct Quotient {
  FiniteRing ring;
  RingHom surjection;
};

/// R/I with cosets labeled "[rep]", rep being the least-index coset member.
Quotient quotient_ring(const FiniteRing& ring, const Ideal& ideal);

/// {r : 1 - rx is a unit for every x}.
Ideal jacobson_radical(const FiniteRing& ring);

/// Maximal ideals (equivalently, the prime ideals of a finite ring), in
/// canonical order.
std::vector<Ideal> maximal_ideals(const FiniteRing& ring);

/// True when the quotient by the ideal is a field.
bool is_maximal_ideal(const Ideal& ideal);

/// A regular element of the ring lying in the ideal, if any.
std::optional<Elem> is_regular_ideal(const Ideal& ideal);

/// {a : h(a) ∈ K}.
Ideal preimage_ideal(const RingHom& h, const Ideal& k);
Ideal kernel(const RingHom& h);
/// Ideal of the codomain generated by h(I).
Ideal extend_ideal(const RingHom& h, const Ideal& i);

/// Primitive orthogonal idempotents summing to 1, ascending by index.
std::vector<Elem> primitive_idempotents(const FiniteRing& ring);

}  // namespace biamalg
