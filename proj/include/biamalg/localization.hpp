#pragma once

#include <optional>

#include "biamalg/constructions.hpp"
#include "biamalg/hom.hpp"
#include "biamalg/ideal.hpp"
#include "biamalg/verdict.hpp"

namespace biamalg {

/// A multiplicatively closed subset containing 1.
class MultSet {
 public:
  /// Throws invalid-argument unless 1 ∈ members and members is closed under products.
  static MultSet make(const FiniteRing& ring, ElemSet members);

  const FiniteRing& ring() const noexcept { return ring_; }
  const ElemSet& members() const noexcept { return members_; }
  bool contains(Elem a) const noexcept { return members_.contains(a); }
  std::size_t size() const noexcept { return members_.count(); }

 private:
  MultSet(FiniteRing ring, ElemSet members) : ring_(std::move(ring)), members_(std::move(members)) {}
  FiniteRing ring_;
  ElemSet members_;
};

/// S_p = f(A − p) + J for a prime (maximal) ideal p of A.
MultSet mult_set_Sp(const RingHom& f, const Ideal& j, const Ideal& p);
/// A − p.
MultSet prime_complement(const Ideal& p);

/// R_S realized as R/{r : sr = 0 for some s ∈ S}; in a finite ring every
/// element of S becomes a unit there, so this quotient is the localization.
struct Localization {
  FiniteRing ring;
  RingHom canonical;
  Ideal kernel;
};

Localization localize(const FiniteRing& ring, const MultSet& s);
Localization localize_at_prime(const Ideal& p);

/// The map source.ring → target.ring induced by f on the localizations of
/// its domain and codomain. Throws internal when f does not descend.
RingHom induced_hom(const RingHom& f, const Localization& source, const Localization& target);

struct InducedLeg {
  Localization target;  // B_{S_p}
  RingHom hom;          // f_p : A_p → B_{S_p}
  Ideal ideal;          // J_{S_p}
};

/// f_p : A_p → B_{S_p} with S_p = f(A − p) + J, checked against
/// f_p⁻¹(J_{S_p}) = (I0)_p.
InducedLeg induced_hom_fp(const RingHom& f, const Ideal& j, const Ideal& p, const Localization& a_p);

struct IsomorphismResult {
  Verdict verdict;
  std::optional<RingHom> isomorphism;
};

/// Backtracking search over images of a ring-generating set, pruned by
/// element invariants. Throws size-limit above `cap`.
IsomorphismResult ring_isomorphic(const FiniteRing& r1, const FiniteRing& r2, std::size_t cap = kIsomorphismCap);

struct LocalizationCheck {
  Verdict verdict;
  std::optional<RingHom> isomorphism;
  std::size_t localized_size = 0;  // |D_P|
  std::size_t rebuilt_size = 0;    // |A_p ⋈ (J_{S_p}, J'_{S'_p})|
};

/// Localizes D = A ⋈^{f,g}(J,J') at S_D = {(f(a)+j, g(a)+j') : a ∉ p} and
/// compares it with the bi-amalgamation of the localized data. When I0 ⊆ p,
/// S_D is the complement of P = p ⋈^{f,g}(J,J'); otherwise both sides are
/// zero rings. p must be maximal.
LocalizationCheck verify_localization_isomorphism(const BiAmalgConfig& cfg, const Ideal& p);

}  // namespace biamalg
