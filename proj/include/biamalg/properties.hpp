#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "biamalg/hom.hpp"
#include "biamalg/ideal.hpp"
#include "biamalg/verdict.hpp"

namespace biamalg {

/// Polynomial over a finite ring; trailing zero coefficients are trimmed, so
/// the zero polynomial has no coefficients.
class Poly {
 public:
  Poly(FiniteRing ring, std::vector<Elem> coeffs);

  const FiniteRing& ring() const noexcept { return ring_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::string to_string() const;

  friend Poly operator*(const Poly& p, const Poly& q);
  friend bool operator==(const Poly& p, const Poly& q) { return p.ring_ == q.ring_ && p.coeffs_ == q.coeffs_; }

 private:
  FiniteRing ring_;
  std::vector<Elem> coeffs_;
};

/// Ideal generated by the coefficients.
Ideal content(const Poly& p);

struct LocalVerdict {
  Verdict verdict;
  std::optional<Ideal> maximal_ideal;
};

/// Local iff the non-units form an ideal; the witness is a pair of non-units
/// whose sum is a unit.
LocalVerdict is_local(const FiniteRing& ring);

struct LocalFactor {
  Elem idempotent;
  FiniteRing ring;
  RingHom projection;
};

/// Splits the ring along its primitive idempotents. A local ring yields itself
/// with the identity projection; the zero ring yields no factors.
std::vector<LocalFactor> local_decomposition(const FiniteRing& ring);

/// Pair criterion for local rings: (a,b)² equals (a²) or (b²), and when
/// ab = 0 with (a,b)² = (a²) then b² = 0 (symmetrically in b). Throws
/// invalid-argument on non-local input.
Verdict is_gaussian_local(const FiniteRing& ring);
Verdict is_gaussian(const FiniteRing& ring);

/// One-sided falsifier: samples polynomial pairs and compares c(fg) with
/// c(f)c(g). No violation is reported as holds with conclusive = false.
Verdict content_equation_sample(const FiniteRing& ring, int max_degree, std::size_t trials, std::uint64_t seed);
/// Checks one pair; holds iff c(fg) = c(f)c(g).
Verdict content_equation(const Poly& f, const Poly& g);

/// Chain criterion on every local factor: principal ideals pairwise comparable.
Verdict is_arithmetical(const FiniteRing& ring);
/// Direct distributivity check over all ideal triples (rings up to `cap`).
Verdict is_arithmetical_bruteforce(const FiniteRing& ring, std::size_t cap = kOracleCap);

/// Every two-generated ideal containing a regular element is invertible in the
/// total ring of quotients.
Verdict is_prufer(const FiniteRing& ring);

/// Every element is zero, a unit, or a zero-divisor.
Verdict is_total_quotient_ring(const FiniteRing& ring);

}  // namespace biamalg
