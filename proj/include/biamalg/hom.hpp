#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biamalg/ring.hpp"

namespace biamalg {

class RingHom;

namespace detail {
RingHom make_hom_unchecked(FiniteRing domain, FiniteRing codomain, std::vector<Elem> table);
}

/// A unital ring homomorphism stored as a total element map. Every public
/// constructor validates the homomorphism axioms.
class RingHom {
 public:
  const FiniteRing& domain() const noexcept { return domain_; }
  const FiniteRing& codomain() const noexcept { return codomain_; }
  Elem operator()(Elem a) const { return table_.at(a.index); }
  const std::vector<Elem>& table() const noexcept { return table_; }

  bool is_injective() const;
  bool is_surjective() const;
  /// Image of the whole domain as a subset of the codomain.
  ElemSet image() const;

 private:
  RingHom(FiniteRing domain, FiniteRing codomain, std::vector<Elem> table)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {}

  FiniteRing domain_;
  FiniteRing codomain_;
  std::vector<Elem> table_;

  friend RingHom detail::make_hom_unchecked(FiniteRing, FiniteRing, std::vector<Elem>);
};

/// Checks the axioms: exhaustively over all pairs when the domain has at most
/// 1024 elements, otherwise on `samples` random pairs. Returns the violated
/// identity with its witness pair.
std::optional<std::string> check_hom_axioms(const FiniteRing& domain, const FiniteRing& codomain,
                                            const std::vector<Elem>& table, std::size_t samples = 10000);

/// Validated homomorphism from an explicit table; throws not-a-homomorphism.
RingHom hom_from_table(const FiniteRing& domain, const FiniteRing& codomain, std::vector<Elem> table);
/// Same, with the map given as (domain label, codomain label) pairs covering the domain.
RingHom hom_from_labels(const FiniteRing& domain, const FiniteRing& codomain,
                        const std::vector<std::pair<std::string, std::string>>& pairs);

RingHom identity_hom(const FiniteRing& ring);
/// h2 ∘ h1; the codomain of h1 must be the domain of h2.
RingHom hom_compose(const RingHom& h2, const RingHom& h1);
/// Projections of a ring built by make_product.
std::pair<RingHom, RingHom> product_projections(const FiniteRing& product);

}  // namespace biamalg
