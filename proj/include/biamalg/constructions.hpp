#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "biamalg/hom.hpp"
#include "biamalg/ideal.hpp"
#include "biamalg/module.hpp"

namespace biamalg {

/// A ⋉ E with its canonical inclusion a ↦ (a,0) and projection (a,e) ↦ a.
struct TrivialExtension {
  FiniteRing ring;
  FiniteModule module;
  RingHom inclusion;
  RingHom projection;

  /// 0 ⋉ E as an ideal of the extension.
  Ideal module_ideal() const;
  Elem element(Elem a, ModuleElem e) const;
  std::pair<Elem, ModuleElem> components(Elem x) const;
};

/// Multiplication (a,e)(a',e') = (aa', ae' + a'e).
TrivialExtension trivext(const FiniteRing& base, const FiniteModule& module);

/// Validated data (f : A → B, g : A → C, J ⊆ B, J' ⊆ C) with f⁻¹(J) = g⁻¹(J').
class BiAmalgConfig {
 public:
  /// Throws conductor-mismatch naming the first a with f(a) ∈ J xor g(a) ∈ J'.
  static BiAmalgConfig make(RingHom f, RingHom g, Ideal j, Ideal j_prime);

  const RingHom& f() const noexcept { return f_; }
  const RingHom& g() const noexcept { return g_; }
  const Ideal& j() const noexcept { return j_; }
  const Ideal& j_prime() const noexcept { return j_prime_; }
  /// The conductor f⁻¹(J) = g⁻¹(J').
  const Ideal& conductor() const noexcept { return conductor_; }

  const FiniteRing& a() const noexcept { return f_.domain(); }
  const FiniteRing& b() const noexcept { return f_.codomain(); }
  const FiniteRing& c() const noexcept { return g_.codomain(); }

  /// (|A| / |I0|)·|J|·|J'|.
  std::size_t expected_size() const noexcept;

 private:
  BiAmalgConfig(RingHom f, RingHom g, Ideal j, Ideal j_prime, Ideal conductor)
      : f_(std::move(f)), g_(std::move(g)), j_(std::move(j)), j_prime_(std::move(j_prime)),
        conductor_(std::move(conductor)) {}

  RingHom f_, g_;
  Ideal j_, j_prime_, conductor_;
};

/// Where a bi-amalgamation element came from: (f(a)+j, g(a)+j') with a the
/// least-index representative of its class modulo I0.
struct Provenance {
  Elem a;
  Elem j;
  Elem j_prime;
};

/// A ⋈^{f,g}(J, J') as a subring of B × C. Elements are sorted by their
/// (B, C) index pair and labeled "(b,c)".
class BiAmalgRing {
 public:
  const BiAmalgConfig& config() const noexcept { return *config_; }
  const FiniteRing& ring() const noexcept { return ring_; }
  const Provenance& provenance(Elem x) const { return provenance_.at(x.index); }
  std::pair<Elem, Elem> components(Elem x) const;
  std::optional<Elem> find(Elem b, Elem c) const;
  /// Projections onto B and C.
  RingHom projection_b() const;
  RingHom projection_c() const;

 private:
  BiAmalgRing(std::shared_ptr<const BiAmalgConfig> config, FiniteRing ring, std::vector<Provenance> provenance)
      : config_(std::move(config)), ring_(std::move(ring)), provenance_(std::move(provenance)) {}

  std::shared_ptr<const BiAmalgConfig> config_;
  FiniteRing ring_;
  std::vector<Provenance> provenance_;

  friend BiAmalgRing biamalg(const BiAmalgConfig& cfg);
};

BiAmalgRing biamalg(const BiAmalgConfig& cfg);

/// A ⋈^f J, built as A ⋈^{id,f}(f⁻¹(J), J).
BiAmalgRing amalg(const RingHom& f, const Ideal& j);

/// A ⋈ I = A ⋈^{id} I.
BiAmalgRing duplicate(const FiniteRing& a, const Ideal& i);

struct CanonicalIdeals {
  Ideal zero_cross_j_prime;  // 0 × J'
  Ideal j_cross_zero;        // J × 0
};

CanonicalIdeals canonical_ideals(const BiAmalgRing& d);

/// p ⋈^{f,g}(J, J') for a maximal ideal p ⊇ I0 of A; verified maximal in D.
/// Throws invalid-argument when p misses I0 or is not a proper prime.
Ideal extend_prime(const BiAmalgRing& d, const Ideal& p);

struct Subring {
  FiniteRing ring;
  RingHom inclusion;
};

/// f(A) + J as a subring of B, labeled with B's labels.
Subring subring_of_fA_plus_J(const RingHom& f, const Ideal& j);

/// The subring of `host` with the given members (must contain 0 and 1 and
/// be closed); labeled with the host's labels.
Subring make_subring(const FiniteRing& host, const ElemSet& members, std::string provenance);

}  // namespace biamalg
