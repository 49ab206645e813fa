#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biamalg/constructions.hpp"
#include "biamalg/verdict.hpp"

namespace biamalg {

enum class TheoremStatus { verified, hypothesis_not_met, violation };
/// "verified", "hypothesis_not_met", "VIOLATION".
std::string_view to_string(TheoremStatus s) noexcept;

struct HypothesisCheck {
  std::string name;
  bool holds = false;
  std::optional<Witness> witness;
  std::string detail;
};

/// For implications `expected` is true and `computed` is the truth of the
/// implication; for biconditionals `expected` is the right-hand side and
/// `computed` the left-hand side.
struct ConclusionCheck {
  std::string name;
  bool expected = true;
  bool computed = false;
  std::optional<Witness> witness;
  std::string detail;

  bool matches() const noexcept { return expected == computed; }
};

/// Hypotheses are computed one by one; conclusions only when all of them hold.
struct TheoremReport {
  std::string theorem_id;
  std::vector<HypothesisCheck> hypotheses;
  std::vector<ConclusionCheck> conclusions;
  std::vector<std::string> notes;
  TheoremStatus status = TheoremStatus::hypothesis_not_met;

  bool hypotheses_hold() const noexcept;
  bool conclusions_match() const noexcept;
};

enum class TransferMode { gaussian, prufer };
std::string_view to_string(TransferMode m) noexcept;
/// Accepts "gaussian" and "prufer"; throws invalid-argument otherwise.
TransferMode parse_transfer_mode(std::string_view text);

/// J × J' regular in (f(A)+J) × (g(A)+J') ⟹ (D has the property ⟺ J = B,
/// J' = C and B, C have it).
TheoremReport verify_regular_transfer(const BiAmalgConfig& cfg, TransferMode mode);
/// The same statement for A ⋈^f J with f⁻¹(J) × J regular in A × (f(A)+J).
TheoremReport verify_amalgamation_transfer(const RingHom& f, const Ideal& j, TransferMode mode);
/// The same statement for the duplication A ⋈ I with I regular.
TheoremReport verify_duplication_transfer(const FiniteRing& a, const Ideal& i, TransferMode mode);

/// Local Gaussian transfer with A local and J × J' ⊆ Jac(B × C):
/// part 1 is the descent to f(A)+J and g(A)+J', part 2 the sufficient
/// condition, part 3 the equivalence when I0 is prime.
TheoremReport verify_local_gaussian_transfer(int part, const BiAmalgConfig& cfg);

/// A local total ring of quotients, f injective, J² = J'² = 0 ⟹ D is a local
/// total ring of quotients and Prüfer.
TheoremReport verify_total_quotient_transfer(const BiAmalgConfig& cfg);

/// D_P ≅ A_p ⋈^{f_p,g_p}(J_{S_p}, J'_{S'_p}) for a maximal p ⊇ I0.
TheoremReport verify_localization_report(const BiAmalgConfig& cfg, const Ideal& p);

/// The configuration of the Gaussian, non-arithmetical bi-amalgamation:
/// A1 = Z/4, A = A1 ⋉ A1/m1, B = A ⋉ A/m, C = A1, f the inclusion, g the
/// projection, J = m ⋉ E, J' = m1.
struct ExampleInstance {
  FiniteRing a1;
  Ideal m1;
  FiniteRing a;
  Ideal m;
  BiAmalgConfig config;
};

ExampleInstance build_gaussian_example();
/// The Prüfer, non-Gaussian bi-amalgamation: A1 = F_2[x,y]/(x², y²),
/// A = A1 ⋉ A1/m1, B = A ⋉ A/m, C = B ⋉ B/N, f and g the inclusions,
/// J = 0 ⋉ E, J' = J ⋉ E'.
ExampleInstance build_prufer_example();

/// Every claim about the instance, as expected/computed pairs.
TheoremReport gaussian_example_report();
TheoremReport prufer_example_report();

enum class ConfigFilter { none, local_gaussian_sufficient, regular_ideal, total_quotient };
/// Accepts the verifier ids "none", "prop2.4.2", "thm2.1", "prop2.6".
ConfigFilter parse_config_filter(std::string_view text);
std::string_view to_string(ConfigFilter f) noexcept;

struct RandomBounds {
  std::size_t max_ring = 32;     // |B| and |C|
  std::size_t max_result = 256;  // |D|
  std::size_t max_attempts = 400;
};

struct RandomConfig {
  BiAmalgConfig config;
  std::string description;
  std::size_t attempts = 0;
};

/// Deterministic in the seed. Throws generation-failure when the retry budget
/// runs out.
RandomConfig random_config(std::uint64_t seed, const RandomBounds& bounds = {},
                           ConfigFilter filter = ConfigFilter::none);

/// The verifiers a filter selects (all of them for `none`; prop5.7 runs once
/// per maximal p ⊇ I0).
std::vector<TheoremReport> verify_config(const BiAmalgConfig& cfg, ConfigFilter filter);

struct CorpusRing {
  std::string name;
  FiniteRing ring;
};

/// Named rings used by the regression suites (all at most 64 elements).
std::vector<CorpusRing> test_corpus();

}  // namespace biamalg
