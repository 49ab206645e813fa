#include <gtest/gtest.h>

#include "biamalg/localization.hpp"
#include "biamalg/serialize.hpp"
#include "support.hpp"

using namespace biamalg;
using biamalg::testing::corpus_up_to;
using biamalg::testing::ideal_of;

namespace {

bool has_note_containing(const TheoremReport& r, std::string_view text) {
  for (const auto& n : r.notes)
    if (n.find(text) != std::string::npos) return true;
  return false;
}

const HypothesisCheck* hypothesis(const TheoremReport& r, std::string_view name) {
  for (const auto& h : r.hypotheses)
    if (h.name == name) return &h;
  return nullptr;
}

}  // namespace

TEST(Report, StatusStrings) {
  EXPECT_EQ(to_string(TheoremStatus::verified), "verified");
  EXPECT_EQ(to_string(TheoremStatus::hypothesis_not_met), "hypothesis_not_met");
  EXPECT_EQ(to_string(TheoremStatus::violation), "VIOLATION");
}

TEST(Examples, ReportsAreVerified) {
  for (const auto& r : {gaussian_example_report(), prufer_example_report()}) {
    EXPECT_EQ(r.status, TheoremStatus::verified) << r.theorem_id;
    for (const auto& c : r.conclusions) EXPECT_TRUE(c.matches()) << r.theorem_id << ": " << c.name;
  }
}

TEST(Examples, GaussianExampleDocumentsBothReadings) {
  EXPECT_TRUE(has_note_containing(gaussian_example_report(), "both readings"));
}

TEST(Examples, ReportsAreDeterministic) {
  EXPECT_EQ(to_json(gaussian_example_report()).dump(), to_json(gaussian_example_report()).dump());
  EXPECT_EQ(to_json(prufer_example_report()).dump(), to_json(prufer_example_report()).dump());
}

TEST(Examples, PruferExampleBaseRingIsNotGaussianWithPairXY) {
  auto ex = build_prufer_example();
  auto v = is_gaussian_local(ex.a1);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->element_labels(), (std::vector<std::string>{"x", "y"}));
}

TEST(LocalGaussian, EquivalenceBothDirectionsOnGaussianExample) {
  auto ex = build_gaussian_example();
  auto r = verify_local_gaussian_transfer(3, ex.config);
  EXPECT_EQ(r.status, TheoremStatus::verified);
  EXPECT_EQ(r.conclusions.size(), 2u);
  auto prime = hypothesis(r, "I0 is a prime ideal of A");
  ASSERT_NE(prime, nullptr);
  EXPECT_TRUE(prime->holds);
}

TEST(LocalGaussian, PartOneOnPruferExample) {
  auto r = verify_local_gaussian_transfer(1, build_prufer_example().config);
  EXPECT_EQ(r.status, TheoremStatus::verified);
}

TEST(LocalGaussian, RejectsUnknownPart) {
  EXPECT_THROW(verify_local_gaussian_transfer(4, build_gaussian_example().config), Error);
}

TEST(TotalQuotient, PruferExampleHypothesesIndividuallyConfirmed) {
  auto r = verify_total_quotient_transfer(build_prufer_example().config);
  EXPECT_EQ(r.status, TheoremStatus::verified);
  for (const auto& h : r.hypotheses) EXPECT_TRUE(h.holds) << h.name;
  for (const char* name : {"f is injective", "J^2 = 0", "J'^2 = 0", "J x J' is inside Jac(B x C)"})
    EXPECT_NE(hypothesis(r, name), nullptr) << name;
  EXPECT_EQ(r.conclusions.size(), 3u);
}

TEST(TotalQuotient, ZeroIdealFailsHypothesis) {
  auto cfg = build_prufer_example().config;
  auto zero_cfg = BiAmalgConfig::make(cfg.f(), cfg.g(), Ideal::zero(cfg.b()), Ideal::zero(cfg.c()));
  auto r = verify_total_quotient_transfer(zero_cfg);
  EXPECT_EQ(r.status, TheoremStatus::hypothesis_not_met);
  EXPECT_TRUE(r.conclusions.empty());
}

TEST(TotalQuotient, NonInjectiveFailsHypothesis) {
  auto ex = build_gaussian_example();
  const auto& c = ex.config;
  auto swapped = BiAmalgConfig::make(c.g(), c.f(), c.j_prime(), c.j());
  auto r = verify_total_quotient_transfer(swapped);
  EXPECT_EQ(r.status, TheoremStatus::hypothesis_not_met);
  auto inj = hypothesis(r, "f is injective");
  ASSERT_NE(inj, nullptr);
  EXPECT_FALSE(inj->holds);
}

TEST(RegularTransfer, ProperIdealsAreVacuousWithNote) {
  auto r = verify_regular_transfer(build_gaussian_example().config, TransferMode::gaussian);
  EXPECT_EQ(r.status, TheoremStatus::hypothesis_not_met);
  EXPECT_TRUE(has_note_containing(r, "regular element is a unit"));
}

TEST(RegularTransfer, DegenerateConfigsVerify) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto rc = random_config(seed, {}, ConfigFilter::regular_ideal);
    EXPECT_TRUE(rc.config.j().is_unit_ideal() && rc.config.j_prime().is_unit_ideal());
    for (auto mode : {TransferMode::gaussian, TransferMode::prufer})
      EXPECT_EQ(verify_regular_transfer(rc.config, mode).status, TheoremStatus::verified) << rc.description;
  }
}

TEST(AmalgamationTransfer, UnitIdealVerifiesAndProperIdealIsVacuous) {
  auto z4 = make_zmod(4);
  auto f = identity_hom(z4);
  EXPECT_EQ(verify_amalgamation_transfer(f, Ideal::unit(z4), TransferMode::gaussian).status, TheoremStatus::verified);
  EXPECT_EQ(verify_amalgamation_transfer(f, ideal_of(z4, {"2"}), TransferMode::gaussian).status,
            TheoremStatus::hypothesis_not_met);
}

TEST(DuplicationTransfer, UnitIdealFlagsPropriety) {
  auto z6 = make_zmod(6);
  auto r = verify_duplication_transfer(z6, Ideal::unit(z6), TransferMode::prufer);
  EXPECT_EQ(r.status, TheoremStatus::verified);
  EXPECT_TRUE(has_note_containing(r, "proper ideals"));
  auto v = verify_duplication_transfer(z6, ideal_of(z6, {"2"}), TransferMode::prufer);
  EXPECT_EQ(v.status, TheoremStatus::hypothesis_not_met);
}

TEST(TransferMode, Parsing) {
  EXPECT_EQ(parse_transfer_mode("gaussian"), TransferMode::gaussian);
  EXPECT_EQ(parse_transfer_mode("prufer"), TransferMode::prufer);
  EXPECT_THROW(parse_transfer_mode("arithmetical"), Error);
}

TEST(LocalizationReport, VerifiedOnGaussianExample) {
  auto ex = build_gaussian_example();
  EXPECT_EQ(verify_localization_report(ex.config, ex.m).status, TheoremStatus::verified);
}

TEST(LocalizationReport, MissingConductorIsAHypothesisFailure) {
  auto z6 = make_zmod(6);
  auto d = duplicate(z6, ideal_of(z6, {"2"}));
  EXPECT_EQ(verify_localization_report(d.config(), ideal_of(z6, {"3"})).status, TheoremStatus::hypothesis_not_met);
}

TEST(RandomConfig, DeterministicInTheSeed) {
  for (auto filter : {ConfigFilter::none, ConfigFilter::local_gaussian_sufficient, ConfigFilter::total_quotient}) {
    auto a = random_config(11, {}, filter);
    auto b = random_config(11, {}, filter);
    EXPECT_EQ(a.description, b.description);
    EXPECT_EQ(a.attempts, b.attempts);
  }
}

TEST(RandomConfig, SeedTwoUnfilteredHasValidatedConductor) {
  auto rc = random_config(2);
  EXPECT_EQ(preimage_ideal(rc.config.f(), rc.config.j()), rc.config.conductor());
  EXPECT_EQ(preimage_ideal(rc.config.g(), rc.config.j_prime()), rc.config.conductor());
}

TEST(RandomConfig, TightBoundsFailLoudly) {
  RandomBounds tight;
  tight.max_ring = 1;
  try {
    random_config(1, tight, ConfigFilter::local_gaussian_sufficient);
    FAIL() << "expected generation-failure";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::generation_failure);
  }
}

TEST(RandomConfig, FilterParsing) {
  EXPECT_EQ(parse_config_filter("prop2.4.2"), ConfigFilter::local_gaussian_sufficient);
  EXPECT_EQ(parse_config_filter("thm2.1"), ConfigFilter::regular_ideal);
  EXPECT_EQ(parse_config_filter("prop2.6"), ConfigFilter::total_quotient);
  EXPECT_EQ(parse_config_filter("none"), ConfigFilter::none);
  EXPECT_THROW(parse_config_filter("prop9"), Error);
}

// Randomized suites. A VIOLATION here is an implementation bug.

TEST(RandomSuite, SufficientConditionAlwaysGaussian) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto rc = random_config(seed, {}, ConfigFilter::local_gaussian_sufficient);
    auto r = verify_local_gaussian_transfer(2, rc.config);
    ASSERT_EQ(r.status, TheoremStatus::verified) << rc.description;
  }
}

TEST(RandomSuite, TotalQuotientTransfer) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto rc = random_config(seed, {}, ConfigFilter::total_quotient);
    ASSERT_EQ(verify_total_quotient_transfer(rc.config).status, TheoremStatus::verified) << rc.description;
  }
}

TEST(RandomSuite, NoViolationOnUnfilteredConfigs) {
  std::size_t localization_checks = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto rc = random_config(seed);
    for (const auto& r : verify_config(rc.config, ConfigFilter::none)) {
      ASSERT_NE(r.status, TheoremStatus::violation) << r.theorem_id << " on " << rc.description;
      localization_checks += r.theorem_id == "prop5.7" && r.status == TheoremStatus::verified;
    }
  }
  EXPECT_GE(localization_checks, 25u);
}

TEST(RandomSuite, VerifyConfigSelectsByFilter) {
  auto rc = random_config(5, {}, ConfigFilter::local_gaussian_sufficient);
  auto reports = verify_config(rc.config, ConfigFilter::local_gaussian_sufficient);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].theorem_id, "prop2.4.2");
}

TEST(Corpus, AllRingsWithinOracleCap) {
  auto corpus = test_corpus();
  EXPECT_GE(corpus.size(), 20u);
  for (const auto& c : corpus) EXPECT_LE(c.ring.size(), kOracleCap) << c.name;
}
