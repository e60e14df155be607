#include <gtest/gtest.h>

#include "cpixp/dataset_engine.hpp"
#include "cpixp/exact_engine.hpp"
#include "cpixp/format.hpp"
#include "cpixp/generators.hpp"
#include "support/brute_force.hpp"

using namespace cpixp;

namespace {

bool member(const std::vector<PartialAssignment>& family, const PartialAssignment& e) {
  return std::find(family.begin(), family.end(), e) != family.end();
}

bool included(const std::vector<PartialAssignment>& a, const std::vector<PartialAssignment>& b) {
  for (const PartialAssignment& e : a) {
    if (!member(b, e)) return false;
  }
  return true;
}

class RandomScenarios : public ::testing::TestWithParam<std::uint64_t> {};

}  // namespace

TEST_P(RandomScenarios, EnginesAgreeWithDefinitions) {
  for (const Scenario& s : random_scenarios(10, GetParam())) {
    SCOPED_TRACE(s.name);
    ExactExplainer e(s.constraints, *s.classifier);
    for (const Instance& x : feasible_space(s.constraints)) {
      SCOPED_TRACE(to_string(s.theory, x));
      std::map<ExplanationKind, std::vector<PartialAssignment>> fam;
      for (ExplanationKind k : kAllKinds) {
        if (is_dataset_kind(k)) continue;
        brute::Space space = brute::space_for(k, s);
        fam[k] = brute::family(k, space, x);
        std::vector<PartialAssignment> got = e.enumerate_all(k, x);
        if (k == ExplanationKind::kPcpi) {
          EXPECT_TRUE(included(got, fam[k]));
          EXPECT_EQ(got.size(), brute::coverage_classes(fam[k], space));
        } else {
          EXPECT_EQ(got, fam[k]) << kind_name(k);
        }
        EXPECT_TRUE(member(fam[k], e.find(k, x).explanation)) << kind_name(k);
      }
      EXPECT_TRUE(included(fam[ExplanationKind::kAxp], fam[ExplanationKind::kWaxp]));
      EXPECT_TRUE(included(fam[ExplanationKind::kWaxp], fam[ExplanationKind::kWaxpc]));
      EXPECT_TRUE(included(fam[ExplanationKind::kCpi], fam[ExplanationKind::kWaxpc]));
      EXPECT_TRUE(included(fam[ExplanationKind::kMcpi], fam[ExplanationKind::kAxpc]));
      EXPECT_TRUE(included(fam[ExplanationKind::kMcpi], fam[ExplanationKind::kCpi]));
      EXPECT_FALSE(fam[ExplanationKind::kMcpi].empty());

      ExplanationResult cpi = e.find_cpi_xp(x);
      EXPECT_LE(cpi.iterations, x.size());
      ExplanationResult m = e.minimize_cpi(cpi.explanation, x);
      EXPECT_LE(m.oracle_calls, 2 * x.size());
    }
  }
}

TEST_P(RandomScenarios, DatasetEnginesAgreeWithDefinitions) {
  for (const Scenario& s : random_scenarios(10, GetParam())) {
    if (!s.dataset) continue;
    SCOPED_TRACE(s.name);
    DatasetExplainer d(*s.dataset);
    brute::Space space = brute::sample_space(*s.dataset);
    for (const Instance& x : s.dataset->instances()) {
      SCOPED_TRACE(to_string(s.theory, x));
      std::map<ExplanationKind, std::vector<PartialAssignment>> fam;
      for (ExplanationKind k : kAllKinds) {
        if (!is_dataset_kind(k)) continue;
        fam[k] = brute::family(k, space, x);
        std::vector<PartialAssignment> got = d.enumerate_all_d(k, x);
        if (k == ExplanationKind::kDPcpi) {
          EXPECT_TRUE(included(got, fam[k]));
          EXPECT_EQ(got.size(), brute::coverage_classes(fam[k], space));
        } else {
          EXPECT_EQ(got, fam[k]) << kind_name(k);
        }
        EXPECT_TRUE(member(fam[k], d.find(k, x).explanation)) << kind_name(k);
      }
      EXPECT_TRUE(included(fam[ExplanationKind::kDCpi], fam[ExplanationKind::kDWaxp]));
      EXPECT_TRUE(included(fam[ExplanationKind::kDMcpi], fam[ExplanationKind::kDAxp]));
      EXPECT_TRUE(included(fam[ExplanationKind::kDMcpi], fam[ExplanationKind::kDCpi]));
      EXPECT_LE(d.find_d_cpi_xp(x).iterations, x.size());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomScenarios, ::testing::Values(1, 2, 3, 4, 5, 6));

// The pCPI of a coverage class is a fixed function of the class.
TEST(PreferredExplanation, DependsOnlyOnCoverage) {
  for (const Scenario& s : random_scenarios(20, 99, 3, 4)) {
    ExactExplainer e(s.constraints, *s.classifier);
    for (const Instance& x : feasible_space(s.constraints)) {
      PartialAssignment single = e.find_pcpi_xp(x).explanation;
      std::vector<PartialAssignment> reps = e.enumerate_all(ExplanationKind::kPcpi, x);
      EXPECT_TRUE(member(reps, single));
    }
  }
}
