#include <gtest/gtest.h>

#include <random>

#include "cpixp/coverage.hpp"
#include "cpixp/dataset_engine.hpp"
#include "cpixp/errors.hpp"
#include "cpixp/generators.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace cpixp;
using testing_support::fixture;
using testing_support::inst;
using testing_support::pa;
using testing_support::sets;

TEST(SampledExample2, FamiliesOnThreeRows) {
  Scenario s = fixture("ex2d");
  DatasetExplainer d(*s.dataset);
  const Theory& t = s.theory;
  Instance x2 = inst(t, "f1=0,f2=1");
  EXPECT_EQ(d.enumerate_all_d(ExplanationKind::kDWaxp, x2),
            sets(t, {"f1=0", "f2=1", "f1=0,f2=1"}));
  EXPECT_EQ(d.enumerate_all_d(ExplanationKind::kDAxp, x2), sets(t, {"f1=0", "f2=1"}));
  EXPECT_EQ(d.enumerate_all_d(ExplanationKind::kDCpi, x2), sets(t, {"f1=0"}));
  EXPECT_EQ(d.enumerate_all_d(ExplanationKind::kDMcpi, x2), sets(t, {"f1=0"}));
  EXPECT_EQ(d.find_d_cpi_xp(x2).explanation, pa(t, "f1=0"));
  EXPECT_TRUE(d.is_d_cpi_xp(pa(t, "f1=0"), x2));
  EXPECT_FALSE(d.is_d_cpi_xp(pa(t, "f2=1"), x2));
}

TEST(SampledExample2, InstanceItselfCanBeSubsumed) {
  Scenario s = fixture("ex2d");
  DatasetExplainer d(*s.dataset);
  Instance x2 = inst(s.theory, "f1=0,f2=1");
  EXPECT_TRUE(d.is_d_waxp(PartialAssignment::of(x2), x2));
  EXPECT_FALSE(d.is_d_cpi_xp(PartialAssignment::of(x2), x2));
}

TEST(SampledExample6, DatasetAxpsDifferFromExactOnes) {
  Scenario s = fixture("ex6");
  DatasetExplainer d(*s.dataset);
  const Theory& t = s.theory;
  Instance x5 = inst(t, "f1=1,f2=1,f3=1,f4=1");
  EXPECT_EQ(d.enumerate_all_d(ExplanationKind::kDAxp, x5), sets(t, {"f3=1,f4=1", "f1=1"}));
  EXPECT_EQ(d.find_d_axp(x5).explanation, pa(t, "f1=1"));
  EXPECT_TRUE(d.is_d_waxp(pa(t, "f1=1"), x5));
}

TEST(DatasetExplainer, ClosureAndCandidateSets) {
  Scenario s = fixture("ex6");
  DatasetExplainer d(*s.dataset);
  const Theory& t = s.theory;
  Instance x5 = inst(t, "f1=1,f2=1,f3=1,f4=1");
  EXPECT_EQ(d.covered_rows(pa(t, "f1=1"), x5).size(), 2u);
  // Rows x5 and x6 share f1, f2 and f4.
  EXPECT_EQ(d.d_closure(x5, pa(t, "f1=1")), pa(t, "f1=1,f2=1,f4=1"));
  EXPECT_EQ(d.d_closure(x5, pa(t, "f1=1,f2=1,f3=1,f4=1")), pa(t, "f1=1,f2=1,f3=1,f4=1"));
  Instance x4 = inst(t, "f1=0,f2=0,f3=1,f4=1");
  EXPECT_EQ(d.s_set(PartialAssignment::of(x5), x4, x5), pa(t, "f3=1,f4=1"));
  EXPECT_EQ(d.s_set(pa(t, "f1=1"), x4, x5), pa(t, "f4=1"));
  EXPECT_EQ(d.s_set(pa(t, "f1=1,f2=1,f3=1"), x4, x5), pa(t, "f3=1,f4=1"));
}

TEST(DatasetExplainer, CoveredRowsOnlyCarryTheTargetLabel) {
  Scenario s = fixture("ex6");
  DatasetExplainer d(*s.dataset);
  Instance x5 = inst(s.theory, "f1=1,f2=1,f3=1,f4=1");
  // {f2=1} applies to x1, x2, x3, x5, x6 but only x5, x6 share the label.
  EXPECT_EQ(d.covered_rows(pa(s.theory, "f2=1"), x5).size(), 2u);
}

TEST(DatasetExplainer, InstanceMustBeARow) {
  Scenario s = fixture("ex6");
  DatasetExplainer d(*s.dataset);
  Instance outside = inst(s.theory, "f1=0,f2=0,f3=0,f4=0");
  EXPECT_THROW(d.find_d_axp(outside), PreconditionError);
  EXPECT_THROW(d.find_d_cpi_xp(outside), PreconditionError);
  Instance x5 = inst(s.theory, "f1=1,f2=1,f3=1,f4=1");
  EXPECT_THROW(d.is_d_cpi_xp(pa(s.theory, "f2=1"), x5), PreconditionError);
  EXPECT_THROW(d.minimize_d_cpi(pa(s.theory, "f1=1,f2=1,f3=1"), x5), PreconditionError);
}

TEST(Dataset, IngestValidation) {
  Theory t({{"f1", {"0", "1"}}, {"f2", {"0", "1"}}}, {"0", "1"});
  ConstraintSet c(t, {{{{0, 1}, {1, 0}}}});
  EXPECT_THROW(Dataset(t, {{Instance({0, 0}), 0}}), StructuralError);
  EXPECT_THROW(Dataset(t, {{Instance({0, 0}), 0}, {Instance({0, 0}), 1}}), StructuralError);
  EXPECT_THROW(Dataset(t, {{Instance({0, 0}), 0}, {Instance({0, 2}), 1}}), StructuralError);
  EXPECT_THROW(Dataset(t, {{Instance({0, 0}), 0}, {Instance({1, 0}), 1}}, &c), StructuralError);
  try {
    Dataset(t, {{Instance({0, 0}), 0}, {Instance({0, 1}), 1}, {Instance({1, 0}), 1}}, &c);
    FAIL();
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos) << e.what();
  }
  Dataset d(t, {{Instance({0, 0}), 0}, {Instance({0, 0}), 0}, {Instance({1, 1}), 1}});
  EXPECT_EQ(d.size(), 2u);
  EXPECT_TRUE(d.contains(Instance({1, 1})));
}

TEST(Dataset, LabeledByClassifier) {
  Scenario s = fixture("ex6");
  Dataset d = Dataset::labeled_by(*s.classifier, s.dataset->instances());
  EXPECT_EQ(d.labels(), s.dataset->labels());
}

// Every d-wAXp E strictly subsumed by a d-wAXp E' with witness y satisfies
// the five candidate-set clauses.
TEST(CandidateSets, ClausesHoldOnRandomDatasets) {
  std::mt19937_64 rng(20240611);
  std::size_t datasets = 0;
  std::size_t pairs = 0;
  while (datasets < 60) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
    std::vector<std::pair<Instance, ClassIndex>> rows;
    std::vector<ClassIndex> labels_seen(2, 0);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<ValueIndex> v(n);
      for (auto& b : v) b = rng() & 1;
      Instance x(v);
      bool dup = false;
      for (auto& r : rows) dup = dup || r.first == x;
      if (dup) continue;
      ClassIndex label = rng() & 1;
      labels_seen[label] = 1;
      rows.emplace_back(x, label);
    }
    if (!labels_seen[0] || !labels_seen[1]) continue;
    std::vector<Feature> fs;
    for (std::size_t i = 1; i <= n; ++i) fs.push_back({"f" + std::to_string(i), {"0", "1"}});
    Theory t(fs, {"0", "1"});
    DatasetExplainer d(Dataset(t, rows));
    const InstanceSet& set = d.rows();
    brute::Space space = brute::sample_space(d.dataset());
    ++datasets;
    for (const auto& [v, c] : rows) {
      std::vector<PartialAssignment> weak = brute::weak_sets(v, c, space);
      for (const PartialAssignment& e : weak) {
        ASSERT_EQ(d.is_d_cpi_xp(e, v), brute::is_cpi(e, v, space));
        const PartialAssignment l = d.d_closure(v, e);
        EXPECT_EQ(l, brute::closure(e, v, c, space));
        for (const PartialAssignment& ep : weak) {
          if (!strictly_subsumes(ep, e, set)) continue;
          for (std::size_t row = 0; row < d.dataset().size(); ++row) {
            const Instance y = d.dataset().instance(row);
            if (!extends(ep, y) || extends(e, y)) continue;
            ++pairs;
            const PartialAssignment sy = d.s_set(e, y, v);
            EXPECT_TRUE(ep.is_subset_of(l));
            EXPECT_TRUE(ep.is_subset_of(sy));
            EXPECT_TRUE(d.is_d_waxp(sy, v));
            EXPECT_TRUE(subsumes(sy, e, set));
            EXPECT_TRUE(extends(sy, y));
          }
        }
      }
    }
  }
  EXPECT_GT(pairs, 0u);
}

TEST(DatasetExplainer, IterationBoundOnSyntheticData) {
  Dataset data = synthetic_dataset(12, 400, 7);
  DatasetExplainer d(data);
  for (std::size_t row = 0; row < 40; ++row) {
    Instance x = data.instance(row);
    ExplanationResult r = d.find_d_cpi_xp(x);
    EXPECT_LE(r.iterations, x.size());
    EXPECT_TRUE(d.is_d_cpi_xp(r.explanation, x));
  }
}
