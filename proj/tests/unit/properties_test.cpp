#include <gtest/gtest.h>

#include "cpixp/errors.hpp"
#include "cpixp/generators.hpp"
#include "cpixp/properties.hpp"
#include "support/fixtures.hpp"

using namespace cpixp;
using testing_support::fixture;
using testing_support::pa;

namespace {

PropertyReport check(const Scenario& s, ExplanationKind k, Property p) {
  return PropertyChecker(s).check(k, p);
}

}  // namespace

TEST(Properties, NamesFollowTheTableRows) {
  EXPECT_EQ(property_name(Property::kNonEquivalence), "Non-Equivalence");
  EXPECT_EQ(kTable2Columns.size(), 11u);
  EXPECT_FALSE(table2_expected(ExplanationKind::kAxp, Property::kIndependence));
  EXPECT_TRUE(table2_expected(ExplanationKind::kPcpi, Property::kNonEquivalence));
  EXPECT_FALSE(table2_expected(ExplanationKind::kDPcpi, Property::kCoherence));
}

TEST(Properties, WeakExplanationsAreReducible) {
  Scenario s = fixture("ex1");
  PropertyReport r = check(s, ExplanationKind::kWaxp, Property::kIrreducibility);
  ASSERT_EQ(r.verdict, Verdict::kViolated);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(revalidate(s, r));
}

TEST(Properties, ConstraintsBreakIndependenceOfAxps) {
  Scenario s = fixture("ex1c");
  PropertyReport r = check(s, ExplanationKind::kAxp, Property::kIndependence);
  ASSERT_EQ(r.verdict, Verdict::kViolated);
  EXPECT_EQ(r.witness->explanations,
            (std::vector{pa(s.theory, "f1=1"), pa(s.theory, "f2=1")}));
  EXPECT_TRUE(revalidate(s, r));
}

TEST(Properties, SampledExplainersAreIncoherent) {
  Scenario s = fixture("car");
  for (ExplanationKind k : {ExplanationKind::kDWaxp, ExplanationKind::kDAxp,
                            ExplanationKind::kDCpi, ExplanationKind::kDMcpi}) {
    PropertyReport r = check(s, k, Property::kCoherence);
    ASSERT_EQ(r.verdict, Verdict::kViolated) << kind_name(k);
    EXPECT_EQ(r.witness->instances.size(), 3u);
    EXPECT_TRUE(revalidate(s, r));
  }
  EXPECT_EQ(check(fixture("ex6"), ExplanationKind::kDPcpi, Property::kCoherence).verdict,
            Verdict::kViolated);
}

TEST(Properties, PreferredExplanationsSatisfyTheirRows) {
  for (const char* name : {"ex1", "ex1c", "ex2", "ex3", "ex5", "irr-ab"}) {
    Scenario s = fixture(name);
    PropertyChecker c(s);
    for (Property p : kAllProperties) {
      EXPECT_EQ(c.check(ExplanationKind::kPcpi, p).verdict, Verdict::kNoViolationFound)
          << name << " " << property_name(p);
    }
  }
}

TEST(Properties, EveryExplainerSucceeds) {
  Scenario s = fixture("ex6");
  PropertyChecker c(s);
  for (ExplanationKind k : kAllKinds) {
    if (!c.supports(k)) continue;
    EXPECT_EQ(c.check(k, Property::kSuccess).verdict, Verdict::kNoViolationFound);
    EXPECT_EQ(c.check(k, Property::kNonTriviality).verdict, Verdict::kNoViolationFound);
    EXPECT_EQ(c.check(k, Property::kConsistency).verdict, Verdict::kNoViolationFound);
  }
}

TEST(Properties, RevalidationRejectsForgedWitnesses) {
  Scenario s = fixture("ex1");
  PropertyReport r = check(s, ExplanationKind::kWaxp, Property::kIrreducibility);
  ASSERT_TRUE(r.witness);
  r.witness->explanations = {pa(s.theory, "f1=1"), pa(s.theory, "")};
  EXPECT_FALSE(revalidate(s, r));
}

TEST(Properties, NeedsAClassifier) {
  Scenario s = fixture("ex6");
  s.classifier.reset();
  EXPECT_THROW(PropertyChecker{s}, PreconditionError);
}

TEST(Table2, FixturesAndRandomScenariosReproduceTheTable) {
  std::vector<Scenario> scenarios;
  for (const std::string& name : list_fixtures(CPIXP_FIXTURES_DIR)) {
    scenarios.push_back(fixture(name));
  }
  for (Scenario& s : random_scenarios(50, 1)) scenarios.push_back(std::move(s));
  Table2Result table = table2_matrix(scenarios);
  ASSERT_EQ(table.cells.size(), 77u);
  for (const Table2Cell& c : table.cells) {
    EXPECT_TRUE(c.matches()) << property_name(c.property) << " / " << kind_name(c.kind);
    if (c.observed == Verdict::kViolated) EXPECT_TRUE(c.witness_revalidated);
  }
  EXPECT_TRUE(table.matches());
}
