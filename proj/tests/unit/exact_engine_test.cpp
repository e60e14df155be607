#include <gtest/gtest.h>

#include "cpixp/errors.hpp"
#include "cpixp/exact_engine.hpp"
#include "cpixp/generators.hpp"
#include "support/fixtures.hpp"

using namespace cpixp;
using testing_support::fixture;
using testing_support::inst;
using testing_support::pa;
using testing_support::sets;

namespace {

ExactExplainer engine(const Scenario& s) { return ExactExplainer(s.constraints, *s.classifier); }

// Counts queries before delegating.
class CountingOracle : public EntailmentOracle {
 public:
  explicit CountingOracle(std::shared_ptr<const EntailmentOracle> inner) : inner_(inner) {}
  bool weak_axpc(const PartialAssignment& a, ClassIndex c) const override {
    ++calls;
    return inner_->weak_axpc(a, c);
  }
  bool implies(const PartialAssignment& a, const PartialAssignment& b) const override {
    ++calls;
    return inner_->implies(a, b);
  }
  mutable std::size_t calls = 0;

 private:
  std::shared_ptr<const EntailmentOracle> inner_;
};

}  // namespace

TEST(Example1, WeakAndMinimalExplanations) {
  Scenario s = fixture("ex1");
  ExactExplainer e = engine(s);
  const Theory& t = s.theory;
  Instance x4 = inst(t, "f1=1,f2=1");
  EXPECT_EQ(e.enumerate_all(ExplanationKind::kWaxp, x4),
            sets(t, {"f1=1", "f2=1", "f1=1,f2=1"}));
  EXPECT_EQ(e.enumerate_all(ExplanationKind::kAxp, x4), sets(t, {"f1=1", "f2=1"}));
  EXPECT_EQ(e.enumerate_all(ExplanationKind::kAxp, inst(t, "f1=0,f2=0")),
            sets(t, {"f1=0,f2=0"}));
  EXPECT_EQ(e.find_axp(x4).explanation, pa(t, "f1=1"));
  EXPECT_EQ(e.find_axp(inst(t, "f1=0,f2=0")).explanation, pa(t, "f1=0,f2=0"));
}

TEST(Example1, ConstrainedExplanations) {
  Scenario s = fixture("ex1c");
  ExactExplainer e = engine(s);
  const Theory& t = s.theory;
  Instance x1 = inst(t, "f1=0,f2=0");
  EXPECT_EQ(e.enumerate_all(ExplanationKind::kWaxpc, x1), sets(t, {"f2=0", "f1=0,f2=0"}));
  EXPECT_EQ(e.enumerate_all(ExplanationKind::kAxpc, x1), sets(t, {"f2=0"}));
  EXPECT_EQ(e.find_axpc(x1).explanation, pa(t, "f2=0"));
  EXPECT_TRUE(e.is_waxpc(pa(t, "f2=0"), x1));
  EXPECT_FALSE(e.is_waxp(pa(t, "f2=0"), x1));
}

TEST(Example2, SoleCoverageExplanation) {
  Scenario s = fixture("ex2");
  ExactExplainer e = engine(s);
  const Theory& t = s.theory;
  Instance x1 = inst(t, "f1=0,f2=0");
  EXPECT_EQ(e.enumerate_all(ExplanationKind::kAxp, x1), sets(t, {"f1=0"}));
  EXPECT_EQ(e.enumerate_all(ExplanationKind::kAxpc, x1), sets(t, {"f1=0", "f2=0"}));
  EXPECT_EQ(e.enumerate_all(ExplanationKind::kCpi, x1), sets(t, {"f1=0"}));
  EXPECT_EQ(e.find_cpi_xp(x1).explanation, pa(t, "f1=0"));
  EXPECT_TRUE(e.is_cpi_xp(pa(t, "f1=0"), x1));
  EXPECT_FALSE(e.is_cpi_xp(pa(t, "f2=0"), x1));
}

TEST(Example3, ImplicationLeavesOneCoverageExplanation) {
  Scenario s = fixture("ex3");
  ExactExplainer e = engine(s);
  const Theory& t = s.theory;
  Instance x3 = inst(t, "f1=1,f2=1");
  EXPECT_EQ(e.enumerate_all(ExplanationKind::kAxpc, x3), sets(t, {"f1=1", "f2=1"}));
  EXPECT_EQ(e.enumerate_all(ExplanationKind::kCpi, x3), sets(t, {"f1=1"}));
  EXPECT_EQ(e.find_cpi_xp(x3).explanation, pa(t, "f1=1"));
  EXPECT_EQ(e.closure_literals(x3, pa(t, "f2=1")), pa(t, "f1=1,f2=1"));
  EXPECT_EQ(e.closure_literals(x3, pa(t, "f1=1")), pa(t, "f1=1"));
}

TEST(Example3, CounterexampleSearchFindsWiderCoverage) {
  Scenario s = fixture("ex3");
  ExactExplainer e = engine(s);
  const Theory& t = s.theory;
  Instance x3 = inst(t, "f1=1,f2=1");
  PartialAssignment e2 = pa(t, "f2=1");
  auto found = e.cpi_counterexample(e2, {}, e.closure_literals(x3, e2), 1);
  ASSERT_TRUE(found);
  EXPECT_EQ(*found, pa(t, "f1=1"));
  EXPECT_FALSE(e.cpi_counterexample(pa(t, "f1=1"), {}, pa(t, "f1=1"), 1));
}

TEST(Example4, SingleCoverageExplanationOfMajority) {
  for (std::size_t n : {3, 5, 7}) {
    Scenario s = majority_scenario(n);
    ExactExplainer e = engine(s);
    Instance ones(std::vector<ValueIndex>(n, 1));
    PartialAssignment last{{static_cast<FeatureId>(n - 1), 1}};
    EXPECT_EQ(e.enumerate_all(ExplanationKind::kCpi, ones), std::vector{last}) << n;
    ExplanationResult r = e.find_cpi_xp(ones);
    EXPECT_EQ(r.explanation, last);
    EXPECT_LE(r.iterations, n);
  }
}

TEST(Example4, FixturesMatchGenerator) {
  for (std::size_t n : {3, 5, 7}) {
    Scenario f = fixture("ex4-n" + std::to_string(n));
    Scenario g = majority_scenario(n);
    EXPECT_EQ(feasible_space(f.constraints), feasible_space(g.constraints));
    for (const Instance& x : enumerate_feature_space(f.theory)) {
      EXPECT_EQ((*f.classifier)(x), (*g.classifier)(x));
    }
  }
}

TEST(Example5, MinimalAndPreferredExplanations) {
  Scenario s = fixture("ex5");
  ExactExplainer e = engine(s);
  const Theory& t = s.theory;
  Instance x = inst(t, "f1=1,f2=1,f3=1");
  EXPECT_EQ(e.enumerate_all(ExplanationKind::kMcpi, x), sets(t, {"f3=1", "f1=1,f2=1"}));
  auto pcpi = e.enumerate_all(ExplanationKind::kPcpi, x);
  ASSERT_EQ(pcpi.size(), 1u);
  EXPECT_EQ(e.find_pcpi_xp(x).explanation, pcpi.front());
  PartialAssignment both = pa(t, "f1=1,f2=1,f3=1");
  EXPECT_TRUE(e.is_cpi_xp(both, x));
  auto mcpi = e.enumerate_all(ExplanationKind::kMcpi, x);
  EXPECT_EQ(std::count(mcpi.begin(), mcpi.end(), both), 0);
}

TEST(MinimizeCpi, RejectsNonCpi) {
  Scenario s = fixture("ex2");
  ExactExplainer e = engine(s);
  Instance x1 = inst(s.theory, "f1=0,f2=0");
  EXPECT_THROW(e.minimize_cpi(pa(s.theory, "f2=0"), x1), PreconditionError);
}

TEST(MinimizeCpi, StaysWithinTwoNCalls) {
  Scenario s = fixture("ex5");
  ExactExplainer e = engine(s);
  Instance x = inst(s.theory, "f1=1,f2=1,f3=1");
  ExplanationResult r = e.minimize_cpi(PartialAssignment::of(x), x);
  EXPECT_LE(r.oracle_calls, 2 * x.size());
  auto mcpi = e.enumerate_all(ExplanationKind::kMcpi, x);
  EXPECT_NE(std::find(mcpi.begin(), mcpi.end(), r.explanation), mcpi.end());
}

TEST(ExactExplainer, RejectsInfeasibleAndMalformedInstances) {
  Scenario s = fixture("ex1c");
  ExactExplainer e = engine(s);
  EXPECT_THROW(e.find_axpc(inst(s.theory, "f1=1,f2=0")), InfeasibleInstanceError);
  EXPECT_THROW(e.find_cpi_xp(Instance({0, 0, 0})), StructuralError);
  EXPECT_THROW(e.is_waxpc(PartialAssignment{{0, 1}}, inst(s.theory, "f1=0,f2=0")),
               PreconditionError);
}

TEST(ExactExplainer, ConstantClassifierIsRejected) {
  Theory t({{"f1", {"0", "1"}}, {"f2", {"0", "1"}}}, {"0", "1"});
  ConstraintSet c(t, {{{{0, 0}}}});
  EXPECT_THROW(ExactExplainer(c, Classifier::from_expression(t, "f1=1")), ConstantClassifierError);
}

TEST(ExactExplainer, OverBudgetIsCapacityError) {
  Scenario s = majority_scenario(7);
  EXPECT_THROW(ExactExplainer(s.constraints, *s.classifier, Budgets{64, 22}), CapacityError);
  ExactExplainer e(s.constraints, *s.classifier, Budgets{1 << 10, 4});
  EXPECT_THROW(e.enumerate_all(ExplanationKind::kCpi, Instance(std::vector<ValueIndex>(7, 1))),
               CapacityError);
}

TEST(ExactExplainer, CustomOraclesAreUsed) {
  Scenario s = fixture("ex3");
  auto full = std::make_shared<CountingOracle>(
      std::make_shared<ExhaustiveOracle>(ConstraintSet(s.theory), *s.classifier));
  auto feasible = std::make_shared<CountingOracle>(
      std::make_shared<ExhaustiveOracle>(s.constraints, *s.classifier));
  ExactExplainer e(s.constraints, *s.classifier, full, feasible);
  Instance x3 = inst(s.theory, "f1=1,f2=1");
  ExplanationResult r = e.find_cpi_xp(x3);
  EXPECT_EQ(r.explanation, pa(s.theory, "f1=1"));
  EXPECT_EQ(feasible->calls, r.oracle_calls);
  EXPECT_EQ(full->calls, 0u);
  e.find_axp(x3);
  EXPECT_EQ(full->calls, x3.size());
}

TEST(ExactExplainer, WeakKindsReturnTheInstance) {
  Scenario s = fixture("ex1");
  ExactExplainer e = engine(s);
  Instance x = inst(s.theory, "f1=1,f2=0");
  EXPECT_EQ(e.find(ExplanationKind::kWaxp, x).explanation, PartialAssignment::of(x));
  EXPECT_EQ(e.find(ExplanationKind::kWaxpc, x).explanation, PartialAssignment::of(x));
  EXPECT_THROW(e.find(ExplanationKind::kDAxp, x), PreconditionError);
}

TEST(ExactExplainer, ReferenceSpaces) {
  Scenario s = fixture("ex1c");
  ExactExplainer e = engine(s);
  EXPECT_EQ(e.reference_space(ExplanationKind::kAxp).size(), 4u);
  EXPECT_EQ(e.reference_space(ExplanationKind::kAxpc).size(), 3u);
  EXPECT_EQ(e.reference_space(ExplanationKind::kPcpi).size(), 3u);
}
