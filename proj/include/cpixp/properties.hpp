#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpixp/dataset_engine.hpp"
#include "cpixp/exact_engine.hpp"
#include "cpixp/kinds.hpp"
#include "cpixp/scenario.hpp"

namespace cpixp {

enum class Property {
  kSuccess,
  kNonTriviality,
  kIrreducibility,
  kCoherence,
  kConsistency,
  kIndependence,
  kNonEquivalence,
};

inline constexpr std::array<Property, 7> kAllProperties = {
    Property::kSuccess,     Property::kNonTriviality, Property::kIrreducibility,
    Property::kCoherence,   Property::kConsistency,   Property::kIndependence,
    Property::kNonEquivalence,
};

std::string_view property_name(Property p);

enum class Verdict { kNoViolationFound, kViolated };

// The concrete objects a violation is made of. Which slots are used depends on
// the property; `note` says how to read them.
struct Witness {
  std::vector<Instance> instances;
  std::vector<PartialAssignment> explanations;
  std::string note;
};

struct PropertyReport {
  std::string scenario;
  ExplanationKind kind = ExplanationKind::kWaxp;
  Property property = Property::kSuccess;
  Verdict verdict = Verdict::kNoViolationFound;
  std::optional<Witness> witness;
};

// Exhaustive property checks of one explainer on one scenario. Exact kinds
// are explained on every instance of F[C], dataset kinds on every row of T.
class PropertyChecker {
 public:
  // The scenario needs a classifier. Exact kinds are skipped when it is
  // constant over F[C]; dataset kinds when there is no dataset.
  explicit PropertyChecker(const Scenario& scenario, Budgets budgets = {});

  bool supports(ExplanationKind kind) const;
  PropertyReport check(ExplanationKind kind, Property property) const;

  const Scenario& scenario() const { return *scenario_; }
  // The instances explained for a kind, and their explanation sets.
  const std::vector<Instance>& domain(ExplanationKind kind) const;
  const std::vector<std::vector<PartialAssignment>>& explanations(ExplanationKind kind) const;

 private:
  PropertyReport success(ExplanationKind kind) const;
  PropertyReport non_triviality(ExplanationKind kind) const;
  PropertyReport irreducibility(ExplanationKind kind) const;
  PropertyReport coherence(ExplanationKind kind) const;
  PropertyReport consistency(ExplanationKind kind) const;
  PropertyReport independence(ExplanationKind kind) const;
  PropertyReport non_equivalence(ExplanationKind kind) const;

  PropertyReport report(ExplanationKind kind, Property p) const;
  const InstanceSet& irreducibility_space(ExplanationKind kind) const;
  const InstanceSet& equivalence_space(ExplanationKind kind) const;

  std::shared_ptr<const Scenario> scenario_;
  Budgets budgets_;
  std::unique_ptr<ExactExplainer> exact_;
  std::unique_ptr<DatasetExplainer> sampled_;
  std::shared_ptr<const InstanceSet> full_;
  std::shared_ptr<const InstanceSet> feasible_;
  std::vector<Instance> rows_;

  mutable std::mutex mutex_;
  mutable std::map<ExplanationKind, std::vector<std::vector<PartialAssignment>>> cache_;
};

// Re-checks a violated report against the definitions with plain scans,
// without the engines or coverage bitsets.
bool revalidate(const Scenario& scenario, const PropertyReport& report,
                const Budgets& budgets = {});

inline constexpr std::array<ExplanationKind, 11> kTable2Columns = {
    ExplanationKind::kWaxp,  ExplanationKind::kAxp,   ExplanationKind::kAxpc,
    ExplanationKind::kCpi,   ExplanationKind::kMcpi,  ExplanationKind::kPcpi,
    ExplanationKind::kDCpi,  ExplanationKind::kDMcpi, ExplanationKind::kDPcpi,
    ExplanationKind::kDWaxp, ExplanationKind::kDAxp,
};

// The published verdict: true when the explainer satisfies the property.
bool table2_expected(ExplanationKind kind, Property property);

struct Table2Cell {
  ExplanationKind kind;
  Property property;
  bool expected = true;
  Verdict observed = Verdict::kNoViolationFound;
  std::size_t scenarios_checked = 0;
  std::optional<PropertyReport> witness;  // first violation found
  bool witness_revalidated = false;
  bool matches() const {
    return expected == (observed == Verdict::kNoViolationFound) &&
           (observed == Verdict::kNoViolationFound || witness_revalidated);
  }
};

struct Table2Result {
  std::vector<Table2Cell> cells;  // row-major: property, then column
  bool matches() const;
  const Table2Cell& cell(Property p, ExplanationKind k) const;
};

Table2Result table2_matrix(const std::vector<Scenario>& scenarios, const Budgets& budgets = {});

}  // namespace cpixp
