#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cpixp/classifier.hpp"
#include "cpixp/constraints.hpp"
#include "cpixp/coverage.hpp"
#include "cpixp/enumeration.hpp"
#include "cpixp/kinds.hpp"
#include "cpixp/theory.hpp"

namespace cpixp {

// Entailment queries over a fixed (theory, C, classifier).
class EntailmentOracle {
 public:
  virtual ~EntailmentOracle() = default;
  // Every feasible instance extending `a` has class `c`.
  virtual bool weak_axpc(const PartialAssignment& a, ClassIndex c) const = 0;
  // Every feasible instance extending `a` also extends `b`.
  virtual bool implies(const PartialAssignment& a, const PartialAssignment& b) const = 0;
};

// Answers queries by scanning the materialized feasible space.
class ExhaustiveOracle : public EntailmentOracle {
 public:
  ExhaustiveOracle(const ConstraintSet& c, const Classifier& k,
                   std::uint64_t budget = kDefaultSpaceBudget);

  bool weak_axpc(const PartialAssignment& a, ClassIndex c) const override;
  bool implies(const PartialAssignment& a, const PartialAssignment& b) const override;

  std::size_t size() const { return labels_.size(); }

 private:
  bool row_extends(std::size_t row, const PartialAssignment& a) const;

  std::size_t width_;
  std::vector<ValueIndex> rows_;  // row-major, width_ values per row
  std::vector<ClassIndex> labels_;
};

// Explanations quantified over the whole feature space F (wAXp, AXp) or the
// feasible space F[C] (everything else).
class ExactExplainer {
 public:
  // Throws ConstantClassifierError when k is constant over F[C].
  ExactExplainer(ConstraintSet c, Classifier k, Budgets budgets = {});
  // Same, with caller-provided oracles for F and F[C].
  ExactExplainer(ConstraintSet c, Classifier k, std::shared_ptr<const EntailmentOracle> full,
                 std::shared_ptr<const EntailmentOracle> feasible, Budgets budgets = {});

  const Theory& theory() const { return constraints_.theory(); }
  const ConstraintSet& constraints() const { return constraints_; }
  const Classifier& classifier() const { return classifier_; }
  const Budgets& budgets() const { return budgets_; }
  const InstanceSet& full_space() const { return *full_space_; }
  const InstanceSet& feasible_space() const { return *feasible_space_; }
  // The reference space of a kind: F for wAXp/AXp, F[C] otherwise.
  const InstanceSet& reference_space(ExplanationKind kind) const;

  bool is_waxp(const PartialAssignment& e, const Instance& x) const;
  bool is_waxpc(const PartialAssignment& e, const Instance& x) const;
  bool is_cpi_xp(const PartialAssignment& e, const Instance& x) const;

  ExplanationResult find_axp(const Instance& x) const;
  ExplanationResult find_axpc(const Instance& x) const;

  // Literals of v entailed by E under C.
  PartialAssignment closure_literals(const Instance& v, const PartialAssignment& e) const;

  // A wAXpc E' with inf <= E' <= sup strictly subsuming E in F[C], or nullopt.
  // `calls`, when given, is incremented per oracle query.
  std::optional<PartialAssignment> cpi_counterexample(const PartialAssignment& e,
                                                      const PartialAssignment& inf,
                                                      const PartialAssignment& sup,
                                                      ClassIndex target,
                                                      std::size_t* calls = nullptr) const;

  ExplanationResult find_cpi_xp(const Instance& v) const;
  // Throws PreconditionError unless E is a CPI-Xp of v.
  ExplanationResult minimize_cpi(const PartialAssignment& e, const Instance& v) const;
  ExplanationResult find_pcpi_xp(const Instance& v) const;

  // Single-answer search for any non-dataset kind. The weak kinds return x.
  ExplanationResult find(ExplanationKind kind, const Instance& x) const;

  // Every explanation of the kind for x, by brute force over the subsets of
  // x, sorted by cardinality then lexicographically. pCPI yields one
  // representative per coverage class.
  std::vector<PartialAssignment> enumerate_all(ExplanationKind kind, const Instance& x) const;

 private:
  void require_instance(const Instance& x, bool feasible) const;
  PartialAssignment closure(const Instance& v, const PartialAssignment& e,
                            std::size_t* calls) const;
  // Deletion from `start` (highest feature first) keeping weak(E) and
  // implies(E, anchor).
  PartialAssignment delete_towards(const PartialAssignment& start,
                                   const PartialAssignment& anchor, ClassIndex target,
                                   std::size_t* calls) const;

  ConstraintSet constraints_;
  Classifier classifier_;
  Budgets budgets_;
  std::shared_ptr<const EntailmentOracle> full_oracle_;
  std::shared_ptr<const EntailmentOracle> feasible_oracle_;
  std::shared_ptr<const InstanceSet> full_space_;
  std::shared_ptr<const InstanceSet> feasible_space_;
};

}  // namespace cpixp
