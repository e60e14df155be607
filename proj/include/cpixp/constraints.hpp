#pragma once

#include <optional>
#include <vector>

#include "cpixp/expression.hpp"
#include "cpixp/theory.hpp"

namespace cpixp {

// A forbidden partial assignment. Anything containing it is infeasible.
struct Nogood {
  PartialAssignment forbidden;
};

// premise -> conclusion: every feasible instance extending the premise also
// extends the conclusion.
struct Implication {
  PartialAssignment premise;
  PartialAssignment conclusion;
};

// For each (f, v) in the conclusion and each other value w of f, the nogood
// premise + {(f, w)}. Throws StructuralError on empty sides or a shared feature.
std::vector<Nogood> compile_implication(const Implication& imp, const Theory& theory);

// One nogood per full instance falsifying `expr`.
std::vector<Nogood> compile_expression(const Expression& expr, const Theory& theory,
                                       std::uint64_t budget = kDefaultSpaceBudget);

class ConstraintSet {
 public:
  // The empty constraint set.
  explicit ConstraintSet(Theory theory);
  // Throws UnsatisfiableConstraintsError when no instance is feasible.
  ConstraintSet(Theory theory, std::vector<Nogood> nogoods,
                std::vector<Implication> implications = {});

  const Theory& theory() const { return theory_; }
  // All nogoods, including those compiled from implications.
  const std::vector<Nogood>& nogoods() const { return nogoods_; }
  const std::vector<Implication>& implications() const { return implications_; }
  bool empty() const { return nogoods_.empty(); }

  bool satisfies(const PartialAssignment& e) const;
  bool satisfies(const Instance& x) const;
  // First nogood contained in x, if any.
  std::optional<Nogood> violated_by(const Instance& x) const;

  // Throws InfeasibleInstanceError naming the violated nogood.
  void require_feasible(const Instance& x) const;

 private:
  Theory theory_;
  std::vector<Nogood> nogoods_;
  std::vector<Implication> implications_;
};

// F[C] in lexicographic order. Throws CapacityError when |F| exceeds budget.
std::vector<Instance> feasible_space(const ConstraintSet& c,
                                     std::uint64_t budget = kDefaultSpaceBudget);

// E -> E' is a dependency of C: both non-empty, distinct, and every feasible
// instance extending E extends E'.
bool is_dependency(const ConstraintSet& c, const PartialAssignment& e, const PartialAssignment& ep,
                   std::uint64_t budget = kDefaultSpaceBudget);

}  // namespace cpixp
