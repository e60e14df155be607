#pragma once

#include <span>
#include <vector>

#include "cpixp/constraints.hpp"
#include "cpixp/coverage.hpp"
#include "cpixp/theory.hpp"

namespace cpixp {

// The representative picked for one coverage class of minimal CPI-Xp's:
// deletion from the class closure L, last feature first, keeping
// weak(E) and implies(E, L). `weak` and `implies` are the class's predicates.
template <typename Weak, typename Implies>
PartialAssignment closure_representative(const PartialAssignment& closure, Weak weak,
                                         Implies implies) {
  PartialAssignment e = closure;
  std::vector<Literal> order(closure.begin(), closure.end());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    PartialAssignment candidate = e.without(*it);
    if (weak(candidate) && implies(candidate, closure)) e = std::move(candidate);
  }
  return e;
}

enum class Family {
  kWeak,            // E forces the target class on its coverage
  kMinimal,         // subset-minimal weak sets
  kUnsubsumed,      // weak sets whose coverage no weak subset of x strictly contains
  kMinimalUnsubsumed,
  kRepresentative,  // one closure representative per coverage class of the above
};

// Brute force over every subset E of x. Coverage is taken in `space`, whose
// i-th member has class labels[i]. When `c` is given, E must also satisfy it.
// Results are sorted by cardinality, then lexicographically.
std::vector<PartialAssignment> enumerate_subsets(const InstanceSet& space,
                                                 std::span<const ClassIndex> labels,
                                                 const Instance& x, ClassIndex target,
                                                 Family family, std::size_t subset_budget,
                                                 const ConstraintSet* c = nullptr);

}  // namespace cpixp
