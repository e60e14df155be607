#include "cpixp/constraints.hpp"

#include "cpixp/errors.hpp"
#include "cpixp/format.hpp"

namespace cpixp {
namespace {

bool contains_all(const PartialAssignment& forbidden, const Instance& x) {
  for (const Literal& l : forbidden) {
    if (x[l.feature] != l.value) return false;
  }
  return true;
}

// Depth-first search for one feasible instance, pruning on partial nogood hits.
bool has_feasible_instance(const Theory& theory, const std::vector<Nogood>& nogoods) {
  const std::size_t n = theory.num_features();
  std::vector<ValueIndex> values(n, 0);
  std::vector<Literal> assigned;

  auto blocked = [&](FeatureId depth) {
    // A nogood is decided once all its features are below `depth`.
    for (const Nogood& g : nogoods) {
      const Literal& last = *(g.forbidden.end() - 1);
      if (last.feature + 1 != depth) continue;
      bool hit = true;
      for (const Literal& l : g.forbidden) {
        if (values[l.feature] != l.value) {
          hit = false;
          break;
        }
      }
      if (hit) return true;
    }
    return false;
  };

  std::function<bool(FeatureId)> search = [&](FeatureId f) {
    if (f == n) return true;
    for (ValueIndex v = 0; v < theory.domain_size(f); ++v) {
      values[f] = v;
      if (!blocked(f + 1) && search(f + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace

std::vector<Nogood> compile_implication(const Implication& imp, const Theory& theory) {
  validate(theory, imp.premise);
  validate(theory, imp.conclusion);
  if (imp.premise.empty() || imp.conclusion.empty()) {
    throw StructuralError("implication sides must be non-empty");
  }
  for (const Literal& l : imp.conclusion) {
    if (imp.premise.value_of(l.feature)) {
      throw StructuralError("implication premise and conclusion share feature '" +
                            theory.feature(l.feature).name + "'");
    }
  }
  std::vector<Nogood> out;
  for (const Literal& l : imp.conclusion) {
    for (ValueIndex w = 0; w < theory.domain_size(l.feature); ++w) {
      if (w == l.value) continue;
      out.push_back({*imp.premise.merge(PartialAssignment{{l.feature, w}})});
    }
  }
  return out;
}

std::vector<Nogood> compile_expression(const Expression& expr, const Theory& theory,
                                       std::uint64_t budget) {
  std::vector<Nogood> out;
  for (const Instance& x : FeatureSpace(theory, budget)) {
    if (!expr.evaluate(x)) out.push_back({PartialAssignment::of(x)});
  }
  return out;
}

ConstraintSet::ConstraintSet(Theory theory) : theory_(std::move(theory)) {}

ConstraintSet::ConstraintSet(Theory theory, std::vector<Nogood> nogoods,
                             std::vector<Implication> implications)
    : theory_(std::move(theory)), nogoods_(std::move(nogoods)),
      implications_(std::move(implications)) {
  for (const Nogood& g : nogoods_) {
    if (g.forbidden.empty()) throw StructuralError("nogoods must be non-empty");
    validate(theory_, g.forbidden);
  }
  for (const Implication& imp : implications_) {
    for (Nogood& g : compile_implication(imp, theory_)) nogoods_.push_back(std::move(g));
  }
  if (!has_feasible_instance(theory_, nogoods_)) {
    throw UnsatisfiableConstraintsError("the constraints admit no feasible instance");
  }
}

bool ConstraintSet::satisfies(const PartialAssignment& e) const {
  for (const Nogood& g : nogoods_) {
    if (g.forbidden.is_subset_of(e)) return false;
  }
  return true;
}

bool ConstraintSet::satisfies(const Instance& x) const {
  for (const Nogood& g : nogoods_) {
    if (contains_all(g.forbidden, x)) return false;
  }
  return true;
}

std::optional<Nogood> ConstraintSet::violated_by(const Instance& x) const {
  for (const Nogood& g : nogoods_) {
    if (contains_all(g.forbidden, x)) return g;
  }
  return std::nullopt;
}

void ConstraintSet::require_feasible(const Instance& x) const {
  validate(theory_, x);
  if (auto g = violated_by(x)) {
    std::string rendered = to_string(theory_, g->forbidden);
    throw InfeasibleInstanceError(
        "instance " + to_string(theory_, x) + " violates nogood " + rendered, rendered);
  }
}

std::vector<Instance> feasible_space(const ConstraintSet& c, std::uint64_t budget) {
  std::vector<Instance> out;
  for (const Instance& x : FeatureSpace(c.theory(), budget)) {
    if (c.satisfies(x)) out.push_back(x);
  }
  return out;
}

bool is_dependency(const ConstraintSet& c, const PartialAssignment& e, const PartialAssignment& ep,
                   std::uint64_t budget) {
  if (e.empty() || ep.empty() || e == ep) return false;
  for (const Instance& x : FeatureSpace(c.theory(), budget)) {
    if (c.satisfies(x) && extends(e, x) && !extends(ep, x)) return false;
  }
  return true;
}

}  // namespace cpixp
