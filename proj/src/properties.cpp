#include "cpixp/properties.hpp"

#include <algorithm>
#include <set>

#include "cpixp/errors.hpp"

namespace cpixp {
namespace {

struct Origin {
  PartialAssignment explanation;
  Instance instance;
};

}  // namespace

std::string_view property_name(Property p) {
  switch (p) {
    case Property::kSuccess: return "Success";
    case Property::kNonTriviality: return "Non-Triviality";
    case Property::kIrreducibility: return "Irreducibility";
    case Property::kCoherence: return "Coherence";
    case Property::kConsistency: return "Consistency";
    case Property::kIndependence: return "Independence";
    case Property::kNonEquivalence: return "Non-Equivalence";
  }
  return "?";
}

PropertyChecker::PropertyChecker(const Scenario& scenario, Budgets budgets)
    : scenario_(std::make_shared<const Scenario>(scenario)), budgets_(budgets) {
  if (!scenario_->classifier) {
    throw PreconditionError("property checks need a classifier (scenario '" + scenario_->name +
                            "')");
  }
  const Theory& theory = scenario_->theory;
  std::vector<Instance> all = enumerate_feature_space(theory, budgets_.space);
  std::vector<Instance> feasible;
  for (const Instance& x : all) {
    if (scenario_->constraints.satisfies(x)) feasible.push_back(x);
  }
  full_ = std::make_shared<InstanceSet>(theory, std::move(all));
  feasible_ = std::make_shared<InstanceSet>(theory, std::move(feasible));
  try {
    exact_ = std::make_unique<ExactExplainer>(scenario_->constraints, *scenario_->classifier,
                                              budgets_);
  } catch (const ConstantClassifierError&) {
    exact_.reset();
  }
  if (scenario_->dataset) {
    sampled_ = std::make_unique<DatasetExplainer>(*scenario_->dataset, budgets_);
    rows_ = scenario_->dataset->instances();
  }
}

bool PropertyChecker::supports(ExplanationKind kind) const {
  return is_dataset_kind(kind) ? sampled_ != nullptr : exact_ != nullptr;
}

const std::vector<Instance>& PropertyChecker::domain(ExplanationKind kind) const {
  return is_dataset_kind(kind) ? rows_ : feasible_->members();
}

const std::vector<std::vector<PartialAssignment>>& PropertyChecker::explanations(
    ExplanationKind kind) const {
  if (!supports(kind)) {
    throw PreconditionError("scenario '" + scenario_->name + "' cannot run kind '" +
                            std::string(kind_name(kind)) + "'");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(kind);
  if (it != cache_.end()) return it->second;
  std::vector<std::vector<PartialAssignment>> sets;
  for (const Instance& x : domain(kind)) {
    sets.push_back(is_dataset_kind(kind) ? sampled_->enumerate_all_d(kind, x)
                                         : exact_->enumerate_all(kind, x));
  }
  return cache_.emplace(kind, std::move(sets)).first->second;
}

const InstanceSet& PropertyChecker::irreducibility_space(ExplanationKind kind) const {
  return is_unconstrained_kind(kind) ? *full_ : *feasible_;
}

const InstanceSet& PropertyChecker::equivalence_space(ExplanationKind kind) const {
  if (is_dataset_kind(kind)) return sampled_->rows();
  return is_unconstrained_kind(kind) ? *full_ : *feasible_;
}

PropertyReport PropertyChecker::report(ExplanationKind kind, Property p) const {
  return PropertyReport{scenario_->name, kind, p, Verdict::kNoViolationFound, std::nullopt};
}

PropertyReport PropertyChecker::check(ExplanationKind kind, Property property) const {
  switch (property) {
    case Property::kSuccess: return success(kind);
    case Property::kNonTriviality: return non_triviality(kind);
    case Property::kIrreducibility: return irreducibility(kind);
    case Property::kCoherence: return coherence(kind);
    case Property::kConsistency: return consistency(kind);
    case Property::kIndependence: return independence(kind);
    case Property::kNonEquivalence: return non_equivalence(kind);
  }
  return report(kind, property);
}

PropertyReport PropertyChecker::success(ExplanationKind kind) const {
  PropertyReport r = report(kind, Property::kSuccess);
  const auto& sets = explanations(kind);
  const auto& xs = domain(kind);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (sets[i].empty()) {
      r.verdict = Verdict::kViolated;
      r.witness = Witness{{xs[i]}, {}, "instance without any explanation"};
      return r;
    }
  }
  return r;
}

PropertyReport PropertyChecker::non_triviality(ExplanationKind kind) const {
  PropertyReport r = report(kind, Property::kNonTriviality);
  const auto& sets = explanations(kind);
  const auto& xs = domain(kind);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (const PartialAssignment& e : sets[i]) {
      if (e.empty()) {
        r.verdict = Verdict::kViolated;
        r.witness = Witness{{xs[i]}, {e}, "empty explanation"};
        return r;
      }
    }
  }
  return r;
}

PropertyReport PropertyChecker::irreducibility(ExplanationKind kind) const {
  PropertyReport r = report(kind, Property::kIrreducibility);
  const auto& sets = explanations(kind);
  const auto& xs = domain(kind);
  const InstanceSet& space = irreducibility_space(kind);
  const Classifier& k = *scenario_->classifier;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Bits other(space.size());
    const ClassIndex c = k(xs[i]);
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (k(space[j]) != c) other.set(j);
    }
    for (const PartialAssignment& e : sets[i]) {
      for (const Literal& l : e) {
        PartialAssignment reduced = e.without(l);
        if (!cov(reduced, space).bits.intersects(other)) {
          r.verdict = Verdict::kViolated;
          r.witness = Witness{{xs[i]}, {e, reduced},
                              "dropping one literal leaves no instance of another class"};
          return r;
        }
      }
    }
  }
  return r;
}

PropertyReport PropertyChecker::coherence(ExplanationKind kind) const {
  PropertyReport r = report(kind, Property::kCoherence);
  const auto& sets = explanations(kind);
  const auto& xs = domain(kind);
  const Classifier& k = *scenario_->classifier;
  // Distinct explanations per class, each with the first instance it explains.
  std::map<ClassIndex, std::vector<Origin>> by_class;
  std::map<ClassIndex, std::set<PartialAssignment>> seen;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const ClassIndex c = k(xs[i]);
    for (const PartialAssignment& e : sets[i]) {
      if (seen[c].insert(e).second) by_class[c].push_back({e, xs[i]});
    }
  }
  for (auto a = by_class.begin(); a != by_class.end(); ++a) {
    std::vector<Bits> covers;
    for (const Origin& o : a->second) covers.push_back(cov(o.explanation, *feasible_).bits);
    for (auto b = std::next(a); b != by_class.end(); ++b) {
      for (const Origin& o2 : b->second) {
        const Bits other = cov(o2.explanation, *feasible_).bits;
        for (std::size_t i = 0; i < covers.size(); ++i) {
          const Bits both = covers[i] & other;
          if (both.none()) continue;
          const Origin& o1 = a->second[i];
          r.verdict = Verdict::kViolated;
          r.witness = Witness{{o1.instance, o2.instance, (*feasible_)[both.find_first()]},
                              {o1.explanation, o2.explanation},
                              "explanations of two classes both apply to a feasible instance"};
          return r;
        }
      }
    }
  }
  return r;
}

PropertyReport PropertyChecker::consistency(ExplanationKind kind) const {
  PropertyReport r = report(kind, Property::kConsistency);
  const auto& sets = explanations(kind);
  const auto& xs = domain(kind);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (const PartialAssignment& e : sets[i]) {
      if (!scenario_->constraints.satisfies(e)) {
        r.verdict = Verdict::kViolated;
        r.witness = Witness{{xs[i]}, {e}, "explanation violates a constraint"};
        return r;
      }
    }
  }
  return r;
}

PropertyReport PropertyChecker::independence(ExplanationKind kind) const {
  PropertyReport r = report(kind, Property::kIndependence);
  const auto& sets = explanations(kind);
  const auto& xs = domain(kind);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Bits> covers;
    for (const PartialAssignment& e : sets[i]) covers.push_back(cov(e, *feasible_).bits);
    for (std::size_t a = 0; a < covers.size(); ++a) {
      if (sets[i][a].empty()) continue;
      for (std::size_t b = 0; b < covers.size(); ++b) {
        if (a == b || sets[i][b].empty()) continue;
        // a -> b is a dependency but b -> a is not.
        if (covers[a].is_proper_subset_of(covers[b])) {
          r.verdict = Verdict::kViolated;
          r.witness = Witness{{xs[i]}, {sets[i][a], sets[i][b]},
                              "first explanation entails the second, not conversely"};
          return r;
        }
      }
    }
  }
  return r;
}

PropertyReport PropertyChecker::non_equivalence(ExplanationKind kind) const {
  PropertyReport r = report(kind, Property::kNonEquivalence);
  const auto& sets = explanations(kind);
  const auto& xs = domain(kind);
  const InstanceSet& space = equivalence_space(kind);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Bits> covers;
    for (const PartialAssignment& e : sets[i]) covers.push_back(cov(e, space).bits);
    for (std::size_t a = 0; a < covers.size(); ++a) {
      for (std::size_t b = a + 1; b < covers.size(); ++b) {
        if (covers[a] == covers[b]) {
          r.verdict = Verdict::kViolated;
          r.witness = Witness{{xs[i]}, {sets[i][a], sets[i][b]},
                              "two distinct explanations with the same coverage"};
          return r;
        }
      }
    }
  }
  return r;
}

namespace {

// Plain-scan view of a scenario used for revalidation.
struct Plain {
  const Scenario& s;
  std::vector<Instance> full;
  std::vector<Instance> feasible;
  std::vector<Instance> rows;
  std::vector<ClassIndex> row_labels;

  Plain(const Scenario& scenario, const Budgets& budgets) : s(scenario) {
    full = enumerate_feature_space(s.theory, budgets.space);
    for (const Instance& x : full) {
      if (s.constraints.satisfies(x)) feasible.push_back(x);
    }
    if (s.dataset) {
      for (std::size_t i = 0; i < s.dataset->size(); ++i) {
        rows.push_back(s.dataset->instance(i));
        row_labels.push_back(s.dataset->label(i));
      }
    }
  }

  ClassIndex label(const Instance& x) const { return s.classifier->evaluate(x); }

  // E forces the class of x over the space the kind quantifies over.
  bool weak(ExplanationKind kind, const PartialAssignment& e, const Instance& x) const {
    if (!extends(e, x)) return false;
    const ClassIndex c = label(x);
    if (is_dataset_kind(kind)) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (extends(e, rows[i]) && row_labels[i] != c) return false;
      }
      return true;
    }
    if (!is_unconstrained_kind(kind) && !s.constraints.satisfies(e)) return false;
    for (const Instance& y : is_unconstrained_kind(kind) ? full : feasible) {
      if (extends(e, y) && label(y) != c) return false;
    }
    return true;
  }
};

}  // namespace

bool revalidate(const Scenario& scenario, const PropertyReport& report, const Budgets& budgets) {
  if (report.verdict == Verdict::kNoViolationFound) return true;
  if (!report.witness || !scenario.classifier) return false;
  const Witness& w = *report.witness;
  const Plain p(scenario, budgets);
  const ExplanationKind kind = report.kind;
  auto need = [&](std::size_t instances, std::size_t explanations) {
    return w.instances.size() >= instances && w.explanations.size() >= explanations;
  };
  switch (report.property) {
    case Property::kSuccess: {
      if (!need(1, 0)) return false;
      for (const PartialAssignment& e : Subassignments(PartialAssignment::of(w.instances[0]))) {
        if (p.weak(kind, e, w.instances[0])) return false;
      }
      return true;
    }
    case Property::kNonTriviality:
      return need(1, 1) && w.explanations[0].empty() &&
             p.weak(kind, w.explanations[0], w.instances[0]);
    case Property::kIrreducibility: {
      if (!need(1, 2)) return false;
      const Instance& x = w.instances[0];
      const PartialAssignment& e = w.explanations[0];
      const PartialAssignment& reduced = w.explanations[1];
      if (!p.weak(kind, e, x) || reduced.size() + 1 != e.size() || !reduced.is_subset_of(e)) {
        return false;
      }
      for (const Instance& y : is_unconstrained_kind(kind) ? p.full : p.feasible) {
        if (extends(reduced, y) && p.label(y) != p.label(x)) return false;
      }
      return true;
    }
    case Property::kCoherence: {
      if (!need(3, 2)) return false;
      const Instance& x = w.instances[0];
      const Instance& xp = w.instances[1];
      const Instance& xpp = w.instances[2];
      return p.label(x) != p.label(xp) && p.weak(kind, w.explanations[0], x) &&
             p.weak(kind, w.explanations[1], xp) && scenario.constraints.satisfies(xpp) &&
             extends(w.explanations[0], xpp) && extends(w.explanations[1], xpp);
    }
    case Property::kConsistency:
      return need(1, 1) && extends(w.explanations[0], w.instances[0]) &&
             !scenario.constraints.satisfies(w.explanations[0]);
    case Property::kIndependence: {
      if (!need(1, 2)) return false;
      const auto& e = w.explanations[0];
      const auto& ep = w.explanations[1];
      return p.weak(kind, e, w.instances[0]) && p.weak(kind, ep, w.instances[0]) &&
             is_dependency(scenario.constraints, e, ep, budgets.space) &&
             !is_dependency(scenario.constraints, ep, e, budgets.space);
    }
    case Property::kNonEquivalence: {
      if (!need(1, 2)) return false;
      const auto& e = w.explanations[0];
      const auto& ep = w.explanations[1];
      if (e == ep || !p.weak(kind, e, w.instances[0]) || !p.weak(kind, ep, w.instances[0])) {
        return false;
      }
      const std::vector<Instance>& space =
          is_dataset_kind(kind) ? p.rows : (is_unconstrained_kind(kind) ? p.full : p.feasible);
      for (const Instance& y : space) {
        if (extends(e, y) != extends(ep, y)) return false;
      }
      return true;
    }
  }
  return false;
}

bool table2_expected(ExplanationKind kind, Property property) {
  using K = ExplanationKind;
  switch (property) {
    case Property::kSuccess:
    case Property::kNonTriviality:
    case Property::kConsistency:
      return true;
    case Property::kIrreducibility:
      return !(kind == K::kWaxp || kind == K::kCpi || kind == K::kDCpi || kind == K::kDWaxp);
    case Property::kCoherence:
      return !is_dataset_kind(kind);
    case Property::kIndependence:
      return kind == K::kCpi || kind == K::kMcpi || kind == K::kPcpi || kind == K::kDPcpi;
    case Property::kNonEquivalence:
      return kind == K::kWaxp || kind == K::kAxp || kind == K::kPcpi || kind == K::kDPcpi;
  }
  return true;
}

bool Table2Result::matches() const {
  return std::all_of(cells.begin(), cells.end(), [](const Table2Cell& c) { return c.matches(); });
}

const Table2Cell& Table2Result::cell(Property p, ExplanationKind k) const {
  for (const Table2Cell& c : cells) {
    if (c.property == p && c.kind == k) return c;
  }
  throw PreconditionError("no such Table 2 cell");
}

Table2Result table2_matrix(const std::vector<Scenario>& scenarios, const Budgets& budgets) {
  Table2Result result;
  for (Property p : kAllProperties) {
    for (ExplanationKind k : kTable2Columns) {
      result.cells.push_back(Table2Cell{k, p, table2_expected(k, p)});
    }
  }
  for (const Scenario& s : scenarios) {
    if (!s.classifier) continue;
    PropertyChecker checker(s, budgets);
    for (Table2Cell& cell : result.cells) {
      if (!checker.supports(cell.kind)) continue;
      ++cell.scenarios_checked;
      if (cell.observed == Verdict::kViolated) continue;
      PropertyReport r = checker.check(cell.kind, cell.property);
      if (r.verdict == Verdict::kViolated) {
        cell.observed = Verdict::kViolated;
        cell.witness_revalidated = revalidate(s, r, budgets);
        cell.witness = std::move(r);
      }
    }
  }
  return result;
}

}  // namespace cpixp
