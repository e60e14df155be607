#include "cpixp/exact_engine.hpp"

#include "cpixp/enumeration.hpp"
#include "cpixp/errors.hpp"

namespace cpixp {
namespace {

void bump(std::size_t* calls) {
  if (calls) ++*calls;
}

}  // namespace

ExhaustiveOracle::ExhaustiveOracle(const ConstraintSet& c, const Classifier& k,
                                   std::uint64_t budget)
    : width_(c.theory().num_features()) {
  for (const Instance& x : FeatureSpace(c.theory(), budget)) {
    if (!c.satisfies(x)) continue;
    rows_.insert(rows_.end(), x.values().begin(), x.values().end());
    labels_.push_back(k.evaluate(x));
  }
}

bool ExhaustiveOracle::row_extends(std::size_t row, const PartialAssignment& a) const {
  const ValueIndex* values = rows_.data() + row * width_;
  for (const Literal& l : a) {
    if (values[l.feature] != l.value) return false;
  }
  return true;
}

bool ExhaustiveOracle::weak_axpc(const PartialAssignment& a, ClassIndex c) const {
  for (std::size_t row = 0; row < labels_.size(); ++row) {
    if (labels_[row] != c && row_extends(row, a)) return false;
  }
  return true;
}

bool ExhaustiveOracle::implies(const PartialAssignment& a, const PartialAssignment& b) const {
  for (std::size_t row = 0; row < labels_.size(); ++row) {
    if (row_extends(row, a) && !row_extends(row, b)) return false;
  }
  return true;
}

ExactExplainer::ExactExplainer(ConstraintSet c, Classifier k, Budgets budgets)
    : ExactExplainer(c, k, std::make_shared<ExhaustiveOracle>(ConstraintSet(c.theory()), k,
                                                              budgets.space),
                     std::make_shared<ExhaustiveOracle>(c, k, budgets.space), budgets) {}

ExactExplainer::ExactExplainer(ConstraintSet c, Classifier k,
                               std::shared_ptr<const EntailmentOracle> full,
                               std::shared_ptr<const EntailmentOracle> feasible, Budgets budgets)
    : constraints_(std::move(c)),
      classifier_(std::move(k)),
      budgets_(budgets),
      full_oracle_(std::move(full)),
      feasible_oracle_(std::move(feasible)) {
  if (!(classifier_.theory() == constraints_.theory())) {
    throw StructuralError("classifier and constraints are over different theories");
  }
  std::vector<Instance> all = enumerate_feature_space(theory(), budgets_.space);
  std::vector<Instance> feasible_members;
  for (const Instance& x : all) {
    if (constraints_.satisfies(x)) feasible_members.push_back(x);
  }
  assert_non_constant(classifier_, feasible_members);
  full_space_ = std::make_shared<InstanceSet>(theory(), std::move(all));
  feasible_space_ = std::make_shared<InstanceSet>(theory(), std::move(feasible_members));
}

const InstanceSet& ExactExplainer::reference_space(ExplanationKind kind) const {
  if (is_dataset_kind(kind)) throw PreconditionError("dataset kinds have no exact reference space");
  return is_unconstrained_kind(kind) ? *full_space_ : *feasible_space_;
}

void ExactExplainer::require_instance(const Instance& x, bool feasible) const {
  validate(theory(), x);
  if (feasible) constraints_.require_feasible(x);
}

bool ExactExplainer::is_waxp(const PartialAssignment& e, const Instance& x) const {
  require_instance(x, false);
  validate(theory(), e);
  if (!extends(e, x)) throw PreconditionError("explanation does not apply to the instance");
  return full_oracle_->weak_axpc(e, classifier_(x));
}

bool ExactExplainer::is_waxpc(const PartialAssignment& e, const Instance& x) const {
  require_instance(x, true);
  validate(theory(), e);
  if (!extends(e, x)) throw PreconditionError("explanation does not apply to the instance");
  return constraints_.satisfies(e) && feasible_oracle_->weak_axpc(e, classifier_(x));
}

bool ExactExplainer::is_cpi_xp(const PartialAssignment& e, const Instance& x) const {
  if (!is_waxpc(e, x)) return false;
  return !cpi_counterexample(e, {}, closure(x, e, nullptr), classifier_(x));
}

ExplanationResult ExactExplainer::find_axp(const Instance& x) const {
  require_instance(x, false);
  ExplanationResult r{PartialAssignment::of(x), ExplanationKind::kAxp};
  const ClassIndex target = classifier_(x);
  for (FeatureId f = static_cast<FeatureId>(x.size()); f-- > 0;) {
    PartialAssignment candidate = r.explanation.without(x.literal(f));
    ++r.oracle_calls;
    if (full_oracle_->weak_axpc(candidate, target)) r.explanation = std::move(candidate);
  }
  return r;
}

ExplanationResult ExactExplainer::find_axpc(const Instance& x) const {
  require_instance(x, true);
  ExplanationResult r{PartialAssignment::of(x), ExplanationKind::kAxpc};
  const ClassIndex target = classifier_(x);
  for (FeatureId f = static_cast<FeatureId>(x.size()); f-- > 0;) {
    PartialAssignment candidate = r.explanation.without(x.literal(f));
    if (!constraints_.satisfies(candidate)) continue;
    ++r.oracle_calls;
    if (feasible_oracle_->weak_axpc(candidate, target)) r.explanation = std::move(candidate);
  }
  return r;
}

PartialAssignment ExactExplainer::closure(const Instance& v, const PartialAssignment& e,
                                          std::size_t* calls) const {
  if (!extends(e, v)) throw PreconditionError("explanation does not apply to the instance");
  std::vector<Literal> literals;
  for (FeatureId f = 0; f < v.size(); ++f) {
    Literal l = v.literal(f);
    if (e.contains(l)) {
      literals.push_back(l);
      continue;
    }
    bump(calls);
    if (feasible_oracle_->implies(e, PartialAssignment{l})) literals.push_back(l);
  }
  return PartialAssignment(std::move(literals));
}

PartialAssignment ExactExplainer::closure_literals(const Instance& v,
                                                   const PartialAssignment& e) const {
  require_instance(v, true);
  validate(theory(), e);
  return closure(v, e, nullptr);
}

std::optional<PartialAssignment> ExactExplainer::cpi_counterexample(
    const PartialAssignment& e, const PartialAssignment& inf, const PartialAssignment& sup,
    ClassIndex target, std::size_t* calls) const {
  enum class Outcome { kPruned, kFound, kExpand };
  auto visit = [&](const PartialAssignment& candidate) {
    bump(calls);
    if (!feasible_oracle_->weak_axpc(candidate, target)) return Outcome::kPruned;
    bump(calls);
    if (!feasible_oracle_->implies(candidate, e)) return Outcome::kFound;
    return Outcome::kExpand;
  };

  // One frame per level of the literal-exclusion recursion. `inf` grows as
  // branches excluding each pending literal are exhausted.
  struct Frame {
    PartialAssignment sup;
    PartialAssignment inf;
    std::vector<Literal> pending;
    std::size_t next = 0;
  };
  auto make_frame = [](PartialAssignment s, PartialAssignment i) {
    PartialAssignment open = s.minus(i);
    return Frame{std::move(s), std::move(i), std::vector<Literal>(open.begin(), open.end())};
  };

  switch (visit(sup)) {
    case Outcome::kPruned: return std::nullopt;
    case Outcome::kFound: return sup;
    case Outcome::kExpand: break;
  }
  std::vector<Frame> stack;
  stack.push_back(make_frame(sup, inf));
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.pending.size()) {
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        parent.inf = *parent.inf.merge(PartialAssignment{parent.pending[parent.next]});
        ++parent.next;
      }
      continue;
    }
    const Literal l = top.pending[top.next];
    PartialAssignment child = top.sup.without(l);
    switch (visit(child)) {
      case Outcome::kFound:
        return child;
      case Outcome::kPruned:
        top.inf = *top.inf.merge(PartialAssignment{l});
        ++top.next;
        break;
      case Outcome::kExpand: {
        PartialAssignment child_inf = top.inf;
        stack.push_back(make_frame(std::move(child), std::move(child_inf)));
        break;
      }
    }
  }
  return std::nullopt;
}

ExplanationResult ExactExplainer::find_cpi_xp(const Instance& v) const {
  require_instance(v, true);
  const ClassIndex target = classifier_(v);
  ExplanationResult r{PartialAssignment::of(v), ExplanationKind::kCpi};
  while (true) {
    ++r.iterations;
    PartialAssignment l = closure(v, r.explanation, &r.oracle_calls);
    r.closure_trace.push_back(l);
    auto better = cpi_counterexample(r.explanation, {}, l, target, &r.oracle_calls);
    if (!better) return r;
    r.explanation = std::move(*better);
  }
}

PartialAssignment ExactExplainer::delete_towards(const PartialAssignment& start,
                                                 const PartialAssignment& anchor,
                                                 ClassIndex target, std::size_t* calls) const {
  return closure_representative(
      start,
      [&](const PartialAssignment& e) {
        bump(calls);
        return feasible_oracle_->weak_axpc(e, target);
      },
      [&](const PartialAssignment& e, const PartialAssignment&) {
        bump(calls);
        return feasible_oracle_->implies(e, anchor);
      });
}

ExplanationResult ExactExplainer::minimize_cpi(const PartialAssignment& e,
                                               const Instance& v) const {
  require_instance(v, true);
  validate(theory(), e);
  if (!extends(e, v)) throw PreconditionError("explanation does not apply to the instance");
  const ClassIndex target = classifier_(v);
  ExplanationResult r{e, ExplanationKind::kMcpi};
  ++r.check_calls;
  bool is_cpi = constraints_.satisfies(e) && feasible_oracle_->weak_axpc(e, target);
  if (is_cpi) {
    PartialAssignment l = closure(v, e, &r.check_calls);
    is_cpi = !cpi_counterexample(e, {}, l, target, &r.check_calls);
  }
  if (!is_cpi) throw PreconditionError("minimize_cpi expects a CPI-Xp");
  r.explanation = delete_towards(e, e, target, &r.oracle_calls);
  return r;
}

ExplanationResult ExactExplainer::find_pcpi_xp(const Instance& v) const {
  ExplanationResult r = find_cpi_xp(v);
  r.kind = ExplanationKind::kPcpi;
  const PartialAssignment& l = r.closure_trace.back();
  r.explanation = delete_towards(l, l, classifier_(v), &r.oracle_calls);
  return r;
}

ExplanationResult ExactExplainer::find(ExplanationKind kind, const Instance& x) const {
  switch (kind) {
    case ExplanationKind::kWaxp:
      require_instance(x, false);
      return {PartialAssignment::of(x), kind};
    case ExplanationKind::kWaxpc:
      require_instance(x, true);
      return {PartialAssignment::of(x), kind};
    case ExplanationKind::kAxp: return find_axp(x);
    case ExplanationKind::kAxpc: return find_axpc(x);
    case ExplanationKind::kCpi: return find_cpi_xp(x);
    case ExplanationKind::kMcpi: {
      ExplanationResult cpi = find_cpi_xp(x);
      ExplanationResult m = minimize_cpi(cpi.explanation, x);
      m.oracle_calls += cpi.oracle_calls;
      m.iterations = cpi.iterations;
      m.closure_trace = std::move(cpi.closure_trace);
      return m;
    }
    case ExplanationKind::kPcpi: return find_pcpi_xp(x);
    default:
      throw PreconditionError("kind '" + std::string(kind_name(kind)) + "' needs a dataset");
  }
}

std::vector<PartialAssignment> ExactExplainer::enumerate_all(ExplanationKind kind,
                                                             const Instance& x) const {
  if (is_dataset_kind(kind)) {
    throw PreconditionError("kind '" + std::string(kind_name(kind)) + "' needs a dataset");
  }
  const bool unconstrained = is_unconstrained_kind(kind);
  require_instance(x, !unconstrained);
  const InstanceSet& space = reference_space(kind);
  std::vector<ClassIndex> labels;
  labels.reserve(space.size());
  for (const Instance& y : space.members()) labels.push_back(classifier_(y));

  Family family = Family::kWeak;
  switch (kind) {
    case ExplanationKind::kAxp:
    case ExplanationKind::kAxpc: family = Family::kMinimal; break;
    case ExplanationKind::kCpi: family = Family::kUnsubsumed; break;
    case ExplanationKind::kMcpi: family = Family::kMinimalUnsubsumed; break;
    case ExplanationKind::kPcpi: family = Family::kRepresentative; break;
    default: break;
  }
  return enumerate_subsets(space, labels, x, classifier_(x), family, budgets_.subsets,
                           unconstrained ? nullptr : &constraints_);
}

}  // namespace cpixp
