#include "cpixp/dataset_engine.hpp"

#include <array>
#include <set>

#include "cpixp/enumeration.hpp"
#include "cpixp/errors.hpp"
#include "cpixp/format.hpp"

namespace cpixp {
namespace {

void bump(std::size_t* calls) {
  if (calls) ++*calls;
}

}  // namespace

Dataset::Dataset(const Theory& theory, const std::vector<std::pair<Instance, ClassIndex>>& rows,
                 const ConstraintSet* c)
    : theory_(theory), width_(theory.num_features()) {
  std::vector<std::size_t> source_row;
  std::vector<const Instance*> kept;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [x, label] = rows[i];
    const std::string where = "dataset row " + std::to_string(i + 1) + ": ";
    try {
      validate(theory_, x);
    } catch (const StructuralError& e) {
      throw StructuralError(where + e.what());
    }
    if (label >= theory_.num_classes()) throw StructuralError(where + "class index out of range");
    if (c) {
      if (auto g = c->violated_by(x)) {
        throw StructuralError(where + to_string(theory_, x) + " violates nogood " +
                              to_string(theory_, g->forbidden));
      }
    }
    auto [it, inserted] = index_.emplace(x, labels_.size());
    if (!inserted) {
      if (labels_[it->second] != label) {
        throw StructuralError(where + "conflicting label for " + to_string(theory_, x) +
                              " (first seen in row " +
                              std::to_string(source_row[it->second] + 1) + ")");
      }
      continue;
    }
    kept.push_back(&x);
    labels_.push_back(label);
    source_row.push_back(i);
  }
  columns_.assign(width_, std::vector<ValueIndex>(kept.size()));
  for (std::size_t row = 0; row < kept.size(); ++row) {
    for (FeatureId f = 0; f < width_; ++f) columns_[f][row] = (*kept[row])[f];
  }
  std::set<ClassIndex> present(labels_.begin(), labels_.end());
  for (ClassIndex k = 0; k < theory_.num_classes(); ++k) {
    if (!present.count(k)) {
      throw StructuralError("dataset has no row of class '" + theory_.classes()[k] + "'");
    }
  }
}

Dataset Dataset::labeled_by(const Classifier& k, const std::vector<Instance>& rows,
                            const ConstraintSet* c) {
  std::vector<std::pair<Instance, ClassIndex>> labeled;
  labeled.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      validate(k.theory(), rows[i]);
    } catch (const StructuralError& e) {
      throw StructuralError("dataset row " + std::to_string(i + 1) + ": " + e.what());
    }
    labeled.emplace_back(rows[i], k.evaluate(rows[i]));
  }
  return Dataset(k.theory(), labeled, c);
}

Instance Dataset::instance(std::size_t row) const {
  std::vector<ValueIndex> values(width_);
  for (FeatureId f = 0; f < width_; ++f) values[f] = columns_[f][row];
  return Instance(std::move(values));
}

std::optional<std::size_t> Dataset::index_of(const Instance& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Dataset::row_extends(std::size_t row, const PartialAssignment& e) const {
  for (const Literal& l : e) {
    if (columns_[l.feature][row] != l.value) return false;
  }
  return true;
}

std::vector<Instance> Dataset::instances() const {
  std::vector<Instance> out;
  out.reserve(size());
  for (std::size_t row = 0; row < size(); ++row) out.push_back(instance(row));
  return out;
}

DatasetExplainer::DatasetExplainer(Dataset dataset, Budgets budgets)
    : dataset_(std::move(dataset)),
      budgets_(budgets),
      rows_(std::make_shared<InstanceSet>(dataset_.theory(), dataset_.instances())) {}

ClassIndex DatasetExplainer::require_row(const Instance& x) const {
  validate(theory(), x);
  auto row = dataset_.index_of(x);
  if (!row) throw PreconditionError("instance " + to_string(theory(), x) + " is not in the dataset");
  return dataset_.label(*row);
}

bool DatasetExplainer::weak(const PartialAssignment& e, ClassIndex c) const {
  // Branch-free over blocks of rows, so the cost does not depend on the data.
  constexpr std::size_t kBlock = 512;
  std::array<std::uint8_t, kBlock> hit;
  const std::vector<ClassIndex>& labels = dataset_.labels();
  for (std::size_t start = 0; start < dataset_.size(); start += kBlock) {
    const std::size_t len = std::min(kBlock, dataset_.size() - start);
    for (std::size_t i = 0; i < len; ++i) hit[i] = labels[start + i] != c;
    for (const Literal& l : e) {
      const ValueIndex* column = dataset_.column(l.feature).data() + start;
      for (std::size_t i = 0; i < len; ++i) hit[i] &= column[i] == l.value;
    }
    std::uint8_t any = 0;
    for (std::size_t i = 0; i < len; ++i) any |= hit[i];
    if (any) return false;
  }
  return true;
}

bool DatasetExplainer::is_d_waxp(const PartialAssignment& e, const Instance& x) const {
  const ClassIndex c = require_row(x);
  validate(theory(), e);
  if (!extends(e, x)) throw PreconditionError("explanation does not apply to the instance");
  return weak(e, c);
}

ExplanationResult DatasetExplainer::find_d_axp(const Instance& x) const {
  const ClassIndex c = require_row(x);
  ExplanationResult r{PartialAssignment::of(x), ExplanationKind::kDAxp};
  for (FeatureId f = static_cast<FeatureId>(x.size()); f-- > 0;) {
    PartialAssignment candidate = r.explanation.without(x.literal(f));
    ++r.oracle_calls;
    if (weak(candidate, c)) r.explanation = std::move(candidate);
  }
  return r;
}

std::vector<std::size_t> DatasetExplainer::covered_rows(const PartialAssignment& e,
                                                        const Instance& v) const {
  const ClassIndex c = require_row(v);
  validate(theory(), e);
  std::vector<std::size_t> out;
  for (std::size_t row = 0; row < dataset_.size(); ++row) {
    if (dataset_.label(row) == c && dataset_.row_extends(row, e)) out.push_back(row);
  }
  return out;
}

PartialAssignment DatasetExplainer::closure(const Instance& v, const PartialAssignment& e,
                                            ClassIndex c) const {
  std::vector<char> shared(v.size(), 1);
  for (std::size_t row = 0; row < dataset_.size(); ++row) {
    if (dataset_.label(row) != c || !dataset_.row_extends(row, e)) continue;
    for (FeatureId f = 0; f < v.size(); ++f) {
      if (shared[f] && dataset_.value(row, f) != v[f]) shared[f] = 0;
    }
  }
  std::vector<Literal> literals;
  for (FeatureId f = 0; f < v.size(); ++f) {
    if (shared[f]) literals.push_back(v.literal(f));
  }
  return PartialAssignment(std::move(literals));
}

PartialAssignment DatasetExplainer::d_closure(const Instance& v, const PartialAssignment& e) const {
  const ClassIndex c = require_row(v);
  validate(theory(), e);
  if (!extends(e, v)) throw PreconditionError("explanation does not apply to the instance");
  return closure(v, e, c);
}

PartialAssignment DatasetExplainer::s_set(const PartialAssignment& e, const Instance& y,
                                          const Instance& v) const {
  require_row(y);
  return PartialAssignment::of(y).intersect(d_closure(v, e));
}

std::optional<PartialAssignment> DatasetExplainer::counterexample(const PartialAssignment& e,
                                                                  ClassIndex c,
                                                                  const PartialAssignment& l,
                                                                  std::size_t* calls) const {
  std::set<PartialAssignment> tried;
  std::vector<Literal> s;
  for (std::size_t row = 0; row < dataset_.size(); ++row) {
    if (dataset_.label(row) != c || dataset_.row_extends(row, e)) continue;
    s.clear();
    for (const Literal& lit : l) {
      if (dataset_.value(row, lit.feature) == lit.value) s.push_back(lit);
    }
    PartialAssignment candidate(s);
    if (!tried.insert(candidate).second) continue;
    bump(calls);
    if (weak(candidate, c)) return candidate;
  }
  return std::nullopt;
}

std::optional<PartialAssignment> DatasetExplainer::d_cpi_counterexample(const PartialAssignment& e,
                                                                        const Instance& x,
                                                                        std::size_t* calls) const {
  const ClassIndex c = require_row(x);
  validate(theory(), e);
  if (!extends(e, x)) throw PreconditionError("explanation does not apply to the instance");
  return counterexample(e, c, closure(x, e, c), calls);
}

bool DatasetExplainer::is_d_cpi_xp(const PartialAssignment& e, const Instance& x) const {
  if (!is_d_waxp(e, x)) throw PreconditionError("is_d_cpi_xp expects a d-wAXp");
  return !d_cpi_counterexample(e, x);
}

ExplanationResult DatasetExplainer::find_d_cpi_xp(const Instance& x) const {
  const ClassIndex c = require_row(x);
  ExplanationResult r{PartialAssignment::of(x), ExplanationKind::kDCpi};
  while (true) {
    ++r.iterations;
    PartialAssignment l = closure(x, r.explanation, c);
    r.closure_trace.push_back(l);
    auto better = counterexample(r.explanation, c, l, &r.oracle_calls);
    if (!better) return r;
    r.explanation = std::move(*better);
  }
}

PartialAssignment DatasetExplainer::delete_towards(const PartialAssignment& start,
                                                   const PartialAssignment& anchor, ClassIndex c,
                                                   std::size_t* calls) const {
  return closure_representative(
      start,
      [&](const PartialAssignment& e) {
        bump(calls);
        return weak(e, c);
      },
      [&](const PartialAssignment& e, const PartialAssignment&) {
        bump(calls);
        // Rows of class c extending e must all extend the anchor.
        for (std::size_t row = 0; row < dataset_.size(); ++row) {
          if (dataset_.label(row) == c && dataset_.row_extends(row, e) &&
              !dataset_.row_extends(row, anchor)) {
            return false;
          }
        }
        return true;
      });
}

ExplanationResult DatasetExplainer::minimize_d_cpi(const PartialAssignment& e,
                                                   const Instance& x) const {
  const ClassIndex c = require_row(x);
  validate(theory(), e);
  if (!extends(e, x)) throw PreconditionError("explanation does not apply to the instance");
  ExplanationResult r{e, ExplanationKind::kDMcpi};
  ++r.check_calls;
  bool ok = weak(e, c) && !counterexample(e, c, closure(x, e, c), &r.check_calls);
  if (!ok) throw PreconditionError("minimize_d_cpi expects a d-CPI-Xp");
  r.explanation = delete_towards(e, e, c, &r.oracle_calls);
  return r;
}

ExplanationResult DatasetExplainer::find_d_pcpi(const Instance& x) const {
  ExplanationResult r = find_d_cpi_xp(x);
  r.kind = ExplanationKind::kDPcpi;
  const PartialAssignment& l = r.closure_trace.back();
  r.explanation = delete_towards(l, l, require_row(x), &r.oracle_calls);
  return r;
}

ExplanationResult DatasetExplainer::find(ExplanationKind kind, const Instance& x) const {
  switch (kind) {
    case ExplanationKind::kDWaxp:
      require_row(x);
      return {PartialAssignment::of(x), kind};
    case ExplanationKind::kDAxp: return find_d_axp(x);
    case ExplanationKind::kDCpi: return find_d_cpi_xp(x);
    case ExplanationKind::kDMcpi: {
      ExplanationResult cpi = find_d_cpi_xp(x);
      ExplanationResult m = minimize_d_cpi(cpi.explanation, x);
      m.oracle_calls += cpi.oracle_calls;
      m.iterations = cpi.iterations;
      m.closure_trace = std::move(cpi.closure_trace);
      return m;
    }
    case ExplanationKind::kDPcpi: return find_d_pcpi(x);
    default:
      throw PreconditionError("kind '" + std::string(kind_name(kind)) +
                              "' is not a dataset kind");
  }
}

std::vector<PartialAssignment> DatasetExplainer::enumerate_all_d(ExplanationKind kind,
                                                                 const Instance& x) const {
  if (!is_dataset_kind(kind)) {
    throw PreconditionError("kind '" + std::string(kind_name(kind)) +
                            "' is not a dataset kind");
  }
  const ClassIndex c = require_row(x);
  Family family = Family::kWeak;
  switch (kind) {
    case ExplanationKind::kDAxp: family = Family::kMinimal; break;
    case ExplanationKind::kDCpi: family = Family::kUnsubsumed; break;
    case ExplanationKind::kDMcpi: family = Family::kMinimalUnsubsumed; break;
    case ExplanationKind::kDPcpi: family = Family::kRepresentative; break;
    default: break;
  }
  return enumerate_subsets(*rows_, dataset_.labels(), x, c, family, budgets_.subsets);
}

}  // namespace cpixp
