#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cpixp/classifier.hpp"
#include "cpixp/constraints.hpp"
#include "cpixp/coverage.hpp"
#include "cpixp/kinds.hpp"
#include "cpixp/theory.hpp"

namespace cpixp {

// A labeled sample T of the feasible space. Duplicate rows are collapsed;
// every class must occur. Errors cite 1-based input row numbers.
class Dataset {
 public:
  // Rows are validated against `c` when given.
  Dataset(const Theory& theory, const std::vector<std::pair<Instance, ClassIndex>>& rows,
          const ConstraintSet* c = nullptr);

  // Labels every row with k.
  static Dataset labeled_by(const Classifier& k, const std::vector<Instance>& rows,
                            const ConstraintSet* c = nullptr);

  const Theory& theory() const { return theory_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t width() const { return width_; }
  Instance instance(std::size_t row) const;
  ClassIndex label(std::size_t row) const { return labels_[row]; }
  ValueIndex value(std::size_t row, FeatureId f) const { return columns_[f][row]; }
  const std::vector<ValueIndex>& column(FeatureId f) const { return columns_[f]; }
  std::optional<std::size_t> index_of(const Instance& x) const;
  bool contains(const Instance& x) const { return index_of(x).has_value(); }
  bool row_extends(std::size_t row, const PartialAssignment& e) const;

  std::vector<Instance> instances() const;
  const std::vector<ClassIndex>& labels() const { return labels_; }

 private:
  Theory theory_;
  std::size_t width_;
  std::vector<std::vector<ValueIndex>> columns_;  // one column per feature
  std::vector<ClassIndex> labels_;
  std::unordered_map<Instance, std::size_t, InstanceHash> index_;
};

// Sample-based explanations: every quantification over instances ranges
// over the rows of T. x must be a row of T.
class DatasetExplainer {
 public:
  explicit DatasetExplainer(Dataset dataset, Budgets budgets = {});

  const Dataset& dataset() const { return dataset_; }
  const Theory& theory() const { return dataset_.theory(); }
  const InstanceSet& rows() const { return *rows_; }

  bool is_d_waxp(const PartialAssignment& e, const Instance& x) const;
  ExplanationResult find_d_axp(const Instance& x) const;

  // Rows extended by E that carry the label of v.
  std::vector<std::size_t> covered_rows(const PartialAssignment& e, const Instance& v) const;
  // Literals of v shared by every covered row.
  PartialAssignment d_closure(const Instance& v, const PartialAssignment& e) const;
  // y restricted to d_closure(v, E).
  PartialAssignment s_set(const PartialAssignment& e, const Instance& y, const Instance& v) const;

  // A d-wAXp S = y & closure strictly subsuming E in T, or nullopt.
  std::optional<PartialAssignment> d_cpi_counterexample(const PartialAssignment& e,
                                                        const Instance& x,
                                                        std::size_t* calls = nullptr) const;
  // Throws PreconditionError unless E is a d-wAXp.
  bool is_d_cpi_xp(const PartialAssignment& e, const Instance& x) const;

  ExplanationResult find_d_cpi_xp(const Instance& x) const;
  // Throws PreconditionError unless E is a d-CPI-Xp.
  ExplanationResult minimize_d_cpi(const PartialAssignment& e, const Instance& x) const;
  ExplanationResult find_d_pcpi(const Instance& x) const;

  ExplanationResult find(ExplanationKind kind, const Instance& x) const;
  std::vector<PartialAssignment> enumerate_all_d(ExplanationKind kind, const Instance& x) const;

 private:
  ClassIndex require_row(const Instance& x) const;
  bool weak(const PartialAssignment& e, ClassIndex c) const;
  PartialAssignment closure(const Instance& v, const PartialAssignment& e, ClassIndex c) const;
  std::optional<PartialAssignment> counterexample(const PartialAssignment& e, ClassIndex c,
                                                  const PartialAssignment& l,
                                                  std::size_t* calls) const;
  // Deletion keeping weak(E) and cov_T(E) inside cov_T(anchor).
  PartialAssignment delete_towards(const PartialAssignment& start,
                                   const PartialAssignment& anchor, ClassIndex c,
                                   std::size_t* calls) const;

  Dataset dataset_;
  Budgets budgets_;
  std::shared_ptr<const InstanceSet> rows_;
};

}  // namespace cpixp
