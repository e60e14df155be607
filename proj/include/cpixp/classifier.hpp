#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpixp/expression.hpp"
#include "cpixp/theory.hpp"

namespace cpixp {

// Maps instances to class indices. Either a boolean expression (class 1 when
// true, class 0 otherwise) or a dense table over the whole feature space.
// Copies share the underlying representation.
class Classifier {
 public:
  // Binary classifier from a formula. Requires exactly two classes.
  static Classifier from_expression(const Theory& theory, std::string_view formula);
  // `table[rank(x)]` is the class of x; must cover the whole feature space.
  static Classifier from_table(const Theory& theory, std::vector<ClassIndex> table);
  // Rows of (instance, class). Throws StructuralError when some instance of
  // the feature space has no row or two rows disagree.
  static Classifier from_rows(const Theory& theory,
                              const std::vector<std::pair<Instance, ClassIndex>>& rows,
                              std::uint64_t budget = kDefaultSpaceBudget);

  ClassIndex evaluate(const Instance& x) const;
  ClassIndex operator()(const Instance& x) const { return evaluate(x); }

  bool is_expression() const;
  // Formula text for expression classifiers, empty otherwise.
  std::string formula() const;
  const Theory& theory() const;

 private:
  struct Impl;
  explicit Classifier(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Throws ConstantClassifierError unless two instances of `space` get
// different classes. Throws PreconditionError on an empty space.
void assert_non_constant(const Classifier& k, std::span<const Instance> space);

Classifier parse_expression(const Theory& theory, std::string_view text);

// Truth table of k over the feature space, indexed by instance rank.
std::vector<ClassIndex> tabulate(const Classifier& k, std::uint64_t budget = kDefaultSpaceBudget);

}  // namespace cpixp
