#include "cpixp/classifier.hpp"

#include <optional>

#include "cpixp/errors.hpp"
#include "cpixp/format.hpp"

namespace cpixp {

struct Classifier::Impl {
  Theory theory;
  std::optional<Expression> expression;
  std::vector<ClassIndex> table;
};

Classifier Classifier::from_expression(const Theory& theory, std::string_view formula) {
  if (theory.num_classes() != 2) {
    throw StructuralError("expression classifiers need exactly two classes, theory has " +
                          std::to_string(theory.num_classes()));
  }
  auto impl = std::make_shared<Impl>(Impl{theory, Expression::parse(theory, formula), {}});
  return Classifier(std::move(impl));
}

Classifier Classifier::from_table(const Theory& theory, std::vector<ClassIndex> table) {
  if (table.size() != theory.space_size()) {
    throw StructuralError("classifier table has " + std::to_string(table.size()) +
                          " entries, feature space has " + std::to_string(theory.space_size()));
  }
  for (ClassIndex c : table) {
    if (c >= theory.num_classes()) throw StructuralError("class index out of range");
  }
  return Classifier(std::make_shared<Impl>(Impl{theory, std::nullopt, std::move(table)}));
}

Classifier Classifier::from_rows(const Theory& theory,
                                 const std::vector<std::pair<Instance, ClassIndex>>& rows,
                                 std::uint64_t budget) {
  FeatureSpace space(theory, budget);
  constexpr ClassIndex kUnset = static_cast<ClassIndex>(-1);
  std::vector<ClassIndex> table(space.size(), kUnset);
  for (const auto& [x, c] : rows) {
    validate(theory, x);
    ClassIndex& slot = table[instance_rank(theory, x)];
    if (slot != kUnset && slot != c) {
      throw StructuralError("classifier table gives " + to_string(theory, x) + " two classes");
    }
    slot = c;
  }
  for (const Instance& x : space) {
    if (table[instance_rank(theory, x)] == kUnset) {
      throw StructuralError("classifier table has no row for " + to_string(theory, x));
    }
  }
  return from_table(theory, std::move(table));
}

ClassIndex Classifier::evaluate(const Instance& x) const {
  if (impl_->expression) return impl_->expression->evaluate(x) ? 1 : 0;
  return impl_->table[instance_rank(impl_->theory, x)];
}

bool Classifier::is_expression() const { return impl_->expression.has_value(); }

std::string Classifier::formula() const {
  return impl_->expression ? impl_->expression->text() : std::string();
}

const Theory& Classifier::theory() const { return impl_->theory; }

void assert_non_constant(const Classifier& k, std::span<const Instance> space) {
  if (space.empty()) throw PreconditionError("cannot test constancy over an empty space");
  ClassIndex first = k.evaluate(space.front());
  for (const Instance& x : space) {
    if (k.evaluate(x) != first) return;
  }
  throw ConstantClassifierError("classifier is constant (class '" +
                                k.theory().classes().at(first) + "') over the reference space");
}

Classifier parse_expression(const Theory& theory, std::string_view text) {
  return Classifier::from_expression(theory, text);
}

std::vector<ClassIndex> tabulate(const Classifier& k, std::uint64_t budget) {
  std::vector<ClassIndex> table;
  for (const Instance& x : FeatureSpace(k.theory(), budget)) table.push_back(k.evaluate(x));
  return table;
}

}  // namespace cpixp
