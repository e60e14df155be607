#include "cpixp/theory.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include <boost/container_hash/hash.hpp>

#include "cpixp/errors.hpp"

namespace cpixp {

Theory::Theory(std::vector<Feature> features, std::vector<std::string> classes)
    : features_(std::move(features)), classes_(std::move(classes)) {
  if (features_.empty()) throw StructuralError("a theory needs at least one feature");
  std::set<std::string> names;
  for (const Feature& f : features_) {
    if (f.name.empty()) throw StructuralError("feature with empty name");
    if (!names.insert(f.name).second) {
      throw StructuralError("duplicate feature name '" + f.name + "'");
    }
    if (f.domain.size() < 2) {
      throw StructuralError("feature '" + f.name + "' needs a domain of at least 2 values");
    }
    std::set<std::string> tokens(f.domain.begin(), f.domain.end());
    if (tokens.size() != f.domain.size()) {
      throw StructuralError("feature '" + f.name + "' has duplicate domain values");
    }
  }
  if (classes_.size() < 2) throw StructuralError("a theory needs at least two classes");
  std::set<std::string> tokens(classes_.begin(), classes_.end());
  if (tokens.size() != classes_.size()) throw StructuralError("duplicate class tokens");
}

std::optional<FeatureId> Theory::find_feature(std::string_view name) const {
  for (FeatureId f = 0; f < features_.size(); ++f) {
    if (features_[f].name == name) return f;
  }
  return std::nullopt;
}

std::optional<ValueIndex> Theory::find_value(FeatureId f, std::string_view token) const {
  const auto& domain = features_.at(f).domain;
  for (ValueIndex v = 0; v < domain.size(); ++v) {
    if (domain[v] == token) return v;
  }
  return std::nullopt;
}

std::optional<ClassIndex> Theory::find_class(std::string_view token) const {
  for (ClassIndex c = 0; c < classes_.size(); ++c) {
    if (classes_[c] == token) return c;
  }
  return std::nullopt;
}

std::uint64_t Theory::space_size() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 1;
  for (const Feature& f : features_) {
    if (size > kMax / f.domain.size()) return kMax;
    size *= f.domain.size();
  }
  return size;
}

std::size_t InstanceHash::operator()(const Instance& x) const noexcept {
  return boost::hash_range(x.values().begin(), x.values().end());
}

PartialAssignment::PartialAssignment(std::vector<Literal> literals)
    : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
  for (std::size_t i = 1; i < literals_.size(); ++i) {
    if (literals_[i].feature == literals_[i - 1].feature) {
      throw StructuralError("partial assignment assigns feature " +
                            std::to_string(literals_[i].feature) + " twice");
    }
  }
}

PartialAssignment PartialAssignment::of(const Instance& x) {
  PartialAssignment e;
  e.literals_.reserve(x.size());
  for (FeatureId f = 0; f < x.size(); ++f) e.literals_.push_back(x.literal(f));
  return e;
}

bool PartialAssignment::contains(Literal l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

std::optional<ValueIndex> PartialAssignment::value_of(FeatureId f) const {
  auto it = std::lower_bound(literals_.begin(), literals_.end(), Literal{f, 0});
  if (it != literals_.end() && it->feature == f) return it->value;
  return std::nullopt;
}

bool PartialAssignment::is_subset_of(const PartialAssignment& other) const {
  return std::includes(other.literals_.begin(), other.literals_.end(), literals_.begin(),
                       literals_.end());
}

PartialAssignment PartialAssignment::without(Literal l) const {
  PartialAssignment e;
  e.literals_.reserve(literals_.size());
  for (const Literal& m : literals_) {
    if (m != l) e.literals_.push_back(m);
  }
  return e;
}

PartialAssignment PartialAssignment::intersect(const PartialAssignment& other) const {
  PartialAssignment e;
  std::set_intersection(literals_.begin(), literals_.end(), other.literals_.begin(),
                        other.literals_.end(), std::back_inserter(e.literals_));
  return e;
}

PartialAssignment PartialAssignment::minus(const PartialAssignment& other) const {
  PartialAssignment e;
  std::set_difference(literals_.begin(), literals_.end(), other.literals_.begin(),
                      other.literals_.end(), std::back_inserter(e.literals_));
  return e;
}

std::optional<PartialAssignment> PartialAssignment::merge(const PartialAssignment& other) const {
  PartialAssignment e;
  std::set_union(literals_.begin(), literals_.end(), other.literals_.begin(),
                 other.literals_.end(), std::back_inserter(e.literals_));
  for (std::size_t i = 1; i < e.literals_.size(); ++i) {
    if (e.literals_[i].feature == e.literals_[i - 1].feature) return std::nullopt;
  }
  return e;
}

std::size_t PartialAssignmentHash::operator()(const PartialAssignment& e) const noexcept {
  std::size_t seed = 0;
  for (const Literal& l : e) {
    boost::hash_combine(seed, l.feature);
    boost::hash_combine(seed, l.value);
  }
  return seed;
}

bool extends(const PartialAssignment& e, const Instance& x) {
  for (const Literal& l : e) {
    if (l.feature >= x.size()) {
      throw StructuralError("literal on feature " + std::to_string(l.feature) +
                            " applied to an instance with " + std::to_string(x.size()) +
                            " features");
    }
    if (x[l.feature] != l.value) return false;
  }
  return true;
}

void validate(const Theory& theory, const Instance& x) {
  if (x.size() != theory.num_features()) {
    throw StructuralError("instance has " + std::to_string(x.size()) + " values, theory has " +
                          std::to_string(theory.num_features()) + " features");
  }
  for (FeatureId f = 0; f < x.size(); ++f) {
    if (x[f] >= theory.domain_size(f)) {
      throw StructuralError("value index out of range for feature '" + theory.feature(f).name +
                            "'");
    }
  }
}

void validate(const Theory& theory, const PartialAssignment& e) {
  for (const Literal& l : e) {
    if (l.feature >= theory.num_features()) {
      throw StructuralError("literal names unknown feature " + std::to_string(l.feature));
    }
    if (l.value >= theory.domain_size(l.feature)) {
      throw StructuralError("value index out of range for feature '" +
                            theory.feature(l.feature).name + "'");
    }
  }
}

FeatureSpace::FeatureSpace(const Theory& theory, std::uint64_t budget)
    : size_(theory.space_size()) {
  if (size_ > budget) {
    std::ostringstream msg;
    msg << "feature space has " << size_ << " instances, budget is " << budget;
    throw CapacityError(msg.str());
  }
  for (const Feature& f : theory.features()) radix_.push_back(f.domain.size());
}

FeatureSpace::iterator::iterator(const std::vector<std::size_t>* radix, std::uint64_t remaining)
    : radix_(radix), digits_(radix->size(), 0), current_(digits_), remaining_(remaining) {}

FeatureSpace::iterator& FeatureSpace::iterator::operator++() {
  if (--remaining_ == 0) return *this;
  // Last feature varies fastest.
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < (*radix_)[i]) break;
    digits_[i] = 0;
  }
  current_ = Instance(digits_);
  return *this;
}

std::vector<Instance> enumerate_feature_space(const Theory& theory, std::uint64_t budget) {
  FeatureSpace space(theory, budget);
  std::vector<Instance> out;
  out.reserve(space.size());
  for (const Instance& x : space) out.push_back(x);
  return out;
}

Subassignments::Subassignments(PartialAssignment e, std::size_t budget)
    : source_(e.begin(), e.end()) {
  if (source_.size() > budget) {
    throw CapacityError("cannot enumerate subsets of " + std::to_string(source_.size()) +
                        " literals, budget is " + std::to_string(budget));
  }
}

Subassignments::iterator::iterator(const std::vector<Literal>* source)
    : source_(source), done_(false) {
  materialize();
}

void Subassignments::iterator::materialize() {
  std::vector<Literal> lits;
  lits.reserve(chosen_.size());
  for (std::size_t i : chosen_) lits.push_back((*source_)[i]);
  current_ = PartialAssignment(std::move(lits));
}

Subassignments::iterator& Subassignments::iterator::operator++() {
  const std::size_t n = source_->size();
  const std::size_t k = chosen_.size();
  // Next k-combination in lexicographic order.
  std::size_t i = k;
  while (i > 0 && chosen_[i - 1] == n - k + i - 1) --i;
  if (i > 0) {
    ++chosen_[i - 1];
    for (std::size_t j = i; j < k; ++j) chosen_[j] = chosen_[j - 1] + 1;
  } else if (k < n) {
    chosen_.resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j) chosen_[j] = j;
  } else {
    done_ = true;
    return *this;
  }
  materialize();
  return *this;
}

std::uint64_t instance_rank(const Theory& theory, const Instance& x) {
  std::uint64_t rank = 0;
  for (FeatureId f = 0; f < x.size(); ++f) rank = rank * theory.domain_size(f) + x[f];
  return rank;
}

}  // namespace cpixp
