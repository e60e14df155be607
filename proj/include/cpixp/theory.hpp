#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpixp {

using FeatureId = std::uint32_t;
using ValueIndex = std::uint32_t;
using ClassIndex = std::uint32_t;

inline constexpr std::uint64_t kDefaultSpaceBudget = std::uint64_t{1} << 24;
inline constexpr std::size_t kDefaultSubsetBudget = 22;

// Limits on the exhaustive enumerations. Exceeding one raises CapacityError.
struct Budgets {
  std::uint64_t space = kDefaultSpaceBudget;    // max |feature space|
  std::size_t subsets = kDefaultSubsetBudget;   // max literals to take a powerset of
};

struct Feature {
  std::string name;
  std::vector<std::string> domain;

  bool operator==(const Feature&) const = default;
};

// Features with finite domains (|d(f)| >= 2) and at least two classes.
class Theory {
 public:
  Theory(std::vector<Feature> features, std::vector<std::string> classes);

  std::size_t num_features() const { return features_.size(); }
  const Feature& feature(FeatureId f) const { return features_.at(f); }
  const std::vector<Feature>& features() const { return features_; }
  std::size_t domain_size(FeatureId f) const { return features_.at(f).domain.size(); }

  std::size_t num_classes() const { return classes_.size(); }
  const std::vector<std::string>& classes() const { return classes_; }

  std::optional<FeatureId> find_feature(std::string_view name) const;
  std::optional<ValueIndex> find_value(FeatureId f, std::string_view token) const;
  std::optional<ClassIndex> find_class(std::string_view token) const;

  // Product of the domain sizes, saturated at UINT64_MAX.
  std::uint64_t space_size() const;

  bool operator==(const Theory&) const = default;

 private:
  std::vector<Feature> features_;
  std::vector<std::string> classes_;
};

struct Literal {
  FeatureId feature = 0;
  ValueIndex value = 0;

  auto operator<=>(const Literal&) const = default;
};

// A total assignment: one value index per feature.
class Instance {
 public:
  Instance() = default;
  explicit Instance(std::vector<ValueIndex> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  ValueIndex operator[](FeatureId f) const { return values_[f]; }
  std::span<const ValueIndex> values() const { return values_; }
  Literal literal(FeatureId f) const { return {f, values_[f]}; }

  auto operator<=>(const Instance&) const = default;

 private:
  std::vector<ValueIndex> values_;
};

struct InstanceHash {
  std::size_t operator()(const Instance& x) const noexcept;
};

// A consistent set of literals, at most one per feature, kept sorted by
// feature id. Comparison is lexicographic over the sorted literals.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  // Throws StructuralError when two literals name the same feature.
  explicit PartialAssignment(std::vector<Literal> literals);
  PartialAssignment(std::initializer_list<Literal> literals)
      : PartialAssignment(std::vector<Literal>(literals)) {}

  static PartialAssignment of(const Instance& x);

  std::span<const Literal> literals() const { return literals_; }
  std::vector<Literal>::const_iterator begin() const { return literals_.begin(); }
  std::vector<Literal>::const_iterator end() const { return literals_.end(); }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }

  bool contains(Literal l) const;
  std::optional<ValueIndex> value_of(FeatureId f) const;
  bool is_subset_of(const PartialAssignment& other) const;

  PartialAssignment without(Literal l) const;
  PartialAssignment intersect(const PartialAssignment& other) const;
  PartialAssignment minus(const PartialAssignment& other) const;
  // Union, or nullopt when the two disagree on some feature.
  std::optional<PartialAssignment> merge(const PartialAssignment& other) const;

  auto operator<=>(const PartialAssignment&) const = default;

 private:
  std::vector<Literal> literals_;
};

// Orders by cardinality first, then lexicographically.
struct ByCardinality {
  bool operator()(const PartialAssignment& a, const PartialAssignment& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct PartialAssignmentHash {
  std::size_t operator()(const PartialAssignment& e) const noexcept;
};

// E(x): every literal of E appears in x. Throws StructuralError when E names
// a feature x does not have.
bool extends(const PartialAssignment& e, const Instance& x);

// Throws StructuralError unless the object is well formed for `theory`.
void validate(const Theory& theory, const Instance& x);
void validate(const Theory& theory, const PartialAssignment& e);

// Lazily enumerates the feature space in lexicographic order of value indices.
class FeatureSpace {
 public:
  // Throws CapacityError when the space exceeds `budget` instances.
  explicit FeatureSpace(const Theory& theory, std::uint64_t budget = kDefaultSpaceBudget);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Instance;
    using difference_type = std::ptrdiff_t;
    using pointer = const Instance*;
    using reference = const Instance&;

    iterator() = default;
    const Instance& operator*() const { return current_; }
    const Instance* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& other) const { return remaining_ == other.remaining_; }

   private:
    friend class FeatureSpace;
    iterator(const std::vector<std::size_t>* radix, std::uint64_t remaining);

    const std::vector<std::size_t>* radix_ = nullptr;
    std::vector<ValueIndex> digits_;
    Instance current_;
    std::uint64_t remaining_ = 0;
  };

  iterator begin() const { return iterator(&radix_, size_); }
  iterator end() const { return iterator(); }
  std::uint64_t size() const { return size_; }

 private:
  std::vector<std::size_t> radix_;
  std::uint64_t size_ = 0;
};

std::vector<Instance> enumerate_feature_space(const Theory& theory,
                                              std::uint64_t budget = kDefaultSpaceBudget);

// Lazily enumerates all 2^|E| subsets of E, by increasing cardinality and in
// lexicographic order of literal positions within one cardinality.
class Subassignments {
 public:
  // Throws CapacityError when |E| exceeds `budget`.
  explicit Subassignments(PartialAssignment e, std::size_t budget = kDefaultSubsetBudget);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PartialAssignment;
    using difference_type = std::ptrdiff_t;
    using pointer = const PartialAssignment*;
    using reference = const PartialAssignment&;

    iterator() = default;
    const PartialAssignment& operator*() const { return current_; }
    const PartialAssignment* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& other) const { return done_ == other.done_; }

   private:
    friend class Subassignments;
    explicit iterator(const std::vector<Literal>* source);
    void materialize();

    const std::vector<Literal>* source_ = nullptr;
    std::vector<std::size_t> chosen_;
    PartialAssignment current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(&source_); }
  iterator end() const { return iterator(); }
  std::uint64_t size() const { return std::uint64_t{1} << source_.size(); }

 private:
  std::vector<Literal> source_;
};

// Mixed-radix rank of x within the lexicographic feature-space order.
std::uint64_t instance_rank(const Theory& theory, const Instance& x);

}  // namespace cpixp
