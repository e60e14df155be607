#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cpixp/theory.hpp"

namespace cpixp {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// A reference set X with a fixed member order, plus one bitset per literal
// marking the members that contain it.
class InstanceSet {
 public:
  InstanceSet(const Theory& theory, std::vector<Instance> members);

  std::size_t size() const { return members_.size(); }
  const std::vector<Instance>& members() const { return members_; }
  const Instance& operator[](std::size_t i) const { return members_[i]; }
  std::optional<std::size_t> index_of(const Instance& x) const;
  bool contains(const Instance& x) const { return index_of(x).has_value(); }

  const Bits& literal_bits(Literal l) const { return literal_bits_[l.feature][l.value]; }
  Bits all() const { return Bits(members_.size()).set(); }

 private:
  std::vector<Instance> members_;
  std::unordered_map<Instance, std::size_t, InstanceHash> index_;
  std::vector<std::vector<Bits>> literal_bits_;
};

// cov_X(E). `reference` must outlive the coverage.
struct Coverage {
  const InstanceSet* reference = nullptr;
  Bits bits;

  std::size_t count() const { return bits.count(); }
  std::vector<Instance> instances() const;
  bool operator==(const Coverage& other) const { return bits == other.bits; }
};

Coverage cov(const PartialAssignment& e, const InstanceSet& x);

// cov(e) is a subset of cov(ep).
bool subsumes(const PartialAssignment& ep, const PartialAssignment& e, const InstanceSet& x);
bool strictly_subsumes(const PartialAssignment& ep, const PartialAssignment& e,
                       const InstanceSet& x);
bool equivalent(const PartialAssignment& e, const PartialAssignment& ep, const InstanceSet& x);

}  // namespace cpixp
