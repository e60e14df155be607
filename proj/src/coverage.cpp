#include "cpixp/coverage.hpp"

#include "cpixp/errors.hpp"

namespace cpixp {

InstanceSet::InstanceSet(const Theory& theory, std::vector<Instance> members)
    : members_(std::move(members)) {
  literal_bits_.resize(theory.num_features());
  for (FeatureId f = 0; f < theory.num_features(); ++f) {
    literal_bits_[f].assign(theory.domain_size(f), Bits(members_.size()));
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const Instance& x = members_[i];
    validate(theory, x);
    if (!index_.emplace(x, i).second) throw StructuralError("duplicate instance in reference set");
    for (FeatureId f = 0; f < x.size(); ++f) literal_bits_[f][x[f]].set(i);
  }
}

std::optional<std::size_t> InstanceSet::index_of(const Instance& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Instance> Coverage::instances() const {
  std::vector<Instance> out;
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
    out.push_back((*reference)[i]);
  }
  return out;
}

Coverage cov(const PartialAssignment& e, const InstanceSet& x) {
  Coverage c{&x, x.all()};
  for (const Literal& l : e) c.bits &= x.literal_bits(l);
  return c;
}

bool subsumes(const PartialAssignment& ep, const PartialAssignment& e, const InstanceSet& x) {
  return cov(e, x).bits.is_subset_of(cov(ep, x).bits);
}

bool strictly_subsumes(const PartialAssignment& ep, const PartialAssignment& e,
                       const InstanceSet& x) {
  return cov(e, x).bits.is_proper_subset_of(cov(ep, x).bits);
}

bool equivalent(const PartialAssignment& e, const PartialAssignment& ep, const InstanceSet& x) {
  return cov(e, x) == cov(ep, x);
}

}  // namespace cpixp
