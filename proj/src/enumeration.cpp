#include "cpixp/enumeration.hpp"

#include <algorithm>
#include <bit>

#include "cpixp/errors.hpp"

namespace cpixp {
namespace {

PartialAssignment subset_of(const Instance& x, std::uint64_t mask) {
  std::vector<Literal> literals;
  for (FeatureId f = 0; f < x.size(); ++f) {
    if (mask >> f & 1) literals.push_back(x.literal(f));
  }
  return PartialAssignment(std::move(literals));
}

std::uint64_t mask_of(const PartialAssignment& e) {
  std::uint64_t mask = 0;
  for (const Literal& l : e) mask |= std::uint64_t{1} << l.feature;
  return mask;
}

// No proper submask of m is a member.
bool subset_minimal(std::uint64_t m, const std::vector<char>& member) {
  if (m == 0) return true;
  for (std::uint64_t s = (m - 1) & m;; s = (s - 1) & m) {
    if (member[s]) return false;
    if (s == 0) return true;
  }
}

}  // namespace

std::vector<PartialAssignment> enumerate_subsets(const InstanceSet& space,
                                                 std::span<const ClassIndex> labels,
                                                 const Instance& x, ClassIndex target,
                                                 Family family, std::size_t subset_budget,
                                                 const ConstraintSet* c) {
  const std::size_t n = x.size();
  if (n > subset_budget || n >= 63) {
    throw CapacityError("cannot enumerate subsets of " + std::to_string(n) +
                        " literals, budget is " + std::to_string(subset_budget));
  }
  if (labels.size() != space.size()) throw StructuralError("one label per member expected");
  Bits other(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (labels[i] != target) other.set(i);
  }

  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<Bits> cover(count);
  std::vector<char> weak(count);
  cover[0] = space.all();
  for (std::uint64_t m = 0; m < count; ++m) {
    if (m > 0) {
      const std::uint64_t low = m & (~m + 1);
      cover[m] = cover[m ^ low] & space.literal_bits(x.literal(std::countr_zero(low)));
    }
    weak[m] = !cover[m].intersects(other) && (!c || c->satisfies(subset_of(x, m)));
  }

  std::vector<std::uint64_t> chosen;
  if (family == Family::kWeak || family == Family::kMinimal) {
    for (std::uint64_t m = 0; m < count; ++m) {
      if (weak[m] && (family == Family::kWeak || subset_minimal(m, weak))) chosen.push_back(m);
    }
  } else {
    std::vector<const Bits*> weak_covers;
    for (std::uint64_t m = 0; m < count; ++m) {
      if (weak[m]) weak_covers.push_back(&cover[m]);
    }
    std::vector<char> unsubsumed(count, 0);
    for (std::uint64_t m = 0; m < count; ++m) {
      if (!weak[m]) continue;
      unsubsumed[m] = std::none_of(weak_covers.begin(), weak_covers.end(), [&](const Bits* b) {
        return cover[m].is_proper_subset_of(*b);
      });
    }
    for (std::uint64_t m = 0; m < count; ++m) {
      if (!unsubsumed[m]) continue;
      if (family == Family::kUnsubsumed || subset_minimal(m, unsubsumed)) chosen.push_back(m);
    }
    if (family == Family::kRepresentative) {
      std::vector<std::uint64_t> minimal = std::move(chosen);
      chosen.clear();
      std::vector<const Bits*> seen;
      for (std::uint64_t m : minimal) {
        if (std::any_of(seen.begin(), seen.end(), [&](const Bits* b) { return *b == cover[m]; })) {
          continue;
        }
        seen.push_back(&cover[m]);
        std::uint64_t closure_mask = 0;
        for (FeatureId f = 0; f < n; ++f) {
          if (cover[m].is_subset_of(space.literal_bits(x.literal(f)))) {
            closure_mask |= std::uint64_t{1} << f;
          }
        }
        PartialAssignment rep = closure_representative(
            subset_of(x, closure_mask),
            [&](const PartialAssignment& e) { return weak[mask_of(e)] != 0; },
            [&](const PartialAssignment& e, const PartialAssignment& l) {
              return cover[mask_of(e)].is_subset_of(cover[mask_of(l)]);
            });
        chosen.push_back(mask_of(rep));
      }
    }
  }

  std::vector<PartialAssignment> out;
  out.reserve(chosen.size());
  for (std::uint64_t m : chosen) out.push_back(subset_of(x, m));
  std::sort(out.begin(), out.end(), ByCardinality());
  return out;
}

}  // namespace cpixp
