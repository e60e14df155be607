#pragma once

#include <cstdint>
#include <vector>

#include "cpixp/scenario.hpp"

namespace cpixp {

// kappa = f_n over n binary features, with f_n <-> (f_1 + ... + f_{n-1} >= floor(n/2)).
Scenario majority_scenario(std::size_t n);

// Small random scenarios: min_features to max_features binary features,
// random nogoods admitting at least one instance, a random truth table that is
// not constant over F[C], and (when one can be drawn) a labeled sample of
// F[C] containing both classes.
std::vector<Scenario> random_scenarios(std::size_t count, std::uint64_t seed,
                                       std::size_t min_features = 2,
                                       std::size_t max_features = 4);

// m rows over n binary features, labeled by [f_1 + ... + f_5 >= 3] (or by
// the majority of all features when n < 5).
Dataset synthetic_dataset(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace cpixp
