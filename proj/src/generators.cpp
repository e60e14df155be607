#include "cpixp/generators.hpp"

#include <random>
#include <string>

#include "cpixp/errors.hpp"

namespace cpixp {
namespace {

Theory binary_theory(std::size_t n) {
  std::vector<Feature> features;
  for (std::size_t i = 1; i <= n; ++i) features.push_back({"f" + std::to_string(i), {"0", "1"}});
  return Theory(std::move(features), {"0", "1"});
}

// Calls `visit` with every k-subset of {0, ..., n-1}, in lexicographic order.
template <typename Visit>
void combinations(std::size_t n, std::size_t k, Visit visit) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    visit(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

Scenario majority_scenario(std::size_t n) {
  if (n < 2) throw PreconditionError("the majority family needs at least 2 features");
  Theory theory = binary_theory(n);
  const std::size_t k = n / 2;
  const FeatureId last = static_cast<FeatureId>(n - 1);
  std::vector<Nogood> nogoods;
  combinations(n - 1, k, [&](const std::vector<std::size_t>& ones) {
    std::vector<Literal> lits{{last, 0}};
    for (std::size_t f : ones) lits.push_back({static_cast<FeatureId>(f), 1});
    nogoods.push_back({PartialAssignment(std::move(lits))});
  });
  if (n - k <= n - 1) {
    combinations(n - 1, n - k, [&](const std::vector<std::size_t>& zeros) {
      std::vector<Literal> lits{{last, 1}};
      for (std::size_t f : zeros) lits.push_back({static_cast<FeatureId>(f), 0});
      nogoods.push_back({PartialAssignment(std::move(lits))});
    });
  }
  ConstraintSet constraints(theory, std::move(nogoods));
  Classifier k_n = Classifier::from_expression(theory, "f" + std::to_string(n) + "=1");
  return Scenario{"ex4-n" + std::to_string(n), theory, std::move(constraints), k_n, std::nullopt};
}

std::vector<Scenario> random_scenarios(std::size_t count, std::uint64_t seed,
                                       std::size_t min_features, std::size_t max_features) {
  if (min_features < 1 || max_features < min_features) {
    throw PreconditionError("bad feature range for random scenarios");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::vector<Scenario> out;
  while (out.size() < count) {
    const std::size_t n = uniform(min_features, max_features);
    Theory theory = binary_theory(n);

    std::vector<Nogood> nogoods;
    const std::size_t nogood_count = uniform(0, n);
    for (std::size_t g = 0; g < nogood_count; ++g) {
      std::vector<Literal> lits;
      for (FeatureId f = 0; f < n; ++f) {
        if (uniform(0, 1)) lits.push_back({f, static_cast<ValueIndex>(uniform(0, 1))});
      }
      if (lits.empty()) lits.push_back({static_cast<FeatureId>(uniform(0, n - 1)), 0});
      nogoods.push_back({PartialAssignment(std::move(lits))});
    }
    std::optional<ConstraintSet> constraints;
    try {
      constraints.emplace(theory, nogoods);
    } catch (const UnsatisfiableConstraintsError&) {
      continue;
    }
    std::vector<Instance> feasible = feasible_space(*constraints);

    std::vector<ClassIndex> table(theory.space_size());
    for (ClassIndex& c : table) c = static_cast<ClassIndex>(uniform(0, 1));
    Classifier k = Classifier::from_table(theory, table);
    try {
      assert_non_constant(k, feasible);
    } catch (const ConstantClassifierError&) {
      continue;
    }

    std::vector<Instance> sample;
    bool seen[2] = {false, false};
    for (const Instance& x : feasible) {
      if (uniform(0, 4) < 3) {
        sample.push_back(x);
        seen[k(x)] = true;
      }
    }
    std::optional<Dataset> dataset;
    if (seen[0] && seen[1]) dataset = Dataset::labeled_by(k, sample, &*constraints);

    out.push_back(Scenario{"random-" + std::to_string(out.size()), theory,
                           std::move(*constraints), k, std::move(dataset)});
  }
  return out;
}

Dataset synthetic_dataset(std::size_t n, std::size_t m, std::uint64_t seed) {
  Theory theory = binary_theory(n);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  const std::size_t voters = std::min<std::size_t>(5, n);
  std::vector<std::pair<Instance, ClassIndex>> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<ValueIndex> values(n);
    for (ValueIndex& v : values) v = coin(rng) ? 1 : 0;
    std::size_t ones = 0;
    for (std::size_t f = 0; f < voters; ++f) ones += values[f];
    const ClassIndex label = 2 * ones > voters ? 1 : 0;
    rows.emplace_back(Instance(std::move(values)), label);
  }
  return Dataset(theory, rows);
}

}  // namespace cpixp
