#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpixp/dataset_engine.hpp"
#include "cpixp/errors.hpp"
#include "cpixp/exact_engine.hpp"
#include "cpixp/format.hpp"
#include "cpixp/generators.hpp"
#include "cpixp/io.hpp"
#include "cpixp/properties.hpp"

namespace {

using namespace cpixp;
using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitInfeasible = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInput = 4;
constexpr int kExitTableMismatch = 5;

struct Options {
  std::string theory;
  std::string classifier;
  std::string constraints;
  std::string dataset;
  std::string fixture;
  std::string fixtures_dir = CPIXP_FIXTURES_DIR;
  std::string instance;
  std::string kind;
  std::uint64_t budget_space = kDefaultSpaceBudget;
  std::size_t budget_subsets = kDefaultSubsetBudget;
  std::uint64_t seed = 1;
  std::string format = "text";

  // properties
  std::string fixtures = "all";
  std::size_t random = 50;

  // bench
  std::string family = "majority";
  std::string n_range = "3..7";
  bool no_timing = false;

  Budgets budgets() const { return {budget_space, budget_subsets}; }
};

void add_scenario_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--theory", o.theory, "Theory JSON file");
  cmd->add_option("--classifier", o.classifier, "Classifier JSON file");
  cmd->add_option("--constraints", o.constraints, "Constraints JSON file");
  cmd->add_option("--dataset", o.dataset, "Dataset CSV file");
  cmd->add_option("--fixture", o.fixture, "Load a named fixture directory instead of files");
  cmd->add_option("--fixtures-dir", o.fixtures_dir, "Directory holding the fixtures");
}

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget-space", o.budget_space, "Largest feature space to enumerate");
  cmd->add_option("--budget-subsets", o.budget_subsets, "Largest literal set to take subsets of");
  cmd->add_option("--seed", o.seed, "Seed for randomized scenarios");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

Scenario load(const Options& o) {
  if (!o.fixture.empty()) return load_fixture(fs::path(o.fixtures_dir) / o.fixture, o.budgets());
  if (o.theory.empty()) throw StructuralError("either --fixture or --theory is required");
  ScenarioPaths paths{o.theory};
  if (!o.classifier.empty()) paths.classifier = o.classifier;
  if (!o.constraints.empty()) paths.constraints = o.constraints;
  if (!o.dataset.empty()) paths.dataset = o.dataset;
  if (!paths.classifier && !paths.dataset) {
    throw StructuralError("a classifier or a dataset is required");
  }
  return load_scenario(fs::path(o.theory).stem().string(), paths, o.budgets());
}

ExplanationKind require_kind(const std::string& name) {
  auto kind = parse_kind(name);
  if (!kind) throw ParseError("unknown kind '" + name + "'", 0);
  return *kind;
}

// Engines for a scenario, built on demand.
struct Engines {
  const Scenario& scenario;
  Budgets budgets;
  std::optional<ExactExplainer> exact;
  std::optional<DatasetExplainer> sampled;

  const ExactExplainer& get_exact() {
    if (!scenario.classifier) throw PreconditionError("this kind needs a classifier");
    if (!exact) exact.emplace(scenario.constraints, *scenario.classifier, budgets);
    return *exact;
  }
  const DatasetExplainer& get_sampled() {
    if (!scenario.dataset) throw PreconditionError("this kind needs a dataset");
    if (!sampled) sampled.emplace(*scenario.dataset, budgets);
    return *sampled;
  }

  // Size of the coverage of e and of the space it is measured in.
  std::pair<std::size_t, std::size_t> coverage(ExplanationKind kind, const PartialAssignment& e) {
    const InstanceSet& space = is_dataset_kind(kind) ? get_sampled().rows()
                                                     : get_exact().reference_space(kind);
    return {cov(e, space).count(), space.size()};
  }
};

json literal_list(const Theory& theory, const PartialAssignment& e) {
  json out = json::array();
  for (const Literal& l : e) out.push_back(to_string(theory, l));
  return out;
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

int cmd_explain(const Options& o) {
  Scenario s = load(o);
  const ExplanationKind kind = require_kind(o.kind);
  const Instance x = parse_instance(s.theory, o.instance);
  s.constraints.require_feasible(x);
  Engines engines{s, o.budgets()};
  ExplanationResult r = is_dataset_kind(kind) ? engines.get_sampled().find(kind, x)
                                              : engines.get_exact().find(kind, x);
  auto [covered, total] = engines.coverage(kind, r.explanation);
  if (o.format == "json") {
    json doc = {{"kind", kind_name(kind)},
                {"instance", literal_list(s.theory, PartialAssignment::of(x))},
                {"explanation", literal_list(s.theory, r.explanation)},
                {"coverage", covered},
                {"reference_size", total},
                {"oracle_calls", r.oracle_calls},
                {"iterations", r.iterations}};
    std::cout << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "kind,explanation,coverage,reference_size,oracle_calls,iterations\n"
              << kind_name(kind) << "," << csv_cell(to_string(s.theory, r.explanation)) << ","
              << covered << "," << total << "," << r.oracle_calls << "," << r.iterations << "\n";
  } else {
    std::cout << to_string(s.theory, r.explanation) << " coverage=" << covered << "/" << total
              << " oracle_calls=" << r.oracle_calls << " iterations=" << r.iterations << "\n";
  }
  return 0;
}

int cmd_enumerate(const Options& o) {
  Scenario s = load(o);
  const Instance x = parse_instance(s.theory, o.instance);
  s.constraints.require_feasible(x);
  Engines engines{s, o.budgets()};

  std::vector<ExplanationKind> kinds;
  if (o.kind == "all") {
    for (ExplanationKind k : kAllKinds) {
      if (is_dataset_kind(k) ? (s.dataset && s.dataset->contains(x)) : s.classifier.has_value()) {
        kinds.push_back(k);
      }
    }
  } else {
    kinds.push_back(require_kind(o.kind));
  }

  json doc = json::array();
  if (o.format == "csv") std::cout << "kind,explanation,coverage,reference_size\n";
  for (ExplanationKind k : kinds) {
    std::vector<PartialAssignment> sets = is_dataset_kind(k)
                                              ? engines.get_sampled().enumerate_all_d(k, x)
                                              : engines.get_exact().enumerate_all(k, x);
    if (o.format == "text") std::cout << kind_name(k) << " count=" << sets.size() << "\n";
    json entry = {{"kind", kind_name(k)}, {"count", sets.size()}, {"explanations", json::array()}};
    for (const PartialAssignment& e : sets) {
      auto [covered, total] = engines.coverage(k, e);
      if (o.format == "text") {
        std::cout << "  " << to_string(s.theory, e) << " coverage=" << covered << "/" << total
                  << "\n";
      } else if (o.format == "csv") {
        std::cout << kind_name(k) << "," << csv_cell(to_string(s.theory, e)) << "," << covered
                  << "," << total << "\n";
      }
      entry["explanations"].push_back(
          {{"literals", literal_list(s.theory, e)}, {"coverage", covered}});
    }
    doc.push_back(entry);
  }
  if (o.format == "json") std::cout << doc.dump(2) << "\n";
  return 0;
}

std::string describe_witness(const Scenario& s, const Witness& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.instances.size(); ++i) {
    out << (i ? " " : "") << "x" << i + 1 << "=" << to_string(s.theory, w.instances[i]);
  }
  for (std::size_t i = 0; i < w.explanations.size(); ++i) {
    out << " E" << i + 1 << "=" << to_string(s.theory, w.explanations[i]);
  }
  out << " (" << w.note << ")";
  return out.str();
}

int cmd_properties(const Options& o) {
  std::vector<std::string> names;
  if (o.fixtures == "all") {
    names = list_fixtures(o.fixtures_dir);
  } else {
    std::stringstream list(o.fixtures);
    for (std::string name; std::getline(list, name, ',');) {
      if (!name.empty()) names.push_back(name);
    }
  }
  std::vector<Scenario> scenarios;
  for (const std::string& name : names) {
    scenarios.push_back(load_fixture(fs::path(o.fixtures_dir) / name, o.budgets()));
  }
  for (Scenario& s : random_scenarios(o.random, o.seed)) scenarios.push_back(std::move(s));
  auto find_scenario = [&](const std::string& name) -> const Scenario& {
    for (const Scenario& s : scenarios) {
      if (s.name == name) return s;
    }
    return scenarios.front();
  };

  const Table2Result table = table2_matrix(scenarios, o.budgets());
  auto mark = [](bool satisfied) { return satisfied ? "✓" : "×"; };

  if (o.format == "json") {
    json doc = {{"scenarios", scenarios.size()}, {"matches", table.matches()},
                {"cells", json::array()}};
    for (const Table2Cell& c : table.cells) {
      json cell = {{"property", property_name(c.property)},
                   {"kind", kind_name(c.kind)},
                   {"expected", c.expected ? "satisfied" : "violated"},
                   {"observed", c.observed == Verdict::kViolated ? "violated" : "no-violation-found"},
                   {"scenarios_checked", c.scenarios_checked}};
      if (c.witness) {
        cell["scenario"] = c.witness->scenario;
        cell["witness"] = describe_witness(find_scenario(c.witness->scenario), *c.witness->witness);
        cell["revalidated"] = c.witness_revalidated;
      }
      doc["cells"].push_back(cell);
    }
    std::cout << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "property,kind,expected,observed,scenario,witness\n";
    for (const Table2Cell& c : table.cells) {
      std::cout << property_name(c.property) << "," << kind_name(c.kind) << ","
                << (c.expected ? "satisfied" : "violated") << ","
                << (c.observed == Verdict::kViolated ? "violated" : "no-violation-found") << ",";
      if (c.witness) {
        std::cout << c.witness->scenario << ","
                  << csv_cell(describe_witness(find_scenario(c.witness->scenario),
                                               *c.witness->witness));
      } else {
        std::cout << ",";
      }
      std::cout << "\n";
    }
  } else {
    std::cout << std::left;
    std::cout << "                ";
    for (ExplanationKind k : kTable2Columns) {
      std::string name(kind_name(k));
      std::cout << name << std::string(name.size() < 8 ? 8 - name.size() : 1, ' ');
    }
    std::cout << "\n";
    for (Property p : kAllProperties) {
      std::string name(property_name(p));
      std::cout << name << std::string(16 - name.size(), ' ');
      for (ExplanationKind k : kTable2Columns) {
        const Table2Cell& c = table.cell(p, k);
        std::cout << mark(c.observed == Verdict::kNoViolationFound) << (c.matches() ? " " : "!")
                  << "      ";
      }
      std::cout << "\n";
    }
    std::cout << "\nscenarios: " << scenarios.size() << "\n";
    for (const Table2Cell& c : table.cells) {
      if (!c.witness) continue;
      std::cout << property_name(c.property) << " / " << kind_name(c.kind) << ": "
                << c.witness->scenario << " "
                << describe_witness(find_scenario(c.witness->scenario), *c.witness->witness)
                << "\n";
    }
  }

  if (table.matches()) return 0;
  for (const Table2Cell& c : table.cells) {
    if (c.matches()) continue;
    std::cerr << "divergent cell: " << property_name(c.property) << " / " << kind_name(c.kind)
              << " expected " << (c.expected ? "satisfied" : "violated") << ", observed "
              << (c.observed == Verdict::kViolated ? "violated" : "no violation")
              << (c.observed == Verdict::kViolated && !c.witness_revalidated
                      ? " (witness failed revalidation)"
                      : "")
              << "\n";
  }
  return kExitTableMismatch;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  try {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      std::size_t n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw ParseError("expected N or A..B, got '" + text + "'", 0);
  }
}

int cmd_bench(const Options& o) {
  auto [lo, hi] = parse_range(o.n_range);
  if (lo > hi) throw ParseError("empty range '" + o.n_range + "'", 0);
  if (o.family != "majority" && o.family != "random") {
    throw ParseError("unknown family '" + o.family + "'", 0);
  }
  std::cout << "n,axpc_count,cpi_count,runtime_ms,cpi_iterations\n";
  for (std::size_t n = lo; n <= hi; ++n) {
    Scenario s = o.family == "majority" ? majority_scenario(n)
                                        : std::move(random_scenarios(1, o.seed + n, n, n).front());
    ExactExplainer engine(s.constraints, *s.classifier, o.budgets());
    Instance x = o.family == "majority" ? Instance(std::vector<ValueIndex>(n, 1))
                                        : engine.feasible_space()[0];
    const std::size_t axpc = engine.enumerate_all(ExplanationKind::kAxpc, x).size();
    const std::size_t cpi = engine.enumerate_all(ExplanationKind::kCpi, x).size();
    const auto start = std::chrono::steady_clock::now();
    ExplanationResult r = engine.find_cpi_xp(x);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    std::cout << n << "," << axpc << "," << cpi << ",";
    if (o.no_timing) {
      std::cout << "-";
    } else {
      std::cout << ms;
    }
    std::cout << "," << r.iterations << "\n";
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Constrained abductive explanations of finite-domain classifiers"};
  app.require_subcommand(1);
  Options o;

  auto* explain = app.add_subcommand("explain", "Compute one explanation of a decision");
  add_scenario_options(explain, o);
  add_common_options(explain, o);
  explain->add_option("--instance", o.instance, "Instance such as f1=1,f2=0")->required();
  explain->add_option("--kind", o.kind, "Explanation kind")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every explanation of a decision");
  add_scenario_options(enumerate, o);
  add_common_options(enumerate, o);
  enumerate->add_option("--instance", o.instance, "Instance such as f1=1,f2=0")->required();
  enumerate->add_option("--kind", o.kind, "Explanation kind, or 'all'")->required();

  auto* properties = app.add_subcommand("properties", "Check the explainer properties matrix");
  properties->add_option("--fixtures", o.fixtures, "'all' or a comma separated list of fixtures");
  properties->add_option("--fixtures-dir", o.fixtures_dir, "Directory holding the fixtures");
  properties->add_option("--random", o.random, "Number of random scenarios to add");
  add_common_options(properties, o);

  auto* bench = app.add_subcommand("bench", "Explanation counts and timings on a family");
  bench->add_option("--family", o.family, "majority or random");
  bench->add_option("--n", o.n_range, "Feature count or range A..B");
  bench->add_flag("--no-timing", o.no_timing, "Print '-' instead of the runtime");
  add_common_options(bench, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*explain) return cmd_explain(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*properties) return cmd_properties(o);
    return cmd_bench(o);
  } catch (const InfeasibleInstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
