#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpixp/classifier.hpp"
#include "cpixp/constraints.hpp"
#include "cpixp/dataset_engine.hpp"
#include "cpixp/scenario.hpp"
#include "cpixp/theory.hpp"

namespace cpixp {

// Parsers for the JSON documents and the dataset CSV. All throw ParseError on
// malformed text and StructuralError on well-formed but inconsistent content.
Theory parse_theory(std::string_view json);
Classifier parse_classifier(const Theory& theory, std::string_view json);
ConstraintSet parse_constraints(const Theory& theory, std::string_view json,
                                std::uint64_t budget = kDefaultSpaceBudget);

// Header = feature names, optionally followed by a `class` column. Without a
// class column `k` supplies the labels; with both, every row must agree.
Dataset parse_dataset(const Theory& theory, std::string_view csv, const Classifier* k,
                      const ConstraintSet* c);

std::string read_file(const std::filesystem::path& path);

struct ScenarioPaths {
  std::filesystem::path theory;
  std::optional<std::filesystem::path> classifier;
  std::optional<std::filesystem::path> constraints;
  std::optional<std::filesystem::path> dataset;
};

Scenario load_scenario(const std::string& name, const ScenarioPaths& paths,
                       const Budgets& budgets = {});

// A directory holding theory.json and optionally classifier.json,
// constraints.json and dataset.csv.
Scenario load_fixture(const std::filesystem::path& dir, const Budgets& budgets = {});

// Sub-directories of `root` that contain a theory.json, sorted by name.
std::vector<std::string> list_fixtures(const std::filesystem::path& root);

}  // namespace cpixp
