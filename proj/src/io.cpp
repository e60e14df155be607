#include "cpixp/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <json.hpp>

#include "cpixp/errors.hpp"
#include "cpixp/format.hpp"

namespace cpixp {
namespace {

using nlohmann::json;

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what(), e.byte);
  }
}

const json& require(const json& doc, const char* key, const std::string& what) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw StructuralError(what + ": missing field '" + key + "'");
  }
  return doc.at(key);
}

std::vector<std::string> string_list(const json& node, const std::string& what) {
  if (!node.is_array()) throw StructuralError(what + ": expected a list");
  std::vector<std::string> out;
  for (const json& item : node) {
    if (item.is_string()) {
      out.push_back(item.get<std::string>());
    } else if (item.is_number_integer()) {
      out.push_back(std::to_string(item.get<long long>()));
    } else {
      throw StructuralError(what + ": expected strings");
    }
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  boost::split(cells, line, boost::is_any_of(","));
  for (std::string& cell : cells) boost::trim(cell);
  return cells;
}

}  // namespace

Theory parse_theory(std::string_view text) {
  const json doc = parse_json(text, "theory");
  std::vector<Feature> features;
  const json& list = require(doc, "features", "theory");
  if (!list.is_array()) throw StructuralError("theory: 'features' must be a list");
  for (const json& f : list) {
    const json& name = require(f, "name", "theory feature");
    if (!name.is_string()) throw StructuralError("theory: feature name must be a string");
    features.push_back(
        {name.get<std::string>(), string_list(require(f, "domain", "theory feature"), "domain")});
  }
  return Theory(std::move(features), string_list(require(doc, "classes", "theory"), "classes"));
}

Classifier parse_classifier(const Theory& theory, std::string_view text) {
  const json doc = parse_json(text, "classifier");
  const json& kind = require(doc, "kind", "classifier");
  if (kind == "expr") {
    const json& formula = require(doc, "formula", "classifier");
    if (!formula.is_string()) throw StructuralError("classifier: formula must be a string");
    return Classifier::from_expression(theory, formula.get<std::string>());
  }
  if (kind != "table") throw StructuralError("classifier: kind must be 'expr' or 'table'");
  std::vector<std::pair<Instance, ClassIndex>> rows;
  const json& list = require(doc, "rows", "classifier");
  if (!list.is_array()) throw StructuralError("classifier: 'rows' must be a list");
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::vector<std::string> cells = string_list(list[i], "classifier row");
    if (cells.size() != theory.num_features() + 1) {
      throw StructuralError("classifier row " + std::to_string(i + 1) + ": expected " +
                            std::to_string(theory.num_features() + 1) + " cells");
    }
    auto c = theory.find_class(cells.back());
    if (!c) {
      throw StructuralError("classifier row " + std::to_string(i + 1) + ": unknown class '" +
                            cells.back() + "'");
    }
    cells.pop_back();
    rows.emplace_back(instance_from_tokens(theory, cells), *c);
  }
  return Classifier::from_rows(theory, rows);
}

ConstraintSet parse_constraints(const Theory& theory, std::string_view text,
                                std::uint64_t budget) {
  const json doc = parse_json(text, "constraints");
  if (!doc.is_object()) throw StructuralError("constraints: expected an object");
  std::vector<Nogood> nogoods;
  std::vector<Implication> implications;
  if (doc.contains("nogoods")) {
    for (const json& g : doc.at("nogoods")) {
      nogoods.push_back({parse_literal_list(theory, string_list(g, "nogood"))});
    }
  }
  if (doc.contains("implications")) {
    for (const json& imp : doc.at("implications")) {
      implications.push_back(
          {parse_literal_list(theory, string_list(require(imp, "if", "implication"), "if")),
           parse_literal_list(theory, string_list(require(imp, "then", "implication"), "then"))});
    }
  }
  if (doc.contains("expression")) {
    const json& e = doc.at("expression");
    if (!e.is_string()) throw StructuralError("constraints: expression must be a string");
    for (Nogood& g : compile_expression(Expression::parse(theory, e.get<std::string>()), theory,
                                        budget)) {
      nogoods.push_back(std::move(g));
    }
  }
  return ConstraintSet(theory, std::move(nogoods), std::move(implications));
}

Dataset parse_dataset(const Theory& theory, std::string_view csv, const Classifier* k,
                      const ConstraintSet* c) {
  std::istringstream in{std::string(csv)};
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    boost::trim(line);
    if (!line.empty()) {
      header = split_csv_line(line);
      break;
    }
  }
  if (header.empty()) throw ParseError("dataset: missing header row", 0);
  const std::size_t n = theory.num_features();
  bool has_class = header.size() == n + 1 && header.back() == "class";
  if (header.size() != n + (has_class ? 1 : 0)) {
    throw StructuralError("dataset header: expected the " + std::to_string(n) +
                          " feature names, optionally followed by 'class'");
  }
  for (FeatureId f = 0; f < n; ++f) {
    if (header[f] != theory.feature(f).name) {
      throw StructuralError("dataset header: column " + std::to_string(f + 1) + " is '" +
                            header[f] + "', expected '" + theory.feature(f).name + "'");
    }
  }
  if (!has_class && !k) throw StructuralError("dataset has no class column and no classifier");

  std::vector<std::pair<Instance, ClassIndex>> rows;
  std::size_t row_number = 0;
  while (std::getline(in, line)) {
    boost::trim(line);
    if (line.empty()) continue;
    ++row_number;
    const std::string where = "dataset row " + std::to_string(row_number) + ": ";
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw ParseError(where + "expected " + std::to_string(header.size()) + " cells, got " +
                           std::to_string(cells.size()),
                       row_number);
    }
    std::optional<ClassIndex> label;
    if (has_class) {
      label = theory.find_class(cells.back());
      if (!label) throw StructuralError(where + "unknown class '" + cells.back() + "'");
      cells.pop_back();
    }
    Instance x;
    try {
      x = instance_from_tokens(theory, cells);
    } catch (const StructuralError& e) {
      throw StructuralError(where + e.what());
    }
    if (k) {
      ClassIndex predicted = k->evaluate(x);
      if (label && *label != predicted) {
        throw StructuralError(where + "label '" + theory.classes()[*label] +
                              "' disagrees with the classifier ('" +
                              theory.classes()[predicted] + "')");
      }
      label = predicted;
    }
    rows.emplace_back(std::move(x), *label);
  }
  return Dataset(theory, rows, c);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Scenario load_scenario(const std::string& name, const ScenarioPaths& paths,
                       const Budgets& budgets) {
  Theory theory = parse_theory(read_file(paths.theory));
  ConstraintSet constraints =
      paths.constraints ? parse_constraints(theory, read_file(*paths.constraints), budgets.space)
                        : ConstraintSet(theory);
  std::optional<Classifier> classifier;
  if (paths.classifier) classifier = parse_classifier(theory, read_file(*paths.classifier));
  std::optional<Dataset> dataset;
  if (paths.dataset) {
    dataset = parse_dataset(theory, read_file(*paths.dataset),
                            classifier ? &*classifier : nullptr, &constraints);
  }
  return Scenario{name, std::move(theory), std::move(constraints), std::move(classifier),
                  std::move(dataset)};
}

Scenario load_fixture(const std::filesystem::path& dir, const Budgets& budgets) {
  namespace fs = std::filesystem;
  if (!fs::exists(dir / "theory.json")) {
    throw StructuralError("no fixture at " + dir.string());
  }
  ScenarioPaths paths{dir / "theory.json"};
  if (fs::exists(dir / "classifier.json")) paths.classifier = dir / "classifier.json";
  if (fs::exists(dir / "constraints.json")) paths.constraints = dir / "constraints.json";
  if (fs::exists(dir / "dataset.csv")) paths.dataset = dir / "dataset.csv";
  return load_scenario(dir.filename().string(), paths, budgets);
}

std::vector<std::string> list_fixtures(const std::filesystem::path& root) {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (entry.is_directory() && std::filesystem::exists(entry.path() / "theory.json")) {
      names.push_back(entry.path().filename().string());
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace cpixp
