#pragma once

#include <optional>
#include <string>

#include "cpixp/classifier.hpp"
#include "cpixp/constraints.hpp"
#include "cpixp/dataset_engine.hpp"
#include "cpixp/theory.hpp"

namespace cpixp {

// Everything one query or property check runs against.
struct Scenario {
  std::string name;
  Theory theory;
  ConstraintSet constraints;
  std::optional<Classifier> classifier;
  std::optional<Dataset> dataset;
};

}  // namespace cpixp
