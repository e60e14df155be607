#pragma once

#include <string>
#include <vector>

#include "cpixp/format.hpp"
#include "cpixp/io.hpp"
#include "cpixp/scenario.hpp"

namespace testing_support {

inline cpixp::Scenario fixture(const std::string& name) {
  return cpixp::load_fixture(std::string(CPIXP_FIXTURES_DIR) + "/" + name);
}

inline cpixp::Instance inst(const cpixp::Theory& t, const std::string& text) {
  return cpixp::parse_instance(t, text);
}

inline cpixp::PartialAssignment pa(const cpixp::Theory& t, const std::string& text) {
  return cpixp::parse_assignment(t, text);
}

// Sets given in text form, in the engines' output order.
inline std::vector<cpixp::PartialAssignment> sets(const cpixp::Theory& t,
                                                  const std::vector<std::string>& texts) {
  std::vector<cpixp::PartialAssignment> out;
  for (const std::string& s : texts) out.push_back(pa(t, s));
  std::sort(out.begin(), out.end(), cpixp::ByCardinality());
  return out;
}

}  // namespace testing_support
