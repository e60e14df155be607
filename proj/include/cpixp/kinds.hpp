#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "cpixp/theory.hpp"

namespace cpixp {

enum class ExplanationKind {
  kWaxp,
  kAxp,
  kWaxpc,
  kAxpc,
  kCpi,
  kMcpi,
  kPcpi,
  kDWaxp,
  kDAxp,
  kDCpi,
  kDMcpi,
  kDPcpi,
};

inline constexpr std::array<ExplanationKind, 12> kAllKinds = {
    ExplanationKind::kWaxp,  ExplanationKind::kAxp,   ExplanationKind::kWaxpc,
    ExplanationKind::kAxpc,  ExplanationKind::kCpi,   ExplanationKind::kMcpi,
    ExplanationKind::kPcpi,  ExplanationKind::kDWaxp, ExplanationKind::kDAxp,
    ExplanationKind::kDCpi,  ExplanationKind::kDMcpi, ExplanationKind::kDPcpi,
};

// CLI spelling: "waxp", "axp", ..., "d-pcpi".
std::string_view kind_name(ExplanationKind kind);
std::optional<ExplanationKind> parse_kind(std::string_view name);
bool is_dataset_kind(ExplanationKind kind);
// wAXp and AXp quantify over the whole feature space, not F[C].
bool is_unconstrained_kind(ExplanationKind kind);

struct ExplanationResult {
  PartialAssignment explanation;
  ExplanationKind kind = ExplanationKind::kWaxp;
  std::size_t oracle_calls = 0;  // queries issued by the search itself
  std::size_t iterations = 0;    // outer counter-example rounds
  std::size_t check_calls = 0;   // queries spent verifying preconditions
  std::vector<PartialAssignment> closure_trace;  // closure set of each round
};

}  // namespace cpixp
