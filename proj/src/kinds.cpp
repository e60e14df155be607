#include "cpixp/kinds.hpp"

namespace cpixp {

std::string_view kind_name(ExplanationKind kind) {
  switch (kind) {
    case ExplanationKind::kWaxp: return "waxp";
    case ExplanationKind::kAxp: return "axp";
    case ExplanationKind::kWaxpc: return "waxpc";
    case ExplanationKind::kAxpc: return "axpc";
    case ExplanationKind::kCpi: return "cpi";
    case ExplanationKind::kMcpi: return "mcpi";
    case ExplanationKind::kPcpi: return "pcpi";
    case ExplanationKind::kDWaxp: return "d-waxp";
    case ExplanationKind::kDAxp: return "d-axp";
    case ExplanationKind::kDCpi: return "d-cpi";
    case ExplanationKind::kDMcpi: return "d-mcpi";
    case ExplanationKind::kDPcpi: return "d-pcpi";
  }
  return "?";
}

std::optional<ExplanationKind> parse_kind(std::string_view name) {
  for (ExplanationKind k : kAllKinds) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

bool is_dataset_kind(ExplanationKind kind) { return kind >= ExplanationKind::kDWaxp; }

bool is_unconstrained_kind(ExplanationKind kind) {
  return kind == ExplanationKind::kWaxp || kind == ExplanationKind::kAxp;
}

}  // namespace cpixp
