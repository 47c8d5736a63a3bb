#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "gysincalc/approx.hpp"

namespace gysincalc::approx {

/// Settings for the formula audit.  The seed drives every sampled input, so
/// equal configurations produce byte-identical reports.
struct AuditConfig {
  std::vector<int> r_values = {2, 3, 4, 5};
  std::uint64_t seed = 42;
  int samples = 50;
};

/// Runs the full audit: oracle cross-validation, each formula variant
/// against the oracles, the claimed properties of the constants (alpha
/// positive, beta independent of s), the variable-dictionary identities,
/// per-quotient coefficient checks, the decay law, and the Grassmann ratio.
/// Claim verdicts are findings; only internal oracle disagreement throws.
nlohmann::json run_audit(const AuditConfig& config);

/// Serialized form used by the CLI: 2-space indentation, trailing newline,
/// keys in sorted order.
std::string audit_to_string(const nlohmann::json& report);

}  // namespace gysincalc::approx
