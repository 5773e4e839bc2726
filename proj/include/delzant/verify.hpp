#pragma once

// Property suite run by the `verify` command: chart identities, dual-route
// section bases and the numeric checks on the potential at one vertex.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "delzant/polytope.hpp"

namespace delzant {

struct CheckResult {
  std::string name;
  bool passed;
  double observed;   // worst deviation (or 0/1 for exact checks)
  double tolerance;  // 0 for exact checks
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  std::size_t samples = 20;
  std::size_t vertex = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Requires a Delzant polytope; rational offsets are cleared first.
VerifyReport run_verification(const HalfspacePolytope& p, const VerifyOptions& options = {});

}  // namespace delzant
