#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/curve.hpp"
#include "core/serialize.hpp"

namespace polyhardy {

struct PropertyResult {
  std::string name;
  double defect = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string note;
};

struct VerifyConfig {
  CurvePtr curve;  // defaults to the unit circle at N nodes
  int max_k = 3;
  int n = 256;
  std::uint64_t seed = 7;
  // Replaces the quadrature-scale thresholds; the exact-arithmetic suites
  // keep their pinned values.
  std::optional<double> tol_override;
};

// Runs the verification suites: involution (quadrature and exact oracle),
// projection algebra, the Lemma grid for the two-pole integrals, the
// combinatorial identity grid, quadrature-vs-oracle equivalence with a
// spectral decay check, and the jump identity on the built-in data.
std::vector<PropertyResult> run_verification(const VerifyConfig& cfg);

bool all_pass(const std::vector<PropertyResult>& results);
json verification_report(const VerifyConfig& cfg, const std::vector<PropertyResult>& results);

}  // namespace polyhardy
