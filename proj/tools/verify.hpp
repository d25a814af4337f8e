#pragma once

// Randomized verification suite: runs every module invariant on seeded
// random triangles (or on one fixed triangle) and aggregates per-property
// records. Aggregation is order-independent (max for residuals, sums for
// counts), so trials may run on any number of threads with identical
// output.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pedal/geometry.hpp"
#include "triangle_input.hpp"

namespace pedal::app {

struct VerifyOptions {
  long trials = 1000;
  std::uint64_t seed = 0;
  double theta_min = 5.0 * kPi / 180.0;
  std::optional<TriangleSpec> fixed;  // run on this triangle instead of sampling
  ToleranceConfig tol;
  unsigned threads = 0;  // 0 = pick from hardware
};

struct PropertyRecord {
  std::string name;
  long trials = 0;
  long failures = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool informational = false;  // recorded but never counted as failing
};

struct VerifyReport {
  std::vector<PropertyRecord> properties;  // sorted by name
  bool pass = false;
  long trials = 0;
  std::uint64_t seed = 0;
  double theta_min = 0.0;
  ToleranceConfig tol;
  bool fixed_input = false;
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace pedal::app
