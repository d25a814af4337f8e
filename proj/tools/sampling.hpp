#pragma once

// Deterministic random sampling for the verification suite. Every trial owns
// an independent generator derived from (seed, trial index), so reports are
// reproducible regardless of execution order, and doubles are produced by a
// fixed bit recipe rather than std::uniform_real_distribution.

#include <cstdint>
#include <random>

#include "pedal/geometry.hpp"

namespace pedal::app {

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t stream);

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

struct SamplerOptions {
  double theta_min = 5.0 * kPi / 180.0;  // conditioning floor on the angles
  bool randomize_pose = true;            // random rotation, scale, translation
};

/// Uniform angle triple on the simplex {alpha, beta, gamma >= theta_min,
/// sum = pi}.
AngleTriple sample_angles(TrialRng& rng, double theta_min);

Triangle sample_triangle(TrialRng& rng, const SamplerOptions& opt = {},
                         const ToleranceConfig& tol = {});

/// Isosceles triangle with b = c, same pose randomization.
Triangle sample_isosceles_triangle(TrialRng& rng, const SamplerOptions& opt = {},
                                   const ToleranceConfig& tol = {});

/// Triangle from the family a^2 + b^2 = 2c^2.
Triangle sample_median_proportional_triangle(TrialRng& rng, const SamplerOptions& opt = {},
                                             const ToleranceConfig& tol = {});

/// Point in the disk of radius 2R around the circumcenter, rejected while it
/// is within 1e-3 * R of the circumcircle or of a vertex.
Point sample_point_off_circle(TrialRng& rng, const Triangle& tri);

/// Point strictly inside the circumcircle, away from the vertices and at
/// least min_center_dist * R from the circumcenter.
Point sample_interior_point(TrialRng& rng, const Triangle& tri, double min_center_dist = 0.0);

Point sample_point_on_circle(TrialRng& rng, const Triangle& tri);

struct Similarity {
  double scale = 1.0;
  double angle = 0.0;
  Vec2 translation;

  Point operator()(Point p) const;
};

Similarity sample_similarity(TrialRng& rng);

}  // namespace pedal::app
