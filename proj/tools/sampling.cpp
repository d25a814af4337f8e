#include "sampling.hpp"

#include <algorithm>
#include <cmath>

namespace pedal::app {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Triangle place_from_angles(const AngleTriple& angles, TrialRng& rng,
                           const SamplerOptions& opt, const ToleranceConfig& tol) {
  const double diameter = opt.randomize_pose ? rng.log_uniform(0.2, 5.0) : 1.0;
  const double a = diameter * std::sin(angles.alpha1);
  const double b = diameter * std::sin(angles.beta1);
  const double c = diameter * std::sin(angles.gamma1);
  const Point vb{0.0, 0.0};
  const Point vc{a, 0.0};
  const double ax = (a * a + c * c - b * b) / (2.0 * a);
  const double ay = std::sqrt(std::max(0.0, c * c - ax * ax));
  Point va{ax, ay};
  if (!opt.randomize_pose) return Triangle(va, vb, vc, tol);
  const Similarity pose{1.0, rng.uniform(0.0, 2.0 * kPi),
                        Vec2{rng.uniform(-2.0, 2.0) * diameter, rng.uniform(-2.0, 2.0) * diameter}};
  return Triangle(pose(va), pose(vb), pose(vc), tol);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(mix(mix(seed) ^ mix(stream ^ 0x517cc1b727220a95ULL))) {}

double TrialRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double TrialRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double TrialRng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

AngleTriple sample_angles(TrialRng& rng, double theta_min) {
  double u1 = rng.uniform();
  double u2 = rng.uniform();
  if (u1 > u2) std::swap(u1, u2);
  const double span = kPi - 3.0 * theta_min;
  const double alpha = theta_min + u1 * span;
  const double beta = theta_min + (u2 - u1) * span;
  return AngleTriple{alpha, beta, kPi - alpha - beta};
}

Triangle sample_triangle(TrialRng& rng, const SamplerOptions& opt, const ToleranceConfig& tol) {
  return place_from_angles(sample_angles(rng, opt.theta_min), rng, opt, tol);
}

Triangle sample_isosceles_triangle(TrialRng& rng, const SamplerOptions& opt,
                                   const ToleranceConfig& tol) {
  const double alpha = rng.uniform(2.0 * opt.theta_min, kPi - 2.0 * opt.theta_min);
  const double beta = (kPi - alpha) / 2.0;
  return place_from_angles(AngleTriple{alpha, beta, beta}, rng, opt, tol);
}

Triangle sample_median_proportional_triangle(TrialRng& rng, const SamplerOptions& opt,
                                             const ToleranceConfig& tol) {
  // c = 1, a in a range keeping b = sqrt(2 - a^2) a valid third side. The
  // equilateral member a = 1 is excluded with a margin: there the Lemoine
  // point meets the circumcenter and its inverse becomes ill-conditioned.
  const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
  const double a = 1.0 + sign * rng.uniform(1e-3, 0.25);
  const double b = std::sqrt(2.0 - a * a);
  const double c = 1.0;
  const double ax = (a * a + c * c - b * b) / (2.0 * a);
  const double ay = std::sqrt(std::max(0.0, c * c - ax * ax));
  Point va{ax, ay};
  Point vb{0.0, 0.0};
  Point vc{a, 0.0};
  if (!opt.randomize_pose) return Triangle(va, vb, vc, tol);
  const Similarity pose = sample_similarity(rng);
  return Triangle(pose(va), pose(vb), pose(vc), tol);
}

Point sample_point_off_circle(TrialRng& rng, const Triangle& tri) {
  const Circle k = circumcircle(tri);
  for (;;) {
    const double theta = rng.uniform(0.0, 2.0 * kPi);
    const double r = 2.0 * k.radius * std::sqrt(rng.uniform());
    const Point p = k.center + r * Vec2{std::cos(theta), std::sin(theta)};
    if (std::fabs(r / k.radius - 1.0) < 1e-3) continue;
    bool near_vertex = false;
    for (int i = 0; i < 3; ++i)
      near_vertex = near_vertex || distance(p, tri.vertex(i)) < 1e-3 * k.radius;
    if (!near_vertex) return p;
  }
}

Point sample_interior_point(TrialRng& rng, const Triangle& tri, double min_center_dist) {
  const Circle k = circumcircle(tri);
  for (;;) {
    const double theta = rng.uniform(0.0, 2.0 * kPi);
    const double r = 0.995 * k.radius * std::sqrt(rng.uniform());
    if (r < min_center_dist * k.radius) continue;
    const Point p = k.center + r * Vec2{std::cos(theta), std::sin(theta)};
    bool near_vertex = false;
    for (int i = 0; i < 3; ++i)
      near_vertex = near_vertex || distance(p, tri.vertex(i)) < 1e-3 * k.radius;
    if (!near_vertex) return p;
  }
}

Point sample_point_on_circle(TrialRng& rng, const Triangle& tri) {
  const Circle k = circumcircle(tri);
  const double theta = rng.uniform(0.0, 2.0 * kPi);
  return k.center + k.radius * Vec2{std::cos(theta), std::sin(theta)};
}

Point Similarity::operator()(Point p) const {
  const double cs = std::cos(angle);
  const double sn = std::sin(angle);
  return Point{scale * (cs * p.x - sn * p.y) + translation.x,
               scale * (sn * p.x + cs * p.y) + translation.y};
}

Similarity sample_similarity(TrialRng& rng) {
  return Similarity{rng.log_uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * kPi),
                    Vec2{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)}};
}

}  // namespace pedal::app
