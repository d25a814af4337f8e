#include "pedal/inverse_pedal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pedal {

namespace {

constexpr double kNearIdentityRatio = 1e-6;  // |ratio - 1| below this: circle radii blow up

LocusEquation locus_equation(Point u, Point v, double ratio) {
  const double r2 = ratio * ratio;
  return LocusEquation{1.0 - r2, Vec2{u.x - r2 * v.x, u.y - r2 * v.y}, norm2(u) - r2 * norm2(v)};
}

// One Newton step for E_i(X) = E_j(X) = 0.
bool newton_step(const LocusEquation& ei, const LocusEquation& ej, Point& x) {
  const Vec2 gi = ei.gradient(x);
  const Vec2 gj = ej.gradient(x);
  const double det = cross(gi, gj);
  if (det == 0.0) return false;
  const double fi = ei.value(x);
  const double fj = ej.value(x);
  x = x - Vec2{(fi * gj.y - fj * gi.y) / det, (fj * gi.x - fi * gj.x) / det};
  return finite(x);
}

Point refine(const LocusEquation& ei, const LocusEquation& ej, Point x, int steps) {
  for (int it = 0; it < steps; ++it) {
    if (!newton_step(ei, ej, x)) break;
  }
  return x;
}

// Newton-polish on the pair of loci with the largest crossing angle at x.
// The ratio-straddling pair used for the initial intersection can cross
// near-tangentially on very flat triangles (two small circles hugging the
// same vertex); the gradient test picks a transversal pair instead.
Point refine_best_pair(const std::array<LocusEquation, 3>& eqs, Point x, int steps) {
  double best = -1.0;
  int bi = 0, bj = 1;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Vec2 gi = eqs[static_cast<std::size_t>(i)].gradient(x);
      const Vec2 gj = eqs[static_cast<std::size_t>(j)].gradient(x);
      const double ni = norm(gi), nj = norm(gj);
      if (ni == 0.0 || nj == 0.0) continue;
      const double sine = std::fabs(cross(gi, gj)) / (ni * nj);
      if (sine > best) {
        best = sine;
        bi = i;
        bj = j;
      }
    }
  }
  return refine(eqs[static_cast<std::size_t>(bi)], eqs[static_cast<std::size_t>(bj)], x, steps);
}

}  // namespace

ApolloniusSystem build_system(const Triangle& tri, const AngleTriple& target,
                              const ToleranceConfig& tol) {
  const AngleTriple checked = make_angle_triple(target.alpha1, target.beta1, target.gamma1, tol);
  // Side lengths of the target shape via the law of sines (unit
  // circumdiameter; the common scale cancels in the ratios).
  const double a1 = std::sin(checked.alpha1);
  const double b1 = std::sin(checked.beta1);
  const double c1 = std::sin(checked.gamma1);
  const double a = tri.side_a(), b = tri.side_b(), c = tri.side_c();

  ApolloniusSystem system;
  system.lambda = (b1 / c1) * (c / b);
  system.mu = (c1 / a1) * (a / c);
  system.nu = (a1 / b1) * (b / a);
  if (std::fabs(system.lambda * system.mu * system.nu - 1.0) > 1e3 * tol.eps_rel)
    throw GeometryError(ErrorCode::InternalAssertion, "apollonius ratio product must be 1");

  const Point va = tri.vertex_a(), vb = tri.vertex_b(), vc = tri.vertex_c();
  system.loci = {apollonius(vb, vc, system.lambda, tol),
                 apollonius(vc, va, system.mu, tol),
                 apollonius(va, vb, system.nu, tol)};
  system.equations = {locus_equation(vb, vc, system.lambda),
                      locus_equation(vc, va, system.mu),
                      locus_equation(va, vb, system.nu)};
  const Circle k = circumcircle(tri);
  system.circumcenter = k.center;
  system.circumradius = k.radius;
  return system;
}

double locus_residual(const ApolloniusSystem& system, int which, Point x) {
  const LocusEquation& eq = system.equations[static_cast<std::size_t>(which)];
  const double grad = norm(eq.gradient(x));
  if (grad == 0.0) return std::fabs(eq.value(x));
  const double dist = std::fabs(eq.value(x)) / grad;
  return dist / (2.0 * system.circumradius + distance(x, system.circumcenter));
}

double system_residual(const ApolloniusSystem& system, Point x) {
  return std::max({locus_residual(system, 0, x), locus_residual(system, 1, x),
                   locus_residual(system, 2, x)});
}

namespace {

struct PairChoice {
  int hi = -1;  // index of the ratio farthest above 1
  int lo = -1;  // index of the ratio farthest below 1
};

PairChoice straddling_pair(const ApolloniusSystem& system) {
  const std::array<double, 3> logs = {std::log(system.lambda), std::log(system.mu),
                                      std::log(system.nu)};
  PairChoice choice;
  double best_hi = 0.0, best_lo = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (logs[static_cast<std::size_t>(i)] > best_hi) {
      best_hi = logs[static_cast<std::size_t>(i)];
      choice.hi = i;
    }
    if (logs[static_cast<std::size_t>(i)] < best_lo) {
      best_lo = logs[static_cast<std::size_t>(i)];
      choice.lo = i;
    }
  }
  return choice;
}

}  // namespace

SolveOutcome solve(const Triangle& tri, const AngleTriple& target, const ToleranceConfig& tol) {
  const AngleTriple base = angles_of(tri);
  const Circle k = circumcircle(tri);

  const auto t = target.as_array();
  const auto ba = base.as_array();
  bool identity = true;
  for (int i = 0; i < 3; ++i)
    identity = identity && std::fabs(t[static_cast<std::size_t>(i)] -
                                     ba[static_cast<std::size_t>(i)]) <= tol.angle_eps;

  SolveOutcome outcome;
  outcome.target = target;
  if (identity) {
    // Base angles: the three loci are the perpendicular bisectors, their
    // only common point the circumcenter, and no exterior point exists.
    outcome.inside = k.center;
    return outcome;
  }

  ApolloniusSystem system = build_system(tri, target, tol);
  const PairChoice pair = straddling_pair(system);
  if (pair.hi < 0 || pair.lo < 0)
    throw GeometryError(ErrorCode::InternalAssertion, "non-identity target without straddling ratios");
  const auto& eq_hi = system.equations[static_cast<std::size_t>(pair.hi)];
  const auto& eq_lo = system.equations[static_cast<std::size_t>(pair.lo)];

  const double worst_ratio_gap = std::max(std::fabs(system.lambda - 1.0),
                                          std::max(std::fabs(system.mu - 1.0),
                                                   std::fabs(system.nu - 1.0)));
  std::vector<Point> candidates;
  if (worst_ratio_gap < kNearIdentityRatio) {
    // All circle radii blow up; the perpendicular-bisector solution O is an
    // excellent starting point and Newton supplies the correction.
    const Point m = refine(eq_hi, eq_lo, k.center, 12);
    candidates = {m, invert_point(Inversion{k.center, k.radius * k.radius}, m, tol)};
  } else {
    candidates = intersect_gcircles(system.loci[static_cast<std::size_t>(pair.hi)],
                                    system.loci[static_cast<std::size_t>(pair.lo)], tol);
    if (candidates.empty()) {
      const double disc = discriminant(tri, system, tol);
      throw NoIntersectionError("straddling Apollonius loci failed to intersect (discriminant " +
                                    std::to_string(disc) + ")",
                                disc);
    }
    if (candidates.size() == 1) candidates.push_back(candidates.front());
    for (Point& p : candidates) {
      p = refine(eq_hi, eq_lo, p, 2);
      p = refine_best_pair(system.equations, p, 3);
    }
  }

  // The third locus must pass through both points; a miss signals a kernel
  // bug, not bad input.
  for (const Point& p : candidates) {
    if (locus_residual(system, 3 - pair.hi - pair.lo, p) > 1e-6)
      throw GeometryError(ErrorCode::InternalAssertion, "third Apollonius locus missed the solutions");
  }

  const double d0 = distance(candidates[0], k.center);
  const double d1 = distance(candidates[1], k.center);
  Point near = d0 <= d1 ? candidates[0] : candidates[1];
  Point far = d0 <= d1 ? candidates[1] : candidates[0];
  const bool near_clean = distance(near, k.center) < k.radius * (1.0 - tol.eps_rel);
  const bool far_clean = distance(far, k.center) > k.radius * (1.0 + tol.eps_rel);
  if (!(near_clean && far_clean)) {
    // Both candidates sit in the on-circle tolerance band; fall back to the
    // pedal orientation sign to decide which one plays the interior role.
    const auto pedal_sign = [&](Point p) {
      const Point fa = project_point_on_line(p, tri.line_bc());
      const Point fb = project_point_on_line(p, tri.line_ca());
      const Point fc = project_point_on_line(p, tri.line_ab());
      return orientation_sign(fa, fb, fc, tol) * tri.orientation();
    };
    if (pedal_sign(near) < 0 && pedal_sign(far) > 0) std::swap(near, far);
    outcome.conditioning_warning = true;
  }
  outcome.inside = near;
  outcome.outside = far;
  outcome.discriminant_ok = true;
  return outcome;
}

double discriminant(const Triangle& tri, const ApolloniusSystem& system,
                    const ToleranceConfig&) {
  const double a = tri.side_a(), b = tri.side_b(), c = tri.side_c();
  const std::array<double, 3> ratios = {system.lambda, system.mu, system.nu};
  // Cyclic relabelings of the pair formula (c*mu)^2 - (b*lambda*mu - a)^2:
  // pair (k1,k2) as-is, (k2,k3) with sides (b,c,a), (k3,k1) with (c,a,b).
  const std::array<double, 3> values = {
      (c * system.mu) * (c * system.mu) -
          (b * system.lambda * system.mu - a) * (b * system.lambda * system.mu - a),
      (a * system.nu) * (a * system.nu) -
          (c * system.mu * system.nu - b) * (c * system.mu * system.nu - b),
      (b * system.lambda) * (b * system.lambda) -
          (a * system.nu * system.lambda - c) * (a * system.nu * system.lambda - c),
  };
  int best = -1;
  double best_margin = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double r1 = ratios[static_cast<std::size_t>(i)];
    const double r2 = ratios[static_cast<std::size_t>((i + 1) % 3)];
    if ((r1 - 1.0) * (r2 - 1.0) >= 0.0) continue;  // pair must straddle 1
    const double margin = std::min(std::fabs(std::log(r1)), std::fabs(std::log(r2)));
    if (best < 0 || margin > best_margin) {
      best = i;
      best_margin = margin;
    }
  }
  if (best < 0)
    throw GeometryError(ErrorCode::IdentityTarget, "identity target: no straddling Apollonius pair");
  return values[static_cast<std::size_t>(best)];
}

}  // namespace pedal
