#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "pedal/inverse_pedal.hpp"
#include "pedal/notable_points.hpp"
#include "pedal/pedal_map.hpp"
#include "sampling.hpp"

namespace pedal::app {

namespace {

enum Property : int {
  kApolloniusCentersMatchExterior,
  kApolloniusMembership,
  kAxisCollinear,
  kAxisParallelOmega,
  kAxisPerpendicularOl,
  kBarycentricExteriorFormulas,
  kBarycentricSymmedianFormulas,
  kBrocardAngleBound,
  kBrocardCircleConcyclic,
  kBrocardEqualAngles,
  kDiscriminantPositive,
  kEquilateralCoincidence,
  kExteriorMidpointFormula,
  kExteriorMidpointFormulaAlt,
  kExteriorMidpointVsLemoineInverse,
  kExteriorRatioLaw,
  kFitRigidInvariance,
  kInversePairConsistency,
  kInversionInvolution,
  kInversionPairProduct,
  kIsoscelesCoincidence,
  kLabelsVerified,
  kLemoineBrocardAngles,
  kMedianProportionalEquivalence,
  kOrientationAntisymmetry,
  kPedalAngleCriterion,
  kPedalEquivariance,
  kPedalOrientationTrichotomy,
  kPedalSideRatio,
  kSimsonCollinearity,
  kSolveConcurrency,
  kSolveIdentityCollapse,
  kSolveInversePairProduct,
  kSolvePermutationClosure,
  kSolveRoundtrip,
  kTangencyExteriorSymmedian,
  kPropertyCount,
};

struct Accumulator {
  PropertyRecord rec;

  void residual(double r) {
    rec.trials += 1;
    rec.max_residual = std::max(rec.max_residual, r);
    if (!rec.informational && r > rec.tolerance) rec.failures += 1;
  }
  void boolean(bool ok) {
    rec.trials += 1;
    if (!ok) {
      rec.failures += 1;
      rec.max_residual = std::max(rec.max_residual, 1.0);
    }
  }
  void error() {
    rec.trials += 1;
    rec.failures += 1;
    rec.max_residual = std::max(rec.max_residual, std::numeric_limits<double>::infinity());
  }
  void merge(const Accumulator& other) {
    rec.trials += other.rec.trials;
    rec.failures += other.rec.failures;
    rec.max_residual = std::max(rec.max_residual, other.rec.max_residual);
  }
};

// `conditioning` relaxes the residual tolerances when the sampler's angle
// floor drops below the default 5 degrees: point errors grow roughly with
// the square of the flatness, so hard mode scales accordingly. It is exactly
// 1.0 for the default suite.
std::vector<Accumulator> make_accumulators(const ToleranceConfig& tol, double conditioning) {
  const double eps = tol.eps_rel * conditioning;
  const double aeps = tol.angle_eps * conditioning;
  std::vector<Accumulator> accs(kPropertyCount);
  const auto init = [&](Property id, const char* name, double tolerance, bool info = false) {
    accs[id].rec.name = name;
    accs[id].rec.tolerance = tolerance;
    accs[id].rec.informational = info;
  };
  init(kApolloniusCentersMatchExterior, "apollonius_centers_match_exterior", eps);
  init(kApolloniusMembership, "apollonius_membership", 10.0 * eps);
  init(kAxisCollinear, "axis_collinear", eps);
  init(kAxisParallelOmega, "axis_parallel_omega12", aeps);
  init(kAxisPerpendicularOl, "axis_perpendicular_ol", aeps);
  init(kBarycentricExteriorFormulas, "barycentric_exterior_formulas", eps);
  init(kBarycentricSymmedianFormulas, "barycentric_symmedian_formulas", eps);
  init(kBrocardAngleBound, "brocard_angle_bound", aeps);
  init(kBrocardCircleConcyclic, "brocard_circle_concyclic", eps);
  init(kBrocardEqualAngles, "brocard_equal_angles", 10.0 * aeps);
  init(kDiscriminantPositive, "discriminant_positive", 0.0);
  init(kEquilateralCoincidence, "equilateral_coincidence", eps);
  init(kExteriorMidpointFormula, "exterior_midpoint_formula", eps);
  init(kExteriorMidpointFormulaAlt, "exterior_midpoint_formula_alt", 0.0, true);
  init(kExteriorMidpointVsLemoineInverse, "exterior_midpoint_vs_lemoine_inverse", eps);
  init(kExteriorRatioLaw, "exterior_ratio_law", eps);
  init(kFitRigidInvariance, "fit_rigid_invariance", 10.0 * eps);
  init(kInversePairConsistency, "inverse_pair_consistency", 10.0 * aeps);
  init(kInversionInvolution, "inversion_involution", 10.0 * eps);
  init(kInversionPairProduct, "inversion_pair_product", eps);
  init(kIsoscelesCoincidence, "isosceles_coincidence", eps);
  init(kLabelsVerified, "labels_verified", 10.0 * aeps);
  init(kLemoineBrocardAngles, "lemoine_brocard_angles", 10.0 * aeps);
  init(kMedianProportionalEquivalence, "median_proportional_equivalence", 0.0);
  init(kOrientationAntisymmetry, "orientation_antisymmetry", 0.0);
  init(kPedalAngleCriterion, "pedal_angle_criterion", 10.0 * aeps);
  init(kPedalEquivariance, "pedal_equivariance", 10.0 * aeps);
  init(kPedalOrientationTrichotomy, "pedal_orientation_trichotomy", 0.0);
  init(kPedalSideRatio, "pedal_side_ratio", 10.0 * eps);
  init(kSimsonCollinearity, "simson_collinearity", eps);
  init(kSolveConcurrency, "solve_concurrency", eps);
  init(kSolveIdentityCollapse, "solve_identity_collapse", eps);
  init(kSolveInversePairProduct, "solve_inverse_pair_product", 10.0 * eps);
  init(kSolvePermutationClosure, "solve_permutation_closure", 10.0 * eps);
  init(kSolveRoundtrip, "solve_roundtrip", 100.0 * aeps);
  init(kTangencyExteriorSymmedian, "tangency_exterior_symmedian", eps);
  return accs;
}

double max_abs_diff(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    worst = std::max(worst, std::fabs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]));
  return worst;
}

std::array<double, 3> permuted(const std::array<double, 3>& v, const std::array<int, 3>& p) {
  return {v[static_cast<std::size_t>(p[0])], v[static_cast<std::size_t>(p[1])],
          v[static_cast<std::size_t>(p[2])]};
}

double line_angle_residual(Vec2 u, Vec2 v) {  // angle between line directions
  return std::asin(std::min(1.0, std::fabs(cross(normalized(u), normalized(v)))));
}

struct TrialContext {
  const Triangle& tri;
  TrialRng& rng;
  const ToleranceConfig& tol;
  double theta_min;
  bool pose_randomized;
};

void run_geom_properties(TrialContext& ctx, std::vector<Accumulator>& accs) {
  const Triangle& tri = ctx.tri;
  const ToleranceConfig& tol = ctx.tol;
  TrialRng& rng = ctx.rng;
  const Circle k = circumcircle(tri);

  {  // involution and the pair-distance law
    const Point center = k.center + (0.7 * k.radius * rng.uniform()) *
                                        Vec2{std::cos(rng.uniform(0.0, 2.0 * kPi)),
                                             std::sin(rng.uniform(0.0, 2.0 * kPi))};
    const double radius = rng.log_uniform(0.5, 2.0) * k.radius;
    const Inversion inv{center, radius * radius};
    const double dist = radius * rng.log_uniform(1e-3, 1e3);
    const double dir = rng.uniform(0.0, 2.0 * kPi);
    const Point p = center + dist * Vec2{std::cos(dir), std::sin(dir)};
    const Point image = invert_point(inv, p, tol);
    const Point back = invert_point(inv, image, tol);
    accs[kInversionInvolution].residual(distance(back, p) / dist);
    accs[kInversionPairProduct].residual(
        std::fabs(distance(p, center) * distance(image, center) - inv.power) / inv.power);
  }

  {  // Apollonius membership at intersection points
    const Point x = sample_point_off_circle(rng, tri);
    const double lambda = distance(x, tri.vertex_b()) / distance(x, tri.vertex_c());
    const double mu = distance(x, tri.vertex_c()) / distance(x, tri.vertex_a());
    const auto locus1 = apollonius(tri.vertex_b(), tri.vertex_c(), lambda, tol);
    const auto locus2 = apollonius(tri.vertex_c(), tri.vertex_a(), mu, tol);
    const auto points = intersect_gcircles(locus1, locus2, tol);
    if (points.empty()) {
      accs[kApolloniusMembership].error();
    } else {
      double worst = 0.0;
      for (const Point& p : points) {
        worst = std::max(worst, std::fabs(distance(p, tri.vertex_b()) /
                                              distance(p, tri.vertex_c()) - lambda) / lambda);
        worst = std::max(worst, std::fabs(distance(p, tri.vertex_c()) /
                                              distance(p, tri.vertex_a()) - mu) / mu);
      }
      accs[kApolloniusMembership].residual(worst);
    }
  }

  {  // orientation antisymmetry over all transpositions
    const Point p = sample_point_off_circle(rng, tri);
    const Point q = sample_point_off_circle(rng, tri);
    const Point r = sample_point_off_circle(rng, tri);
    const int s = orientation_sign(p, q, r, tol);
    const bool ok = orientation_sign(q, p, r, tol) == -s &&
                    orientation_sign(p, r, q, tol) == -s &&
                    orientation_sign(r, q, p, tol) == -s;
    accs[kOrientationAntisymmetry].boolean(ok);
  }

  {  // concyclic/collinear invariance under similarity
    const Similarity sim = sample_similarity(rng);
    std::vector<Point> on_circle;
    // well-spread angles keep the three-point circle fit conditioned, so the
    // residual comparison across frames measures the fit, not the sample
    const double phase = rng.uniform(0.0, 2.0 * kPi);
    for (int i = 0; i < 6; ++i) {
      const double theta = phase + (i + 0.5 * rng.uniform()) * (kPi / 3.0);
      on_circle.push_back(k.center + k.radius * Vec2{std::cos(theta), std::sin(theta)});
    }
    on_circle[3] = on_circle[3] + (20.0 * ctx.tol.eps_rel * k.radius) * Vec2{1.0, 0.0};
    std::vector<Point> moved;
    for (const Point& p : on_circle) moved.push_back(sim(p));
    const auto before = concyclic(on_circle, tol);
    const auto after = concyclic(moved, tol);
    if (before.concyclic != after.concyclic || before.collinear != after.collinear)
      accs[kFitRigidInvariance].error();
    else
      accs[kFitRigidInvariance].residual(std::fabs(before.max_residual - after.max_residual));
  }
}

void run_pedal_properties(TrialContext& ctx, std::vector<Accumulator>& accs) {
  const Triangle& tri = ctx.tri;
  const ToleranceConfig& tol = ctx.tol;
  TrialRng& rng = ctx.rng;
  const Circle k = circumcircle(tri);
  const auto base = angles_of(tri).as_array();

  {  // side-ratio law (pedal sides proportional to a*MA, b*MB, c*MC)
    const Point m = sample_point_off_circle(rng, tri);
    const auto pedal = pedal_triangle(tri, m, tol);
    const double twice_r = 2.0 * k.radius;
    const std::array<double, 3> expected = {
        tri.side_a() * distance(m, tri.vertex_a()) / twice_r,
        tri.side_b() * distance(m, tri.vertex_b()) / twice_r,
        tri.side_c() * distance(m, tri.vertex_c()) / twice_r,
    };
    const std::array<double, 3> actual = {distance(pedal.feet[1], pedal.feet[2]),
                                          distance(pedal.feet[2], pedal.feet[0]),
                                          distance(pedal.feet[0], pedal.feet[1])};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst, std::fabs(actual[static_cast<std::size_t>(i)] /
                                            expected[static_cast<std::size_t>(i)] - 1.0));
    accs[kPedalSideRatio].residual(worst);

    const bool inside = distance(m, k.center) < k.radius;
    const bool positive = pedal.oriented().orientation == PedalOrientation::Positive;
    const int feet_sign = orientation_sign(pedal.feet[0], pedal.feet[1], pedal.feet[2], tol);
    accs[kPedalOrientationTrichotomy].boolean(
        positive == inside && feet_sign == (positive ? tri.orientation() : -tri.orientation()));
  }

  {  // Simson degeneracy on the circle
    const Point m = sample_point_on_circle(rng, tri);
    const auto pedal = pedal_triangle(tri, m, tol);
    if (!pedal.degenerate()) {
      accs[kSimsonCollinearity].error();
    } else {
      accs[kSimsonCollinearity].residual(collinear(pedal.feet, tol).max_residual);
    }
  }

  {  // angle criterion: vertex angles minus base angles = pedal angles
    const Point m = sample_interior_point(rng, tri);
    const auto va = vertex_angles(tri, m, tol);
    const auto f = f_of(tri, m, tol).angles.as_array();
    const std::array<double, 3> derived = {va.bmc - base[0], va.cma - base[1], va.amb - base[2]};
    accs[kPedalAngleCriterion].residual(max_abs_diff(derived, f));
  }

  {  // equivariance under orientation-preserving similarity
    const Point m = sample_point_off_circle(rng, tri);
    const Similarity sim = sample_similarity(rng);
    const Triangle moved(sim(tri.vertex_a()), sim(tri.vertex_b()), sim(tri.vertex_c()), tol);
    const auto before = f_of(tri, m, tol);
    const auto after = f_of(moved, sim(m), tol);
    const bool same_orientation = before.orientation == after.orientation;
    accs[kPedalEquivariance].residual(
        same_orientation ? max_abs_diff(before.angles.as_array(), after.angles.as_array()) : 1.0);
  }

  {  // inverse pair realizes the same triple
    const Point m = sample_interior_point(rng, tri, 1e-3);
    accs[kInversePairConsistency].residual(inverse_pair_consistency(tri, m, tol));
  }
}

void run_solver_properties(TrialContext& ctx, std::vector<Accumulator>& accs,
                           const NotablePointSet& notable) {
  const Triangle& tri = ctx.tri;
  const ToleranceConfig& tol = ctx.tol;
  TrialRng& rng = ctx.rng;
  const Circle k = circumcircle(tri);
  const auto base = angles_of(tri).as_array();

  AngleTriple target = sample_angles(rng, ctx.theta_min);
  if (max_abs_diff(target.as_array(), base) <= 1e3 * tol.angle_eps)
    target = sample_angles(rng, ctx.theta_min);  // astronomically unlikely; resample once

  {  // existence, concurrency, round trip, inverse-pair product
    const auto outcome = solve(tri, target, tol);
    if (!outcome.outside) {
      accs[kSolveConcurrency].error();
    } else {
      const auto system = build_system(tri, target, tol);
      accs[kSolveConcurrency].residual(std::max(system_residual(system, outcome.inside),
                                                system_residual(system, *outcome.outside)));
      const auto f_in = f_of(tri, outcome.inside, tol);
      const auto f_out = f_of(tri, *outcome.outside, tol);
      double roundtrip = std::max(max_abs_diff(f_in.angles.as_array(), target.as_array()),
                                  max_abs_diff(f_out.angles.as_array(), target.as_array()));
      if (f_in.orientation != PedalOrientation::Positive ||
          f_out.orientation != PedalOrientation::Negative)
        roundtrip = std::max(roundtrip, 1.0);
      accs[kSolveRoundtrip].residual(roundtrip);
      accs[kSolveInversePairProduct].residual(
          std::fabs(distance(outcome.inside, k.center) * distance(*outcome.outside, k.center) /
                        (k.radius * k.radius) -
                    1.0));
      const auto system_for_disc = build_system(tri, target, tol);
      accs[kDiscriminantPositive].boolean(discriminant(tri, system_for_disc, tol) > 0.0);
    }
  }

  {  // identity target collapses to the circumcenter
    const auto outcome = solve(tri, AngleTriple{base[0], base[1], base[2]}, tol);
    const double residual = distance(outcome.inside, k.center) / k.radius;
    accs[kSolveIdentityCollapse].residual(outcome.outside ? 1.0 : residual);
  }

  {  // the six permutations of the base angles land on the six points
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                                      {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
    const std::array<Point, 6> expected = {notable.o, notable.omega1, notable.omega2,
                                           notable.l1, notable.l2, notable.l3};
    double worst = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      const auto p = permuted(base, perms[i]);
      const auto outcome = solve(tri, AngleTriple{p[0], p[1], p[2]}, tol);
      worst = std::max(worst, distance(outcome.inside, expected[i]) / k.radius);
    }
    accs[kSolvePermutationClosure].residual(worst);
  }
}

void run_notable_properties(TrialContext& ctx, std::vector<Accumulator>& accs,
                            const NotablePointSet& notable) {
  const Triangle& tri = ctx.tri;
  const ToleranceConfig& tol = ctx.tol;
  const Circle k = circumcircle(tri);
  const Point a = tri.vertex_a(), b = tri.vertex_b(), c = tri.vertex_c();

  accs[kBrocardAngleBound].residual(std::max(0.0, notable.brocard_angle - kPi / 6.0));

  {  // equal angles at both Brocard points
    const double w = notable.brocard_angle;
    const double spread1 = std::max({std::fabs(angle_at(a, notable.omega1, b) - w),
                                     std::fabs(angle_at(b, notable.omega1, c) - w),
                                     std::fabs(angle_at(c, notable.omega1, a) - w)});
    const double spread2 = std::max({std::fabs(angle_at(a, notable.omega2, c) - w),
                                     std::fabs(angle_at(c, notable.omega2, b) - w),
                                     std::fabs(angle_at(b, notable.omega2, a) - w)});
    accs[kBrocardEqualAngles].residual(std::max(spread1, spread2));
  }

  if (!notable.exterior) return;  // remaining properties need a non-equilateral triangle

  {  // the Brocard points see O-L under the Brocard angle
    if (distance(notable.omega1, k.center) > 1e3 * tol.eps_rel * k.radius &&
        distance(notable.omega2, k.center) > 1e3 * tol.eps_rel * k.radius) {
      const double w = notable.brocard_angle;
      accs[kLemoineBrocardAngles].residual(
          std::max(std::fabs(angle_at(k.center, notable.omega1, notable.lemoine) - w),
                   std::fabs(angle_at(k.center, notable.omega2, notable.lemoine) - w)));
    }
  }

  {  // six points on the Brocard circle
    const Circle k0 = *notable.brocard_circle;
    double worst = 0.0;
    for (const Point& p : {notable.o, notable.omega1, notable.omega2, notable.l1, notable.l2,
                           notable.l3})
      worst = std::max(worst, std::fabs(distance(p, k0.center) - k0.radius));
    accs[kBrocardCircleConcyclic].residual(worst / k0.radius);
  }

  {  // five exterior points on the axis
    std::vector<Point> finite;
    for (const auto* p : notable.exterior->all())
      if (is_finite_point(*p)) finite.push_back(finite_point(*p));
    if (finite.size() >= 3) accs[kAxisCollinear].residual(collinear(finite, tol).max_residual);
  }

  {  // axis perpendicular to OL, parallel to Omega1-Omega2
    const Line g = *notable.axis_g;
    const Vec2 ol = notable.lemoine - k.center;
    accs[kAxisPerpendicularOl].residual(
        std::asin(std::min(1.0, std::fabs(dot(g.direction, normalized(ol))))));
    const Vec2 omega_span = notable.omega2 - notable.omega1;
    if (norm(omega_span) > 1e3 * tol.eps_rel * k.radius)
      accs[kAxisParallelOmega].residual(line_angle_residual(g.direction, omega_span));
  }

  {  // closed-form point formulas against the constructions
    const auto formula_ls = symmedian_projections_formula(tri);
    double worst = std::max({distance(formula_ls[0], notable.l1),
                             distance(formula_ls[1], notable.l2),
                             distance(formula_ls[2], notable.l3)}) / k.radius;
    accs[kBarycentricSymmedianFormulas].residual(worst);

    if (is_finite_point(notable.exterior->omega1p) && is_finite_point(notable.exterior->omega2p)) {
      const auto [f1, f2] = exterior_brocard_formula(tri, tol);
      const Point o1 = finite_point(notable.exterior->omega1p);
      const Point o2 = finite_point(notable.exterior->omega2p);
      const double r1 = distance(f1, o1) / (k.radius + distance(o1, k.center));
      const double r2 = distance(f2, o2) / (k.radius + distance(o2, k.center));
      accs[kBarycentricExteriorFormulas].residual(std::max(r1, r2));

      const Point mid = midpoint(o1, o2);
      const double mid_scale = k.radius + distance(mid, k.center);
      const Point lemoine_inverse =
          invert_point(Inversion{k.center, k.radius * k.radius}, notable.lemoine, tol);
      accs[kExteriorMidpointVsLemoineInverse].residual(distance(mid, lemoine_inverse) / mid_scale);
      accs[kExteriorMidpointFormula].residual(
          distance(mid, exterior_midpoint_formula(tri, tol)) / mid_scale);
      accs[kExteriorMidpointFormulaAlt].residual(
          distance(mid, exterior_midpoint_formula_alt(tri, tol)) / mid_scale);
    }
  }

  {  // basic Apollonius circles: centers are the exterior L points
    const auto circles = basic_apollonius_circles(tri, tol);
    const std::array<const MaybeInfinitePoint*, 3> lps = {&notable.exterior->l1p,
                                                          &notable.exterior->l2p,
                                                          &notable.exterior->l3p};
    const std::array<Point, 3> through = {a, b, c};
    const std::array<double, 3> sides = {tri.side_a(), tri.side_b(), tri.side_c()};
    double worst = 0.0;
    bool consistent = true;
    for (std::size_t i = 0; i < 3; ++i) {
      if (is_circle(circles[i]) && is_finite_point(*lps[i])) {
        // both routes to the far-away center lose ~eps/gap^2 in absolute
        // terms; compare them only when the side gap keeps that in check
        const double gap = std::fabs(std::log(sides[(i + 1) % 3] / sides[(i + 2) % 3]));
        if (gap < 1e-5) continue;
        const Circle& ci = std::get<Circle>(circles[i]);
        worst = std::max(worst, distance(ci.center, finite_point(*lps[i])) /
                                    (k.radius + distance(ci.center, k.center)));
        worst = std::max(worst, std::fabs(distance(through[i], ci.center) - ci.radius) / ci.radius);
      } else if (is_line(circles[i]) != !is_finite_point(*lps[i])) {
        // The line and at-infinity degenerations use different thresholds
        // (side ratio vs distance from O); only a sample essentially on the
        // isosceles boundary can split them, and that is not a defect.
        const double gap = std::fabs(std::log(sides[(i + 1) % 3] / sides[(i + 2) % 3]));
        if (gap > 1e-12 && gap < 1e-6) continue;
        consistent = false;
      }
    }
    if (consistent)
      accs[kApolloniusCentersMatchExterior].residual(worst);
    else
      accs[kApolloniusCentersMatchExterior].error();
  }

  {  // tangency of the exterior symmedians and the squared-side ratio law
    const std::array<double, 3> sides = {tri.side_a(), tri.side_b(), tri.side_c()};
    const std::array<const MaybeInfinitePoint*, 3> lps = {&notable.exterior->l1p,
                                                          &notable.exterior->l2p,
                                                          &notable.exterior->l3p};
    double worst_tangency = 0.0;
    double worst_ratio = 0.0;
    bool any = false;
    for (int i = 0; i < 3; ++i) {
      // L_i' pairs with vertex i and the two opposite vertices; skip the
      // near-isosceles cases where it runs away to infinity.
      const double s1 = sides[static_cast<std::size_t>((i + 1) % 3)];
      const double s2 = sides[static_cast<std::size_t>((i + 2) % 3)];
      if (std::fabs(std::log(s1 / s2)) < 1e-3 || !is_finite_point(*lps[static_cast<std::size_t>(i)]))
        continue;
      any = true;
      const Point lp = finite_point(*lps[static_cast<std::size_t>(i)]);
      const Point vertex = tri.vertex(i);
      const Point p = tri.vertex((i + 1) % 3);
      const Point q = tri.vertex((i + 2) % 3);
      worst_tangency = std::max(
          worst_tangency,
          std::fabs(dot(normalized(lp - vertex), normalized(vertex - k.center))));
      // |L' P| : |L' Q| = |vertex P|^2 : |vertex Q|^2 with P, Q the base pair
      const double lhs = distance(lp, p) * distance(vertex, q) * distance(vertex, q);
      const double rhs = distance(lp, q) * distance(vertex, p) * distance(vertex, p);
      worst_ratio = std::max(worst_ratio, std::fabs(lhs / rhs - 1.0));
    }
    if (any) {
      accs[kTangencyExteriorSymmedian].residual(worst_tangency);
      accs[kExteriorRatioLaw].residual(worst_ratio);
    }
  }
}

void run_constructed_family_properties(TrialContext& ctx, std::vector<Accumulator>& accs) {
  const ToleranceConfig& tol = ctx.tol;
  TrialRng& rng = ctx.rng;

  {  // isosceles b = c: Omega1 = L2 and Omega2 = L3
    const SamplerOptions opt{ctx.theta_min, ctx.pose_randomized};
    const Triangle iso = sample_isosceles_triangle(rng, opt, tol);
    const Circle k = circumcircle(iso);
    const auto [omega1, omega2] = brocard_points(iso, tol);
    const auto ls = symmedian_projections(iso, tol);
    accs[kIsoscelesCoincidence].residual(
        std::max(distance(omega1, ls[1]), distance(omega2, ls[2])) / k.radius);
  }

  {  // a^2 + b^2 = 2c^2 equivalence, plus the generic violating triangle
    const SamplerOptions opt{ctx.theta_min, ctx.pose_randomized};
    const Triangle special = sample_median_proportional_triangle(rng, opt, tol);
    const auto special_report = median_proportional_check(special, tol);
    bool ok = special_report.condition_holds && special_report.l_on_abo_circle &&
              special_report.l_inverse_on_ab;
    const auto generic_report = median_proportional_check(ctx.tri, tol);
    // The three booleans compare differently normalized residuals, so a
    // sample sitting essentially on the condition boundary can straddle the
    // thresholds. Check the violating direction only for clear violators.
    if (generic_report.condition_residual >= 1e-4)
      ok = ok && !generic_report.l_on_abo_circle && !generic_report.l_inverse_on_ab;
    accs[kMedianProportionalEquivalence].boolean(ok);
  }
}

void run_equilateral_properties(TrialContext& ctx, std::vector<Accumulator>& accs,
                                const NotablePointSet& notable) {
  const Circle k = circumcircle(ctx.tri);
  double worst = 0.0;
  for (const Point& p : {notable.omega1, notable.omega2, notable.l1, notable.l2, notable.l3,
                         notable.lemoine})
    worst = std::max(worst, distance(p, k.center) / k.radius);
  const bool absent = !notable.exterior && !notable.brocard_circle && !notable.axis_g;
  const bool angle_ok = std::fabs(notable.brocard_angle - kPi / 6.0) <= 10.0 * ctx.tol.angle_eps;
  if (!absent || !angle_ok)
    accs[kEquilateralCoincidence].error();
  else
    accs[kEquilateralCoincidence].residual(worst);
}

// Every labeled point must realize its permutation of the base angles with
// the right orientation; reported as the worst componentwise angle gap.
void run_label_property(TrialContext& ctx, std::vector<Accumulator>& accs,
                        const NotablePointSet& notable) {
  const auto base = angles_of(ctx.tri).as_array();
  const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                                    {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
  const std::array<Point, 6> interior = {notable.o, notable.omega1, notable.omega2,
                                         notable.l1, notable.l2, notable.l3};
  double worst = 0.0;
  const auto check = [&](Point p, const std::array<int, 3>& perm, PedalOrientation expected) {
    const auto got = f_of(ctx.tri, p, ctx.tol);
    if (got.orientation != expected) {
      worst = std::max(worst, 1.0);
      return;
    }
    worst = std::max(worst, max_abs_diff(got.angles.as_array(), permuted(base, perm)));
  };
  const bool equilateral = !notable.exterior.has_value();
  for (std::size_t i = 0; i < 6; ++i) {
    if (equilateral && i > 0) continue;  // all six coincide with O
    check(interior[i], perms[i], PedalOrientation::Positive);
  }
  if (notable.exterior) {
    const auto ext = notable.exterior->all();
    for (std::size_t i = 0; i < 5; ++i)
      if (is_finite_point(*ext[i]))
        check(finite_point(*ext[i]), perms[i + 1], PedalOrientation::Negative);
  }
  accs[kLabelsVerified].residual(worst);
}

void run_trial(TrialContext& ctx, std::vector<Accumulator>& accs) {
  const auto guarded = [&](Property id, auto&& fn) {
    try {
      fn();
    } catch (const std::exception&) {
      accs[id].error();
    }
  };

  guarded(kInversionInvolution, [&] { run_geom_properties(ctx, accs); });
  guarded(kPedalSideRatio, [&] { run_pedal_properties(ctx, accs); });

  NotablePointSet notable;
  try {
    notable = eleven_points(ctx.tri, ctx.tol);
  } catch (const std::exception&) {
    accs[kLabelsVerified].error();
    return;
  }

  guarded(kLabelsVerified, [&] { run_label_property(ctx, accs, notable); });
  guarded(kSolveConcurrency, [&] { run_solver_properties(ctx, accs, notable); });
  if (notable.exterior) {
    guarded(kBrocardCircleConcyclic, [&] { run_notable_properties(ctx, accs, notable); });
  } else {
    guarded(kEquilateralCoincidence, [&] { run_equilateral_properties(ctx, accs, notable); });
  }
  guarded(kMedianProportionalEquivalence, [&] { run_constructed_family_properties(ctx, accs); });
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  const long trials = std::max<long>(1, options.trials);
  unsigned threads = options.threads;
  if (threads == 0) threads = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  if (trials < 64) threads = 1;

  const double default_floor = 5.0 * kPi / 180.0;
  const double floor = std::min(options.theta_min, default_floor);
  const double ratio = std::sin(default_floor) / std::sin(floor);
  const double conditioning = std::max(1.0, ratio * ratio);

  const auto worker = [&](long begin, long end, std::vector<Accumulator>& accs) {
    for (long t = begin; t < end; ++t) {
      TrialRng rng(options.seed, static_cast<std::uint64_t>(t));
      try {
        const SamplerOptions sampler_opt{options.theta_min, true};
        const Triangle tri = options.fixed ? to_triangle(*options.fixed, options.tol)
                                           : sample_triangle(rng, sampler_opt, options.tol);
        TrialContext ctx{tri, rng, options.tol, options.theta_min, !options.fixed.has_value()};
        run_trial(ctx, accs);
      } catch (const std::exception&) {
        accs[kLabelsVerified].error();
      }
    }
  };

  std::vector<std::vector<Accumulator>> partials;
  if (threads <= 1) {
    partials.push_back(make_accumulators(options.tol, conditioning));
    worker(0, trials, partials[0]);
  } else {
    partials.assign(threads, make_accumulators(options.tol, conditioning));
    std::vector<std::thread> pool;
    const long chunk = (trials + static_cast<long>(threads) - 1) / static_cast<long>(threads);
    for (unsigned i = 0; i < threads; ++i) {
      const long begin = static_cast<long>(i) * chunk;
      const long end = std::min(trials, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, i, begin, end] { worker(begin, end, partials[i]); });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<Accumulator> merged = make_accumulators(options.tol, conditioning);
  for (const auto& partial : partials)
    for (std::size_t i = 0; i < merged.size(); ++i) merged[i].merge(partial[i]);

  VerifyReport report;
  report.trials = trials;
  report.seed = options.seed;
  report.theta_min = options.theta_min;
  report.tol = options.tol;
  report.fixed_input = options.fixed.has_value();
  report.pass = true;
  for (const auto& acc : merged) {
    report.properties.push_back(acc.rec);
    if (!acc.rec.informational && acc.rec.failures > 0) report.pass = false;
  }
  std::sort(report.properties.begin(), report.properties.end(),
            [](const PropertyRecord& x, const PropertyRecord& y) { return x.name < y.name; });
  return report;
}

}  // namespace pedal::app
