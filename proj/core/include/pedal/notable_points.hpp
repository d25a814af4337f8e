#pragma once

// The eleven points whose pedal triangles are similar to the base triangle:
// six interior ones (circumcenter, the two Brocard points, and the three
// projections of the circumcenter on the symmedians) on the Brocard circle,
// and the five exterior ones (their inverses in the circumcircle) on the
// axis g. Also the closed-form barycentric expressions for cross-checking
// the constructions.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pedal/geometry.hpp"

namespace pedal {

/// Normalized barycentric weights with respect to (A, B, C); u + v + w = 1.
struct Barycentric {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
};

struct AtInfinity {
  Vec2 direction;  // unit, lexicographically canonicalized
};

using MaybeInfinitePoint = std::variant<Point, AtInfinity>;

inline bool is_finite_point(const MaybeInfinitePoint& p) { return std::holds_alternative<Point>(p); }
inline const Point& finite_point(const MaybeInfinitePoint& p) { return std::get<Point>(p); }

struct ExteriorPoints {
  MaybeInfinitePoint omega1p, omega2p, l1p, l2p, l3p;

  std::array<const MaybeInfinitePoint*, 5> all() const {
    return {&omega1p, &omega2p, &l1p, &l2p, &l3p};
  }
};

struct NotablePointSet {
  Point o, omega1, omega2, l1, l2, l3;
  Point lemoine;
  double brocard_angle = 0.0;
  std::optional<Circle> brocard_circle;     // absent for equilateral input
  std::optional<Line> axis_g;               // absent for equilateral input
  std::optional<ExteriorPoints> exterior;   // absent for equilateral input
  std::map<std::string, std::string> similarity_labels;
};

/// The common angle the first Brocard point makes with the sides; always in
/// (0, pi/6].
double brocard_angle(const Triangle& tri, const ToleranceConfig& tol = {});

/// (Omega1, Omega2): the points whose pedal triples are the two cyclic
/// permutations of the base angles. Coincide with the circumcenter exactly
/// for equilateral input.
std::pair<Point, Point> brocard_points(const Triangle& tri, const ToleranceConfig& tol = {});

/// Concurrence point of the three symmedians (medians reflected in the
/// internal bisectors).
Point lemoine_point(const Triangle& tri, const ToleranceConfig& tol = {});

/// Perpendicular projections (L1, L2, L3) of the circumcenter onto the
/// symmedian rays from A, B, C.
std::array<Point, 3> symmedian_projections(const Triangle& tri, const ToleranceConfig& tol = {});

/// Circle with diameter from the circumcenter to the Lemoine point; carries
/// all six interior points. Errors with EquilateralDegenerate when the two
/// endpoints coincide.
Circle brocard_circle(const Triangle& tri, const ToleranceConfig& tol = {});

/// Image of the Brocard circle under inversion in the circumcircle: a line
/// perpendicular to O-Lemoine carrying the five exterior points.
Line axis_g(const Triangle& tri, const ToleranceConfig& tol = {});

/// Inverses of the five non-center interior points in the circumcircle. An
/// interior point that coincides with the circumcenter (isosceles cases)
/// maps to the point at infinity of the corresponding side direction.
ExteriorPoints exterior_points(const Triangle& tri, const ToleranceConfig& tol = {});

/// k1 over base (B, C) through A, k2 over (C, A) through B, k3 over (A, B)
/// through C; their centers are the exterior points L1', L2', L3'. An
/// isosceles pair degenerates the circle to a perpendicular bisector.
std::array<GeneralizedCircle, 3> basic_apollonius_circles(const Triangle& tri,
                                                          const ToleranceConfig& tol = {});

Barycentric barycentric_of(const Triangle& tri, Point p);
Point point_of(const Triangle& tri, const Barycentric& bary,
               const ToleranceConfig& tol = {});

NotablePointSet eleven_points(const Triangle& tri, const ToleranceConfig& tol = {});

/// Equivalence report for the relation a^2 + b^2 = 2c^2: it holds iff the
/// Lemoine point lies on the circle through A, B, O (the line AB when the
/// angle at C is right) iff its inverse in the circumcircle lies on line AB.
struct MedianProportionalReport {
  bool condition_holds = false;
  bool l_on_abo_circle = false;
  bool l_inverse_on_ab = false;
  double condition_residual = 0.0;
  double circle_residual = 0.0;
  double line_residual = 0.0;
};

MedianProportionalReport median_proportional_check(const Triangle& tri,
                                                   const ToleranceConfig& tol = {});

// Closed-form barycentric evaluations, computed in extended precision from
// the vertices (the weights cancel heavily near equilateral input). The
// constructions above must agree with these.

/// (L1, L2, L3) from the weights (b^2+c^2-a^2, b^2, c^2) and cyclic shifts.
std::array<Point, 3> symmedian_projections_formula(const Triangle& tri);

/// (Omega1', Omega2') from the weights a^2(a^2-b^2), b^2(b^2-c^2),
/// c^2(c^2-a^2) over a^4+b^4+c^4-a^2b^2-b^2c^2-c^2a^2, and the (b,c,a)
/// substitution. Errors with EquilateralDegenerate when the denominator
/// vanishes.
std::pair<Point, Point> exterior_brocard_formula(const Triangle& tri,
                                                 const ToleranceConfig& tol = {});

/// Midpoint of Omega1'-Omega2' from the weights a^2(2a^2-b^2-c^2),
/// b^2(2b^2-c^2-a^2), c^2(2c^2-a^2-b^2).
Point exterior_midpoint_formula(const Triangle& tri, const ToleranceConfig& tol = {});

/// Variant that drops the c^2 factor on the third weight; kept so reports
/// can record how far it lands from the constructed midpoint.
Point exterior_midpoint_formula_alt(const Triangle& tri, const ToleranceConfig& tol = {});

}  // namespace pedal
