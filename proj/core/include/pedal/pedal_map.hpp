#pragma once

// Pedal triangles and the map sending a point to the angle triple of its
// pedal triangle. A point inside the circumcircle has a positively oriented
// pedal triangle, a point outside a negatively oriented one, and a point on
// the circle a degenerate one (its Simson line).

#include <variant>

#include "pedal/geometry.hpp"

namespace pedal {

enum class PedalOrientation { Positive, Negative };

struct OrientedAngles {
  AngleTriple angles;  // at the feet on BC, CA, AB respectively
  PedalOrientation orientation = PedalOrientation::Positive;
};

struct PedalResult {
  std::array<Point, 3> feet;  // A1 on BC, B1 on CA, C1 on AB
  std::variant<OrientedAngles, Line> outcome;

  bool degenerate() const { return std::holds_alternative<Line>(outcome); }
  const OrientedAngles& oriented() const { return std::get<OrientedAngles>(outcome); }
  const Line& simson_line() const { return std::get<Line>(outcome); }
};

/// Perpendicular feet of m on the three side lines, classified by the
/// position of m relative to the circumcircle. The on-circle band is
/// | |Om|/R - 1 | <= eps_rel.
PedalResult pedal_triangle(const Triangle& tri, Point m, const ToleranceConfig& tol = {});

/// Angle triple of the pedal triangle of m, tagged with its orientation.
/// Errors: OnCircumcircle within the tolerance band, AtVertex at a vertex.
OrientedAngles f_of(const Triangle& tri, Point m, const ToleranceConfig& tol = {});

/// Angles subtended by the sides at an interior point m, with the reflex
/// convention: bmc = pi exactly when m lies on segment BC, and bmc > pi
/// when m and A are on opposite sides of line BC. The three values sum to
/// 2*pi for every m strictly inside the circumcircle.
struct VertexAngles {
  double bmc = 0.0;
  double cma = 0.0;
  double amb = 0.0;
};

VertexAngles vertex_angles(const Triangle& tri, Point m, const ToleranceConfig& tol = {});

/// Max componentwise angle difference between the pedal triples of m and of
/// its inverse in the circumcircle (which realize the same triple with
/// opposite orientations). Interior m only, away from the circumcenter.
double inverse_pair_consistency(const Triangle& tri, Point m, const ToleranceConfig& tol = {});

}  // namespace pedal
