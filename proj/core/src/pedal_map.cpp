#include "pedal/pedal_map.hpp"

#include <algorithm>

namespace pedal {

namespace {

void reject_vertices(const Triangle& tri, Point m, double scale, const ToleranceConfig& tol) {
  for (int i = 0; i < 3; ++i) {
    if (distance(m, tri.vertex(i)) <= tol.eps_rel * scale)
      throw GeometryError(ErrorCode::AtVertex, "point coincides with a triangle vertex");
  }
}

// Angles of the triangle (p0, p1, p2) at each vertex. Unlike angles_of this
// never rejects skinny inputs; pedal triangles of points near the
// circumcircle are legitimately close to degenerate.
AngleTriple raw_angles(Point p0, Point p1, Point p2) {
  return AngleTriple{angle_at(p0, p1, p2), angle_at(p1, p2, p0), angle_at(p2, p0, p1)};
}

}  // namespace

PedalResult pedal_triangle(const Triangle& tri, Point m, const ToleranceConfig& tol) {
  if (!finite(m)) throw GeometryError(ErrorCode::NonFiniteInput, "pedal point must be finite");
  const Circle k = circumcircle(tri);
  PedalResult result;
  result.feet = {project_point_on_line(m, tri.line_bc()),
                 project_point_on_line(m, tri.line_ca()),
                 project_point_on_line(m, tri.line_ab())};
  const double d = distance(m, k.center);
  if (std::fabs(d / k.radius - 1.0) <= tol.eps_rel) {
    result.outcome = collinear(result.feet, tol).line;  // Simson line
    return result;
  }
  const PedalOrientation orientation =
      d < k.radius ? PedalOrientation::Positive : PedalOrientation::Negative;
  result.outcome = OrientedAngles{raw_angles(result.feet[0], result.feet[1], result.feet[2]),
                                  orientation};
  return result;
}

OrientedAngles f_of(const Triangle& tri, Point m, const ToleranceConfig& tol) {
  if (!finite(m)) throw GeometryError(ErrorCode::NonFiniteInput, "pedal point must be finite");
  const Circle k = circumcircle(tri);
  const double d = distance(m, k.center);
  if (std::fabs(d / k.radius - 1.0) <= tol.eps_rel)
    throw GeometryError(ErrorCode::OnCircumcircle, "pedal angle map undefined on the circumcircle");
  reject_vertices(tri, m, 2.0 * k.radius, tol);
  return pedal_triangle(tri, m, tol).oriented();
}

VertexAngles vertex_angles(const Triangle& tri, Point m, const ToleranceConfig& tol) {
  const Circle k = circumcircle(tri);
  const double d = distance(m, k.center);
  if (d >= k.radius * (1.0 - tol.eps_rel))
    throw GeometryError(ErrorCode::OutsideCircle, "vertex angles need a point strictly inside the circumcircle");
  reject_vertices(tri, m, 2.0 * k.radius, tol);

  const Point a = tri.vertex_a(), b = tri.vertex_b(), c = tri.vertex_c();
  // Side-of-line tests rather than arc-cosine branch selection; near the
  // straight-angle case the atan2 value is already ~pi and the reflex branch
  // only flips it across 2*pi.
  const auto subtended = [&](Point p, Point q, Point opposite) {
    const double theta = angle_at(m, p, q);
    const Vec2 edge = q - p;
    const double side_m = cross(edge, m - p);
    const double side_far = cross(edge, opposite - p);
    if (std::fabs(side_m) <= tol.eps_rel * norm2(edge)) return kPi;  // m on the side line
    return side_m * side_far > 0.0 ? theta : 2.0 * kPi - theta;
  };
  return VertexAngles{subtended(b, c, a), subtended(c, a, b), subtended(a, b, c)};
}

double inverse_pair_consistency(const Triangle& tri, Point m, const ToleranceConfig& tol) {
  const Circle k = circumcircle(tri);
  const double d = distance(m, k.center);
  if (d >= k.radius * (1.0 - tol.eps_rel))
    throw GeometryError(ErrorCode::OutsideCircle, "inverse-pair check needs an interior point");
  const Point n = invert_point(Inversion{k.center, k.radius * k.radius}, m, tol);
  const auto fm = f_of(tri, m, tol).angles.as_array();
  const auto fn = f_of(tri, n, tol).angles.as_array();
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, std::fabs(fm[i] - fn[i]));
  return worst;
}

}  // namespace pedal
