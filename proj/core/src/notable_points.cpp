#include "pedal/notable_points.hpp"

#include <algorithm>
#include <cmath>

#include "pedal/inverse_pedal.hpp"
#include "pedal/pedal_map.hpp"

namespace pedal {

namespace {

Vec2 canonical_direction(Vec2 v) {
  Vec2 d = normalized(v);
  if (d.x < 0.0 || (d.x == 0.0 && d.y < 0.0)) d = -d;
  return d;
}

// Symmedian ray from vertex i: the median direction reflected in the
// internal bisector direction at that vertex.
Line symmedian_ray(const Triangle& tri, int i) {
  const Point v = tri.vertex(i);
  const Point p = tri.vertex((i + 1) % 3);
  const Point q = tri.vertex((i + 2) % 3);
  const Vec2 median = normalized(midpoint(p, q) - v);
  const Vec2 bisector = normalized(normalized(p - v) + normalized(q - v));
  const Vec2 reflected = 2.0 * dot(median, bisector) * bisector - median;
  return Line{v, normalized(reflected)};
}

Point intersect_lines_strict(const Line& l1, const Line& l2) {
  const double denom = cross(l1.direction, l2.direction);
  if (denom == 0.0)
    throw GeometryError(ErrorCode::InternalAssertion, "parallel cevian lines");
  const double t = cross(l2.anchor - l1.anchor, l2.direction) / denom;
  return l1.anchor + t * l1.direction;
}

bool is_equilateral_like(const Circle& k, Point lemoine, const ToleranceConfig& tol) {
  return distance(lemoine, k.center) <= tol.eps_rel * 2.0 * k.radius;
}

double measured_brocard_angle(const Triangle& tri, Point omega1) {
  const Point a = tri.vertex_a(), b = tri.vertex_b(), c = tri.vertex_c();
  const double at_a = angle_at(a, omega1, b);
  const double at_b = angle_at(b, omega1, c);
  const double at_c = angle_at(c, omega1, a);
  return (at_a + at_b + at_c) / 3.0;
}

// Extended-precision barycentric combination from raw weights.
Point combine_ld(const Triangle& tri, long double w0, long double w1, long double w2) {
  const long double sum = w0 + w1 + w2;
  const Point a = tri.vertex_a(), b = tri.vertex_b(), c = tri.vertex_c();
  const long double x = (w0 * (long double)a.x + w1 * (long double)b.x + w2 * (long double)c.x) / sum;
  const long double y = (w0 * (long double)a.y + w1 * (long double)b.y + w2 * (long double)c.y) / sum;
  return Point{static_cast<double>(x), static_cast<double>(y)};
}

struct SidesSquaredLd {
  long double a2, b2, c2;
};

SidesSquaredLd sides_squared_ld(const Triangle& tri) {
  const Point a = tri.vertex_a(), b = tri.vertex_b(), c = tri.vertex_c();
  const auto sq = [](Point p, Point q) {
    const long double dx = (long double)p.x - (long double)q.x;
    const long double dy = (long double)p.y - (long double)q.y;
    return dx * dx + dy * dy;
  };
  return SidesSquaredLd{sq(b, c), sq(c, a), sq(a, b)};
}

}  // namespace

std::pair<Point, Point> brocard_points(const Triangle& tri, const ToleranceConfig& tol) {
  const AngleTriple base = angles_of(tri);
  const auto first = solve(tri, AngleTriple{base.beta1, base.gamma1, base.alpha1}, tol);
  const auto second = solve(tri, AngleTriple{base.gamma1, base.alpha1, base.beta1}, tol);
  return {first.inside, second.inside};
}

double brocard_angle(const Triangle& tri, const ToleranceConfig& tol) {
  return measured_brocard_angle(tri, brocard_points(tri, tol).first);
}

Point lemoine_point(const Triangle& tri, const ToleranceConfig& tol) {
  const Line from_a = symmedian_ray(tri, 0);
  const Line from_b = symmedian_ray(tri, 1);
  const Line from_c = symmedian_ray(tri, 2);
  const Point l = intersect_lines_strict(from_a, from_b);
  const double scale = 2.0 * circumcircle(tri).radius;
  if (point_line_distance(l, from_c) > 1e3 * tol.eps_rel * scale)
    throw GeometryError(ErrorCode::InternalAssertion, "symmedians failed to concur");
  return l;
}

std::array<Point, 3> symmedian_projections(const Triangle& tri, const ToleranceConfig&) {
  const Point o = circumcircle(tri).center;
  return {project_point_on_line(o, symmedian_ray(tri, 0)),
          project_point_on_line(o, symmedian_ray(tri, 1)),
          project_point_on_line(o, symmedian_ray(tri, 2))};
}

Circle brocard_circle(const Triangle& tri, const ToleranceConfig& tol) {
  const Circle k = circumcircle(tri);
  const Point l = lemoine_point(tri, tol);
  if (is_equilateral_like(k, l, tol))
    throw GeometryError(ErrorCode::EquilateralDegenerate,
                        "Brocard circle collapses to a point for equilateral input");
  return Circle{midpoint(k.center, l), distance(k.center, l) / 2.0};
}

Line axis_g(const Triangle& tri, const ToleranceConfig& tol) {
  const Circle k = circumcircle(tri);
  const Circle k0 = brocard_circle(tri, tol);
  const auto image = invert_gcircle(Inversion{k.center, k.radius * k.radius}, k0, tol);
  if (!is_line(image))
    throw GeometryError(ErrorCode::InternalAssertion,
                        "Brocard circle passes through the inversion center; its image must be a line");
  return std::get<Line>(image);
}

ExteriorPoints exterior_points(const Triangle& tri, const ToleranceConfig& tol) {
  const Circle k = circumcircle(tri);
  const Point l = lemoine_point(tri, tol);
  if (is_equilateral_like(k, l, tol))
    throw GeometryError(ErrorCode::EquilateralDegenerate,
                        "exterior points are undefined for equilateral input");
  const Inversion inv{k.center, k.radius * k.radius};
  const auto [omega1, omega2] = brocard_points(tri, tol);
  const auto ls = symmedian_projections(tri, tol);
  const Vec2 axis_dir = perp(l - k.center);  // the axis g is perpendicular to OL
  const std::array<Vec2, 5> infinity_dirs = {
      axis_dir,                         // Omega1' (unreachable off-equilateral)
      axis_dir,                         // Omega2'
      tri.vertex_c() - tri.vertex_b(),  // L1' goes to infinity along BC (b = c)
      tri.vertex_a() - tri.vertex_c(),  // L2' along CA (c = a)
      tri.vertex_b() - tri.vertex_a(),  // L3' along AB (a = b)
  };
  const std::array<Point, 5> sources = {omega1, omega2, ls[0], ls[1], ls[2]};
  std::array<MaybeInfinitePoint, 5> images;
  for (std::size_t i = 0; i < 5; ++i) {
    if (distance(sources[i], k.center) <= tol.eps_rel * 2.0 * k.radius)
      images[i] = AtInfinity{canonical_direction(infinity_dirs[i])};
    else
      images[i] = invert_point(inv, sources[i], tol);
  }
  return ExteriorPoints{images[0], images[1], images[2], images[3], images[4]};
}

std::array<GeneralizedCircle, 3> basic_apollonius_circles(const Triangle& tri,
                                                          const ToleranceConfig& tol) {
  const double a = tri.side_a(), b = tri.side_b(), c = tri.side_c();
  return {apollonius(tri.vertex_b(), tri.vertex_c(), c / b, tol),
          apollonius(tri.vertex_c(), tri.vertex_a(), a / c, tol),
          apollonius(tri.vertex_a(), tri.vertex_b(), b / a, tol)};
}

Barycentric barycentric_of(const Triangle& tri, Point p) {
  const Point a = tri.vertex_a(), b = tri.vertex_b(), c = tri.vertex_c();
  const double area = cross(b - a, c - a);
  const double u = cross(b - p, c - p) / area;
  const double v = cross(c - p, a - p) / area;
  const double w = cross(a - p, b - p) / area;
  const double sum = u + v + w;
  return Barycentric{u / sum, v / sum, w / sum};
}

Point point_of(const Triangle& tri, const Barycentric& bary, const ToleranceConfig& tol) {
  const double sum = bary.u + bary.v + bary.w;
  if (std::fabs(sum) <= tol.eps_rel * (std::fabs(bary.u) + std::fabs(bary.v) + std::fabs(bary.w)))
    throw GeometryError(ErrorCode::ZeroWeightSum, "barycentric weights sum to zero (point at infinity)");
  return (bary.u * tri.vertex_a() + bary.v * tri.vertex_b() + bary.w * tri.vertex_c()) / sum;
}

namespace {

const std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2},  // O   -> ABC
    {1, 2, 0},  // Om1 -> BCA
    {2, 0, 1},  // Om2 -> CAB
    {0, 2, 1},  // L1  -> ACB
    {2, 1, 0},  // L2  -> CBA
    {1, 0, 2},  // L3  -> BAC
}};
const std::array<const char*, 6> kPermutationNames = {"ABC", "BCA", "CAB",
                                                      "ACB", "CBA", "BAC"};
const std::array<const char*, 6> kInteriorLabels = {"O", "Omega1", "Omega2", "L1", "L2", "L3"};
const std::array<const char*, 5> kExteriorLabels = {"Omega1p", "Omega2p", "L1p", "L2p", "L3p"};

// Misassembly detector: a wrongly labeled point realizes a different
// permutation, which is off by the scale of the angle gaps. The loose
// threshold keeps conditioning noise on near-degenerate triangles below it.
void verify_label(const Triangle& tri, Point p, const std::array<int, 3>& perm,
                  PedalOrientation expected, const ToleranceConfig& tol) {
  const auto base = angles_of(tri).as_array();
  const auto got = f_of(tri, p, tol);
  if (got.orientation != expected)
    throw GeometryError(ErrorCode::InternalAssertion, "notable point has the wrong pedal orientation");
  const auto angles = got.angles.as_array();
  for (int i = 0; i < 3; ++i) {
    if (std::fabs(angles[static_cast<std::size_t>(i)] -
                  base[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]) > 1e-4)
      throw GeometryError(ErrorCode::InternalAssertion, "notable point pedal angles mismatch its label");
  }
}

}  // namespace

NotablePointSet eleven_points(const Triangle& tri, const ToleranceConfig& tol) {
  NotablePointSet set;
  const Circle k = circumcircle(tri);
  set.o = k.center;
  const auto [omega1, omega2] = brocard_points(tri, tol);
  set.omega1 = omega1;
  set.omega2 = omega2;
  const auto ls = symmedian_projections(tri, tol);
  set.l1 = ls[0];
  set.l2 = ls[1];
  set.l3 = ls[2];
  set.lemoine = lemoine_point(tri, tol);
  set.brocard_angle = measured_brocard_angle(tri, set.omega1);

  const bool equilateral = is_equilateral_like(k, set.lemoine, tol);
  if (!equilateral) {
    set.brocard_circle = brocard_circle(tri, tol);
    set.axis_g = axis_g(tri, tol);
    set.exterior = exterior_points(tri, tol);
  }

  const std::array<Point, 6> interior = {set.o, set.omega1, set.omega2, set.l1, set.l2, set.l3};
  for (std::size_t i = 0; i < 6; ++i) {
    set.similarity_labels[kInteriorLabels[i]] = kPermutationNames[i];
    if (!equilateral)
      verify_label(tri, interior[i], kPermutations[i], PedalOrientation::Positive, tol);
  }
  if (set.exterior) {
    const auto ext = set.exterior->all();
    for (std::size_t i = 0; i < 5; ++i) {
      set.similarity_labels[kExteriorLabels[i]] = kPermutationNames[i + 1];
      if (is_finite_point(*ext[i]))
        verify_label(tri, finite_point(*ext[i]), kPermutations[i + 1],
                     PedalOrientation::Negative, tol);
    }
  }
  return set;
}

MedianProportionalReport median_proportional_check(const Triangle& tri,
                                                   const ToleranceConfig& tol) {
  const double a = tri.side_a(), b = tri.side_b(), c = tri.side_c();
  const Circle k = circumcircle(tri);
  const Point l = lemoine_point(tri, tol);

  MedianProportionalReport report;
  report.condition_residual = std::fabs(a * a + b * b - 2.0 * c * c) / (a * a + b * b + c * c);
  report.condition_holds = report.condition_residual <= tol.eps_rel;

  // Circle through A, B, O; degenerates to the line AB when the angle at C
  // is right (A, B, O collinear).
  const Point va = tri.vertex_a(), vb = tri.vertex_b();
  const Line ab = tri.line_ab();
  if (point_line_distance(k.center, ab) <= 1e-7 * k.radius) {
    report.circle_residual = point_line_distance(l, ab) / k.radius;
  } else {
    const Vec2 u = vb - va;
    const Vec2 v = k.center - va;
    const double d = 2.0 * cross(u, v);
    const Vec2 rel{(v.y * norm2(u) - u.y * norm2(v)) / d, (u.x * norm2(v) - v.x * norm2(u)) / d};
    const Point center = va + rel;
    const double radius = norm(rel);
    // First-order distance; avoids the cancellation of |L-c| - r for the
    // huge circles that arise near the right-angle case.
    report.circle_residual =
        std::fabs(norm2(l - center) - radius * radius) / (2.0 * radius * k.radius);
  }
  report.l_on_abo_circle = report.circle_residual <= tol.eps_rel;

  if (distance(l, k.center) <= tol.eps_rel * 2.0 * k.radius) {
    // Equilateral: the inverse of L is the point at infinity, incident to
    // every line.
    report.line_residual = 0.0;
    report.l_inverse_on_ab = true;
  } else {
    const Point linv = invert_point(Inversion{k.center, k.radius * k.radius}, l, tol);
    report.line_residual =
        point_line_distance(linv, ab) / (k.radius + distance(linv, k.center));
    report.l_inverse_on_ab = report.line_residual <= tol.eps_rel;
  }
  return report;
}

std::array<Point, 3> symmedian_projections_formula(const Triangle& tri) {
  const auto [a2, b2, c2] = sides_squared_ld(tri);
  if (2.0L * (b2 + c2) - a2 <= 0.0L || 2.0L * (c2 + a2) - b2 <= 0.0L ||
      2.0L * (a2 + b2) - c2 <= 0.0L)
    throw GeometryError(ErrorCode::InternalAssertion, "symmedian projection denominator not positive");
  return {combine_ld(tri, b2 + c2 - a2, b2, c2),
          combine_ld(tri, a2, c2 + a2 - b2, c2),
          combine_ld(tri, a2, b2, a2 + b2 - c2)};
}

namespace {

long double exterior_denominator(const SidesSquaredLd& s) {
  return s.a2 * s.a2 + s.b2 * s.b2 + s.c2 * s.c2 - s.a2 * s.b2 - s.b2 * s.c2 - s.c2 * s.a2;
}

void require_non_equilateral(const SidesSquaredLd& s, const Triangle& tri,
                             const ToleranceConfig& tol) {
  const long double scale = s.a2 + s.b2 + s.c2;
  if (exterior_denominator(s) <= (long double)(tol.eps_rel * tol.eps_rel) * scale * scale)
    throw GeometryError(ErrorCode::EquilateralDegenerate,
                        "closed form undefined for equilateral input");
  (void)tri;
}

}  // namespace

std::pair<Point, Point> exterior_brocard_formula(const Triangle& tri, const ToleranceConfig& tol) {
  const auto s = sides_squared_ld(tri);
  require_non_equilateral(s, tri, tol);
  const Point first = combine_ld(tri, s.a2 * (s.a2 - s.b2), s.b2 * (s.b2 - s.c2),
                                 s.c2 * (s.c2 - s.a2));
  const Point second = combine_ld(tri, s.a2 * (s.a2 - s.c2), s.b2 * (s.b2 - s.a2),
                                  s.c2 * (s.c2 - s.b2));
  return {first, second};
}

Point exterior_midpoint_formula(const Triangle& tri, const ToleranceConfig& tol) {
  const auto s = sides_squared_ld(tri);
  require_non_equilateral(s, tri, tol);
  return combine_ld(tri, s.a2 * (2.0L * s.a2 - s.b2 - s.c2),
                    s.b2 * (2.0L * s.b2 - s.c2 - s.a2),
                    s.c2 * (2.0L * s.c2 - s.a2 - s.b2));
}

Point exterior_midpoint_formula_alt(const Triangle& tri, const ToleranceConfig& tol) {
  const auto s = sides_squared_ld(tri);
  require_non_equilateral(s, tri, tol);
  return combine_ld(tri, s.a2 * (2.0L * s.a2 - s.b2 - s.c2),
                    s.b2 * (2.0L * s.b2 - s.c2 - s.a2),
                    2.0L * s.c2 - s.a2 - s.b2);
}

}  // namespace pedal
