#include "pedal/geometry.hpp"

#include <algorithm>
#include <limits>

namespace pedal {

namespace {

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

void require_finite(Point p, const char* what) {
  if (!finite(p)) throw GeometryError(ErrorCode::NonFiniteInput, std::string(what) + ": non-finite coordinates");
}

// Circumcenter of three points with no validity checks; the caller decides
// what "degenerate" means.
Circle circumcircle_raw(Point a, Point b, Point c) {
  const Vec2 u = b - a;
  const Vec2 v = c - a;
  const double d = 2.0 * cross(u, v);
  const double uu = norm2(u);
  const double vv = norm2(v);
  const Vec2 rel{(v.y * uu - u.y * vv) / d, (u.x * vv - v.x * uu) / d};
  return Circle{a + rel, norm(rel)};
}

}  // namespace

AngleTriple make_angle_triple(double alpha1, double beta1, double gamma1,
                              const ToleranceConfig& tol) {
  const AngleTriple t{alpha1, beta1, gamma1};
  for (double v : t.as_array()) {
    if (!std::isfinite(v) || v <= 0.0 || v >= kPi)
      throw GeometryError(ErrorCode::InvalidTarget, "angle triple components must lie in (0, pi)");
  }
  if (std::fabs(alpha1 + beta1 + gamma1 - kPi) > tol.angle_eps)
    throw GeometryError(ErrorCode::InvalidTarget, "angle triple must sum to pi");
  return t;
}

Triangle::Triangle(Point a, Point b, Point c, const ToleranceConfig& tol)
    : a_(a), b_(b), c_(c) {
  require_finite(a, "triangle vertex A");
  require_finite(b, "triangle vertex B");
  require_finite(c, "triangle vertex C");
  side_a_ = distance(b, c);
  side_b_ = distance(c, a);
  side_c_ = distance(a, b);
  const double longest = max_side();
  const double doubled_area = std::fabs(cross(b - a, c - a));
  if (longest <= 0.0 || doubled_area < tol.eps_rel * longest * longest)
    throw GeometryError(ErrorCode::DegenerateTriangle, "triangle vertices are collinear within tolerance");
}

const Point& Triangle::vertex(int i) const {
  switch (i) {
    case 0: return a_;
    case 1: return b_;
    default: return c_;
  }
}

double Triangle::max_side() const { return std::max({side_a_, side_b_, side_c_}); }

int Triangle::orientation() const {
  return cross(b_ - a_, c_ - a_) > 0.0 ? 1 : -1;
}

Circle circumcircle(const Triangle& tri) {
  return circumcircle_raw(tri.vertex_a(), tri.vertex_b(), tri.vertex_c());
}

Point invert_point(const Inversion& inv, Point p, const ToleranceConfig& tol) {
  if (!(inv.power > 0.0) || !std::isfinite(inv.power))
    throw GeometryError(ErrorCode::InvalidInput, "inversion power must be positive and finite");
  const Vec2 rel = p - inv.center;
  const double d2 = norm2(rel);
  const double scale = std::sqrt(inv.power);
  if (std::sqrt(d2) <= tol.eps_rel * scale)
    throw GeometryError(ErrorCode::PointAtCenter, "cannot invert the inversion center");
  return inv.center + (inv.power / d2) * rel;
}

GeneralizedCircle invert_gcircle(const Inversion& inv, const GeneralizedCircle& g,
                                 const ToleranceConfig& tol) {
  const double scale = std::sqrt(inv.power);
  if (is_line(g)) {
    const Line& line = std::get<Line>(g);
    const double h = point_line_distance(inv.center, line);
    if (h <= tol.eps_rel * scale) return g;  // line through the center is fixed
    // Image is the circle with diameter from the center to the inverted foot.
    const Point foot = project_point_on_line(inv.center, line);
    const Point foot_img = invert_point(inv, foot, tol);
    return Circle{midpoint(inv.center, foot_img), distance(inv.center, foot_img) / 2.0};
  }
  const Circle& c = std::get<Circle>(g);
  const Vec2 rel = c.center - inv.center;
  const double d = norm(rel);
  if (std::fabs(d - c.radius) <= tol.eps_rel * c.radius) {
    // Circle through the center: image is the line through the image of the
    // diametrically opposite point, perpendicular to the center line.
    const Point far_point = c.center + (c.radius / d) * rel;
    const Point far_img = invert_point(inv, far_point, tol);
    return Line{far_img, normalized(perp(rel))};
  }
  if (d <= tol.eps_rel * c.radius) {
    // Concentric with the inversion: radius r maps to power/r.
    return Circle{c.center, inv.power / c.radius};
  }
  const double s = inv.power / (d * d - c.radius * c.radius);
  return Circle{inv.center + s * rel, std::fabs(s) * c.radius};
}

GeneralizedCircle apollonius(Point p, Point q, double ratio, const ToleranceConfig& tol) {
  require_finite(p, "apollonius base point");
  require_finite(q, "apollonius base point");
  if (!std::isfinite(ratio) || ratio <= 0.0)
    throw GeometryError(ErrorCode::InvalidInput, "apollonius ratio must be positive");
  const double span = distance(p, q);
  if (span <= tol.eps_rel * (norm(p) + norm(q)) || span == 0.0)
    throw GeometryError(ErrorCode::CoincidentBasePoints, "apollonius base points coincide");
  if (std::fabs(ratio - 1.0) <= tol.eps_rel)
    return Line{midpoint(p, q), normalized(perp(q - p))};
  const double r2 = ratio * ratio;
  const double t_center = r2 / (r2 - 1.0);
  return Circle{p + t_center * (q - p), ratio * span / std::fabs(r2 - 1.0)};
}

Point project_point_on_line(Point p, const Line& line) {
  return line.anchor + dot(p - line.anchor, line.direction) * line.direction;
}

double point_line_distance(Point p, const Line& line) {
  return std::fabs(cross(line.direction, p - line.anchor));
}

double point_gcircle_distance(Point p, const GeneralizedCircle& g) {
  if (is_line(g)) return point_line_distance(p, std::get<Line>(g));
  const Circle& c = std::get<Circle>(g);
  return std::fabs(distance(p, c.center) - c.radius);
}

namespace {

std::vector<Point> sorted_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  return pts;
}

// Safeguarded Newton polish on two implicit curves, each given by a value
// and gradient at a point. Steps are kept only while they shrink the
// first-order distance residual; the closed-form intersection formulas lose
// ~eps * r^2 / d to cancellation when one circle is much larger than the
// gap between the centers, and one or two steps recover it.
struct CurveEval {
  double value = 0.0;
  Vec2 gradient;
};

template <typename F1, typename F2>
Point polish_intersection(const F1& f1, const F2& f2, Point x, int steps) {
  const auto residual = [&](Point p) {
    const CurveEval e1 = f1(p);
    const CurveEval e2 = f2(p);
    const double n1 = norm(e1.gradient);
    const double n2 = norm(e2.gradient);
    if (n1 == 0.0 || n2 == 0.0) return std::numeric_limits<double>::infinity();
    return std::max(std::fabs(e1.value) / n1, std::fabs(e2.value) / n2);
  };
  double best = residual(x);
  for (int it = 0; it < steps; ++it) {
    const CurveEval e1 = f1(x);
    const CurveEval e2 = f2(x);
    const double det = cross(e1.gradient, e2.gradient);
    if (det == 0.0) break;
    const Point next =
        x - Vec2{(e1.value * e2.gradient.y - e2.value * e1.gradient.y) / det,
                 (e2.value * e1.gradient.x - e1.value * e2.gradient.x) / det};
    if (!finite(next)) break;
    const double next_residual = residual(next);
    if (!(next_residual < best)) break;
    best = next_residual;
    x = next;
  }
  return x;
}

auto circle_eval(const Circle& c) {
  return [c](Point p) {
    const Vec2 rel = p - c.center;
    return CurveEval{norm2(rel) - c.radius * c.radius, 2.0 * rel};
  };
}

auto line_eval(const Line& line) {
  return [line](Point p) {
    return CurveEval{cross(line.direction, p - line.anchor), perp(line.direction)};
  };
}

std::vector<Point> intersect_circle_circle(const Circle& c1, const Circle& c2,
                                           const ToleranceConfig& tol) {
  const Vec2 rel = c2.center - c1.center;
  const double d = norm(rel);
  const double rmax = std::max(c1.radius, c2.radius);
  if (d <= tol.eps_rel * rmax) {
    if (std::fabs(c1.radius - c2.radius) <= tol.eps_rel * rmax)
      throw GeometryError(ErrorCode::IdenticalLoci, "identical circles");
    return {};  // concentric, distinct radii
  }
  const double along = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
  const double h2 = c1.radius * c1.radius - along * along;
  // Tangency band at roundoff scale, not at eps_rel: the cancellation noise
  // in h2 is ~machine_eps * r^2.
  const double h2_tol = 64.0 * std::numeric_limits<double>::epsilon() *
                        (c1.radius * c1.radius + along * along);
  const Vec2 u = rel / d;
  const Point base = c1.center + along * u;
  if (h2 < -h2_tol) return {};
  if (h2 <= h2_tol) return {base};
  const double h = std::sqrt(h2);
  Point p1 = polish_intersection(circle_eval(c1), circle_eval(c2), base + h * perp(u), 2);
  Point p2 = polish_intersection(circle_eval(c1), circle_eval(c2), base - h * perp(u), 2);
  return sorted_points({p1, p2});
}

std::vector<Point> intersect_line_circle(const Line& line, const Circle& c,
                                         const ToleranceConfig&) {
  const Point foot = project_point_on_line(c.center, line);
  const double h2 = norm2(foot - c.center);
  const double disc = c.radius * c.radius - h2;
  const double disc_tol = 64.0 * std::numeric_limits<double>::epsilon() *
                          (c.radius * c.radius + h2);
  if (disc < -disc_tol) return {};
  if (disc <= disc_tol) return {foot};
  const double h = std::sqrt(disc);
  Point p1 = polish_intersection(line_eval(line), circle_eval(c), foot + h * line.direction, 2);
  Point p2 = polish_intersection(line_eval(line), circle_eval(c), foot - h * line.direction, 2);
  return sorted_points({p1, p2});
}

std::vector<Point> intersect_line_line(const Line& l1, const Line& l2,
                                       const ToleranceConfig& tol) {
  const double denom = cross(l1.direction, l2.direction);
  if (std::fabs(denom) <= tol.eps_rel) {
    const double offset = point_line_distance(l2.anchor, l1);
    const double scale = 1.0 + distance(l1.anchor, l2.anchor);
    if (offset <= tol.eps_rel * scale)
      throw GeometryError(ErrorCode::IdenticalLoci, "identical lines");
    return {};  // parallel
  }
  const double t = cross(l2.anchor - l1.anchor, l2.direction) / denom;
  return {l1.anchor + t * l1.direction};
}

}  // namespace

std::vector<Point> intersect_gcircles(const GeneralizedCircle& g1,
                                      const GeneralizedCircle& g2,
                                      const ToleranceConfig& tol) {
  if (is_circle(g1) && is_circle(g2))
    return intersect_circle_circle(std::get<Circle>(g1), std::get<Circle>(g2), tol);
  if (is_line(g1) && is_line(g2))
    return intersect_line_line(std::get<Line>(g1), std::get<Line>(g2), tol);
  if (is_line(g1)) return intersect_line_circle(std::get<Line>(g1), std::get<Circle>(g2), tol);
  return intersect_line_circle(std::get<Line>(g2), std::get<Circle>(g1), tol);
}

int orientation_sign(Point p, Point q, Point r, const ToleranceConfig& tol) {
  const double cr = cross(q - p, r - p);
  const double scale2 = std::max({norm2(q - p), norm2(r - p), norm2(r - q)});
  if (std::fabs(cr) <= tol.eps_rel * scale2) return 0;
  return cr > 0.0 ? 1 : -1;
}

AngleTriple angles_of(const Triangle& tri) {
  const double a = tri.side_a(), b = tri.side_b(), c = tri.side_c();
  const double alpha = std::acos(clamp_unit((b * b + c * c - a * a) / (2.0 * b * c)));
  const double beta = std::acos(clamp_unit((c * c + a * a - b * b) / (2.0 * c * a)));
  const double gamma = std::acos(clamp_unit((a * a + b * b - c * c) / (2.0 * a * b)));
  return AngleTriple{alpha, beta, gamma};
}

namespace {

double spread_diameter(std::span<const Point> pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, distance(pts[i], pts[j]));
  return best;
}

// Total-least-squares line: centroid plus dominant eigenvector of the 2x2
// scatter matrix.
Line tls_line(std::span<const Point> pts) {
  Vec2 centroid{0.0, 0.0};
  for (const Point& p : pts) centroid = centroid + p;
  centroid = centroid / static_cast<double>(pts.size());
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const Point& p : pts) {
    const Vec2 d = p - centroid;
    sxx += d.x * d.x;
    sxy += d.x * d.y;
    syy += d.y * d.y;
  }
  const double theta = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  return Line{centroid, {std::cos(theta), std::sin(theta)}};
}

}  // namespace

ConcyclicReport concyclic(std::span<const Point> points, const ToleranceConfig& tol) {
  if (points.size() < 4)
    throw GeometryError(ErrorCode::InvalidInput, "concyclic needs at least 4 points");
  const double spread = spread_diameter(points);
  if (spread <= 0.0)
    throw GeometryError(ErrorCode::InvalidInput, "all points coincident");

  // First three pairwise-distinct, non-collinear points.
  std::size_t i1 = 0, i2 = 0;
  bool found = false;
  for (std::size_t i = 1; i < points.size() && !found; ++i) {
    if (distance(points[0], points[i]) <= tol.eps_rel * spread) continue;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (orientation_sign(points[0], points[i], points[j], tol) != 0) {
        i1 = i;
        i2 = j;
        found = true;
        break;
      }
    }
  }
  ConcyclicReport report;
  if (!found) {
    const auto line_fit = collinear(points, tol);
    report.collinear = true;
    report.max_residual = line_fit.max_residual;
    return report;
  }
  const Circle fit = circumcircle_raw(points[0], points[i1], points[i2]);
  double worst = 0.0;
  for (const Point& p : points)
    worst = std::max(worst, std::fabs(distance(p, fit.center) - fit.radius));
  report.max_residual = worst / fit.radius;
  report.concyclic = report.max_residual <= tol.eps_rel;
  return report;
}

CollinearReport collinear(std::span<const Point> points, const ToleranceConfig& tol) {
  if (points.size() < 3)
    throw GeometryError(ErrorCode::InvalidInput, "collinear needs at least 3 points");
  const double spread = spread_diameter(points);
  double coord_scale = 0.0;
  for (const Point& p : points) coord_scale = std::max(coord_scale, std::max(std::fabs(p.x), std::fabs(p.y)));
  if (spread <= tol.eps_rel * (1.0 + coord_scale))
    throw GeometryError(ErrorCode::InvalidInput, "all points coincident");

  CollinearReport report;
  report.line = tls_line(points);
  double worst = 0.0;
  for (const Point& p : points)
    worst = std::max(worst, point_line_distance(p, report.line));
  report.max_residual = worst / spread;
  report.collinear = report.max_residual <= tol.eps_rel;
  return report;
}

}  // namespace pedal
