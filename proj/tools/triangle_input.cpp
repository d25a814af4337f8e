#include "triangle_input.hpp"

#include <cmath>

namespace pedal::app {

Triangle to_triangle(const TriangleSpec& spec, const ToleranceConfig& tol) {
  if (std::holds_alternative<std::array<Point, 3>>(spec.data)) {
    const auto& v = std::get<std::array<Point, 3>>(spec.data);
    return Triangle(v[0], v[1], v[2], tol);
  }
  const auto& s = std::get<std::array<double, 3>>(spec.data);
  const double a = s[0], b = s[1], c = s[2];
  for (double side : s) {
    if (!std::isfinite(side) || side <= 0.0)
      throw GeometryError(ErrorCode::InvalidInput, "side lengths must be positive and finite");
  }
  const double longest = std::max({a, b, c});
  if (a + b - c <= tol.eps_rel * longest || b + c - a <= tol.eps_rel * longest ||
      c + a - b <= tol.eps_rel * longest)
    throw GeometryError(ErrorCode::InvalidInput, "side lengths violate the strict triangle inequality");
  const Point vb{0.0, 0.0};
  const Point vc{a, 0.0};
  const double ax = (a * a + c * c - b * b) / (2.0 * a);
  const double ay = std::sqrt(std::max(0.0, c * c - ax * ax));
  return Triangle(Point{ax, ay}, vb, vc, tol);
}

}  // namespace pedal::app
