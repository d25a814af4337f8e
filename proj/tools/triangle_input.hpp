#pragma once

// Triangle specification as it arrives from the command line: either three
// explicit vertices or three side lengths placed canonically (B at the
// origin, C at (a, 0), A in the upper half-plane).

#include <array>
#include <variant>

#include "pedal/geometry.hpp"

namespace pedal::app {

struct TriangleSpec {
  std::variant<std::array<Point, 3>, std::array<double, 3>> data;

  static TriangleSpec from_vertices(const std::array<Point, 3>& v) { return {v}; }
  static TriangleSpec from_sides(double a, double b, double c) {
    return {std::array<double, 3>{a, b, c}};
  }
};

Triangle to_triangle(const TriangleSpec& spec, const ToleranceConfig& tol = {});

}  // namespace pedal::app
