#pragma once

// JSON views of the kernel results. nlohmann::json keeps object keys
// sorted, which is exactly the deterministic field order the CLI promises.

#include <json.hpp>

#include "pedal/geometry.hpp"
#include "pedal/inverse_pedal.hpp"
#include "pedal/notable_points.hpp"
#include "pedal/pedal_map.hpp"
#include "verify.hpp"

namespace pedal::app {

inline constexpr const char* kSchema = "pedal-kernel/1";

nlohmann::json json_point(Point p);
nlohmann::json json_line(const Line& line);
nlohmann::json json_circle(const Circle& c);
nlohmann::json json_triangle(const Triangle& tri);

nlohmann::json points_document(const Triangle& tri, const ToleranceConfig& tol);
nlohmann::json pedal_document(const Triangle& tri, Point at, const ToleranceConfig& tol);
nlohmann::json solve_document(const Triangle& tri, const AngleTriple& target,
                              const ToleranceConfig& tol);
nlohmann::json verify_document(const VerifyReport& report);

}  // namespace pedal::app
