#include "json_io.hpp"

#include <cmath>

namespace pedal::app {

using nlohmann::json;

json json_point(Point p) { return json::array({p.x, p.y}); }

json json_line(const Line& line) {
  return json{{"anchor", json_point(line.anchor)}, {"direction", json_point(line.direction)}};
}

json json_circle(const Circle& c) {
  return json{{"center", json_point(c.center)}, {"radius", c.radius}};
}

json json_triangle(const Triangle& tri) {
  const auto angles = angles_of(tri).as_array();
  return json{
      {"vertices", json{{"A", json_point(tri.vertex_a())},
                        {"B", json_point(tri.vertex_b())},
                        {"C", json_point(tri.vertex_c())}}},
      {"sides", json::array({tri.side_a(), tri.side_b(), tri.side_c()})},
      {"angles_rad", json::array({angles[0], angles[1], angles[2]})},
  };
}

namespace {

json json_gcircle(const GeneralizedCircle& g) {
  if (is_line(g)) return json{{"line", json_line(std::get<Line>(g))}};
  return json{{"circle", json_circle(std::get<Circle>(g))}};
}

json labeled_point(const Triangle& tri, Point p, const std::string& permutation) {
  const Barycentric bary = barycentric_of(tri, p);
  return json{{"xy", json_point(p)},
              {"barycentric", json::array({bary.u, bary.v, bary.w})},
              {"pedal_permutation", permutation}};
}

json labeled_maybe_point(const Triangle& tri, const MaybeInfinitePoint& p,
                         const std::string& permutation) {
  if (is_finite_point(p)) return labeled_point(tri, finite_point(p), permutation);
  return json{{"at_infinity", json_point(std::get<AtInfinity>(p).direction)},
              {"pedal_permutation", permutation}};
}

}  // namespace

json points_document(const Triangle& tri, const ToleranceConfig& tol) {
  const NotablePointSet set = eleven_points(tri, tol);
  const Circle k = circumcircle(tri);
  json doc{
      {"schema", kSchema},
      {"triangle", json_triangle(tri)},
      {"circumcircle", json_circle(k)},
      {"brocard_angle_rad", set.brocard_angle},
      {"brocard_angle_deg", set.brocard_angle * 180.0 / kPi},
      {"lemoine", labeled_point(tri, set.lemoine, "")},
  };
  doc["lemoine"].erase("pedal_permutation");
  const auto& labels = set.similarity_labels;
  doc["interior_points"] = json{
      {"O", labeled_point(tri, set.o, labels.at("O"))},
      {"Omega1", labeled_point(tri, set.omega1, labels.at("Omega1"))},
      {"Omega2", labeled_point(tri, set.omega2, labels.at("Omega2"))},
      {"L1", labeled_point(tri, set.l1, labels.at("L1"))},
      {"L2", labeled_point(tri, set.l2, labels.at("L2"))},
      {"L3", labeled_point(tri, set.l3, labels.at("L3"))},
  };
  doc["brocard_circle"] = set.brocard_circle ? json_circle(*set.brocard_circle) : json(nullptr);
  doc["axis_g"] = set.axis_g ? json_line(*set.axis_g) : json(nullptr);
  if (set.exterior) {
    doc["exterior_points"] = json{
        {"Omega1p", labeled_maybe_point(tri, set.exterior->omega1p, labels.at("Omega1p"))},
        {"Omega2p", labeled_maybe_point(tri, set.exterior->omega2p, labels.at("Omega2p"))},
        {"L1p", labeled_maybe_point(tri, set.exterior->l1p, labels.at("L1p"))},
        {"L2p", labeled_maybe_point(tri, set.exterior->l2p, labels.at("L2p"))},
        {"L3p", labeled_maybe_point(tri, set.exterior->l3p, labels.at("L3p"))},
    };
    const auto circles = basic_apollonius_circles(tri, tol);
    doc["basic_apollonius_circles"] = json{{"k1", json_gcircle(circles[0])},
                                           {"k2", json_gcircle(circles[1])},
                                           {"k3", json_gcircle(circles[2])}};
  } else {
    doc["exterior_points"] = nullptr;
    doc["basic_apollonius_circles"] = nullptr;
  }
  return doc;
}

json pedal_document(const Triangle& tri, Point at, const ToleranceConfig& tol) {
  const PedalResult result = pedal_triangle(tri, at, tol);
  json doc{
      {"schema", kSchema},
      {"triangle", json_triangle(tri)},
      {"at", json_point(at)},
      {"feet", json{{"A1", json_point(result.feet[0])},
                    {"B1", json_point(result.feet[1])},
                    {"C1", json_point(result.feet[2])}}},
  };
  if (result.degenerate()) {
    doc["classification"] = "degenerate";
    doc["pedal_angles_rad"] = nullptr;
    doc["simson_line"] = json_line(result.simson_line());
  } else {
    const auto& oriented = result.oriented();
    doc["classification"] =
        oriented.orientation == PedalOrientation::Positive ? "positive" : "negative";
    const auto angles = oriented.angles.as_array();
    doc["pedal_angles_rad"] = json::array({angles[0], angles[1], angles[2]});
    doc["simson_line"] = nullptr;
  }
  return doc;
}

json solve_document(const Triangle& tri, const AngleTriple& target, const ToleranceConfig& tol) {
  const SolveOutcome outcome = solve(tri, target, tol);
  const Circle k = circumcircle(tri);
  const auto roundtrip = [&](Point p) {
    const auto angles = f_of(tri, p, tol).angles.as_array();
    const auto want = target.as_array();
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst, std::fabs(angles[static_cast<std::size_t>(i)] -
                                        want[static_cast<std::size_t>(i)]));
    return worst;
  };
  json doc{
      {"schema", kSchema},
      {"triangle", json_triangle(tri)},
      {"target_rad", json::array({target.alpha1, target.beta1, target.gamma1})},
      {"discriminant_ok", outcome.discriminant_ok},
      {"conditioning_warning", outcome.conditioning_warning},
      {"inside", json{{"xy", json_point(outcome.inside)},
                      {"roundtrip_residual_rad", roundtrip(outcome.inside)}}},
  };
  if (outcome.outside) {
    doc["outside"] = json{{"xy", json_point(*outcome.outside)},
                          {"roundtrip_residual_rad", roundtrip(*outcome.outside)}};
    doc["inverse_pair_residual"] =
        std::fabs(distance(outcome.inside, k.center) * distance(*outcome.outside, k.center) /
                      (k.radius * k.radius) -
                  1.0);
  } else {
    doc["outside"] = nullptr;
    doc["inverse_pair_residual"] = nullptr;
  }
  return doc;
}

json verify_document(const VerifyReport& report) {
  json properties = json::object();
  for (const auto& rec : report.properties) {
    json entry{
        {"trials", rec.trials},
        {"failures", rec.failures},
        {"max_residual", rec.max_residual},
    };
    entry["tolerance"] = rec.informational ? json(nullptr) : json(rec.tolerance);
    properties[rec.name] = entry;
  }
  return json{
      {"schema", kSchema},
      {"seed", report.seed},
      {"trials", report.trials},
      {"theta_min_deg", report.theta_min * 180.0 / kPi},
      {"eps_rel", report.tol.eps_rel},
      {"angle_eps", report.tol.angle_eps},
      {"mode", report.fixed_input ? "fixed" : "random"},
      {"pass", report.pass},
      {"properties", properties},
  };
}

}  // namespace pedal::app
