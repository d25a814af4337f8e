#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "render.hpp"
#include "sampling.hpp"
#include "triangle_input.hpp"
#include "verify.hpp"

namespace {

using namespace pedal;
using namespace pedal::app;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInternal = 3;

struct CommonOptions {
  std::vector<double> sides;
  std::vector<double> vertices;
  double eps = 0.0;  // 0 = default / PEDAL_EPS
};

ToleranceConfig resolve_tolerance(const CommonOptions& common) {
  ToleranceConfig tol;
  if (const char* env = std::getenv("PEDAL_EPS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0')
      throw GeometryError(ErrorCode::InvalidInput, "PEDAL_EPS is not a number");
    tol.eps_rel = value;
    tol.angle_eps = value;
  }
  if (common.eps > 0.0) {  // the flag wins over the environment
    tol.eps_rel = common.eps;
    tol.angle_eps = common.eps;
  }
  if (!tol.valid())
    throw GeometryError(ErrorCode::InvalidInput, "tolerance must be in (0, 1e-3)");
  return tol;
}

std::optional<TriangleSpec> parse_spec(const CommonOptions& common) {
  if (!common.sides.empty() && !common.vertices.empty())
    throw GeometryError(ErrorCode::InvalidInput, "--sides and --vertices are mutually exclusive");
  if (!common.sides.empty()) {
    if (common.sides.size() != 3)
      throw GeometryError(ErrorCode::InvalidInput, "--sides needs exactly a,b,c");
    return TriangleSpec::from_sides(common.sides[0], common.sides[1], common.sides[2]);
  }
  if (!common.vertices.empty()) {
    if (common.vertices.size() != 6)
      throw GeometryError(ErrorCode::InvalidInput, "--vertices needs exactly x1,y1,x2,y2,x3,y3");
    return TriangleSpec::from_vertices({Point{common.vertices[0], common.vertices[1]},
                                        Point{common.vertices[2], common.vertices[3]},
                                        Point{common.vertices[4], common.vertices[5]}});
  }
  return std::nullopt;
}

Triangle required_triangle(const CommonOptions& common, const ToleranceConfig& tol) {
  const auto spec = parse_spec(common);
  if (!spec)
    throw GeometryError(ErrorCode::InvalidInput, "a triangle is required: --sides a,b,c or --vertices ...");
  return to_triangle(*spec, tol);
}

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--sides", common.sides, "side lengths a,b,c (canonical placement)")
      ->delimiter(',');
  cmd->add_option("--vertices", common.vertices, "vertices x1,y1,x2,y2,x3,y3 for A,B,C")
      ->delimiter(',');
  cmd->add_option("--eps", common.eps, "relative tolerance (overrides PEDAL_EPS)");
}

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"pedal triangle kernel: notable points, inverse pedal solver, verification"};
  app.require_subcommand(1);

  CommonOptions points_common;
  auto* points_cmd = app.add_subcommand("points", "compute the eleven notable points");
  add_common(points_cmd, points_common);

  CommonOptions solve_common;
  std::vector<double> solve_angles;
  bool solve_degrees = false;
  auto* solve_cmd = app.add_subcommand("solve", "solve f(X) = (a1,b1,c1) for the two pedal points");
  add_common(solve_cmd, solve_common);
  solve_cmd->add_option("--angles", solve_angles, "target angles r1,r2,r3 (radians)")
      ->required()
      ->delimiter(',');
  solve_cmd->add_flag("--degrees", solve_degrees, "interpret --angles in degrees");

  CommonOptions pedal_common;
  std::vector<double> pedal_at;
  auto* pedal_cmd = app.add_subcommand("pedal", "pedal triangle of a point");
  add_common(pedal_cmd, pedal_common);
  pedal_cmd->add_option("--at", pedal_at, "point x,y")->required()->delimiter(',');

  CommonOptions verify_common;
  long verify_trials = 1000;
  std::uint64_t verify_seed = 0;
  bool verify_hard = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the randomized invariant suite");
  add_common(verify_cmd, verify_common);
  verify_cmd->add_option("--trials", verify_trials, "number of random trials")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_seed, "RNG seed");
  verify_cmd->add_flag("--hard", verify_hard, "lower the angle floor from 5 to 0.5 degrees");

  CommonOptions render_common;
  std::string render_out;
  std::vector<std::string> render_layers;
  auto* render_cmd = app.add_subcommand("render", "render the configuration as SVG");
  add_common(render_cmd, render_common);
  render_cmd->add_option("--out", render_out, "output SVG path")->required();
  render_cmd->add_option("--layers", render_layers, "layers to draw, or 'all'")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (points_cmd->parsed()) {
      const ToleranceConfig tol = resolve_tolerance(points_common);
      emit(points_document(required_triangle(points_common, tol), tol));
      return kExitOk;
    }

    if (solve_cmd->parsed()) {
      const ToleranceConfig tol = resolve_tolerance(solve_common);
      const Triangle tri = required_triangle(solve_common, tol);
      if (solve_angles.size() != 3)
        throw GeometryError(ErrorCode::InvalidInput, "--angles needs exactly three values");
      std::array<double, 3> target;
      for (int i = 0; i < 3; ++i) {
        target[static_cast<std::size_t>(i)] =
            solve_degrees ? solve_angles[static_cast<std::size_t>(i)] * kPi / 180.0
                          : solve_angles[static_cast<std::size_t>(i)];
        if (!(target[static_cast<std::size_t>(i)] > 0.0))
          throw GeometryError(ErrorCode::InvalidInput, "target angles must be positive");
      }
      const double sum = target[0] + target[1] + target[2];
      if (std::fabs(sum - kPi) > 1e-6)
        throw GeometryError(ErrorCode::InvalidInput, "target angles must sum to pi (180 deg) within 1e-6");
      // Normalize the user triple to an exact straight-angle sum.
      const double correction = kPi / sum;
      const AngleTriple triple{target[0] * correction, target[1] * correction,
                               target[2] * correction};
      emit(solve_document(tri, triple, tol));
      return kExitOk;
    }

    if (pedal_cmd->parsed()) {
      const ToleranceConfig tol = resolve_tolerance(pedal_common);
      const Triangle tri = required_triangle(pedal_common, tol);
      if (pedal_at.size() != 2)
        throw GeometryError(ErrorCode::InvalidInput, "--at needs exactly x,y");
      if (!std::isfinite(pedal_at[0]) || !std::isfinite(pedal_at[1]))
        throw GeometryError(ErrorCode::InvalidInput, "--at must be finite");
      emit(pedal_document(tri, Point{pedal_at[0], pedal_at[1]}, tol));
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      VerifyOptions options;
      options.tol = resolve_tolerance(verify_common);
      options.trials = verify_trials;
      options.seed = verify_seed;
      options.theta_min = (verify_hard ? 0.5 : 5.0) * kPi / 180.0;
      options.fixed = parse_spec(verify_common);
      if (options.fixed) to_triangle(*options.fixed, options.tol);  // validate early
      const VerifyReport report = run_verify(options);
      emit(verify_document(report));
      std::cerr << (report.pass ? "PASS" : "FAIL") << ": " << report.trials << " trials, seed "
                << report.seed << "\n";
      for (const auto& rec : report.properties) {
        std::cerr << "  " << (rec.informational ? "info" : (rec.failures ? "FAIL" : "ok  "))
                  << "  " << rec.name << ": trials=" << rec.trials
                  << " failures=" << rec.failures << " max_residual=" << rec.max_residual;
        if (!rec.informational) std::cerr << " tol=" << rec.tolerance;
        std::cerr << "\n";
      }
      return report.pass ? kExitOk : kExitVerifyFailed;
    }

    if (render_cmd->parsed()) {
      const ToleranceConfig tol = resolve_tolerance(render_common);
      const Triangle tri = required_triangle(render_common, tol);
      std::set<Layer> layers;
      if (render_layers.empty()) {
        layers = all_layers();
      } else {
        for (const std::string& name : render_layers) {
          if (name == "all") {
            layers = all_layers();
            break;
          }
          layers.insert(parse_layer(name));
        }
      }
      const std::string svg = render_svg(tri, layers, tol);
      std::ofstream out(render_out, std::ios::binary);
      if (!out)
        throw GeometryError(ErrorCode::InvalidInput, "cannot open output file: " + render_out);
      out << svg;
      return kExitOk;
    }
  } catch (const GeometryError& e) {
    switch (e.code()) {
      case ErrorCode::NoIntersection:
      case ErrorCode::InternalAssertion:
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
      default:
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalidInput;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
