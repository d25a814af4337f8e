#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "pedal/notable_points.hpp"
#include "test_support.hpp"

using nlohmann::json;
using namespace pedal;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(PEDAL_CLI_PATH) + " " + args + " 2>/dev/null";
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("points: 3-4-5 reports the Brocard angle atan(12/25)") {
  const auto result = run_cli("points --sides 3,4,5");
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(doc["schema"] == "pedal-kernel/1");
  CHECK(std::fabs(doc["brocard_angle_rad"].get<double>() - std::atan(12.0 / 25.0)) <= 1e-9);
  CHECK(doc["interior_points"]["Omega1"]["pedal_permutation"] == "BCA");
}

TEST_CASE("points: equilateral input nulls the primed fields") {
  const auto result = run_cli("points --sides 1,1,1");
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(doc["exterior_points"].is_null());
  CHECK(doc["brocard_circle"].is_null());
  CHECK(doc["axis_g"].is_null());
  const auto o = doc["interior_points"]["O"]["xy"];
  for (const char* label : {"Omega1", "Omega2", "L1", "L2", "L3"}) {
    const auto p = doc["interior_points"][label]["xy"];
    CHECK(std::fabs(p[0].get<double>() - o[0].get<double>()) <= 1e-9);
    CHECK(std::fabs(p[1].get<double>() - o[1].get<double>()) <= 1e-9);
  }
}

TEST_CASE("points: explicit vertices give the hypotenuse-midpoint circumcircle") {
  const auto result = run_cli("points --vertices 0,3,0,0,4,0");
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(doc["circumcircle"]["center"][0].get<double>() == doctest::Approx(2.0));
  CHECK(doc["circumcircle"]["center"][1].get<double>() == doctest::Approx(1.5));
  CHECK(doc["circumcircle"]["radius"].get<double>() == doctest::Approx(2.5));
}

TEST_CASE("solve: base angles yield a null exterior point") {
  // canonical placement of --sides 3,4,5 is exactly the scalene_345 fixture
  const Triangle tri = test::scalene_345();
  const auto base = angles_of(tri).as_array();
  std::ostringstream cmd;
  cmd.precision(17);
  cmd << "solve --sides 3,4,5 --angles " << base[0] << "," << base[1] << "," << base[2];
  const auto result = run_cli(cmd.str());
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(doc["outside"].is_null());
  CHECK(doc["inside"]["roundtrip_residual_rad"].get<double>() <= 1e-7);
}

TEST_CASE("solve: permuted base angles land on the first Brocard point") {
  // canonical placement of sides (4,5,3) matches scalene_345 up to congruence
  const auto points = run_cli("points --sides 4,5,3");
  REQUIRE(points.exit_code == 0);
  const json pdoc = json::parse(points.output);
  const auto base = pdoc["triangle"]["angles_rad"];
  std::ostringstream cmd;
  cmd.precision(17);
  cmd << "solve --sides 4,5,3 --angles " << base[1].get<double>() << ","
      << base[2].get<double>() << "," << base[0].get<double>();
  const auto result = run_cli(cmd.str());
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  const auto omega1 = pdoc["interior_points"]["Omega1"]["xy"];
  CHECK(std::fabs(doc["inside"]["xy"][0].get<double>() - omega1[0].get<double>()) <= 1e-8);
  CHECK(std::fabs(doc["inside"]["xy"][1].get<double>() - omega1[1].get<double>()) <= 1e-8);
  CHECK_FALSE(doc["outside"].is_null());
}

TEST_CASE("solve: degree triples must sum to 180") {
  CHECK(run_cli("solve --sides 3,4,5 --angles 60,60,59 --degrees").exit_code == 2);
  CHECK(run_cli("solve --sides 3,4,5 --angles 60,60,60 --degrees").exit_code == 0);
}

TEST_CASE("pedal: classification strings") {
  SUBCASE("circumcenter is positive with the base angles") {
    const auto result = run_cli("pedal --vertices 0,3,0,0,4,0 --at 2,1.5");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.output);
    CHECK(doc["classification"] == "positive");
    const auto angles = doc["pedal_angles_rad"];
    const auto triangle_angles = doc["triangle"]["angles_rad"];
    for (int i = 0; i < 3; ++i)
      CHECK(std::fabs(angles[i].get<double>() - triangle_angles[i].get<double>()) <= 1e-9);
  }
  SUBCASE("vertex on the circumcircle is degenerate with a Simson line") {
    const auto result = run_cli("pedal --vertices 0,3,0,0,4,0 --at 0,3");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.output);
    CHECK(doc["classification"] == "degenerate");
    CHECK_FALSE(doc["simson_line"].is_null());
    CHECK(doc["pedal_angles_rad"].is_null());
  }
  SUBCASE("far exterior point is negative") {
    const auto result = run_cli("pedal --vertices 0,3,0,0,4,0 --at 40,40");
    REQUIRE(result.exit_code == 0);
    CHECK(json::parse(result.output)["classification"] == "negative");
  }
}

TEST_CASE("verify: exit codes and determinism") {
  SUBCASE("random suite passes") {
    const auto result = run_cli("verify --trials 64 --seed 42");
    CHECK(result.exit_code == 0);
    const json doc = json::parse(result.output);
    CHECK(doc["pass"].get<bool>());
    CHECK(doc["properties"]["brocard_circle_concyclic"]["failures"].get<long>() == 0);
  }
  SUBCASE("equilateral sub-suite passes") {
    const auto result = run_cli("verify --trials 1 --sides 1,1,1");
    CHECK(result.exit_code == 0);
    const json doc = json::parse(result.output);
    CHECK(doc["properties"]["equilateral_coincidence"]["failures"].get<long>() == 0);
    CHECK(doc["properties"]["equilateral_coincidence"]["trials"].get<long>() == 1);
  }
  SUBCASE("over-tight tolerance fails with exit 1") {
    CHECK(run_cli("verify --trials 16 --seed 1 --eps 1e-15").exit_code == 1);
  }
  SUBCASE("byte-identical output for a fixed seed") {
    const auto first = run_cli("verify --trials 64 --seed 1234");
    const auto second = run_cli("verify --trials 64 --seed 1234");
    CHECK(first.output == second.output);
  }
}

TEST_CASE("round trip: points output feeds verify") {
  const auto points = run_cli("points --sides 4,6,5");
  REQUIRE(points.exit_code == 0);
  const json doc = json::parse(points.output);
  std::ostringstream cmd;
  cmd.precision(17);
  const auto& v = doc["triangle"]["vertices"];
  cmd << "verify --trials 1 --vertices " << v["A"][0].get<double>() << ","
      << v["A"][1].get<double>() << "," << v["B"][0].get<double>() << ","
      << v["B"][1].get<double>() << "," << v["C"][0].get<double>() << ","
      << v["C"][1].get<double>();
  CHECK(run_cli(cmd.str()).exit_code == 0);
}

TEST_CASE("render: layers, determinism, equilateral warning") {
  SUBCASE("all layers on 4,6,5 draw 11 labeled markers and one axis line") {
    const auto out = temp_file("pedal_render_all.svg");
    const auto result = run_cli("render --sides 4,6,5 --layers all --out " + out.string());
    REQUIRE(result.exit_code == 0);
    const std::string svg = slurp(out);
    CHECK(count_occurrences(svg, "<circle class=\"pt\"") == 11);
    CHECK(count_occurrences(svg, "<line ") == 1);
    CHECK(svg.find("Ω1'") != std::string::npos);
  }
  SUBCASE("byte-identical output on repeated runs") {
    const auto out1 = temp_file("pedal_render_a.svg");
    const auto out2 = temp_file("pedal_render_b.svg");
    REQUIRE(run_cli("render --sides 4,6,5 --layers all --out " + out1.string()).exit_code == 0);
    REQUIRE(run_cli("render --sides 4,6,5 --layers all --out " + out2.string()).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
  }
  SUBCASE("isosceles axis is drawn parallel to AB") {
    const auto out = temp_file("pedal_render_iso.svg");
    // sides a=b=2, c=1.2: CA = CB, so the axis g is parallel to AB
    REQUIRE(run_cli("render --sides 2,2,1.2 --layers triangle,axis --out " + out.string())
                .exit_code == 0);
    const std::string svg = slurp(out);
    // triangle polygon: A is the first point; B the second
    const auto poly_pos = svg.find("<polygon class=\"triangle\" points=\"");
    const auto line_pos = svg.find("<line class=\"axis\"");
    REQUIRE(poly_pos != std::string::npos);
    REQUIRE(line_pos != std::string::npos);
    double ax, ay, bx, by;
    REQUIRE(std::sscanf(svg.c_str() + poly_pos,
                        "<polygon class=\"triangle\" points=\"%lf,%lf %lf,%lf", &ax, &ay, &bx,
                        &by) == 4);
    double x1, y1, x2, y2;
    REQUIRE(std::sscanf(svg.c_str() + line_pos,
                        "<line class=\"axis\" x1=\"%lf\" y1=\"%lf\" x2=\"%lf\" y2=\"%lf\"", &x1,
                        &y1, &x2, &y2) == 4);
    const Vec2 ab{bx - ax, by - ay};
    const Vec2 axis{x2 - x1, y2 - y1};
    CHECK(std::fabs(cross(normalized(ab), normalized(axis))) <= 1e-3);
  }
  SUBCASE("equilateral input skips exterior layers with a warning comment") {
    const auto out = temp_file("pedal_render_eq.svg");
    REQUIRE(run_cli("render --sides 1,1,1 --layers all --out " + out.string()).exit_code == 0);
    const std::string svg = slurp(out);
    CHECK(svg.find("exterior layers skipped") != std::string::npos);
    CHECK(count_occurrences(svg, "<line ") == 0);
  }
  SUBCASE("unknown layer names are invalid input") {
    const auto out = temp_file("pedal_render_bad.svg");
    CHECK(run_cli("render --sides 3,4,5 --layers nonsense --out " + out.string()).exit_code == 2);
  }
}

TEST_CASE("invalid input exits with code 2") {
  CHECK(run_cli("points --sides 1,1,3").exit_code == 2);
  CHECK(run_cli("points --sides 1,1").exit_code == 2);
  CHECK(run_cli("points --sides 3,4,5 --vertices 0,0,1,0,0,1").exit_code == 2);
  CHECK(run_cli("points").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("points --sides 3,4,5 --eps 1").exit_code == 2);
  CHECK(run_cli("pedal --sides 3,4,5 --at nan,0").exit_code == 2);
}

TEST_CASE("env tolerance is honored but the flag wins") {
  const std::string env_cmd = std::string("PEDAL_EPS=1e-15 ") + PEDAL_CLI_PATH +
                              " verify --trials 16 --seed 1 2>/dev/null >/dev/null";
  CHECK(WEXITSTATUS(std::system(env_cmd.c_str())) == 1);
  const std::string flag_cmd = std::string("PEDAL_EPS=1e-15 ") + PEDAL_CLI_PATH +
                               " verify --trials 16 --seed 1 --eps 1e-9 2>/dev/null >/dev/null";
  CHECK(WEXITSTATUS(std::system(flag_cmd.c_str())) == 0);
}
