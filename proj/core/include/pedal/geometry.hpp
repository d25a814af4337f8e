#pragma once

// Planar geometry kernel: points, triangles, circles, lines, circle
// inversion, Apollonius loci and intersections, under an explicit relative
// tolerance policy. Everything here is a pure function of its inputs and all
// values are immutable once constructed, so concurrent use needs no
// synchronization.

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pedal {

inline constexpr double kPi = 3.14159265358979323846;

/// Relative tolerances used by every predicate in the kernel. The length
/// scale they apply to is stated per operation (usually the circumdiameter
/// of the triangle in context).
struct ToleranceConfig {
  double eps_rel = 1e-9;    // dimensionless relative tolerance
  double angle_eps = 1e-9;  // radians

  bool valid() const {
    return std::isfinite(eps_rel) && std::isfinite(angle_eps) &&
           eps_rel > 0.0 && eps_rel < 1e-3 && angle_eps > 0.0;
  }
};

enum class ErrorCode {
  DegenerateTriangle,
  NonFiniteInput,
  PointAtCenter,
  CoincidentBasePoints,
  IdenticalLoci,
  OnCircumcircle,
  AtVertex,
  OutsideCircle,
  NoIntersection,
  InvalidTarget,
  IdentityTarget,
  EquilateralDegenerate,
  ZeroWeightSum,
  InvalidInput,
  InternalAssertion,
};

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the Apollonius solver when two loci fail to meet; carries the
/// intersection discriminant so callers can report how badly it failed.
class NoIntersectionError : public GeometryError {
 public:
  NoIntersectionError(const std::string& what, double discriminant)
      : GeometryError(ErrorCode::NoIntersection, what),
        discriminant_(discriminant) {}
  double discriminant() const { return discriminant_; }

 private:
  double discriminant_;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};
using Point = Vec2;

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
constexpr Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
constexpr Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }
constexpr Vec2 operator-(Vec2 v) { return {-v.x, -v.y}; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr double norm2(Vec2 v) { return v.x * v.x + v.y * v.y; }
inline double norm(Vec2 v) { return std::sqrt(norm2(v)); }
inline double distance(Point a, Point b) { return norm(b - a); }
constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }  // +90 degrees
inline Vec2 normalized(Vec2 v) { return v / norm(v); }
inline Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0}; }
inline bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Angle at `apex` between the rays towards `p` and `q`, in [0, pi].
/// atan2-based, so the absolute error stays near machine epsilon even for
/// nearly collinear rays.
inline double angle_at(Point apex, Point p, Point q) {
  const Vec2 u = p - apex;
  const Vec2 v = q - apex;
  return std::atan2(std::fabs(cross(u, v)), dot(u, v));
}

struct Circle {
  Point center;
  double radius = 0.0;
};

/// Oriented line through `anchor`; `direction` is unit-norm.
struct Line {
  Point anchor;
  Vec2 direction;
};

inline Line line_through(Point a, Point b) { return {a, normalized(b - a)}; }

/// Circle-or-line variant: the natural carrier for inversion images and
/// Apollonius loci (ratio 1 degenerates to a perpendicular bisector, a
/// circle through the inversion center maps to a line).
using GeneralizedCircle = std::variant<Circle, Line>;

inline bool is_circle(const GeneralizedCircle& g) { return std::holds_alternative<Circle>(g); }
inline bool is_line(const GeneralizedCircle& g) { return std::holds_alternative<Line>(g); }

struct Inversion {
  Point center;
  double power = 1.0;  // r^2 > 0
};

/// A triple of positive angles summing to pi; the codomain of the pedal
/// angle map.
struct AngleTriple {
  double alpha1 = 0.0;
  double beta1 = 0.0;
  double gamma1 = 0.0;

  std::array<double, 3> as_array() const { return {alpha1, beta1, gamma1}; }
};

/// Validating constructor for externally supplied triples.
AngleTriple make_angle_triple(double alpha1, double beta1, double gamma1,
                              const ToleranceConfig& tol = {});

/// Ordered vertices A, B, C with derived side lengths a=|BC|, b=|CA|,
/// c=|AB|. Construction rejects triangles whose normalized doubled area
/// |cross| / (max side)^2 falls below eps_rel.
class Triangle {
 public:
  Triangle(Point a, Point b, Point c, const ToleranceConfig& tol = {});

  const Point& vertex_a() const { return a_; }
  const Point& vertex_b() const { return b_; }
  const Point& vertex_c() const { return c_; }
  const Point& vertex(int i) const;  // 0->A, 1->B, 2->C

  double side_a() const { return side_a_; }
  double side_b() const { return side_b_; }
  double side_c() const { return side_c_; }
  double max_side() const;

  Line line_bc() const { return line_through(b_, c_); }
  Line line_ca() const { return line_through(c_, a_); }
  Line line_ab() const { return line_through(a_, b_); }

  int orientation() const;  // +1 counterclockwise, -1 clockwise

 private:
  Point a_, b_, c_;
  double side_a_, side_b_, side_c_;
};

Circle circumcircle(const Triangle& tri);

/// Image of p under the inversion; lies on the ray center->p with
/// |center->p| * |center->image| = power.
Point invert_point(const Inversion& inv, Point p, const ToleranceConfig& tol = {});

/// Image of a circle or line under the inversion. A circle through the
/// center maps to a line, a line not through the center to a circle through
/// it; a line through the center maps to itself.
GeneralizedCircle invert_gcircle(const Inversion& inv, const GeneralizedCircle& g,
                                 const ToleranceConfig& tol = {});

/// Locus of points X with |Xp|/|Xq| = ratio. Ratio 1 gives the
/// perpendicular bisector of pq; otherwise the circle whose diameter joins
/// the internal and external division points of the segment.
GeneralizedCircle apollonius(Point p, Point q, double ratio,
                             const ToleranceConfig& tol = {});

/// Intersection points of two circle-or-line loci, lexicographically sorted
/// by (x, y). Tangency collapses to a single point; identical loci are an
/// error.
std::vector<Point> intersect_gcircles(const GeneralizedCircle& g1,
                                      const GeneralizedCircle& g2,
                                      const ToleranceConfig& tol = {});

Point project_point_on_line(Point p, const Line& line);

/// Sign of twice the signed area of (p, q, r): +1 counterclockwise, -1
/// clockwise, 0 within the collinearity tolerance.
int orientation_sign(Point p, Point q, Point r, const ToleranceConfig& tol = {});

/// Interior angles (alpha, beta, gamma) at A, B, C via the law of cosines
/// with cosine arguments clamped to [-1, 1].
AngleTriple angles_of(const Triangle& tri);

double point_line_distance(Point p, const Line& line);
double point_gcircle_distance(Point p, const GeneralizedCircle& g);

struct ConcyclicReport {
  bool concyclic = false;
  bool collinear = false;     // first three points collinear; line fit used
  double max_residual = 0.0;  // relative to the fitted radius (or spread)
};

/// Fits a circle through the first three non-collinear points and reports
/// the worst residual of the whole set relative to the radius.
ConcyclicReport concyclic(std::span<const Point> points, const ToleranceConfig& tol = {});

struct CollinearReport {
  bool collinear = false;
  double max_residual = 0.0;  // normalized by the point-spread diameter
  Line line;                  // total-least-squares fit
};

CollinearReport collinear(std::span<const Point> points, const ToleranceConfig& tol = {});

}  // namespace pedal
