#include "render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <vector>

#include "pedal/notable_points.hpp"

namespace pedal::app {

namespace {

constexpr double kView = 1000.0;
constexpr double kMargin = 0.15;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct Bbox {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
  bool empty = true;

  void add(Point p) {
    if (empty) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      empty = false;
      return;
    }
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  void add(const Circle& c) {
    add(c.center + Vec2{c.radius, c.radius});
    add(c.center - Vec2{c.radius, c.radius});
  }
};

struct ViewTransform {
  double scale = 1.0;
  Point world_center;

  Point operator()(Point p) const {
    return {kView / 2.0 + scale * (p.x - world_center.x),
            kView / 2.0 - scale * (p.y - world_center.y)};
  }
};

// Segment of an infinite line clipped to the viewport, in SVG coordinates.
bool clip_line(const ViewTransform& t, const Line& line, Point& out_a, Point& out_b) {
  const Point anchor = t(line.anchor);
  const Vec2 dir = normalized(Vec2{line.direction.x, -line.direction.y});
  double t_min = -1e18, t_max = 1e18;
  const auto clip = [&](double p, double q) {  // p*t <= q half-plane
    if (p == 0.0) return q >= 0.0;
    const double r = q / p;
    if (p < 0.0)
      t_min = std::max(t_min, r);
    else
      t_max = std::min(t_max, r);
    return true;
  };
  if (!clip(-dir.x, anchor.x) || !clip(dir.x, kView - anchor.x) ||
      !clip(-dir.y, anchor.y) || !clip(dir.y, kView - anchor.y))
    return false;
  if (t_min > t_max) return false;
  out_a = anchor + t_min * dir;
  out_b = anchor + t_max * dir;
  return true;
}

void draw_circle(std::string& svg, const ViewTransform& t, const Circle& c,
                 const char* css_class) {
  const Point center = t(c.center);
  svg += "  <circle class=\"" + std::string(css_class) + "\" cx=\"" + fmt(center.x) +
         "\" cy=\"" + fmt(center.y) + "\" r=\"" + fmt(t.scale * c.radius) +
         "\" fill=\"none\"/>\n";
}

void draw_segment(std::string& svg, const ViewTransform& t, Point a, Point b,
                  const char* css_class) {
  const Point pa = t(a);
  const Point pb = t(b);
  svg += "  <path class=\"" + std::string(css_class) + "\" d=\"M " + fmt(pa.x) + " " +
         fmt(pa.y) + " L " + fmt(pb.x) + " " + fmt(pb.y) + "\"/>\n";
}

void draw_marker(std::string& svg, const ViewTransform& t, Point p, const std::string& label,
                 const char* css_class) {
  const Point q = t(p);
  svg += "  <circle class=\"" + std::string(css_class) + "\" cx=\"" + fmt(q.x) + "\" cy=\"" +
         fmt(q.y) + "\" r=\"5\"/>\n";
  svg += "  <text x=\"" + fmt(q.x + 8.0) + "\" y=\"" + fmt(q.y - 8.0) + "\">" + label +
         "</text>\n";
}

}  // namespace

Layer parse_layer(const std::string& name) {
  static const std::map<std::string, Layer> table = {
      {"triangle", Layer::Triangle},
      {"circumcircle", Layer::Circumcircle},
      {"brocard-circle", Layer::BrocardCircle},
      {"axis", Layer::Axis},
      {"interior-points", Layer::InteriorPoints},
      {"exterior-points", Layer::ExteriorPoints},
      {"apollonius", Layer::Apollonius},
      {"symmedians", Layer::Symmedians},
  };
  const auto it = table.find(name);
  if (it == table.end())
    throw GeometryError(ErrorCode::InvalidInput, "unknown render layer: " + name);
  return it->second;
}

std::set<Layer> all_layers() {
  return {Layer::Triangle, Layer::Circumcircle, Layer::BrocardCircle, Layer::Axis,
          Layer::InteriorPoints, Layer::ExteriorPoints, Layer::Apollonius, Layer::Symmedians};
}

std::string render_svg(const Triangle& tri, const std::set<Layer>& layers,
                       const ToleranceConfig& tol) {
  const NotablePointSet set = eleven_points(tri, tol);
  const Circle k = circumcircle(tri);
  const bool equilateral = !set.exterior.has_value();

  std::vector<Layer> skipped;
  const auto enabled = [&](Layer layer) {
    if (layers.find(layer) == layers.end()) return false;
    if (equilateral && (layer == Layer::Axis || layer == Layer::ExteriorPoints ||
                        layer == Layer::BrocardCircle)) {
      skipped.push_back(layer);
      return false;
    }
    return true;
  };

  const bool triangle_on = enabled(Layer::Triangle);
  const bool circum_on = enabled(Layer::Circumcircle);
  const bool brocard_on = enabled(Layer::BrocardCircle);
  const bool axis_on = enabled(Layer::Axis);
  const bool interior_on = enabled(Layer::InteriorPoints);
  const bool exterior_on = enabled(Layer::ExteriorPoints);
  const bool apollonius_on = enabled(Layer::Apollonius);
  const bool symmedians_on = enabled(Layer::Symmedians);

  const auto apollonius_circles =
      apollonius_on ? basic_apollonius_circles(tri, tol) : std::array<GeneralizedCircle, 3>{};

  // Cevian feet of the symmedians (the symmedian from a vertex divides the
  // opposite side in the squared ratio of the adjacent sides).
  std::array<Point, 3> cevian_feet;
  if (symmedians_on) {
    const double a2 = tri.side_a() * tri.side_a();
    const double b2 = tri.side_b() * tri.side_b();
    const double c2 = tri.side_c() * tri.side_c();
    cevian_feet = {
        (b2 * tri.vertex_b() + c2 * tri.vertex_c()) / (b2 + c2),
        (c2 * tri.vertex_c() + a2 * tri.vertex_a()) / (c2 + a2),
        (a2 * tri.vertex_a() + b2 * tri.vertex_b()) / (a2 + b2),
    };
  }

  Bbox box;
  box.add(tri.vertex_a());
  box.add(tri.vertex_b());
  box.add(tri.vertex_c());
  if (circum_on) box.add(k);
  if (brocard_on) box.add(*set.brocard_circle);
  if (interior_on)
    for (const Point& p : {set.o, set.omega1, set.omega2, set.l1, set.l2, set.l3}) box.add(p);
  if (exterior_on)
    for (const auto* p : set.exterior->all())
      if (is_finite_point(*p)) box.add(finite_point(*p));
  if (apollonius_on)
    for (const auto& g : apollonius_circles)
      if (is_circle(g)) box.add(std::get<Circle>(g));
  // the axis itself is unbounded; anchor the viewport at its nearest point
  if (axis_on) box.add(project_point_on_line(k.center, *set.axis_g));

  const double width = std::max(box.max_x - box.min_x, 1e-12);
  const double height = std::max(box.max_y - box.min_y, 1e-12);
  ViewTransform t;
  t.scale = kView * (1.0 - 2.0 * kMargin) / std::max(width, height);
  t.world_center = Point{(box.min_x + box.max_x) / 2.0, (box.min_y + box.max_y) / 2.0};

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1000 1000\">\n";
  if (!skipped.empty()) svg += "  <!-- equilateral input: exterior layers skipped -->\n";
  svg += "  <style>\n"
         "    path, circle, line, polygon { stroke: #555; stroke-width: 1.5; fill: none; }\n"
         "    polygon.triangle { stroke: #000; stroke-width: 2.5; }\n"
         "    line.axis { stroke: #d00; stroke-width: 2; }\n"
         "    circle.pt { fill: #06c; stroke: none; }\n"
         "    circle.aux { fill: #999; stroke: none; }\n"
         "    path.symmedian { stroke: #391; stroke-dasharray: 6 4; }\n"
         "    text { font-family: sans-serif; font-size: 22px; fill: #111; stroke: none; }\n"
         "  </style>\n";

  if (circum_on) draw_circle(svg, t, k, "circumcircle");
  if (brocard_on) {
    draw_circle(svg, t, *set.brocard_circle, "brocard");
    draw_marker(svg, t, set.lemoine, "L", "aux");
  }
  if (apollonius_on) {
    for (const auto& g : apollonius_circles) {
      if (is_circle(g)) {
        draw_circle(svg, t, std::get<Circle>(g), "apollonius");
      } else {
        Point a, b;
        if (clip_line(t, std::get<Line>(g), a, b)) {
          svg += "  <path class=\"apollonius\" d=\"M " + fmt(a.x) + " " + fmt(a.y) + " L " +
                 fmt(b.x) + " " + fmt(b.y) + "\"/>\n";
        }
      }
    }
  }
  if (axis_on) {
    Point a, b;
    if (clip_line(t, *set.axis_g, a, b)) {
      svg += "  <line class=\"axis\" x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" +
             fmt(b.x) + "\" y2=\"" + fmt(b.y) + "\"/>\n";
    }
  }
  if (triangle_on) {
    const Point pa = t(tri.vertex_a());
    const Point pb = t(tri.vertex_b());
    const Point pc = t(tri.vertex_c());
    svg += "  <polygon class=\"triangle\" points=\"" + fmt(pa.x) + "," + fmt(pa.y) + " " +
           fmt(pb.x) + "," + fmt(pb.y) + " " + fmt(pc.x) + "," + fmt(pc.y) + "\"/>\n";
    svg += "  <text x=\"" + fmt(pa.x + 10.0) + "\" y=\"" + fmt(pa.y - 10.0) + "\">A</text>\n";
    svg += "  <text x=\"" + fmt(pb.x + 10.0) + "\" y=\"" + fmt(pb.y - 10.0) + "\">B</text>\n";
    svg += "  <text x=\"" + fmt(pc.x + 10.0) + "\" y=\"" + fmt(pc.y - 10.0) + "\">C</text>\n";
  }
  if (symmedians_on) {
    draw_segment(svg, t, tri.vertex_a(), cevian_feet[0], "symmedian");
    draw_segment(svg, t, tri.vertex_b(), cevian_feet[1], "symmedian");
    draw_segment(svg, t, tri.vertex_c(), cevian_feet[2], "symmedian");
  }
  if (interior_on) {
    draw_marker(svg, t, set.o, "O", "pt");
    draw_marker(svg, t, set.omega1, "Ω1", "pt");
    draw_marker(svg, t, set.omega2, "Ω2", "pt");
    draw_marker(svg, t, set.l1, "L1", "pt");
    draw_marker(svg, t, set.l2, "L2", "pt");
    draw_marker(svg, t, set.l3, "L3", "pt");
  }
  if (exterior_on) {
    const std::array<const char*, 5> labels = {"Ω1'", "Ω2'", "L1'", "L2'", "L3'"};
    const auto points = set.exterior->all();
    for (std::size_t i = 0; i < 5; ++i) {
      if (is_finite_point(*points[i]))
        draw_marker(svg, t, finite_point(*points[i]), labels[i], "pt");
      else
        svg += "  <!-- " + std::string(labels[i]) + " at infinity -->\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace pedal::app
