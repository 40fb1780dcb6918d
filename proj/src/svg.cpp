#include "splitorder/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "splitorder/error.hpp"
#include "splitorder/polytope.hpp"

namespace splitorder {

namespace {

struct Vec2 {
  double x;
  double y;
};

constexpr double kSqrt3Over2 = 0.86602540378443864676;

// Screen position (y grows downwards) of lattice coordinates (x2, x3).
Vec2 embed(double x2, double x3, double scale) {
  return {scale * (x2 - 0.5 * x3), -scale * (kSqrt3Over2 * x3)};
}

// Inverse of embed.
Vec2 unembed(Vec2 s, double scale) {
  const double x3 = -s.y / (scale * kSqrt3Over2);
  return {s.x / scale + 0.5 * x3, x3};
}

std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Box {
  double x0, y0, x1, y1;
};

// Liang-Barsky clip of the infinite line through p with direction d.
bool clip_line(Vec2 p, Vec2 d, const Box& box, Vec2& a, Vec2& b) {
  double t0 = -1e12, t1 = 1e12;
  const std::array<double, 4> pv{-d.x, d.x, -d.y, d.y};
  const std::array<double, 4> qv{p.x - box.x0, box.x1 - p.x, p.y - box.y0, box.y1 - p.y};
  for (int k = 0; k < 4; ++k) {
    if (pv[k] == 0.0) {
      if (qv[k] < 0.0) return false;
      continue;
    }
    const double t = qv[k] / pv[k];
    if (pv[k] < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
  }
  if (t0 >= t1) return false;
  a = {p.x + t0 * d.x, p.y + t0 * d.y};
  b = {p.x + t1 * d.x, p.y + t1 * d.y};
  return true;
}

// Wall x_i - x_j = c in the (x2, x3) plane: a point on it and a direction.
void wall_geometry(std::size_t i, std::size_t j, double c, double scale, Vec2& point, Vec2& dir) {
  Vec2 lp{}, ld{};
  if (i == 1 && j == 0) {
    lp = {c, 0};
    ld = {0, 1};
  } else if (i == 2 && j == 0) {
    lp = {0, c};
    ld = {1, 0};
  } else {  // x3 - x2
    lp = {0, c};
    ld = {1, 1};
  }
  point = embed(lp.x, lp.y, scale);
  const Vec2 tip = embed(lp.x + ld.x, lp.y + ld.y, scale);
  dir = {tip.x - point.x, tip.y - point.y};
}

double cross(Vec2 o, Vec2 a, Vec2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  if (pts.size() < 3) return pts;
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 1e-9) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-9) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

const char* var_name(std::size_t i) {
  static const char* names[] = {"x1", "x2", "x3"};
  return names[i];
}

}  // namespace

std::string render_apartment_svg(const ExponentMatrix& nu, const SvgOptions& options) {
  if (nu.size() != 3) {
    throw Error(ErrorCode::UnsupportedDimension, "drawing needs n = 3, got " + std::to_string(nu.size()));
  }
  const double s = options.scale;
  const auto poly = polytope_of(nu);
  const bool empty = is_empty(poly);
  const auto points = empty ? std::vector<LatticePoint>{} : enumerate_lattice_points(poly);

  // Viewport: the declared box of x2, x3 bounds plus margin.
  const double a2 = static_cast<double>(std::min(poly.lower(1, 0), poly.upper(1, 0))) - options.margin;
  const double b2 = static_cast<double>(std::max(poly.lower(1, 0), poly.upper(1, 0))) + options.margin;
  const double a3 = static_cast<double>(std::min(poly.lower(2, 0), poly.upper(2, 0))) - options.margin;
  const double b3 = static_cast<double>(std::max(poly.lower(2, 0), poly.upper(2, 0))) + options.margin;
  Box box{1e300, 1e300, -1e300, -1e300};
  for (double x2 : {a2, b2}) {
    for (double x3 : {a3, b3}) {
      const Vec2 c = embed(x2, x3, s);
      box.x0 = std::min(box.x0, c.x);
      box.y0 = std::min(box.y0, c.y);
      box.x1 = std::max(box.x1, c.x);
      box.y1 = std::max(box.y1, c.y);
    }
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(box.x0) << ' '
      << num(box.y0) << ' ' << num(box.x1 - box.x0) << ' ' << num(box.y1 - box.y0) << "\" width=\""
      << num(box.x1 - box.x0) << "\" height=\"" << num(box.y1 - box.y0) << "\">\n";
  out << "<rect x=\"" << num(box.x0) << "\" y=\"" << num(box.y0) << "\" width=\"" << num(box.x1 - box.x0)
      << "\" height=\"" << num(box.y1 - box.y0) << "\" fill=\"white\"/>\n";

  // Background walls of the apartment at every integer level in view.
  const std::array<std::array<std::size_t, 2>, 3> families{{{1, 0}, {2, 0}, {2, 1}}};
  out << "<g class=\"walls\" stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
  for (const auto& [i, j] : families) {
    double lo = 1e300, hi = -1e300;
    for (Vec2 corner : {Vec2{box.x0, box.y0}, Vec2{box.x0, box.y1}, Vec2{box.x1, box.y0}, Vec2{box.x1, box.y1}}) {
      const Vec2 l = unembed(corner, s);
      const double x[3] = {0.0, l.x, l.y};
      lo = std::min(lo, x[i] - x[j]);
      hi = std::max(hi, x[i] - x[j]);
    }
    for (auto c = static_cast<long>(std::ceil(lo)); c <= static_cast<long>(std::floor(hi)); ++c) {
      Vec2 p{}, d{}, e0{}, e1{};
      wall_geometry(i, j, static_cast<double>(c), s, p, d);
      if (!clip_line(p, d, box, e0, e1)) continue;
      out << "<line x1=\"" << num(e0.x) << "\" y1=\"" << num(e0.y) << "\" x2=\"" << num(e1.x) << "\" y2=\""
          << num(e1.y) << "\"/>\n";
    }
  }
  out << "</g>\n";

  std::vector<Vec2> dots;
  for (const auto& pt : points) dots.push_back(embed(static_cast<double>(pt[1]), static_cast<double>(pt[2]), s));
  const auto hull = convex_hull(dots);
  if (hull.size() >= 3) {
    out << "<polygon class=\"region\" fill=\"#cfe3f7\" fill-opacity=\"0.8\" stroke=\"none\" points=\"";
    for (std::size_t k = 0; k < hull.size(); ++k) out << (k ? " " : "") << num(hull[k].x) << ',' << num(hull[k].y);
    out << "\"/>\n";
  }

  // Declared bounds: x_i - x_j <= nu_ij for each ordered pair.
  out << "<g class=\"bounds\" stroke-width=\"2\">\n";
  for (const auto& [i, j] : families) {
    for (const bool upper : {true, false}) {
      const std::size_t a = upper ? i : j, b = upper ? j : i;
      const Exponent bound = nu(a, b);
      const bool supporting = !empty && max_difference(poly, a, b) == bound;
      const double level = upper ? static_cast<double>(bound) : -static_cast<double>(bound);
      Vec2 p{}, d{}, e0{}, e1{};
      wall_geometry(i, j, level, s, p, d);
      if (!clip_line(p, d, box, e0, e1)) continue;
      out << "<line class=\"" << (supporting ? "supporting" : "nonsupporting") << "\" data-constraint=\""
          << var_name(a) << " - " << var_name(b) << " &lt;= " << bound << "\" x1=\"" << num(e0.x) << "\" y1=\""
          << num(e0.y) << "\" x2=\"" << num(e1.x) << "\" y2=\"" << num(e1.y) << "\" stroke=\""
          << (supporting ? "#1f4e99" : "#c0392b") << '"' << (supporting ? "" : " stroke-dasharray=\"8 5\"")
          << "/>\n";
    }
  }
  out << "</g>\n";

  out << "<g class=\"vertices\" fill=\"black\">\n";
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& pt = points[k];
    out << "<circle class=\"vertex\" data-coords=\"" << pt[0] << ',' << pt[1] << ',' << pt[2] << "\" cx=\""
        << num(dots[k].x) << "\" cy=\"" << num(dots[k].y) << "\" r=\"" << num(0.09 * s) << "\"><title>[" << pt[0]
        << ", " << pt[1] << ", " << pt[2] << "]</title></circle>\n";
  }
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace splitorder
