#include <doctest.h>

#include <cmath>
#include <regex>
#include <set>
#include <string>

#include "splitorder/error.hpp"
#include "splitorder/polytope.hpp"
#include "splitorder/svg.hpp"

using namespace splitorder;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

// Every element opened is closed, in order (the writer emits no comments
// or CDATA).
bool balanced(const std::string& svg) {
  std::vector<std::string> stack;
  const std::regex tag(R"(<(/?)([a-zA-Z]+)[^>]*?(/?)>)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[3] == "/") continue;
    if (m[1] == "/") {
      if (stack.empty() || stack.back() != m[2]) return false;
      stack.pop_back();
    } else {
      stack.push_back(m[2]);
    }
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("3x3 example drawing") {
  const ExponentMatrix nu({{0, 0, 1}, {3, 0, 1}, {3, 2, 0}});
  const auto svg = render_apartment_svg(nu);
  CHECK(balanced(svg));
  CHECK(count(svg, "class=\"vertex\"") == 13);
  CHECK(count(svg, "class=\"supporting\"") == 6);
  CHECK(count(svg, "class=\"nonsupporting\"") == 0);
  CHECK(svg == render_apartment_svg(nu));

  // Every dot is a point of the region.
  const auto poly = polytope_of(nu);
  const std::regex dot(R"re(data-coords="(-?\d+),(-?\d+),(-?\d+)")re");
  std::size_t dots = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), dot); it != std::sregex_iterator(); ++it, ++dots) {
    CHECK(poly.contains(LatticePoint({std::stoll((*it)[1]), std::stoll((*it)[2]), std::stoll((*it)[3])})));
  }
  CHECK(dots == 13);
}

TEST_CASE("bounds fall into three wall families 60 degrees apart") {
  const auto svg = render_apartment_svg(ExponentMatrix({{0, 0, 1}, {3, 0, 1}, {3, 2, 0}}));
  const std::regex line(
      R"re(<line class="(?:non)?supporting"[^>]*x1="(-?[\d.]+)" y1="(-?[\d.]+)" x2="(-?[\d.]+)" y2="(-?[\d.]+)")re");
  std::set<long> angles;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator(); ++it) {
    const double dx = std::stod((*it)[3]) - std::stod((*it)[1]);
    const double dy = std::stod((*it)[4]) - std::stod((*it)[2]);
    // Direction modulo 180 degrees, rounded to the nearest degree.
    angles.insert((std::lround(std::atan2(dy, dx) * 180.0 / std::acos(-1.0)) + 360) % 180);
  }
  CHECK(angles == std::set<long>{0, 60, 120});
}

TEST_CASE("non-supporting bound is dashed") {
  const auto svg = render_apartment_svg(ExponentMatrix({{0, 0, 2}, {3, 0, 1}, {3, 2, 0}}));
  CHECK(count(svg, "class=\"vertex\"") == 13);
  CHECK(count(svg, "class=\"nonsupporting\"") == 1);
  CHECK(svg.find("class=\"nonsupporting\" data-constraint=\"x1 - x3 &lt;= 2\"") != std::string::npos);
  CHECK(count(svg, "stroke-dasharray") == 1);
}

TEST_CASE("degenerate and invalid inputs") {
  const auto svg = render_apartment_svg(ExponentMatrix::zero(3));
  CHECK(count(svg, "class=\"vertex\"") == 1);
  CHECK(svg.find("data-coords=\"0,0,0\" cx=\"0.000\" cy=\"0.000\"") != std::string::npos);
  CHECK(balanced(svg));

  const auto empty = render_apartment_svg(ExponentMatrix({{0, -1, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(count(empty, "class=\"vertex\"") == 0);
  CHECK(count(empty, "class=\"supporting\"") == 0);

  try {
    render_apartment_svg(ExponentMatrix::zero(2));
    FAIL("expected UnsupportedDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedDimension);
  }
}
