#include "splitorder/polytope.hpp"

#include <optional>
#include <string>

#include "splitorder/error.hpp"

namespace splitorder {

LatticePoint::LatticePoint(std::vector<Exponent> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::DimensionTooSmall, "empty lattice point");
  const Exponent shift = coords_.front();
  for (auto& c : coords_) c -= shift;
}

bool DifferencePolytope::contains(const LatticePoint& x) const {
  if (x.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (x[i] - x[j] > upper_(i, j)) return false;
    }
  }
  return true;
}

DifferencePolytope polytope_of(const ExponentMatrix& nu) { return DifferencePolytope(nu); }

namespace {

// Constraint x_a - x_b <= u_ab is the edge b -> a of weight u_ab; the
// distance from `source` to a bounds x_a - x_source from above. Returns
// nullopt on a negative cycle reachable from the source (every vertex is
// reachable: the graph is complete).
std::optional<std::vector<__int128>> shortest_from(const DifferencePolytope& poly, std::size_t source) {
  const std::size_t n = poly.size();
  std::vector<__int128> dist(n, 0);
  std::vector<bool> reached(n, false);
  dist[source] = 0;
  reached[source] = true;
  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (!reached[b]) continue;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == b) continue;
        const __int128 cand = dist[b] + poly.upper(a, b);
        if (!reached[a] || cand < dist[a]) {
          dist[a] = cand;
          reached[a] = true;
          changed = true;
        }
      }
    }
    if (!changed) return dist;
    // A relaxation in round n means a negative cycle.
    if (round + 1 == n) return std::nullopt;
  }
  return dist;
}

}  // namespace

bool is_empty(const DifferencePolytope& poly) { return !shortest_from(poly, 0).has_value(); }

Exponent max_difference(const DifferencePolytope& poly, std::size_t i, std::size_t j) {
  auto dist = shortest_from(poly, j);
  if (!dist) throw Error(ErrorCode::EmptyPolytope, "constraint graph has a negative cycle");
  return static_cast<Exponent>((*dist)[i]);
}

std::vector<LatticePoint> enumerate_lattice_points(const DifferencePolytope& poly, std::uint64_t limit) {
  const std::size_t n = poly.size();
  std::vector<Exponent> lo(n, 0), hi(n, 0);
  std::uint64_t cells = 1;
  for (std::size_t i = 1; i < n; ++i) {
    lo[i] = poly.lower(i, 0);
    hi[i] = poly.upper(i, 0);
    if (hi[i] < lo[i]) return {};
    const auto extent = static_cast<std::uint64_t>(hi[i] - lo[i]) + 1;
    if (extent > limit || cells > limit / extent) {
      throw Error(ErrorCode::EnumerationLimit, "scan box exceeds " + std::to_string(limit) + " cells");
    }
    cells *= extent;
  }

  std::vector<LatticePoint> out;
  std::vector<Exponent> x(n, 0);
  // Depth-first over coordinates 1..n-1; a partial assignment is pruned
  // as soon as it violates a constraint among already-fixed coordinates.
  auto consistent = [&](std::size_t depth) {
    for (std::size_t j = 1; j < depth; ++j) {
      if (x[depth] - x[j] > poly.upper(depth, j) || x[j] - x[depth] > poly.upper(j, depth)) return false;
    }
    return true;
  };
  auto recurse = [&](auto& self, std::size_t depth) -> void {
    if (depth == n) {
      out.emplace_back(x);
      return;
    }
    for (Exponent v = lo[depth]; v <= hi[depth]; ++v) {
      x[depth] = v;
      if (consistent(depth)) self(self, depth + 1);
    }
  };
  recurse(recurse, 1);
  return out;
}

bool is_reduced(const ExponentMatrix& nu) {
  const auto poly = polytope_of(nu);
  if (is_empty(poly)) return false;
  for (std::size_t j = 0; j < nu.size(); ++j) {
    const auto dist = shortest_from(poly, j);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (i != j && (*dist)[i] != nu(i, j)) return false;
    }
  }
  return true;
}

}  // namespace splitorder
