#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the closure, Bellman-Ford or pruned-enumeration code they check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Matrix = std::vector<std::vector<Int>>;
using Point = std::vector<Int>;

inline bool triangle_inequalities(const Matrix& nu) {
  const auto n = nu.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (nu[i][k] + nu[k][j] < nu[i][j]) return false;
  return true;
}

// Every simple directed cycle (length >= 2) has nonnegative weight.
inline bool all_cycles_nonnegative(const Matrix& nu) {
  const auto n = nu.size();
  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  bool ok = true;
  auto extend = [&](auto& self, Int weight) -> void {
    if (!ok) return;
    const auto last = path.back();
    if (path.size() >= 2 && weight + nu[last][path.front()] < 0) ok = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      path.push_back(v);
      self(self, weight + nu[last][v]);
      path.pop_back();
      used[v] = false;
    }
  };
  for (std::size_t s = 0; s < n && ok; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    extend(extend, 0);
  }
  return ok;
}

// min over all simple paths i -> j of the summed weights (0 on the diagonal).
inline Matrix min_over_simple_paths(const Matrix& nu) {
  const auto n = nu.size();
  Matrix out(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Int best = std::numeric_limits<Int>::max();
      std::vector<std::size_t> middle;
      for (std::size_t v = 0; v < n; ++v)
        if (v != i && v != j) middle.push_back(v);
      // Every subset of intermediates in every order.
      for (std::uint32_t mask = 0; mask < (1u << middle.size()); ++mask) {
        std::vector<std::size_t> sel;
        for (std::size_t b = 0; b < middle.size(); ++b)
          if (mask >> b & 1u) sel.push_back(middle[b]);
        std::sort(sel.begin(), sel.end());
        do {
          Int w = 0;
          std::size_t at = i;
          for (auto v : sel) {
            w += nu[at][v];
            at = v;
          }
          w += nu[at][j];
          best = std::min(best, w);
        } while (std::next_permutation(sel.begin(), sel.end()));
      }
      out[i][j] = best;
    }
  }
  return out;
}

inline bool satisfies(const Matrix& nu, const Point& x) {
  for (std::size_t i = 0; i < nu.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j)
      if (x[i] - x[j] > nu[i][j]) return false;
  return true;
}

// Full scan of the box -nu_1i <= x_i <= nu_i1 with x_1 = 0, lexicographic.
inline std::vector<Point> box_scan(const Matrix& nu) {
  const auto n = nu.size();
  std::vector<Point> out;
  Point x(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    if (-nu[0][i] > nu[i][0]) return out;
    x[i] = -nu[0][i];
  }
  while (true) {
    if (satisfies(nu, x)) out.push_back(x);
    std::size_t k = n - 1;
    while (k >= 1 && x[k] == nu[k][0]) {
      x[k] = -nu[0][k];
      --k;
    }
    if (k == 0) return out;
    ++x[k];
  }
}

inline std::optional<Int> max_difference(const std::vector<Point>& pts, std::size_t i, std::size_t j) {
  if (pts.empty()) return std::nullopt;
  Int best = std::numeric_limits<Int>::min();
  for (const auto& p : pts) best = std::max(best, p[i] - p[j]);
  return best;
}

// Reducedness decided by enumeration alone.
inline bool reduced_by_scan(const Matrix& nu) {
  const auto pts = box_scan(nu);
  if (pts.empty()) return false;
  for (std::size_t i = 0; i < nu.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j)
      if (i != j && *max_difference(pts, i, j) != nu[i][j]) return false;
  return true;
}

inline Matrix entrywise_max_of_differences(const std::vector<Point>& vs) {
  const auto n = vs.front().size();
  Matrix out(n, std::vector<Int>(n, std::numeric_limits<Int>::min()));
  for (const auto& v : vs)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i][j] = std::max(out[i][j], v[i] - v[j]);
  return out;
}

// pi L <= L' <= L for some shift c: v_i + c - u_i in {0, 1} for all i.
inline bool incident_by_shift(const Point& u, const Point& v, Int radius = 12) {
  if (u == v) return false;
  for (Int c = -radius; c <= radius; ++c) {
    bool ok = true;
    bool all_zero = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const Int d = v[i] + c - u[i];
      if (d != 0 && d != 1) ok = false;
      if (d != 0) all_zero = false;
    }
    if (ok && !all_zero) return true;
  }
  return false;
}

}  // namespace oracle
