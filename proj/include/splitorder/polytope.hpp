#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "splitorder/exponent_matrix.hpp"

namespace splitorder {

/// Integer point of the standard apartment, normalized so that x_1 = 0.
/// Un-normalized input is shifted by -x_1 on construction.
class LatticePoint {
 public:
  explicit LatticePoint(std::vector<Exponent> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  Exponent operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Exponent>& coords() const noexcept { return coords_; }

  auto operator<=>(const LatticePoint&) const = default;

 private:
  std::vector<Exponent> coords_;
};

/// The region {x : x_i - x_j <= upper_ij for all i != j, x_1 = 0}.
///
/// The two-sided bounds -nu_ji <= x_i - x_j <= nu_ij fold into the single
/// matrix `upper`, whose diagonal is zero.
class DifferencePolytope {
 public:
  explicit DifferencePolytope(ExponentMatrix upper) : upper_(std::move(upper)) {}

  std::size_t size() const noexcept { return upper_.size(); }
  Exponent upper(std::size_t i, std::size_t j) const { return upper_(i, j); }
  Exponent lower(std::size_t i, std::size_t j) const { return -upper_(j, i); }
  const ExponentMatrix& bounds() const noexcept { return upper_; }

  bool contains(const LatticePoint& x) const;

 private:
  ExponentMatrix upper_;
};

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

DifferencePolytope polytope_of(const ExponentMatrix& nu);

/// No real point satisfies the constraints (negative cycle in the
/// constraint graph).
bool is_empty(const DifferencePolytope& poly);

/// max{x_i - x_j : x in poly}, computed as a single-source shortest path
/// (Bellman-Ford) in the constraint graph. Throws EmptyPolytope.
Exponent max_difference(const DifferencePolytope& poly, std::size_t i, std::size_t j);

/// All integer points, lexicographic in (x_2, ..., x_n). The scan box is
/// -upper_1i <= x_i <= upper_i1; boxes with more than `limit` cells throw
/// EnumerationLimit.
std::vector<LatticePoint> enumerate_lattice_points(const DifferencePolytope& poly,
                                                   std::uint64_t limit = kDefaultEnumerationLimit);

/// C(nu) is nonempty and every hyperplane x_i - x_j = nu_ij touches it.
/// Returns false for an empty region.
bool is_reduced(const ExponentMatrix& nu);

}  // namespace splitorder
