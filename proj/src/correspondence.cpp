#include "splitorder/correspondence.hpp"

#include <algorithm>

#include "splitorder/error.hpp"

namespace splitorder {

ExponentMatrix maximal_order_exponents(const ApartmentVertex& v) {
  ExponentMatrixBuilder b(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) b.at(i, j) = v[i] - v[j];
  }
  return b.build();
}

ExponentMatrix intersect_maximal(std::span<const ApartmentVertex> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::EmptyVertexList, "intersection of no maximal orders");
  const std::size_t n = vertices.front().size();
  ExponentMatrixBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Exponent mu = vertices.front()[i] - vertices.front()[j];
      for (const auto& m : vertices) {
        if (m.size() != n) throw Error(ErrorCode::DimensionMismatch, "vertices of different dimension");
        mu = std::max(mu, m[i] - m[j]);
      }
      b.at(i, j) = mu;
    }
  }
  return b.build();
}

std::vector<ApartmentVertex> maximal_orders_containing(const ExponentMatrix& nu) {
  return enumerate_lattice_points(polytope_of(nu));
}

RoundtripReport verify_roundtrip(const ExponentMatrix& nu) {
  auto hull = order_hull(nu);
  auto vertices = maximal_orders_containing(hull);
  // The hull is feasible, so `vertices` is nonempty.
  auto recovered = intersect_maximal(vertices);
  RoundtripReport report{nu, hull, std::move(vertices), recovered};
  report.input_reduced = is_reduced(nu);
  report.hull_recovered = report.recovered == report.hull;
  report.input_fixed = report.recovered == nu;
  report.reduced_is_fixed = !report.input_reduced || report.input_fixed;
  return report;
}

}  // namespace splitorder
