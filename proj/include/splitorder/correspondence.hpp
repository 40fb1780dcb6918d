#pragma once

#include <span>
#include <vector>

#include "splitorder/exponent_matrix.hpp"
#include "splitorder/polytope.hpp"

namespace splitorder {

/// Vertex [0, m_2, ..., m_n] of the standard apartment, i.e. the maximal
/// order Lambda(m) = End(O e_1 + O p^{m_2} e_2 + ... + O p^{m_n} e_n).
using ApartmentVertex = LatticePoint;

/// Exponents of Lambda(m): nu_ij = m_i - m_j.
ExponentMatrix maximal_order_exponents(const ApartmentVertex& v);

/// Exponents of the intersection of the Lambda(m) for m in `vertices`:
/// mu_ij = max_k (m^(k)_i - m^(k)_j). Throws EmptyVertexList.
ExponentMatrix intersect_maximal(std::span<const ApartmentVertex> vertices);

/// All maximal orders of the standard apartment that contain S(nu).
std::vector<ApartmentVertex> maximal_orders_containing(const ExponentMatrix& nu);

struct RoundtripReport {
  ExponentMatrix input;
  ExponentMatrix hull;
  std::vector<ApartmentVertex> vertices;  // lattice points of C(hull) = C(input)
  ExponentMatrix recovered;               // intersection over `vertices`
  bool input_reduced = false;
  bool hull_recovered = false;   // recovered == hull
  bool reduced_is_fixed = false; // input reduced implies recovered == input
  bool input_fixed = false;      // recovered == input

  bool ok() const noexcept { return hull_recovered && reduced_is_fixed; }
};

/// nu -> C(nu) -> intersection of its maximal orders. Throws NegativeCycle.
RoundtripReport verify_roundtrip(const ExponentMatrix& nu);

}  // namespace splitorder
