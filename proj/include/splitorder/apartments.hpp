#pragma once

#include <span>
#include <vector>

#include "splitorder/correspondence.hpp"
#include "splitorder/local_field.hpp"

namespace splitorder {

/// The apartment gamma * A_0 of the frame f_i = gamma e_i. Vertex m of the
/// apartment is the class of the lattice gamma * (O p^{m_1} e_1 + ... +
/// O p^{m_n} e_n).
class Apartment {
 public:
  /// Throws SingularConjugator.
  explicit Apartment(LocalMatrix gamma);
  static Apartment standard(std::size_t n, unsigned long prime);

  const LocalMatrix& gamma() const noexcept { return gamma_; }
  const LocalMatrix& gamma_inverse() const noexcept { return gamma_inv_; }
  std::size_t size() const noexcept { return gamma_.size(); }
  unsigned long prime() const noexcept { return gamma_.prime(); }

  /// Basis (as columns) of the lattice representing vertex v.
  LocalMatrix lattice_basis(const ApartmentVertex& v) const;

 private:
  LocalMatrix gamma_;
  LocalMatrix gamma_inv_;
};

/// gamma S(nu) gamma^{-1}: an order containing gamma R gamma^{-1}.
class GeneralSplitOrder {
 public:
  /// Throws NotReduced unless nu is reduced, DimensionMismatch on size.
  GeneralSplitOrder(Apartment apartment, ExponentMatrix nu);

  const Apartment& apartment() const noexcept { return apartment_; }
  const ExponentMatrix& exponents() const noexcept { return nu_; }

 private:
  Apartment apartment_;
  ExponentMatrix nu_;
};

/// pi L <= L' <= L for some representatives: the difference vector has
/// spread exactly one. Distinct vertices only.
bool incident(const ApartmentVertex& u, const ApartmentVertex& v);

/// gamma^{-1} A gamma lies in S(nu). Throws DimensionMismatch.
bool general_membership(const GeneralSplitOrder& s, const LocalMatrix& a);

/// A stabilizes the lattice of vertex v, i.e. A lies in End(gamma L_v).
/// Decided by integrality of B^{-1} A B for the lattice basis B.
bool maximal_order_contains(const Apartment& ap, const ApartmentVertex& v, const LocalMatrix& a);

/// Intersection of the maximal orders at `vertices` of `ap`.
/// Throws EmptyVertexList.
GeneralSplitOrder intersect_in_apartment(const Apartment& ap, std::span<const ApartmentVertex> vertices);

/// {L : L'} == {gamma L : gamma L'} for lattices given by column bases.
bool divisor_invariance_check(const LocalMatrix& gamma, const LocalMatrix& lattice, const LocalMatrix& sub);

/// Random invertible gamma: a product of `factors` elementary matrices
/// I + c E(i,j) (c = +-u p^e, e in [-2, 2]) and a diagonal of p-powers
/// with exponents in [-2, 2].
LocalMatrix sample_gamma(std::size_t n, unsigned long prime, Rng& rng, std::size_t factors = 4);

}  // namespace splitorder
