#include "splitorder/apartments.hpp"

#include <algorithm>

#include "splitorder/error.hpp"
#include "splitorder/polytope.hpp"

namespace splitorder {

namespace {

LocalMatrix invert_or_throw(const LocalMatrix& g) {
  auto inv = g.inverse();
  if (!inv) throw Error(ErrorCode::SingularConjugator, "apartment frame matrix is singular");
  return std::move(*inv);
}

}  // namespace

Apartment::Apartment(LocalMatrix gamma) : gamma_(std::move(gamma)), gamma_inv_(invert_or_throw(gamma_)) {}

Apartment Apartment::standard(std::size_t n, unsigned long prime) {
  return Apartment(LocalMatrix::identity(n, prime));
}

LocalMatrix Apartment::lattice_basis(const ApartmentVertex& v) const {
  if (v.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vertex does not match apartment");
  std::vector<Rational> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = prime_power(prime(), v[i]);
  return gamma_ * LocalMatrix::diagonal(d, prime());
}

GeneralSplitOrder::GeneralSplitOrder(Apartment apartment, ExponentMatrix nu)
    : apartment_(std::move(apartment)), nu_(std::move(nu)) {
  if (nu_.size() != apartment_.size()) throw Error(ErrorCode::DimensionMismatch, "exponents vs apartment");
  if (!is_reduced(nu_)) throw Error(ErrorCode::NotReduced, "general split orders need a reduced nu");
}

bool incident(const ApartmentVertex& u, const ApartmentVertex& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "vertices of different dimension");
  Exponent lo = v[0] - u[0], hi = lo;
  for (std::size_t i = 1; i < u.size(); ++i) {
    lo = std::min(lo, v[i] - u[i]);
    hi = std::max(hi, v[i] - u[i]);
  }
  return hi - lo == 1;
}

bool general_membership(const GeneralSplitOrder& s, const LocalMatrix& a) {
  const auto& ap = s.apartment();
  if (a.size() != ap.size() || a.prime() != ap.prime()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix does not match the order's apartment");
  }
  return in_split_order(ap.gamma_inverse() * a * ap.gamma(), s.exponents());
}

bool maximal_order_contains(const Apartment& ap, const ApartmentVertex& v, const LocalMatrix& a) {
  const auto basis = ap.lattice_basis(v);
  return conjugate(basis, a).is_integral();
}

GeneralSplitOrder intersect_in_apartment(const Apartment& ap, std::span<const ApartmentVertex> vertices) {
  // Intersections of maximal orders are already reduced; no hull needed.
  return GeneralSplitOrder(ap, intersect_maximal(vertices));
}

bool divisor_invariance_check(const LocalMatrix& gamma, const LocalMatrix& lattice, const LocalMatrix& sub) {
  if (!gamma.inverse()) throw Error(ErrorCode::SingularInput, "gamma is singular");
  return elementary_divisors(lattice, sub) == elementary_divisors(gamma * lattice, gamma * sub);
}

LocalMatrix sample_gamma(std::size_t n, unsigned long prime, Rng& rng, std::size_t factors) {
  auto g = LocalMatrix::identity(n, prime);
  const auto p = static_cast<std::int64_t>(prime);
  for (std::size_t f = 0; f < factors; ++f) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    std::int64_t u;
    do {
      u = rng.uniform(1, p * p);
    } while (u % p == 0);
    if (rng.coin()) u = -u;
    auto e = LocalMatrix::identity(n, prime);
    e(i, j) = Rational(static_cast<long>(u)) * prime_power(prime, rng.uniform(-2, 2));
    g = g * e;
  }
  std::vector<Rational> d(n);
  for (auto& x : d) x = prime_power(prime, rng.uniform(-2, 2));
  return g * LocalMatrix::diagonal(d, prime);
}

}  // namespace splitorder
