#pragma once

// Exact model of a local field: Q with the p-adic valuation, so that
// O = {a/b : p does not divide b}, the uniformizer is p and the ideal
// p^m O is {x : v_p(x) >= m}.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "splitorder/correspondence.hpp"
#include "splitorder/exponent_matrix.hpp"
#include "splitorder/random.hpp"

namespace splitorder {

using Rational = mpq_class;

/// p-adic valuation; the valuation of zero is +infinity and compares
/// greater than every finite value.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(); }
  explicit Valuation(Exponent v) : value_(v) {}

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Finite value; throws std::bad_optional_access for +infinity.
  Exponent value() const { return value_.value(); }

  bool operator==(const Valuation&) const = default;
  std::strong_ordering operator<=>(const Valuation& o) const {
    if (is_infinite() || o.is_infinite()) return is_infinite() <=> o.is_infinite();
    return *value_ <=> *o.value_;
  }
  friend bool operator>=(const Valuation& a, Exponent b) { return a >= Valuation(b); }
  friend bool operator<(const Valuation& a, Exponent b) { return a < Valuation(b); }

 private:
  Valuation() = default;
  std::optional<Exponent> value_;
};

/// Throws InvalidPrime unless p is a prime number.
void require_prime(unsigned long p);

Valuation valuation(const Rational& a, unsigned long p);

/// p^e as an exact rational (e may be negative).
Rational prime_power(unsigned long p, Exponent e);

/// A scalar of k tagged with the prime that defines its valuation.
struct LocalScalar {
  Rational value;
  unsigned long prime;

  Valuation valuation() const { return splitorder::valuation(value, prime); }
  bool integral() const { return valuation() >= 0; }
  bool in_ideal(Exponent m) const { return valuation() >= m; }
};

/// Square matrix over k; all entries share one prime.
class LocalMatrix {
 public:
  LocalMatrix(std::size_t n, unsigned long prime);
  LocalMatrix(const std::vector<std::vector<Rational>>& rows, unsigned long prime);

  static LocalMatrix identity(std::size_t n, unsigned long prime);
  static LocalMatrix diagonal(const std::vector<Rational>& d, unsigned long prime);
  /// scale * E(i,j).
  static LocalMatrix unit(std::size_t n, std::size_t i, std::size_t j, const Rational& scale,
                          unsigned long prime);

  std::size_t size() const noexcept { return n_; }
  unsigned long prime() const noexcept { return prime_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  LocalScalar scalar(std::size_t i, std::size_t j) const { return {(*this)(i, j), prime_}; }
  Valuation valuation(std::size_t i, std::size_t j) const {
    return splitorder::valuation((*this)(i, j), prime_);
  }

  bool operator==(const LocalMatrix& o) const;

  LocalMatrix operator*(const LocalMatrix& o) const;
  LocalMatrix operator+(const LocalMatrix& o) const;

  Rational determinant() const;
  /// nullopt for singular matrices.
  std::optional<LocalMatrix> inverse() const;

  /// All entries lie in O.
  bool is_integral() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Rational& factor);
  void scale_row(std::size_t r, const Rational& factor);

 private:
  void require_compatible(const LocalMatrix& o) const;

  std::size_t n_;
  unsigned long prime_;
  std::vector<Rational> entries_;
};

/// v_p(A_ij) >= nu_ij for every entry. Throws DimensionMismatch.
bool in_split_order(const LocalMatrix& a, const ExponentMatrix& nu);

/// A lies in Lambda(m), i.e. v_p(A_ij) >= m_i - m_j. Throws DimensionMismatch.
bool lambda_membership(const LocalMatrix& a, const ApartmentVertex& v);

/// xi^{-1} A xi. Throws SingularConjugator or DimensionMismatch.
LocalMatrix conjugate(const LocalMatrix& xi, const LocalMatrix& a);

/// Canonical representative of GL_n(O) * xi: upper triangular, diagonal
/// p^{m_j}, and each entry above the diagonal in column j reduced into
/// {0, ..., p^{m_j} - 1}.
struct HermiteForm {
  LocalMatrix matrix;
  std::vector<Exponent> exponents;

  bool operator==(const HermiteForm&) const = default;
};

struct HermiteResult {
  HermiteForm form;
  LocalMatrix transform;  // in GL_n(O), transform * xi == form.matrix
};

/// Row reduction over O, pivoting on the entry of least valuation (lowest
/// row on ties). Throws NonIntegralInput or SingularInput.
HermiteResult hermite_normal_form(const LocalMatrix& xi);

/// A diagonal D with 0/1 entries such that xi D xi^{-1} is not in M_n(O).
/// Throws AlreadyDiagonal when xi is diagonal (then no such D exists).
LocalMatrix diagonal_witness(const HermiteForm& xi);

/// Elementary divisors {L : L'} of the lattice spanned by the columns of
/// `sub` inside the lattice spanned by the columns of `lattice`: the
/// valuations of the Smith form of lattice^{-1} * sub, ascending.
/// Throws SingularInput.
std::vector<Exponent> elementary_divisors(const LocalMatrix& lattice, const LocalMatrix& sub);

/// Random element of S(nu) whose (i,j) entry is +-u * p^{nu_ij} with u
/// drawn from [1, p^4] coprime to p, so every valuation is exactly nu_ij.
LocalMatrix sample_sharp_element(const ExponentMatrix& nu, unsigned long prime, Rng& rng);

struct ClosureWitness {
  LocalMatrix a;
  LocalMatrix b;
  std::optional<ViolatedTriple> triple;  // set when built from a violated triple
};

struct RingClosureResult {
  std::size_t trials_run = 0;
  std::optional<ClosureWitness> witness;  // empty iff S(nu) passed every trial

  bool closed() const noexcept { return !witness.has_value(); }
};

/// Checks S(nu) * S(nu) inside S(nu) by matrix arithmetic. A violated
/// triple (i, j, k) produces the witness p^{nu_ik} E(i,k), p^{nu_kj} E(k,j)
/// directly; otherwise `trials` products of sharp samples are tested.
RingClosureResult ring_closure_check(const ExponentMatrix& nu, std::size_t trials, std::uint64_t seed,
                                     unsigned long prime = 2);

/// "num/den" with den > 0 (den printed even when it is 1).
std::string rational_to_string(const Rational& q);
/// Accepts "num/den" or "num". Throws Parse.
Rational rational_from_string(const std::string& s);

}  // namespace splitorder
