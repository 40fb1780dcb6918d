#include "splitorder/local_field.hpp"

#include <algorithm>
#include <string>

#include "splitorder/error.hpp"

namespace splitorder {

namespace {

Exponent integer_valuation(const mpz_class& z, unsigned long p) {
  mpz_class rest;
  mpz_class prime(p);
  return static_cast<Exponent>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace

void require_prime(unsigned long p) {
  if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 25) == 0) {
    throw Error(ErrorCode::InvalidPrime, std::to_string(p) + " is not prime");
  }
}

Valuation valuation(const Rational& a, unsigned long p) {
  if (a == 0) return Valuation::infinite();
  return Valuation(integer_valuation(a.get_num(), p) - integer_valuation(a.get_den(), p));
}

Rational prime_power(unsigned long p, Exponent e) {
  mpz_class pw;
  const auto mag = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_ui_pow_ui(pw.get_mpz_t(), p, mag);
  if (e >= 0) return Rational(pw);
  Rational q(mpz_class(1), pw);
  q.canonicalize();
  return q;
}

LocalMatrix::LocalMatrix(std::size_t n, unsigned long prime) : n_(n), prime_(prime), entries_(n * n) {
  require_prime(prime);
}

LocalMatrix::LocalMatrix(const std::vector<std::vector<Rational>>& rows, unsigned long prime)
    : LocalMatrix(rows.size(), prime) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw Error(ErrorCode::NotSquare, "local matrix rows must have length n");
    for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = rows[i][j];
  }
}

LocalMatrix LocalMatrix::identity(std::size_t n, unsigned long prime) {
  LocalMatrix m(n, prime);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LocalMatrix LocalMatrix::diagonal(const std::vector<Rational>& d, unsigned long prime) {
  LocalMatrix m(d.size(), prime);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

LocalMatrix LocalMatrix::unit(std::size_t n, std::size_t i, std::size_t j, const Rational& scale,
                              unsigned long prime) {
  LocalMatrix m(n, prime);
  m(i, j) = scale;
  return m;
}

void LocalMatrix::require_compatible(const LocalMatrix& o) const {
  if (o.n_ != n_) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(n_) + " vs " + std::to_string(o.n_));
  }
  if (o.prime_ != prime_) throw Error(ErrorCode::DimensionMismatch, "matrices over different primes");
}

bool LocalMatrix::operator==(const LocalMatrix& o) const {
  return n_ == o.n_ && prime_ == o.prime_ && entries_ == o.entries_;
}

LocalMatrix LocalMatrix::operator*(const LocalMatrix& o) const {
  require_compatible(o);
  LocalMatrix out(n_, prime_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * o(k, j);
    }
  }
  return out;
}

LocalMatrix LocalMatrix::operator+(const LocalMatrix& o) const {
  require_compatible(o);
  LocalMatrix out(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += o.entries_[k];
  return out;
}

Rational LocalMatrix::determinant() const {
  LocalMatrix m(*this);
  Rational det = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t pivot = c;
    while (pivot < n_ && m(pivot, c) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != c) {
      m.swap_rows(pivot, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n_; ++r) {
      if (m(r, c) != 0) m.add_row_multiple(r, c, -m(r, c) / m(c, c));
    }
  }
  return det;
}

std::optional<LocalMatrix> LocalMatrix::inverse() const {
  LocalMatrix m(*this);
  LocalMatrix inv = identity(n_, prime_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t pivot = c;
    while (pivot < n_ && m(pivot, c) == 0) ++pivot;
    if (pivot == n_) return std::nullopt;
    m.swap_rows(pivot, c);
    inv.swap_rows(pivot, c);
    const Rational scale = 1 / m(c, c);
    m.scale_row(c, scale);
    inv.scale_row(c, scale);
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Rational f = -m(r, c);
      m.add_row_multiple(r, c, f);
      inv.add_row_multiple(r, c, f);
    }
  }
  return inv;
}

bool LocalMatrix::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Rational& q) { return splitorder::valuation(q, prime_) >= 0; });
}

bool LocalMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

void LocalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void LocalMatrix::add_row_multiple(std::size_t target, std::size_t source, const Rational& factor) {
  for (std::size_t j = 0; j < n_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void LocalMatrix::scale_row(std::size_t r, const Rational& factor) {
  for (std::size_t j = 0; j < n_; ++j) (*this)(r, j) *= factor;
}

bool in_split_order(const LocalMatrix& a, const ExponentMatrix& nu) {
  if (a.size() != nu.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix is " + std::to_string(a.size()) + "x" +
                                                  std::to_string(a.size()) + ", exponents are " +
                                                  std::to_string(nu.size()) + "x" + std::to_string(nu.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.valuation(i, j) < nu(i, j)) return false;
    }
  }
  return true;
}

bool lambda_membership(const LocalMatrix& a, const ApartmentVertex& v) {
  if (a.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "vertex and matrix sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.valuation(i, j) < v[i] - v[j]) return false;
    }
  }
  return true;
}

LocalMatrix conjugate(const LocalMatrix& xi, const LocalMatrix& a) {
  if (xi.size() != a.size()) throw Error(ErrorCode::DimensionMismatch, "conjugator and matrix sizes differ");
  auto inv = xi.inverse();
  if (!inv) throw Error(ErrorCode::SingularConjugator, "conjugator has zero determinant");
  return *inv * a * xi;
}

namespace {

// Canonical representative of a in {0, ..., p^m - 1} modulo p^m O.
Rational residue(const Rational& a, const mpz_class& modulus) {
  if (modulus == 1) return 0;
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), a.get_den_mpz_t(), modulus.get_mpz_t());
  mpz_class r = a.get_num() * den_inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return Rational(r);
}

}  // namespace

HermiteResult hermite_normal_form(const LocalMatrix& xi) {
  const std::size_t n = xi.size();
  const unsigned long p = xi.prime();
  if (!xi.is_integral()) throw Error(ErrorCode::NonIntegralInput, "HNF input must lie in M_n(O)");
  LocalMatrix h(xi);
  LocalMatrix t = LocalMatrix::identity(n, p);
  std::vector<Exponent> exps(n, 0);

  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    Valuation best = Valuation::infinite();
    for (std::size_t r = c; r < n; ++r) {
      const auto v = h.valuation(r, c);
      if (v < best) {
        best = v;
        pivot = r;
      }
    }
    if (pivot == n) throw Error(ErrorCode::SingularInput, "HNF input is singular");
    h.swap_rows(pivot, c);
    t.swap_rows(pivot, c);
    exps[c] = best.value();
    const Rational unit = prime_power(p, exps[c]) / h(c, c);
    h.scale_row(c, unit);
    t.scale_row(c, unit);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (h(r, c) == 0) continue;
      const Rational f = -h(r, c) / h(c, c);
      h.add_row_multiple(r, c, f);
      t.add_row_multiple(r, c, f);
    }
  }

  // Column j is reduced with row j, which only touches columns >= j of the
  // target row, so ascending j never disturbs a finished column.
  for (std::size_t j = 1; j < n; ++j) {
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), p, static_cast<unsigned long>(exps[j]));
    for (std::size_t i = 0; i < j; ++i) {
      const Rational q = (h(i, j) - residue(h(i, j), modulus)) / h(j, j);
      if (q == 0) continue;
      h.add_row_multiple(i, j, -q);
      t.add_row_multiple(i, j, -q);
    }
  }
  return {HermiteForm{std::move(h), std::move(exps)}, std::move(t)};
}

LocalMatrix diagonal_witness(const HermiteForm& xi) {
  const auto& m = xi.matrix;
  if (m.is_diagonal()) throw Error(ErrorCode::AlreadyDiagonal, "every diagonal D conjugates integrally");
  const std::size_t n = m.size();
  const auto inv = m.inverse();
  if (!inv) throw Error(ErrorCode::SingularInput, "Hermite form is singular");
  // Patterns 0 and 2^n - 1 are scalars and conjugate to themselves.
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    std::vector<Rational> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = (mask >> i) & 1;
    auto diag = LocalMatrix::diagonal(d, m.prime());
    if (!(m * diag * *inv).is_integral()) return diag;
  }
  throw Error(ErrorCode::AlreadyDiagonal, "no 0/1 diagonal gives a non-integral conjugate");
}

std::vector<Exponent> elementary_divisors(const LocalMatrix& lattice, const LocalMatrix& sub) {
  if (lattice.size() != sub.size()) throw Error(ErrorCode::DimensionMismatch, "basis sizes differ");
  auto inv = lattice.inverse();
  if (!inv) throw Error(ErrorCode::SingularInput, "lattice basis is singular");
  LocalMatrix x = *inv * sub;
  const std::size_t n = x.size();
  std::vector<Exponent> out;
  out.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = n, pc = n;
    Valuation best = Valuation::infinite();
    for (std::size_t r = c; r < n; ++r) {
      for (std::size_t k = c; k < n; ++k) {
        const auto v = x.valuation(r, k);
        if (v < best) {
          best = v;
          pr = r;
          pc = k;
        }
      }
    }
    if (pr == n) throw Error(ErrorCode::SingularInput, "sublattice basis is singular");
    x.swap_rows(pr, c);
    if (pc != c) {
      for (std::size_t r = 0; r < n; ++r) std::swap(x(r, pc), x(r, c));
    }
    out.push_back(best.value());
    // The pivot has least valuation, so every quotient below lies in O.
    for (std::size_t r = c + 1; r < n; ++r) {
      if (x(r, c) != 0) x.add_row_multiple(r, c, -x(r, c) / x(c, c));
    }
    for (std::size_t k = c + 1; k < n; ++k) {
      if (x(c, k) == 0) continue;
      const Rational f = -x(c, k) / x(c, c);
      for (std::size_t r = c; r < n; ++r) x(r, k) += f * x(r, c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LocalMatrix sample_sharp_element(const ExponentMatrix& nu, unsigned long prime, Rng& rng) {
  const std::size_t n = nu.size();
  LocalMatrix a(n, prime);
  const auto top = static_cast<std::int64_t>(prime * prime * prime * prime);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t u;
      do {
        u = rng.uniform(1, top);
      } while (u % static_cast<std::int64_t>(prime) == 0);
      if (rng.coin()) u = -u;
      a(i, j) = Rational(static_cast<long>(u)) * prime_power(prime, nu(i, j));
    }
  }
  return a;
}

RingClosureResult ring_closure_check(const ExponentMatrix& nu, std::size_t trials, std::uint64_t seed,
                                     unsigned long prime) {
  require_prime(prime);
  const std::size_t n = nu.size();
  RingClosureResult result;
  if (auto t = find_violated_triple(nu)) {
    ClosureWitness w{LocalMatrix::unit(n, t->i, t->k, prime_power(prime, nu(t->i, t->k)), prime),
                     LocalMatrix::unit(n, t->k, t->j, prime_power(prime, nu(t->k, t->j)), prime), *t};
    result.witness = std::move(w);
    return result;
  }
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto a = sample_sharp_element(nu, prime, rng);
    auto b = sample_sharp_element(nu, prime, rng);
    ++result.trials_run;
    if (!in_split_order(a * b, nu)) {
      result.witness = ClosureWitness{std::move(a), std::move(b), std::nullopt};
      break;
    }
  }
  return result;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace splitorder
