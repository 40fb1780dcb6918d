#include "splitorder/exponent_matrix.hpp"

#include <string>

#include "splitorder/error.hpp"

namespace splitorder {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "exponent sum " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

}  // namespace

ExponentMatrix::ExponentMatrix(std::size_t n, std::vector<Exponent> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 2) throw Error(ErrorCode::DimensionTooSmall, "n = " + std::to_string(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    if (entries_[i * n_ + i] != 0) {
      throw Error(ErrorCode::NonZeroDiagonal,
                  "entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") is " +
                      std::to_string(entries_[i * n_ + i]));
    }
  }
}

ExponentMatrix::ExponentMatrix(const std::vector<std::vector<Exponent>>& rows)
    : ExponentMatrix([&] {
        const std::size_t n = rows.size();
        std::vector<Exponent> flat;
        flat.reserve(n * n);
        for (const auto& r : rows) {
          if (r.size() != n) throw Error(ErrorCode::NotSquare, "row length differs from row count");
          flat.insert(flat.end(), r.begin(), r.end());
        }
        if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "n = " + std::to_string(n));
        return ExponentMatrix(n, std::move(flat));
      }()) {}

ExponentMatrix ExponentMatrix::zero(std::size_t n) {
  return ExponentMatrix(n, std::vector<Exponent>(n * n, 0));
}

std::vector<std::vector<Exponent>> ExponentMatrix::rows() const {
  std::vector<std::vector<Exponent>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

bool ExponentMatrix::dominated_by(const ExponentMatrix& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] > other.entries_[k]) return false;
  }
  return true;
}

ExponentMatrixBuilder::ExponentMatrixBuilder(std::size_t n, Exponent fill)
    : n_(n), entries_(n * n, fill) {
  for (std::size_t i = 0; i < n; ++i) entries_[i * n + i] = 0;
}

ExponentMatrix ExponentMatrixBuilder::build() const { return ExponentMatrix(n_, entries_); }

std::optional<ViolatedTriple> find_violated_triple(const ExponentMatrix& nu) {
  const std::size_t n = nu.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // __int128 keeps the comparison exact for any pair of int64 entries.
        if (static_cast<__int128>(nu(i, k)) + nu(k, j) < nu(i, j)) return ViolatedTriple{i, j, k};
      }
    }
  }
  return std::nullopt;
}

bool is_order(const ExponentMatrix& nu) { return !find_violated_triple(nu).has_value(); }

namespace {

// Floyd-Warshall relaxation. Returns nullopt as soon as a diagonal entry
// goes negative, before repeated negative cycles can overflow the sums.
std::optional<std::vector<Exponent>> min_plus_closure(const ExponentMatrix& nu) {
  const std::size_t n = nu.size();
  std::vector<Exponent> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = nu(i, j);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Exponent via = checked_add(d[i * n + k], d[k * n + j]);
        if (via < d[i * n + j]) d[i * n + j] = via;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i * n + i] < 0) return std::nullopt;
    }
  }
  return d;
}

}  // namespace

bool has_containing_maximal(const ExponentMatrix& nu) { return min_plus_closure(nu).has_value(); }

ExponentMatrix order_hull(const ExponentMatrix& nu) {
  auto closure = min_plus_closure(nu);
  if (!closure) throw Error(ErrorCode::NegativeCycle, "no maximal order contains S; C(nu) is empty");
  ExponentMatrixBuilder b(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) {
    for (std::size_t j = 0; j < nu.size(); ++j) b.at(i, j) = (*closure)[i * nu.size() + j];
  }
  return b.build();
}

Exponent hijikata_normal_form(const ExponentMatrix& nu) {
  if (nu.size() != 2) {
    throw Error(ErrorCode::UnsupportedDimension, "Hijikata form needs n = 2, got " + std::to_string(nu.size()));
  }
  if (!is_order(nu)) throw Error(ErrorCode::NotAnOrder, "nu_12 + nu_21 < 0");
  return checked_add(nu(0, 1), nu(1, 0));
}

}  // namespace splitorder
