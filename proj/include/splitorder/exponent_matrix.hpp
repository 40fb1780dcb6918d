#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace splitorder {

using Exponent = std::int64_t;

/// Integer matrix nu describing the O-lattice S = (p^{nu_ij}) inside M_n(k).
///
/// The diagonal is always zero, so S contains R = diag(O, ..., O). Values
/// are immutable after construction; indices are zero-based.
class ExponentMatrix {
 public:
  /// Throws NotSquare, DimensionTooSmall (n < 2) or NonZeroDiagonal.
  explicit ExponentMatrix(const std::vector<std::vector<Exponent>>& rows);

  /// The all-zero matrix, i.e. the exponents of M_n(O).
  static ExponentMatrix zero(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Exponent operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const Exponent> row(std::size_t i) const {
    return {entries_.data() + i * n_, n_};
  }
  std::vector<std::vector<Exponent>> rows() const;

  bool operator==(const ExponentMatrix&) const = default;

  /// Entrywise comparison: every entry of *this is <= the matching entry of other.
  bool dominated_by(const ExponentMatrix& other) const;

 private:
  ExponentMatrix(std::size_t n, std::vector<Exponent> entries);

  std::size_t n_ = 0;
  std::vector<Exponent> entries_;

  friend class ExponentMatrixBuilder;
};

/// Mutable staging area for algorithms that fill a matrix entry by entry.
/// build() validates exactly like the public constructor.
class ExponentMatrixBuilder {
 public:
  explicit ExponentMatrixBuilder(std::size_t n, Exponent fill = 0);
  Exponent& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  Exponent at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::size_t size() const noexcept { return n_; }
  ExponentMatrix build() const;

 private:
  std::size_t n_;
  std::vector<Exponent> entries_;
};

/// A triple with nu_ik + nu_kj < nu_ij: p^{nu_ik} E(i,k) * p^{nu_kj} E(k,j)
/// leaves S in position (i, j). Zero-based.
struct ViolatedTriple {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  bool operator==(const ViolatedTriple&) const = default;
};

/// nu_ik + nu_kj >= nu_ij for all i, j, k: S is closed under multiplication.
bool is_order(const ExponentMatrix& nu);

/// First violated triple in (i, j, k) lexicographic order, if any.
std::optional<ViolatedTriple> find_violated_triple(const ExponentMatrix& nu);

/// True iff every directed cycle of nu has nonnegative weight, i.e. some
/// maximal order of the standard apartment contains S.
bool has_containing_maximal(const ExponentMatrix& nu);

/// Min-plus closure: mu_ij is the least total weight of a path i -> j.
/// The result is the smallest order containing S and cuts out the same
/// polytope. Throws NegativeCycle when no maximal order contains S and
/// Overflow if a path sum leaves the 64-bit range.
ExponentMatrix order_hull(const ExponentMatrix& nu);

/// Level nu_12 + nu_21 of a 2x2 order; S is GL_2(k)-conjugate to
/// (O O; p^level O). Throws UnsupportedDimension or NotAnOrder.
Exponent hijikata_normal_form(const ExponentMatrix& nu);

}  // namespace splitorder
