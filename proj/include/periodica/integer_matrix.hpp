#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "periodica/bigint.hpp"
#include "periodica/finite_group.hpp"

namespace periodica {

/// Dense matrix of arbitrary-precision integers. Columns of a square
/// matrix M are read as a basis of the sublattice M Z^d.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static IntegerMatrix identity(std::size_t n);
  /// Rows separated by ';', entries by ','; e.g. "2,1;0,3".
  static IntegerMatrix parse(std::string_view text);
  std::string to_string() const;

  IntegerMatrix operator*(const IntegerMatrix& other) const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant (fraction-free elimination).
BigInt determinant(const IntegerMatrix& m);

/// Every sublattice of Z^d of the given index, once each, as an upper
/// triangular Hermite normal form: positive diagonal, entries right of the
/// diagonal reduced into [0, diagonal). Ordered by diagonal, then entries.
std::vector<IntegerMatrix> hnf_sublattices(std::size_t d, std::uint64_t index);

/// Smith normal form diagonal d_1 | d_2 | ... | d_n (all positive) of a
/// nonsingular square matrix. Throws SingularMatrix.
std::vector<BigInt> smith_diagonal(const IntegerMatrix& m);

/// Z^d / M Z^d as the direct sum of Z_{d_i} over the Smith diagonal entries
/// greater than 1. Throws SingularMatrix or OrderLimitExceeded.
FiniteGroup smith_quotient(const IntegerMatrix& m, std::size_t max_order = kDefaultMaxGroupOrder);

}  // namespace periodica
