// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bruhat/bigint.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace bruhat {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t size);
  static IntMatrix diagonal(const std::vector<BigInt>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;

  /// Reorders rows and columns: out(r, c) = (*this)(row_order[r], col_order[c]).
  IntMatrix permuted(const std::vector<std::size_t>& row_order,
                     const std::vector<std::size_t>& col_order) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  /// JSON array of rows, each entry a decimal string.
  std::string to_json() const;
  static IntMatrix from_json(const std::string& text);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Fraction-free (Bareiss) determinant. Throws std::invalid_argument for
/// non-square input; the empty matrix has determinant 1.
BigInt determinant(const IntMatrix& a);

}  // namespace bruhat
