// SPDX-License-Identifier: Apache-2.0
#include "bruhat/int_matrix.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

namespace bruhat {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t size) {
  IntMatrix out(size, size);
  for (std::size_t k = 0; k < size; ++k) out(k, k) = 1;
  return out;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& entries) {
  IntMatrix out(entries.size(), entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) out(k, k) = entries[k];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& row_order,
                              const std::vector<std::size_t>& col_order) const {
  if (row_order.size() != rows_ || col_order.size() != cols_) {
    throw std::invalid_argument("permutation size does not match matrix");
  }
  IntMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(row_order[r], col_order[c]);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& lhs = a(r, k);
      if (lhs == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += lhs * b(k, c);
    }
  }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix difference dimension mismatch");
  }
  IntMatrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < rows_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < cols_; ++c) row.push_back(to_decimal((*this)(r, c)));
    out.push_back(std::move(row));
  }
  return out.dump();
}

IntMatrix IntMatrix::from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
  const std::size_t rows = doc.size();
  const std::size_t cols = rows == 0 ? 0 : doc.front().size();
  IntMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!doc[r].is_array() || doc[r].size() != cols) throw std::invalid_argument("ragged matrix JSON");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& cell = doc[r][c];
      out(r, c) = cell.is_string() ? from_decimal(cell.get<std::string>())
                                   : BigInt(cell.get<long>());
    }
  }
  return out;
}

BigInt determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

}  // namespace bruhat
