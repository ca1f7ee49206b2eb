//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace polyiso {

/// Dense square matrix with row-major storage.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;

  explicit Matrix(std::size_t n, const T &fill = T{})
      : n_(n), data_(n * n, fill) { }

  Matrix(std::initializer_list<std::initializer_list<T>> rows)
      : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto &row: rows) {
      if (row.size() != n_)
        throw std::invalid_argument("Matrix: rows must form a square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, T(0));
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

  const std::vector<T> &data() const noexcept { return data_; }

  /// Converts element-wise through `f`.
  template <class F>
  auto map(F &&f) const -> Matrix<decltype(f(std::declval<const T &>()))> {
    Matrix<decltype(f(std::declval<const T &>()))> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        out(i, j) = f((*this)(i, j));
    return out;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;

/// Submatrix obtained by deleting the rows and columns flagged in `drop`.
template <class T>
Matrix<T> delete_rows_cols(const Matrix<T> &m, const std::vector<bool> &drop) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!drop[i])
      keep.push_back(i);

  Matrix<T> out(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      out(a, b) = m(keep[a], keep[b]);
  return out;
}

/// Principal submatrix on the listed indices, in the order given.
template <class T>
Matrix<T> principal_submatrix(const Matrix<T> &m,
                              const std::vector<std::size_t> &keep) {
  Matrix<T> out(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      out(a, b) = m(keep[a], keep[b]);
  return out;
}

}  // namespace polyiso
