//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "polyiso/graph.hpp"
#include "polyiso/matrix.hpp"
#include "polyiso/scaled.hpp"

namespace polyiso {

namespace detail {
  inline void divexact(mpz_class &x, const mpz_class &d) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
}  // namespace detail

/// Fraction-free (Bareiss) elimination with row pivoting. Every division is
/// exact; the 0x0 determinant is 1.
inline mpz_class bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0)
        ++r;
      if (r == n)
        return 0;
      for (std::size_t j = k; j < n; ++j)
        std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        detail::divexact(m(i, j), prev);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Determinant together with every principal (n-1)-minor, i.e. the diagonal
/// of the adjugate. One fraction-free Gauss-Jordan pass on [M | I]; singular
/// inputs fall back to one elimination per minor.
struct AdjugateDiagonal {
  mpz_class det;
  std::vector<mpz_class> minors;
};

inline AdjugateDiagonal adjugate_diagonal(const IntMatrix &m) {
  const std::size_t n = m.size();
  AdjugateDiagonal out;
  if (n == 0) {
    out.det = 1;
    return out;
  }

  const std::size_t w = 2 * n;
  std::vector<mpz_class> a(n * w, mpz_class(0));
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class & {
    return a[i * w + j];
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      at(i, j) = m(i, j);
    at(i, n + i) = 1;
  }

  int sign = 1;
  mpz_class prev = 1;
  bool singular = false;
  mpz_class aik;
  for (std::size_t k = 0; k < n && !singular; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0)
        ++r;
      if (r == n) {
        singular = true;
        break;
      }
      for (std::size_t j = 0; j < w; ++j)
        std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k)
        continue;
      aik = at(i, k);
      for (std::size_t j = 0; j < w; ++j) {
        if (j == k)
          continue;
        at(i, j) = at(k, k) * at(i, j) - aik * at(k, j);
        detail::divexact(at(i, j), prev);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }

  out.minors.resize(n);
  if (!singular) {
    out.det = sign * prev;
    for (std::size_t j = 0; j < n; ++j)
      out.minors[j] = sign * at(j, n + j);
    return out;
  }

  out.det = 0;
  std::vector<bool> drop(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    drop[j] = true;
    out.minors[j] = bareiss_determinant(delete_rows_cols(m, drop));
    drop[j] = false;
  }
  return out;
}

/// Integer matrix M read as M / 10^scale. The scale is fixed for the
/// lifetime of the object so increments can be added and removed exactly.
class ScaledMatrix {
 public:
  ScaledMatrix() = default;
  ScaledMatrix(IntMatrix ints, unsigned scale)
      : ints_(std::move(ints)), scale_(scale) { }

  /// Integer matrix lifted to `scale` decimal places.
  static ScaledMatrix lift(const IntMatrix &m, unsigned scale) {
    const mpz_class f = pow10(scale);
    return ScaledMatrix(m.map([&](const mpz_class &v) -> mpz_class {
      return v * f;
    }),
                        scale);
  }

  /// Clears denominators to the largest scale present.
  static ScaledMatrix from(const Matrix<ScaledExact> &m) {
    unsigned s = 0;
    for (const auto &v: m.data())
      s = std::max(s, v.scale());
    return ScaledMatrix(m.map([&](const ScaledExact &v) -> mpz_class {
      return v.mantissa_at(s);
    }),
                        s);
  }

  std::size_t size() const noexcept { return ints_.size(); }
  unsigned scale() const noexcept { return scale_; }
  const IntMatrix &ints() const noexcept { return ints_; }

  ScaledExact value(std::size_t i, std::size_t j) const {
    return ScaledExact(ints_(i, j), scale_);
  }

  Matrix<ScaledExact> values() const {
    return ints_.map([&](const mpz_class &v) { return ScaledExact(v, scale_); });
  }

  void add_diagonal(std::size_t i, const ScaledExact &v) {
    ints_(i, i) += v.mantissa_at(scale_);
  }

  friend bool operator==(const ScaledMatrix &, const ScaledMatrix &) = default;

 private:
  IntMatrix ints_;
  unsigned scale_ = 0;
};

/// det(M / 10^e) = det(M) / 10^(n e)
inline ScaledExact exact_determinant(const ScaledMatrix &m) {
  return ScaledExact(bareiss_determinant(m.ints()),
                     static_cast<unsigned>(m.size()) * m.scale());
}

inline ScaledExact exact_determinant(const Matrix<ScaledExact> &m) {
  return exact_determinant(ScaledMatrix::from(m));
}

/// Determinant after deleting the listed rows and columns (0-based).
inline ScaledExact exact_minor_determinant(const ScaledMatrix &m,
                                           const std::vector<Vertex> &deleted) {
  std::vector<bool> drop(m.size(), false);
  for (Vertex v: deleted) {
    if (v >= m.size())
      throw std::out_of_range("exact_minor_determinant: index out of range");
    drop[v] = true;
  }
  return exact_determinant(
      ScaledMatrix(delete_rows_cols(m.ints(), drop), m.scale()));
}

inline ScaledExact exact_minor_determinant(const Matrix<ScaledExact> &m,
                                           const std::vector<Vertex> &deleted) {
  return exact_minor_determinant(ScaledMatrix::from(m), deleted);
}

}  // namespace polyiso
