//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "polyiso/bounded_float.hpp"
#include "polyiso/determinant.hpp"
#include "polyiso/matrix.hpp"
#include "polyiso/scaled.hpp"

namespace polyiso {

inline constexpr unsigned kMinPlannedBits = 64;
inline constexpr unsigned kGuardBits = 16;

struct SolverConfig {
  enum class Mode { kFixedIterations, kPlannedPrecision };

  unsigned iterations = 10;
  std::optional<unsigned> mantissa_bits;
  std::optional<std::vector<ScaledExact>> initial_guess;  // all ones if unset
  Mode mode = Mode::kPlannedPrecision;

  /// Fixed ten sweeps at double precision.
  static SolverConfig double_preset() {
    SolverConfig c;
    c.mode = Mode::kFixedIterations;
    c.mantissa_bits = BoundedFloat::kDoubleBits;
    return c;
  }

  void validate() const {
    if (iterations < 1)
      throw std::invalid_argument("SolverConfig: iterations must be >= 1");
    if (mantissa_bits && *mantissa_bits < 24)
      throw std::invalid_argument("SolverConfig: mantissa bits must be >= 24");
  }
};

namespace detail {
  inline bool is_zero(double x) { return x == 0.0; }
  inline bool is_zero(const mpq_class &x) { return sgn(x) == 0; }
  inline bool is_zero(const BoundedFloat &x) { return x.is_zero(); }
  inline double abs_of(double x) { return std::abs(x); }
  inline mpq_class abs_of(const mpq_class &x) { return abs(x); }
  inline BoundedFloat abs_of(const BoundedFloat &x) { return x.abs(); }

  template <class T>
  bool strictly_dominant(const Matrix<T> &a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      T off = a(i, i) - a(i, i);
      for (std::size_t j = 0; j < a.size(); ++j)
        if (j != i && !is_zero(a(i, j)))
          off += abs_of(a(i, j));
      if (!(off < abs_of(a(i, i))))
        return false;
    }
    return true;
  }
}  // namespace detail

template <class T>
struct GaussSeidelResult {
  std::vector<T> y;
  unsigned sweeps = 0;
  bool dominant = true;  // strict row dominance held for every row
};

/// One sweep in ascending row order, updating y in place.
template <class T>
void gauss_seidel_sweep(const Matrix<T> &a, const std::vector<T> &b,
                        std::vector<T> &y) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    T s = b[i];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && !detail::is_zero(a(i, j)))
        s -= a(i, j) * y[j];
    y[i] = s / a(i, i);
  }
}

/// K Gauss-Seidel sweeps from y0. Convergence is only promised for strictly
/// diagonally dominant matrices; the result is flagged otherwise.
template <class T>
GaussSeidelResult<T> gauss_seidel(const Matrix<T> &a, const std::vector<T> &b,
                                  unsigned iterations, std::vector<T> y0) {
  const std::size_t n = a.size();
  if (b.size() != n || y0.size() != n)
    throw std::invalid_argument("gauss_seidel: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (detail::is_zero(a(i, i)))
      throw std::domain_error("gauss_seidel: zero diagonal entry");
  GaussSeidelResult<T> r {std::move(y0), 0, detail::strictly_dominant(a)};
  for (unsigned k = 0; k < iterations; ++k) {
    gauss_seidel_sweep(a, b, r.y);
    ++r.sweeps;
  }
  return r;
}

/// Largest off-diagonal row sum relative to the diagonal; below 1 means
/// strictly dominant, at most 1/2 for stabilized matrices.
inline mpq_class dominance_ratio(const Matrix<ScaledExact> &a) {
  mpq_class worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpq_class off = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i)
        off += abs(a(i, j).to_mpq());
    const mpq_class diag = abs(a(i, i).to_mpq());
    if (sgn(diag) == 0)
      return -1;
    worst = std::max(worst, mpq_class(off / diag));
  }
  return worst;
}

/// [min_i (a_ii - R_i), max_i (a_ii + R_i)], R_i the off-diagonal row sum.
inline std::pair<mpq_class, mpq_class> gershgorin_bounds(
    const Matrix<ScaledExact> &a) {
  if (a.size() == 0)
    throw std::invalid_argument("gershgorin_bounds: empty matrix");
  std::optional<mpq_class> lo, hi;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpq_class r = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i)
        r += abs(a(i, j).to_mpq());
    const mpq_class c = a(i, i).to_mpq();
    const mpq_class l = c - r, h = c + r;
    if (!lo || l < *lo)
      lo = l;
    if (!hi || h > *hi)
      hi = h;
  }
  return {*lo, *hi};
}

inline std::pair<mpq_class, mpq_class> gershgorin_bounds(const IntMatrix &a) {
  return gershgorin_bounds(
      a.map([](const mpz_class &v) { return ScaledExact(v); }));
}

enum class SeparationSource { kProp2, kProp3 };

/// Lower bound on |a - b| for two unequal compared quantities.
struct SeparationBound {
  mpq_class delta;
  SeparationSource source;
};

namespace detail {
  inline mpz_class upow(unsigned long base, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
  }

  inline void require_positive(std::initializer_list<unsigned long> xs,
                               const char *who) {
    for (auto x: xs)
      if (x == 0)
        throw std::invalid_argument(std::string(who)
                                    + ": arguments must be positive");
  }
}  // namespace detail

/// 1 / (10^(2kN) (3(d+1))^(2n)): separation of inverse-diagonal ratios when
/// the polynomial values first differ at step k.
inline SeparationBound separation_prop2(unsigned long n, unsigned long d,
                                        unsigned long k, unsigned long N) {
  detail::require_positive({n, d, k, N}, "separation_prop2");
  mpz_class den = detail::upow(10, 2 * k * N) * detail::upow(3 * (d + 1), 2 * n);
  return {mpq_class(mpz_class(1), den), SeparationSource::kProp2};
}

/// 1 / (3^n 10^N d^2): separation of two inverse-diagonal entries of one
/// matrix that were equal before the latest perturbation.
inline SeparationBound separation_prop3(unsigned long n, unsigned long d,
                                        unsigned long N) {
  detail::require_positive({n, d, N}, "separation_prop3");
  mpz_class den = detail::upow(3, n) * detail::upow(10, N) * mpz_class(d) * d;
  return {mpq_class(mpz_class(1), den), SeparationSource::kProp3};
}

/// Decimal mantissa digits L needed so that 10^-L resolves the prop2 bound:
/// L > 2kN + 2n lg(3d+1).
inline double prop2_mantissa_digits(unsigned long n, unsigned long d,
                                    unsigned long k, unsigned long N) {
  return 2.0 * k * N + 2.0 * n * std::log10(3.0 * d + 1.0);
}

/// L > n lg 3 + 2 lg d + N.
inline double prop3_mantissa_digits(unsigned long n, unsigned long d,
                                    unsigned long N) {
  return n * std::log10(3.0) + 2.0 * std::log10(static_cast<double>(d)) + N;
}

/// Smallest e with 2^e >= q, for q > 0.
inline long ceil_log2(const mpq_class &q) {
  if (sgn(q) <= 0)
    throw std::invalid_argument("ceil_log2: argument must be positive");
  long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2))
           - static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  auto pow2 = [](long k) {
    mpq_class p(1);
    if (k >= 0)
      mpq_mul_2exp(p.get_mpq_t(), p.get_mpq_t(), k);
    else
      mpq_div_2exp(p.get_mpq_t(), p.get_mpq_t(), -k);
    return p;
  };
  while (pow2(e) < q)
    ++e;
  while (pow2(e - 1) >= q)
    --e;
  return e;
}

/// Smallest K with delta0 / 2^K < delta / 4.
inline unsigned plan_iterations(const mpq_class &delta, const mpq_class &delta0) {
  if (sgn(delta) <= 0 || sgn(delta0) <= 0)
    throw std::invalid_argument("plan_iterations: bounds must be positive");
  const mpq_class ratio = 4 * delta0 / delta;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  return sgn(q) == 0 ? 0u
                     : static_cast<unsigned>(mpz_sizeinbase(q.get_mpz_t(), 2));
}

inline unsigned plan_iterations(const SeparationBound &b, const mpq_class &delta0) {
  return plan_iterations(b.delta, delta0);
}

/// Initial error bound for A y = e_i in the max norm:
/// |y - y0| <= |y0| + 1 / min_i (a_ii - R_i).
inline mpq_class initial_error_bound(const Matrix<ScaledExact> &a,
                                     const std::vector<ScaledExact> &y0) {
  const mpq_class m = gershgorin_bounds(a).first;
  if (sgn(m) <= 0)
    throw std::domain_error("initial_error_bound: matrix is not dominant");
  mpq_class y0max = 0;
  for (const auto &v: y0)
    y0max = std::max(y0max, mpq_class(abs(v.to_mpq())));
  return y0max + 1 / m;
}

/// Bits so that rounding over K sweeps of n-term sums stays well below
/// delta: ceil(log2(1/delta)) + ceil(log2(K n)) + guard, at least 64.
inline unsigned plan_mantissa_bits(const mpq_class &delta, unsigned iterations,
                                   std::size_t n) {
  const long need = ceil_log2(1 / delta)
                    + ceil_log2(mpq_class(std::max<unsigned long>(
                        1, static_cast<unsigned long>(iterations) * n)))
                    + kGuardBits;
  return static_cast<unsigned>(std::max<long>(kMinPlannedBits, need));
}

/// Concrete (K, L) for a bounded-precision comparison at separation delta.
struct BoundedPlan {
  SeparationBound separation;
  mpq_class delta0;
  unsigned iterations;
  unsigned bits;
};

/// Plan for stabilized matrices with non-negative perturbations, whose
/// dominance margin is at least d, solved from y0 = (1, ..., 1).
inline BoundedPlan plan_bounded(std::size_t n, std::size_t d, std::size_t k,
                                unsigned N) {
  BoundedPlan p {separation_prop2(n, d, k, N), 0, 0, 0};
  p.delta0 = mpq_class(1) + mpq_class(1, static_cast<unsigned long>(d));
  p.iterations = std::max(1u, plan_iterations(p.separation, p.delta0));
  p.bits = plan_mantissa_bits(p.separation.delta, p.iterations, n);
  return p;
}

inline Matrix<BoundedFloat> to_bounded(const Matrix<ScaledExact> &a,
                                       unsigned bits) {
  Matrix<BoundedFloat> out(a.size(), BoundedFloat(bits));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!a(i, j).is_zero())
        out(i, j) = BoundedFloat(a(i, j), bits);
  return out;
}

inline std::vector<BoundedFloat> initial_vector(
    std::size_t n, unsigned bits,
    const std::optional<std::vector<ScaledExact>> &guess) {
  std::vector<BoundedFloat> y;
  y.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    y.emplace_back(guess ? BoundedFloat(guess->at(i), bits)
                         : BoundedFloat(1L, bits));
  return y;
}

inline std::vector<BoundedFloat> unit_vector(std::size_t n, std::size_t i,
                                             unsigned bits) {
  std::vector<BoundedFloat> e(n, BoundedFloat(bits));
  e.at(i) = BoundedFloat(1L, bits);
  return e;
}

/// Component i of the Gauss-Seidel solution of a y = e_i after `iterations`
/// sweeps at `bits` of mantissa.
inline BoundedFloat inverse_diagonal_entry(
    const Matrix<BoundedFloat> &a, std::size_t i, unsigned iterations,
    unsigned bits, const std::optional<std::vector<ScaledExact>> &guess = {}) {
  auto r = gauss_seidel(a, unit_vector(a.size(), i, bits), iterations,
                        initial_vector(a.size(), bits, guess));
  return r.y[i];
}

/// Same, with K and L taken from cfg (L defaults to 64 bits when unset).
inline BoundedFloat inverse_diagonal_entry(const Matrix<ScaledExact> &a,
                                           std::size_t i,
                                           const SolverConfig &cfg) {
  cfg.validate();
  const unsigned bits = cfg.mantissa_bits.value_or(kMinPlannedBits);
  return inverse_diagonal_entry(to_bounded(a, bits), i, cfg.iterations, bits,
                                cfg.initial_guess);
}

}  // namespace polyiso
