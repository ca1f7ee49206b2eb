//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "polyiso/scaled.hpp"

namespace polyiso {

/// Binary floating point with an explicit mantissa length. Every operation
/// rounds to nearest-even at the larger of the operand precisions.
class BoundedFloat {
 public:
  static constexpr unsigned kDoubleBits = 53;

  explicit BoundedFloat(unsigned bits = kDoubleBits) {
    check_bits(bits);
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }

  BoundedFloat(long x, unsigned bits) : BoundedFloat(bits) {
    mpfr_set_si(v_, x, MPFR_RNDN);
  }

  BoundedFloat(const mpq_class &q, unsigned bits) : BoundedFloat(bits) {
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }

  BoundedFloat(const ScaledExact &x, unsigned bits)
      : BoundedFloat(x.to_mpq(), bits) { }

  BoundedFloat(const BoundedFloat &o) : BoundedFloat(o.bits()) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  BoundedFloat(BoundedFloat &&o) noexcept : BoundedFloat(o.bits()) {
    mpfr_swap(v_, o.v_);
  }

  BoundedFloat &operator=(const BoundedFloat &o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.bits());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  BoundedFloat &operator=(BoundedFloat &&o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  ~BoundedFloat() { mpfr_clear(v_); }

  unsigned bits() const noexcept {
    return static_cast<unsigned>(mpfr_get_prec(v_));
  }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// The exact binary value.
  mpq_class to_mpq() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

  std::string to_string(int digits = 6) const {
    char *s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  BoundedFloat abs() const {
    BoundedFloat r(bits());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend BoundedFloat operator+(const BoundedFloat &a, const BoundedFloat &b) {
    return binary(a, b, mpfr_add);
  }
  friend BoundedFloat operator-(const BoundedFloat &a, const BoundedFloat &b) {
    return binary(a, b, mpfr_sub);
  }
  friend BoundedFloat operator*(const BoundedFloat &a, const BoundedFloat &b) {
    return binary(a, b, mpfr_mul);
  }
  friend BoundedFloat operator/(const BoundedFloat &a, const BoundedFloat &b) {
    return binary(a, b, mpfr_div);
  }
  BoundedFloat &operator+=(const BoundedFloat &o) { return *this = *this + o; }
  BoundedFloat &operator-=(const BoundedFloat &o) { return *this = *this - o; }
  BoundedFloat &operator*=(const BoundedFloat &o) { return *this = *this * o; }
  BoundedFloat &operator/=(const BoundedFloat &o) { return *this = *this / o; }

  friend bool operator==(const BoundedFloat &a, const BoundedFloat &b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::partial_ordering operator<=>(const BoundedFloat &a,
                                           const BoundedFloat &b) {
    if (mpfr_unordered_p(a.v_, b.v_))
      return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0   ? std::partial_ordering::less
           : c > 0 ? std::partial_ordering::greater
                   : std::partial_ordering::equivalent;
  }

  friend std::ostream &operator<<(std::ostream &os, const BoundedFloat &x) {
    return os << x.to_string();
  }

 private:
  static void check_bits(unsigned bits) {
    if (bits < 2 || bits > static_cast<unsigned>(MPFR_PREC_MAX))
      throw std::invalid_argument("BoundedFloat: unsupported precision");
  }

  template <class Op>
  static BoundedFloat binary(const BoundedFloat &a, const BoundedFloat &b,
                             Op op) {
    BoundedFloat r(std::max(a.bits(), b.bits()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

}  // namespace polyiso
