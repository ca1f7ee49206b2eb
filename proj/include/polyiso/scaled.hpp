//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polyiso {

inline mpz_class pow10(unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

/// Exact decimal p / 10^e.
///
/// The value is kept canonical: either e == 0 or p is not divisible by 10.
/// Only factors of ten are stripped, so e always reads as "decimal places".
class ScaledExact {
 public:
  ScaledExact() = default;
  ScaledExact(long v): mantissa_(v) { }  // NOLINT: implicit from integers
  ScaledExact(int v): mantissa_(v) { }   // NOLINT
  explicit ScaledExact(mpz_class mantissa, unsigned scale = 0)
      : mantissa_(std::move(mantissa)), scale_(scale) {
    normalize();
  }

  /// Parses "61.5", "-0.001", "7".
  static ScaledExact parse(std::string_view s) {
    if (s.empty())
      throw std::invalid_argument("ScaledExact: empty string");
    std::string digits;
    unsigned scale = 0;
    bool seen_point = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      if (s[0] == '-')
        digits.push_back('-');
      i = 1;
    }
    bool any_digit = false;
    for (; i < s.size(); ++i) {
      const char c = s[i];
      if (c == '.' && !seen_point) {
        seen_point = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
        any_digit = true;
        if (seen_point)
          ++scale;
      } else {
        throw std::invalid_argument("ScaledExact: bad decimal '"
                                    + std::string(s) + "'");
      }
    }
    if (!any_digit)
      throw std::invalid_argument("ScaledExact: bad decimal '" + std::string(s)
                                  + "'");
    return ScaledExact(mpz_class(digits, 10), scale);
  }

  const mpz_class &mantissa() const noexcept { return mantissa_; }
  unsigned scale() const noexcept { return scale_; }
  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return mantissa_ == 0; }

  /// Mantissa expressed at a scale of at least scale().
  mpz_class mantissa_at(unsigned scale) const {
    if (scale < scale_)
      throw std::invalid_argument("ScaledExact: cannot lower scale exactly");
    return mantissa_ * pow10(scale - scale_);
  }

  mpq_class to_mpq() const {
    mpq_class q(mantissa_, pow10(scale_));
    q.canonicalize();
    return q;
  }

  double to_double() const { return to_mpq().get_d(); }

  std::string to_string() const {
    std::string digits = mpz_class(abs(mantissa_)).get_str();
    if (scale_ > 0) {
      if (digits.size() <= scale_)
        digits.insert(0, scale_ - digits.size() + 1, '0');
      digits.insert(digits.size() - scale_, ".");
    }
    return mantissa_ < 0 ? "-" + digits : digits;
  }

  ScaledExact operator-() const { return ScaledExact(-mantissa_, scale_); }

  friend ScaledExact operator+(const ScaledExact &a, const ScaledExact &b) {
    const unsigned s = std::max(a.scale_, b.scale_);
    return ScaledExact(a.mantissa_at(s) + b.mantissa_at(s), s);
  }
  friend ScaledExact operator-(const ScaledExact &a, const ScaledExact &b) {
    return a + (-b);
  }
  friend ScaledExact operator*(const ScaledExact &a, const ScaledExact &b) {
    return ScaledExact(a.mantissa_ * b.mantissa_, a.scale_ + b.scale_);
  }
  ScaledExact &operator+=(const ScaledExact &o) { return *this = *this + o; }
  ScaledExact &operator-=(const ScaledExact &o) { return *this = *this - o; }
  ScaledExact &operator*=(const ScaledExact &o) { return *this = *this * o; }

  // Canonical form makes structural equality value equality.
  friend bool operator==(const ScaledExact &a, const ScaledExact &b) {
    return a.scale_ == b.scale_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const ScaledExact &a,
                                          const ScaledExact &b) {
    const unsigned s = std::max(a.scale_, b.scale_);
    const int c = cmp(a.mantissa_at(s), b.mantissa_at(s));
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream &operator<<(std::ostream &os, const ScaledExact &v) {
    return os << v.to_string();
  }

 private:
  void normalize() {
    if (mantissa_ == 0) {
      scale_ = 0;
      return;
    }
    while (scale_ > 0 && mpz_divisible_ui_p(mantissa_.get_mpz_t(), 10)) {
      mantissa_ /= 10;
      --scale_;
    }
  }

  mpz_class mantissa_ = 0;
  unsigned scale_ = 0;
};

}  // namespace polyiso
