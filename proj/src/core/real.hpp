// Copyright 2026 The ptheta authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PTHETA_CORE_REAL_HPP
#define PTHETA_CORE_REAL_HPP

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

namespace ptheta {

/// Arbitrary-precision real backed by MPFR.
///
/// Every value carries its own precision. Binary operations produce their
/// result at the larger of the two operand precisions; integer and double
/// operands are exact and adopt the precision of the Real operand. This
/// makes precision flow explicit: promote the inputs of a computation once
/// and everything downstream stays at that precision.
class Real {
 public:
  static constexpr long kMinDigits = 10;

  Real() : Real(0L, kMinDigits) {}
  Real(long v, long digits10);
  Real(double v, long digits10);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  ~Real();

  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;

  /// Parses a decimal string at the given precision. Throws on garbage.
  static Real parse(std::string_view text, long digits10);

  /// Copy of `x` rounded (or padded, which is exact) to `digits10`.
  static Real at_digits(const Real& x, long digits10);

  static Real pi(long digits10);

  long precision_digits() const;
  long precision_bits() const { return mpfr_get_prec(v_); }

  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  /// -1, 0 or +1.
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Scientific-notation string with `digits10` significant digits.
  std::string str(long digits10) const;

  // In-place arithmetic rounds into this value's precision.
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real& negate();

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return cmp(a, b) != 0; }

  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  friend Real abs(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real exp(const Real& x);
  friend Real log(const Real& x);
  friend Real log1p(const Real& x);
  friend Real pow(const Real& base, long e);
  friend Real pow(const Real& base, const Real& e);
  friend Real max(const Real& a, const Real& b);
  friend Real min(const Real& a, const Real& b);

  friend void swap(Real& a, Real& b) noexcept { mpfr_swap(a.v_, b.v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  explicit Real(mpfr_prec_t bits_tag, int);  // uninitialized-at-bits constructor
  static Real make_bits(mpfr_prec_t bits);

  mpfr_t v_;
};

/// Bits needed for `digits10` decimal digits, with a small guard.
long digits_to_bits(long digits10);

}  // namespace ptheta

#endif  // PTHETA_CORE_REAL_HPP
