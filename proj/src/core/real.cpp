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

#include "core/real.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace ptheta {

long digits_to_bits(long digits10) {
  if (digits10 < Real::kMinDigits) digits10 = Real::kMinDigits;
  // log2(10) = 3.3219...; +8 guard bits
  return static_cast<long>(digits10 * 3.3220) + 8;
}

Real::Real(mpfr_prec_t bits, int) { mpfr_init2(v_, bits); }

Real Real::make_bits(mpfr_prec_t bits) { return Real(bits, 0); }

Real::Real(long v, long digits10) {
  mpfr_init2(v_, digits_to_bits(digits10));
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v, long digits10) {
  mpfr_init2(v_, digits_to_bits(digits10));
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real::~Real() { mpfr_clear(v_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real Real::parse(std::string_view text, long digits10) {
  Real r = make_bits(digits_to_bits(digits10));
  std::string buf(text);
  char* end = nullptr;
  int rc = mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN);
  (void)rc;
  if (end == buf.c_str() || *end != '\0')
    throw std::invalid_argument("Real::parse: not a decimal number: '" + buf + "'");
  return r;
}

Real Real::at_digits(const Real& x, long digits10) {
  Real r = make_bits(digits_to_bits(digits10));
  mpfr_set(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real Real::pi(long digits10) {
  Real r = make_bits(digits_to_bits(digits10));
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

long Real::precision_digits() const {
  return static_cast<long>((mpfr_get_prec(v_) - 8) / 3.3220);
}

std::string Real::str(long digits10) const {
  if (digits10 < 1) digits10 = 1;
  char* s = nullptr;
  int n = mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits10 - 1), v_);
  if (n < 0 || s == nullptr) throw std::runtime_error("Real::str: mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real& Real::operator+=(const Real& rhs) { mpfr_add(v_, v_, rhs.v_, MPFR_RNDN); return *this; }
Real& Real::operator-=(const Real& rhs) { mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN); return *this; }
Real& Real::operator*=(const Real& rhs) { mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN); return *this; }
Real& Real::operator/=(const Real& rhs) { mpfr_div(v_, v_, rhs.v_, MPFR_RNDN); return *this; }
Real& Real::operator*=(long rhs) { mpfr_mul_si(v_, v_, rhs, MPFR_RNDN); return *this; }
Real& Real::operator/=(long rhs) { mpfr_div_si(v_, v_, rhs, MPFR_RNDN); return *this; }
Real& Real::negate() { mpfr_neg(v_, v_, MPFR_RNDN); return *this; }

namespace {
inline mpfr_prec_t join(const Real& a, const Real& b) {
  mpfr_prec_t pa = mpfr_get_prec(a.raw()), pb = mpfr_get_prec(b.raw());
  return pa > pb ? pa : pb;
}
}  // namespace

#define PTHETA_BINOP(op, fn)                                  \
  Real operator op(const Real& a, const Real& b) {            \
    Real r = Real::make_bits(join(a, b));                     \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                 \
    return r;                                                 \
  }

PTHETA_BINOP(+, mpfr_add)
PTHETA_BINOP(-, mpfr_sub)
PTHETA_BINOP(*, mpfr_mul)
PTHETA_BINOP(/, mpfr_div)
#undef PTHETA_BINOP

Real operator-(const Real& a) {
  Real r = Real::make_bits(mpfr_get_prec(a.v_));
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r = Real::make_bits(mpfr_get_prec(a.v_));
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r = Real::make_bits(mpfr_get_prec(a.v_));
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r = Real::make_bits(mpfr_get_prec(b.v_));
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r = Real::make_bits(mpfr_get_prec(a.v_));
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r = Real::make_bits(mpfr_get_prec(a.v_));
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r = Real::make_bits(mpfr_get_prec(b.v_));
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

#define PTHETA_UNFN(name, fn)                       \
  Real name(const Real& x) {                        \
    Real r = Real::make_bits(mpfr_get_prec(x.raw())); \
    fn(r.raw(), x.raw(), MPFR_RNDN);                \
    return r;                                       \
  }

PTHETA_UNFN(abs, mpfr_abs)
PTHETA_UNFN(sqrt, mpfr_sqrt)
PTHETA_UNFN(exp, mpfr_exp)
PTHETA_UNFN(log, mpfr_log)
PTHETA_UNFN(log1p, mpfr_log1p)
#undef PTHETA_UNFN

Real pow(const Real& base, long e) {
  Real r = Real::make_bits(mpfr_get_prec(base.v_));
  mpfr_pow_si(r.v_, base.v_, e, MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& e) {
  Real r = Real::make_bits(join(base, e));
  mpfr_pow(r.v_, base.v_, e.v_, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

}  // namespace ptheta
