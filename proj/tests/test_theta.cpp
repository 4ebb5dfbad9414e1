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

#include <cmath>

#include "core/theta.hpp"
#include "doctest.h"

using namespace ptheta;
using theta::Query;

namespace {

const PrecisionContext& ctx() {
  static PrecisionContext c = PrecisionContext::make();
  return c;
}

Real tol_pow(long e) { return pow(Real(10L, 60), e); }

// Brute-force oracle: direct partial sum at 80 digits, term count fixed by
// the caller.
Real theta_brute(double q, double x, long terms) {
  Real qr(q, 80), xr(x, 80);
  Real sum(0L, 80);
  for (long j = 0; j < terms; ++j)
    sum += pow(qr, j * (j + 1) / 2) * pow(xr, j);
  return sum;
}

}  // namespace

TEST_CASE("query validation") {
  CHECK_THROWS_AS(Query(Real(0L, 60), Real(1L, 60)), DomainError);
  CHECK_THROWS_AS(Query(Real(1L, 60), Real(1L, 60)), DomainError);
  CHECK_THROWS_AS(Query(Real(-0.5, 60), Real(1L, 60)), DomainError);
  CHECK_NOTHROW(Query(Real(0.5, 60), Real(-1e9, 60)));
}

TEST_CASE("eval: only the j=0 term survives at x = 0") {
  SeriesResult r = theta::eval(Query(Real(0.5, 60), Real(0L, 60)), ctx());
  CHECK(r.value == Real(1L, 60));
  CHECK(r.tail_bound.is_zero());
  CHECK(r.terms_used >= 1);
}

TEST_CASE("eval at (0.5, -1): brute-force oracle, 60 terms") {
  SeriesResult r = theta::eval(Query(Real(0.5, 60), Real(-1L, 60)), ctx());
  CHECK(abs(r.value - theta_brute(0.5, -1, 60)) <= ctx().tail_tolerance() * 2);
  // Frozen from the same oracle at 50 digits.
  CHECK(abs(r.value - Real::parse("0.610321518048266425924048782091", 60)) <
        tol_pow(-29));
  CHECK(r.tail_bound <= ctx().tail_tolerance());
}

TEST_CASE("eval near the first double zero") {
  // Reference pair printed with 11 digits; theta vanishes there to ~1e-13.
  SeriesResult r = theta::eval(
      Query(Real::parse("0.3092493386", 60), Real::parse("-7.5032559833", 60)),
      ctx());
  CHECK(abs(r.value) < tol_pow(-8));
}

TEST_CASE("eval handles exp-large cancellation (q = 0.999, x = -20)") {
  SeriesResult r = theta::eval(Query(Real(0.999, 60), Real(-20L, 60)), ctx());
  // Katsnelson limit says theta -> 1/21 = 0.047619... as q -> 1.
  CHECK(abs(r.value - Real(1L, 60) / 21) < Real(0.01, 60));
}

TEST_CASE("eval_dx: coefficient of x at x=0 is q") {
  SeriesResult r = theta::eval_dx(Query(Real(0.5, 60), Real(0L, 60)), ctx());
  CHECK(abs(r.value - Real(0.5, 60)) <= ctx().tail_tolerance());
  // The x^0 coefficient of theta_xx is 2q^3.
  SeriesResult r2 = theta::eval_dxx(Query(Real(0.5, 60), Real(0L, 60)), ctx());
  CHECK(abs(r2.value - Real(0.25, 60)) <= ctx().tail_tolerance());
}

TEST_CASE("eval_dx at (0.3, -2): finite-difference oracle") {
  Query at(Real(0.3, 60), Real(-2L, 60));
  SeriesResult dx = theta::eval_dx(at, ctx());
  Real h = tol_pow(-10);
  Real fd = (theta::eval(Query(at.q, at.x + h), ctx()).value -
             theta::eval(Query(at.q, at.x - h), ctx()).value) /
            (h * 2);
  CHECK(abs(fd - dx.value) / abs(dx.value) < tol_pow(-12));
  CHECK(abs(dx.value - Real::parse("0.200560189105196911635882355831", 60)) <
        tol_pow(-29));
  SeriesResult dxx = theta::eval_dxx(at, ctx());
  CHECK(abs(dxx.value - Real::parse("0.0455331443927754344459996020705", 60)) <
        tol_pow(-29));
}

TEST_CASE("eval_dx vanishes at the frozen double zero") {
  Real q = Real::parse("0.3092493386000774800274833877710685919339", 60);
  Real y = Real::parse("-7.503255964244192365654314568089253783948", 60);
  CHECK(abs(theta::eval_dx(Query(q, y), ctx()).value) < tol_pow(-8));
  CHECK(abs(theta::eval(Query(q, y), ctx()).value) < tol_pow(-8));
  CHECK(theta::eval_dxx(Query(q, y), ctx()).value > 0L);
}

TEST_CASE("functional equation residual") {
  // (0.5, 0): both sides are exactly 1.
  Real r0 = theta::functional_equation_residual(Query(Real(0.5, 60), Real(0L, 60)), ctx());
  CHECK(r0.is_zero());
  Real r1 = theta::functional_equation_residual(Query(Real(0.7, 60), Real(-5L, 60)), ctx());
  CHECK(r1 <= ctx().tail_tolerance() * 3);
  Real r2 = theta::functional_equation_residual(Query(Real(0.95, 60), Real(10L, 60)), ctx());
  CHECK(r2 <= ctx().tail_tolerance() * 3);
}

TEST_CASE("real_zeros at q = 0.2") {
  Real q(0.2, 60);
  auto zeros = theta::real_zeros(q, 4, ctx());
  REQUIRE(zeros.size() == 4);
  for (const auto& z : zeros) {
    CHECK(z.status == theta::ZeroStatus::resolved);
    CHECK(z.location < 0L);
    CHECK(z.location > z.bracket_lo);
    CHECK(z.location < z.bracket_hi);
    CHECK(z.residual <= ctx().tail_tolerance() * 10);
  }
  // xi_1 in (-q^{-3/2}, -q^{-1}) = (-11.1803..., -5)
  CHECK(zeros[0].location > Real(-11.180339887498949, 60));
  CHECK(zeros[0].location < Real(-5L, 60));
  // strict ordering xi_4 < xi_3 < xi_2 < xi_1 < 0
  CHECK(zeros[1].location < zeros[0].location);
  CHECK(zeros[2].location < zeros[1].location);
  CHECK(zeros[3].location < zeros[2].location);

  // Oracle: double-precision sign scan of the partial sum over the xi_1
  // bracket, step 1e-3.
  auto theta_d = [](double qd, double xd) {
    double s = 0, term = 1, p = 1;
    for (int j = 0; j < 200; ++j) {
      s += term;
      p *= qd;
      term *= p * xd;
    }
    return s;
  };
  double lo = 0, hi = 0, prev = theta_d(0.2, -11.18);
  for (double xd = -11.18 + 1e-3; xd < -5; xd += 1e-3) {
    double cur = theta_d(0.2, xd);
    if ((prev > 0) != (cur > 0)) {
      lo = xd - 1e-3;
      hi = xd;
      break;
    }
    prev = cur;
  }
  REQUIRE(hi != 0);
  CHECK(zeros[0].location.to_double() >= lo);
  CHECK(zeros[0].location.to_double() <= hi);
}

TEST_CASE("real_zeros near the first spectral value") {
  // At q = 0.3092493386 (11 digits) the rightmost pair is still real,
  // separated by ~7.5e-6.
  Real q = Real::parse("0.3092493386", 60);
  auto zeros = theta::real_zeros(q, 2, ctx());
  REQUIRE(zeros.size() == 2);
  CHECK(zeros[0].status == theta::ZeroStatus::resolved);
  CHECK(zeros[1].status == theta::ZeroStatus::resolved);
  CHECK(abs(zeros[0].location - zeros[1].location) < tol_pow(-4));
  // Frozen oracle locations.
  CHECK(abs(zeros[0].location - Real::parse("-7.503252208552744994375937", 60)) <
        tol_pow(-20));
  CHECK(abs(zeros[1].location - Real::parse("-7.503259719941698014785869", 60)) <
        tol_pow(-20));
}

TEST_CASE("real_zeros reports complex pairs per index") {
  // q = 0.4 lies above the first spectral value: the rightmost pair is
  // complex, the next ones are real.
  Real q(0.4, 60);
  auto zeros = theta::real_zeros(q, 4, ctx());
  REQUIRE(zeros.size() == 4);
  CHECK(zeros[0].status == theta::ZeroStatus::missing_sign_change);
  CHECK(zeros[1].status == theta::ZeroStatus::missing_sign_change);
  CHECK(zeros[2].status == theta::ZeroStatus::resolved);
  CHECK(zeros[3].status == theta::ZeroStatus::resolved);
}

TEST_CASE("critical_points at q = 0.2: sign pattern") {
  Real q(0.2, 60);
  auto crits = theta::critical_points(q, 1, ctx());
  REQUIRE(crits.size() == 2);
  CHECK(crits[0].kind == theta::CritKind::minimum);
  CHECK(crits[0].found);
  CHECK(crits[0].theta_value < 0L);
  CHECK(crits[1].kind == theta::CritKind::maximum);
  CHECK(crits[1].found);
  CHECK(crits[1].theta_value > 0L);
}

TEST_CASE("critical_points at q = 0.25: lemma-1 recursion") {
  Real q(0.25, 60);
  auto crits = theta::critical_points(q, 2, ctx());
  REQUIRE(crits.size() == 4);
  const Real& t1 = crits[0].location;
  const Real& w1 = crits[1].location;
  const Real& t2 = crits[2].location;
  CHECK(t2 <= w1 / q);
  CHECK(w1 <= t1 / q);
}

TEST_CASE("critical_points at q = 0.3 match a golden-section oracle") {
  // Oracle: golden-section minimization of theta (maximization for w_s) on
  // the same power-of-q bracket, run to a 1e-35 width. Agreement is limited
  // by the flatness of theta at the extremum, not by the bracket width.
  Real q(0.3, 60);
  auto crits = theta::critical_points(q, 3, ctx());
  REQUIRE(crits.size() == 6);
  Real invphi = (sqrt(Real(5L, 60)) - 1) / 2;
  auto golden = [&](Real a, Real b, int sign) {
    Real c = b - (b - a) * invphi;
    Real d = a + (b - a) * invphi;
    Real fc = theta::eval(Query(q, c), ctx()).value * sign;
    Real fd = theta::eval(Query(q, d), ctx()).value * sign;
    Real stop = pow(Real(10L, 60), -35);
    while (b - a > stop) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - (b - a) * invphi;
        fc = theta::eval(Query(q, c), ctx()).value * sign;
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + (b - a) * invphi;
        fd = theta::eval(Query(q, d), ctx()).value * sign;
      }
    }
    return a + (b - a) / 2;
  };
  for (int s = 1; s <= 3; ++s) {
    const auto& t = crits[static_cast<size_t>(2 * (s - 1))];
    Real a = -pow(q, -2 * s);
    Real b = -pow(q, -(2 * s - 1));
    CHECK(abs(t.location - golden(a, b, 1)) < tol_pow(-14));
    const auto& w = crits[static_cast<size_t>(2 * (s - 1) + 1)];
    Real a2 = -pow(q, -(2 * s + 1));
    CHECK(abs(w.location - golden(a2, a, -1)) < tol_pow(-14));
  }
}

TEST_CASE("product over zeros") {
  Real q(0.2, 60);
  auto zeros = theta::real_zeros(q, 8, ctx());
  // x = 0: empty-product behavior
  CHECK(theta::product_eval(q, Real(0L, 60), zeros, ctx()) == Real(1L, 60));
  // x = xi_1: one factor vanishes exactly
  CHECK(theta::product_eval(q, zeros[0].location, zeros, ctx()).is_zero());
  // x = -1: truncation-dominated agreement with the series
  Real p = theta::product_eval(q, Real(-1L, 60), zeros, ctx());
  Real series = theta::eval(Query(q, Real(-1L, 60)), ctx()).value;
  CHECK(abs(p - series) / series < tol_pow(-4));
}

TEST_CASE("positivity for x >= 0 and the negative-power window") {
  Real q(0.3, 60);
  for (double x : {0.0, 1.0, 7.5, 33.0})
    CHECK(theta::eval(Query(q, Real(x, 60)), ctx()).value > 0L);
  for (int s = 1; s <= 5; ++s) {
    Real x = -pow(q, -s);
    Real v = theta::eval(Query(q, x), ctx()).value;
    CHECK(v > 0L);
    CHECK(v < pow(q, s));
  }
}
