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

#include "core/psi.hpp"

#include <cmath>

#include "core/series.hpp"

namespace ptheta::psi {

namespace {

constexpr long kGuardDigits = 20;
constexpr long kHardCap = 10'000'000;

double ln_q(const Real& q) {
  double one_minus = (1 - q).to_double();
  return std::log1p(-one_minus);
}

void check_q(const Real& q, const PrecisionContext& ctx, bool flat_guard) {
  if (!(q > 0L) || !(q < 1L) || !q.is_finite())
    throw DomainError("psi: q must lie strictly inside (0, 1)");
  if (flat_guard) {
    // Flat region: psi is o((q-1)^l) for every l; past this point the
    // working digits cannot see anything but the flat tail.
    Real cut = 1 - pow(Real(10L, ctx.working_digits()),
                       -(ctx.working_digits() / 4));
    if (q >= cut)
      throw PrecisionBudgetError(
          "psi: q inside the flat region 1 - 10^(-working_digits/4)");
  }
}

}  // namespace

PsiValue eval(const Real& q, Route via, const PrecisionContext& ctx) {
  check_q(q, ctx, true);
  long d = ctx.working_digits();
  PsiValue out;
  out.q = Real::at_digits(q, d);
  out.via = via;

  if (via == Route::series) {
    // Cancellation down to exp(pi^2 / (4(q-1))).
    double lq = ln_q(q);
    long pad = static_cast<long>(9.8696044 / (-4 * lq) / 2.302585) + 8;
    long digits = d + pad + kGuardDigits;
    long threshold =
        static_cast<long>(std::ceil((0.6931472 / -lq - 1) / 2)) + 2;
    Real qh = Real::at_digits(q, digits);
    Real qsq = qh * qh;
    Real power(1L, digits);   // q^{j^2}
    Real step = qh;           // q^{2j-1} after the j-th update
    SeriesOptions opt;
    opt.internal_digits = digits;
    SeriesResult sr = sum_ratio_bounded_series(
        [&](long j, Real& t) {
          if (j == 0) {
            t = Real(1L, digits);
            return;
          }
          power *= step;
          step *= qsq;
          t = power * 2;
          if (j % 2 == 1) t.negate();
        },
        threshold > 0 ? threshold : 0, ctx, opt);
    out.psi = std::move(sr.value);
  } else {
    Real qd = Real::at_digits(q, d + kGuardDigits);
    Real qp = qd;             // q^j
    Real prod(1L, d + kGuardDigits);
    // Truncation leaves a multiplicative tail exp(-Sum 2q^k...) bounded via
    // 3 q^{J+1}/(1-q); stop once that clears the tail tolerance.
    Real stop = ctx.tail_tolerance() * (1 - qd) / 3;
    long j = 0;
    while (qp > stop) {
      prod *= (1 - qp) / (1 + qp);
      qp *= qd;
      if (++j > kHardCap)
        throw PrecisionBudgetError("psi: product truncation beyond the hard cap");
    }
    out.psi = Real::at_digits(prod, d);
  }
  return out;
}

Real log_psi(const Real& q, const PrecisionContext& ctx) {
  check_q(q, ctx, true);
  long d = ctx.working_digits() + kGuardDigits;
  Real qd = Real::at_digits(q, d);
  Real q2 = qd * qd;
  Real pp = qd;  // q^{2k+1}
  Real sum(0L, d);
  Real term(0L, d);
  // Tail of the zeta series is within q^2/(1-q^2) of the last kept term's
  // scale; stopping at tol*(1-q) keeps the total below tol.
  Real stop = ctx.tail_tolerance() * (1 - qd);
  long k = 0;
  while (true) {
    term = pp / ((2 * k + 1) * (1 - pp));
    sum += term;
    if (pp <= stop) break;
    pp *= q2;
    if (++k > kHardCap)
      throw PrecisionBudgetError("log_psi: series beyond the hard cap");
  }
  sum *= -2;
  return Real::at_digits(sum, ctx.working_digits());
}

namespace {

// Shared alternating-series core for lambda_s (j from 2s) and chi_s
// (exponents shifted by -2s^2): terms (-1)^j p^{j^2 + 4 j s0} with p = sqrt q.
Real alternating_half_power_series(const Real& q, long j0, long shift4s,
                                   const PrecisionContext& ctx) {
  long d = ctx.working_digits() + kGuardDigits;
  Real p = sqrt(Real::at_digits(q, d));
  Real p2 = p * p;
  // exponent(j) = j^2 + shift4s*j, increments by 2j+1+shift4s
  Real power = pow(p, j0 * j0 + shift4s * j0);
  Real step = pow(p, 2 * j0 + 1 + shift4s);
  double lp = ln_q(q) / 2;
  double need = (0.6931472 / -lp - 1 - shift4s) / 2 - j0;
  long threshold = need > 0 ? static_cast<long>(need) + 2 : 0;
  SeriesOptions opt;
  opt.internal_digits = d;
  SeriesResult sr = sum_ratio_bounded_series(
      [&](long k, Real& t) {
        if (k > 0) {
          power *= step;
          step *= p2;
        }
        t = power;
        if ((j0 + k) % 2 == 1) t.negate();
      },
      threshold, ctx, opt);
  return sr.value;
}

}  // namespace

Real lambda_s(const Real& q, int s, const PrecisionContext& ctx) {
  check_q(q, ctx, false);
  if (s < 1) throw InvalidInputError("lambda_s: s must be >= 1");
  // sum_{j>=2s} (-1)^j q^{j^2/2}: p-exponent j^2 with p = sqrt q.
  return alternating_half_power_series(q, 2L * s, 0, ctx);
}

Real chi_s(const Real& q, int s, const PrecisionContext& ctx) {
  check_q(q, ctx, false);
  if (s < 1) throw InvalidInputError("chi_s: s must be >= 1");
  // sum_{j>=0} (-1)^j q^{(j^2+4js)/2}: p-exponent j^2 + 4sj.
  return alternating_half_power_series(q, 0, 4L * s, ctx);
}

Real zeta_k(const Real& q, long k, const PrecisionContext& ctx) {
  check_q(q, ctx, false);
  if (k < 0) throw InvalidInputError("zeta_k: k must be >= 0");
  long d = ctx.working_digits() + kGuardDigits;
  Real qd = Real::at_digits(q, d);
  Real pk = pow(qd, 2 * k + 1);
  Real v = pk * (1 - qd) / ((2 * k + 1) * (1 - pk));
  return Real::at_digits(v, ctx.working_digits());
}

Real h_series(const Real& q, const PrecisionContext& ctx) {
  check_q(q, ctx, false);
  long d = ctx.working_digits() + kGuardDigits;
  Real qd = Real::at_digits(q, d);
  Real qp = qd;  // q^{k+1}
  Real sum(0L, d);
  Real one_minus = 1 - qd;
  const Real& tol = ctx.tail_tolerance();
  long k = 0;
  while (true) {
    sum += qp * 2 / ((2 * k + 1) * (2 * k + 1));
    // ratio <= q, so tail <= next/(1-q)
    Real bound = qp * qd * 2 / ((2 * k + 3) * (2 * k + 3));
    if (bound <= tol * one_minus) break;
    qp *= qd;
    if (++k > kHardCap)
      throw PrecisionBudgetError("h_series: beyond the hard cap");
  }
  return Real::at_digits(sum, ctx.working_digits());
}

Real h2_series(const Real& q, const PrecisionContext& ctx) {
  check_q(q, ctx, false);
  long d = ctx.working_digits() + kGuardDigits;
  Real qd = Real::at_digits(q, d);
  Real qp = qd;
  Real sum(0L, d);
  Real one_minus = 1 - qd;
  const Real& tol = ctx.tail_tolerance();
  long k = 0;
  while (true) {
    sum += qp * 2 / ((2 * k + 1) * (2 * k + 1) * (2 * k + 2));
    Real bound = qp * qd * 2 / ((2 * k + 3) * (2 * k + 3) * (2 * k + 4));
    if (bound <= tol * one_minus) break;
    qp *= qd;
    if (++k > kHardCap)
      throw PrecisionBudgetError("h2_series: beyond the hard cap");
  }
  return Real::at_digits(sum, ctx.working_digits());
}

TauBundle tau_bundle(const Real& q, const PrecisionContext& ctx) {
  check_q(q, ctx, true);
  long d = ctx.working_digits();
  long wide = d + kGuardDigits;
  Real qd = Real::at_digits(q, wide);

  TauBundle out;
  out.q = Real::at_digits(q, d);
  out.tau = Real::at_digits((qd - 1) * Real::at_digits(log_psi(q, ctx), wide), d);
  out.h = h_series(q, ctx);

  Real rq = sqrt(qd);
  Real h1 = (1 + rq) * log(1 + rq) + (1 - rq) * log(1 - rq);
  out.h1 = Real::at_digits(h1, d);
  out.h2 = Real::at_digits(Real::at_digits(out.h, wide) - h1, d);

  Real pi = Real::pi(wide);
  Real one_minus = 1 - qd;
  Real K = (pi * pi / 4 + one_minus * log(one_minus) / 2 -
            Real::at_digits(out.tau, wide)) /
           one_minus;
  out.K_est = Real::at_digits(K, d);
  return out;
}

}  // namespace ptheta::psi
