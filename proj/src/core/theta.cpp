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

#include "core/theta.hpp"

#include <cmath>
#include <utility>

#include "core/roots.hpp"
#include "core/series.hpp"

namespace ptheta::theta {

namespace {

constexpr long kGuardDigits = 30;
constexpr long kMaxPadDigits = 300'000;

// ln|x| overestimated from the binary exponent (exact mantissa irrelevant
// for padding and threshold estimates).
double ln_abs_upper(const Real& x) {
  if (x.is_zero()) return -1e300;
  return static_cast<double>(mpfr_get_exp(x.raw())) * 0.6931471805599453;
}

// ln q as a (negative) double, robust for q within double-noise of 1.
double ln_q(const Real& q) {
  double one_minus = (1 - q).to_double();
  return std::log1p(-one_minus);
}

// Decimal digits of cancellation: peak term of q^{j(j+1)/2} x^j is
// exp(max_j [j(j+1)/2 ln q + j ln|x|]).
long cancellation_pad_digits(const Real& q, const Real& x) {
  double lx = ln_abs_upper(x);
  if (lx <= 0) return 0;
  double lq = ln_q(q);
  double jstar = -lx / lq - 0.5;
  if (jstar <= 0) return 0;
  double peak = jstar * (jstar + 1) / 2 * lq + jstar * lx;
  if (peak <= 0) return 0;
  long pad = static_cast<long>(peak / 2.302585092994046) + 4;
  if (pad > kMaxPadDigits)
    throw PrecisionBudgetError(
        "theta: cancellation exceeds the precision budget (q too close to 1 "
        "for this x)");
  return pad;
}

// Smallest N with q^{N+1} |x| <= 1/mult; the term ratio of the series and
// its derivatives is then <= 1/2 from index N on.
long ratio_threshold(const Real& q, const Real& x, double mult, long hard_cap) {
  double lx = ln_abs_upper(x);
  double target = std::log(mult) + lx;
  if (target <= 0) return 0;
  double lq = ln_q(q);
  double n = target / (-lq);
  if (n > static_cast<double>(hard_cap))
    throw PrecisionBudgetError("theta: term-ratio threshold beyond the hard cap");
  return static_cast<long>(n) + 2;
}

// Stateful generators for theta and its first two x-derivatives. The series
// engine calls them with consecutive j starting at 0.
class ThetaTerms {
 public:
  ThetaTerms(const Real& q, const Real& x, int deriv, long digits)
      : deriv_(deriv),
        q_(Real::at_digits(q, digits)),
        x_(Real::at_digits(x, digits)),
        p_(1L, digits),
        base_(1L, digits) {
    if (deriv_ == 1) {
      p_ = q_;          // q^{k+1} tracker
      base_ = q_;       // q^{(k+1)(k+2)/2} x^k at k=0
    } else if (deriv_ == 2) {
      p_ = q_ * q_;     // q^{k+2} tracker
      base_ = pow(q_, 3L);
    }
  }

  void operator()(long j, Real& out) {
    if (j == 0) {
      out = deriv_ == 0 ? base_ : (deriv_ == 1 ? base_ : base_ * 2);
      return;
    }
    p_ *= q_;
    base_ *= p_;
    base_ *= x_;
    switch (deriv_) {
      case 0:
        out = base_;
        break;
      case 1:
        out = base_ * (j + 1);
        break;
      default:
        out = base_ * ((j + 2) * (j + 1));
        break;
    }
  }

 private:
  int deriv_;
  Real q_, x_, p_, base_;
};

SeriesResult eval_deriv(const Real& q, const Real& x, int deriv,
                        const PrecisionContext& ctx, long extra_digits,
                        const Real* tail_tol_override) {
  const double mult[3] = {2.0, 4.0, 6.0};
  SeriesOptions opt;
  opt.internal_digits =
      ctx.working_digits() + cancellation_pad_digits(q, x) + kGuardDigits +
      extra_digits;
  long threshold = ratio_threshold(q, x, mult[deriv], opt.hard_cap);
  ThetaTerms gen(q, x, deriv, opt.internal_digits);
  PrecisionContext local =
      tail_tol_override ? ctx.with_tail_tolerance(*tail_tol_override) : ctx;
  return sum_ratio_bounded_series(
      [&gen](long j, Real& out) { gen(j, out); }, threshold, local, opt);
}

void check_query(const Real& q) {
  if (!(q > 0L) || !(q < 1L) || !q.is_finite())
    throw DomainError("theta: q must lie strictly inside (0, 1)");
}

}  // namespace

Query::Query(Real q_in, Real x_in) : q(std::move(q_in)), x(std::move(x_in)) {
  check_query(q);
  if (!x.is_finite()) throw DomainError("theta: x must be finite");
}

SeriesResult eval(const Query& query, const PrecisionContext& ctx) {
  return eval_deriv(query.q, query.x, 0, ctx, 0, nullptr);
}

SeriesResult eval_dx(const Query& query, const PrecisionContext& ctx) {
  return eval_deriv(query.q, query.x, 1, ctx, 0, nullptr);
}

SeriesResult eval_dxx(const Query& query, const PrecisionContext& ctx) {
  return eval_deriv(query.q, query.x, 2, ctx, 0, nullptr);
}

Real functional_equation_residual(const Query& query,
                                  const PrecisionContext& ctx) {
  const Real& q = query.q;
  const Real& x = query.x;
  long digits = ctx.working_digits();
  // Shared padded precision: both sides can be exp-large while their
  // difference sits at the tail tolerance.
  long pad = cancellation_pad_digits(q, x) + kGuardDigits;

  // Tighten the right-hand tail by the |q x| factor it gets multiplied by.
  Real scale = max(Real(1L, digits), abs(q * x));
  Real rhs_tol = ctx.tail_tolerance() / (scale * 2);
  Real lhs_tol = ctx.tail_tolerance() / 2;

  SeriesResult lhs = eval_deriv(q, x, 0, ctx, pad, &lhs_tol);
  SeriesResult rhs = eval_deriv(q, q * x, 0, ctx, pad, &rhs_tol);

  long wide = digits + pad;
  Real r = Real::at_digits(lhs.value, wide);
  r -= 1;
  r -= Real::at_digits(q, wide) * Real::at_digits(x, wide) *
       Real::at_digits(rhs.value, wide);
  return Real::at_digits(abs(r), digits);
}

CriticalSolve locate_critical(const Real& q, int s, CritKind kind,
                              const PrecisionContext& ctx, const Real* warm,
                              const Real& f_target) {
  check_query(q);
  if (s < 1) throw InvalidInputError("locate_critical: index must be >= 1");
  long d = ctx.working_digits();
  // Minimum t_s lives in (-q^{-2s}, -q^{-2s+1}); maximum w_s one power lower.
  long hi_pow = kind == CritKind::minimum ? 2 * s : 2 * s + 1;
  Real a = -pow(Real::at_digits(q, d), -hi_pow);
  Real b = -pow(Real::at_digits(q, d), -(hi_pow - 1));

  // The dtheta/dx samples must resolve below f_target, so their truncation
  // granularity gets two orders of headroom.
  PrecisionContext dctx =
      ctx.with_tail_tolerance(min(ctx.tail_tolerance() / 100, f_target / 4));
  auto fdx = [&](const Real& v) { return eval_dx(Query(q, v), dctx).value; };
  auto fdxx = [&](const Real& v) { return eval_dxx(Query(q, v), ctx).value; };

  Real x(0L, d);
  bool have_start = false;
  if (warm != nullptr && *warm > a && *warm < b) {
    // Try pure Newton from the warm start first.
    Real cand = newton_polish(fdx, fdxx, *warm, a, b, f_target, 40);
    if (abs(fdx(cand)) <= f_target) {
      x = std::move(cand);
      have_start = true;
    }
  }
  if (!have_start) {
    Real fa = fdx(a);
    Real fb = fdx(b);
    int want = kind == CritKind::minimum ? -1 : 1;
    if (fa.sign() != want || fb.sign() != -want)
      throw BracketError("locate_critical: no sign change of dtheta/dx in the "
                         "power bracket (critical point absent at this q)");
    // Bisect to a modest width, then let Newton take over.
    Real coarse = abs(b - a) / 1000;
    Real start = bracket_root_width(fdx, a, b, coarse);
    x = newton_polish(fdx, fdxx, start, a, b, f_target, 60);
  }

  CriticalSolve out;
  out.theta_value = eval(Query(q, x), ctx).value;
  out.d2_value = fdxx(x);
  out.location = std::move(x);
  return out;
}

std::vector<CriticalPointRecord> critical_points(const Real& q, int s_max,
                                                 const PrecisionContext& ctx) {
  check_query(q);
  if (s_max < 1) throw InvalidInputError("critical_points: s_max must be >= 1");
  Real f_target = ctx.tail_tolerance() / 2;
  std::vector<CriticalPointRecord> out;
  out.reserve(2 * static_cast<size_t>(s_max));
  for (int s = 1; s <= s_max; ++s) {
    for (CritKind kind : {CritKind::minimum, CritKind::maximum}) {
      CriticalPointRecord rec;
      rec.index = s;
      rec.kind = kind;
      try {
        CriticalSolve sol = locate_critical(q, s, kind, ctx, nullptr, f_target);
        int want = kind == CritKind::minimum ? 1 : -1;
        rec.found = sol.d2_value.sign() == want;
        rec.location = std::move(sol.location);
        rec.theta_value = std::move(sol.theta_value);
      } catch (const BracketError&) {
        rec.found = false;
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

namespace {

ZeroRecord make_zero(int index, ZeroStatus status, Real loc, Real lo, Real hi,
                     Real resid) {
  ZeroRecord r;
  r.index = index;
  r.status = status;
  r.location = std::move(loc);
  r.bracket_lo = std::move(lo);
  r.bracket_hi = std::move(hi);
  r.residual = std::move(resid);
  return r;
}

}  // namespace

std::vector<ZeroRecord> real_zeros(const Real& q, int count,
                                   const PrecisionContext& ctx) {
  check_query(q);
  if (count < 1) throw InvalidInputError("real_zeros: count must be >= 1");
  long d = ctx.working_digits();
  Real qd = Real::at_digits(q, d);
  Real coalesce_cut = ctx.tail_tolerance() * 10;
  Real f_target = ctx.tail_tolerance() / 2;

  auto f = [&](const Real& v) { return eval(Query(q, v), ctx).value; };
  auto fdx = [&](const Real& v) { return eval_dx(Query(q, v), ctx).value; };

  std::vector<ZeroRecord> out;
  out.reserve(static_cast<size_t>(count));

  for (int s = 1; 2 * s - 1 <= count; ++s) {
    // Pair bracket: xi_{2s} in (-q^{-2s}, u_s), xi_{2s-1} in (u_s, -q^{-2s+1})
    // with u_s = -q^{-2s+1/2}.
    Real a = -pow(qd, -2 * s);
    Real b = -pow(qd, -(2 * s - 1));
    Real u = -pow(qd, -2 * s) * sqrt(qd);
    Real th_a = f(a);
    Real th_b = f(b);
    Real th_u = f(u);

    auto fail_pair = [&](ZeroStatus st, const Real& loc, const Real& resid) {
      out.push_back(make_zero(2 * s - 1, st, loc, a, b, resid));
      if (2 * s <= count) out.push_back(make_zero(2 * s, st, loc, a, b, resid));
    };

    if (th_a.sign() <= 0 || th_b.sign() <= 0) {
      // Interlacing geometry no longer valid at this index.
      fail_pair(ZeroStatus::missing_sign_change, Real(0L, d), Real(0L, d));
      continue;
    }

    Real interior = u;
    if (!(th_u < -coalesce_cut)) {
      // u_s does not witness the dip; look at the true minimum.
      try {
        CriticalSolve sol =
            locate_critical(q, s, CritKind::minimum, ctx, nullptr, f_target);
        Real depth = abs(sol.theta_value);
        if (depth <= coalesce_cut) {
          // Below numeric resolution the pair is indistinguishable.
          fail_pair(ZeroStatus::coalesced, sol.location, depth);
          continue;
        }
        if (sol.theta_value.sign() > 0) {
          fail_pair(ZeroStatus::missing_sign_change, sol.location, depth);
          continue;
        }
        interior = sol.location;
      } catch (const BracketError&) {
        fail_pair(ZeroStatus::missing_sign_change, Real(0L, d), Real(0L, d));
        continue;
      }
    }

    // Odd zero: bisection to the root tolerance, then one Newton polish.
    {
      Real loc = bracket_root(f, interior, b, ctx);
      loc = newton_polish(f, fdx, loc, interior, b, f_target, 3);
      Real resid = abs(f(loc));
      out.push_back(make_zero(2 * s - 1, ZeroStatus::resolved, std::move(loc),
                              interior, b, std::move(resid)));
    }
    if (2 * s <= count) {
      Real loc = bracket_root(f, a, interior, ctx);
      loc = newton_polish(f, fdx, loc, a, interior, f_target, 3);
      Real resid = abs(f(loc));
      out.push_back(make_zero(2 * s, ZeroStatus::resolved, std::move(loc), a,
                              interior, std::move(resid)));
    }
  }
  return out;
}

Real product_eval(const Real& q, const Real& x,
                  std::span<const ZeroRecord> zeros,
                  const PrecisionContext& ctx) {
  check_query(q);
  long d = ctx.working_digits();
  Real prod(1L, d);
  Real xd = Real::at_digits(x, d);
  for (const ZeroRecord& z : zeros) {
    if (z.status != ZeroStatus::resolved) continue;
    prod *= 1 - xd / z.location;
  }
  return prod;
}

}  // namespace ptheta::theta
