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

#include "core/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "core/asymptotics.hpp"
#include "core/parallel.hpp"
#include "core/psi.hpp"
#include "core/spectral.hpp"
#include "core/theta.hpp"

namespace ptheta::verify {

namespace {

using theta::CritKind;
using theta::Query;

double dd(const Real& x) { return x.to_double(); }

// Margins are "distance to violation": nonnegative means the property held
// with that much room, in the units noted per check.
CheckRow row(std::string name, long grid, double margin) {
  CheckRow r;
  r.name = std::move(name);
  r.grid_size = grid;
  r.worst_margin = margin;
  r.pass = margin >= 0 && std::isfinite(margin);
  return r;
}

std::vector<double> default_q_grid() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
}

// ---------------------------------------------------------------- theta --

CheckRow check_positivity(const PrecisionContext& ctx) {
  long grid = 0;
  double worst = 1e300;
  for (double q : default_q_grid()) {
    for (double x : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0}) {
      Real v = theta::eval(Query(Real(q, 30), Real(x, 30)), ctx).value;
      worst = std::min(worst, dd(v));
      ++grid;
    }
  }
  return row("theta/positive-for-nonnegative-x", grid, worst);
}

CheckRow check_fe_residual(const PrecisionContext& ctx) {
  std::mt19937_64 rng(20260314);
  std::uniform_real_distribution<double> uq(0.002, 0.995);
  std::uniform_real_distribution<double> ux(-50.0, 50.0);
  double tol = ctx.tail_tolerance().to_double();
  double worst = 1e300;
  const int n = 100;
  for (int i = 0; i < n; ++i) {
    Real q(uq(rng), 30);
    Real x(ux(rng), 30);
    Real r = theta::functional_equation_residual(Query(q, x), ctx);
    worst = std::min(worst, (3 * tol - dd(r)) / tol);
  }
  return row("theta/functional-equation-residual", n, worst);
}

CheckRow check_interlacing(const PrecisionContext& ctx) {
  long grid = 0;
  double worst = 1e300;
  for (double qd : {0.2, 0.25, 0.3}) {
    Real q(qd, ctx.working_digits());
    auto zeros = theta::real_zeros(q, 8, ctx);
    auto crits = theta::critical_points(q, 4, ctx);
    auto xi = [&](int j) -> const Real& { return zeros[static_cast<size_t>(j - 1)].location; };
    auto tc = [&](int s) -> const Real& { return crits[static_cast<size_t>(2 * (s - 1))].location; };
    auto wc = [&](int s) -> const Real& { return crits[static_cast<size_t>(2 * (s - 1) + 1)].location; };
    for (const auto& z : zeros)
      if (z.status != theta::ZeroStatus::resolved) return row("theta/interlacing-string", grid, -1);
    for (const auto& c : crits)
      if (!c.found) return row("theta/interlacing-string", grid, -1);
    long d = ctx.working_digits();
    for (int s = 1; s <= 4; ++s) {
      Real u = -pow(Real::at_digits(q, d), -2 * s) * sqrt(Real::at_digits(q, d));
      // w_s < xi_2s < t_s < xi_{2s-1}, with u_s between xi_2s and xi_{2s-1}
      worst = std::min(worst, dd(xi(2 * s) - wc(s)));
      worst = std::min(worst, dd(tc(s) - xi(2 * s)));
      worst = std::min(worst, dd(xi(2 * s - 1) - tc(s)));
      worst = std::min(worst, dd(u - xi(2 * s)));
      worst = std::min(worst, dd(xi(2 * s - 1) - u));
      if (s >= 2) worst = std::min(worst, dd(wc(s - 1) - xi(2 * s - 1)));
      if (2 * s + 1 <= 8) {
        Real v = -pow(Real::at_digits(q, d), -2 * s) / sqrt(Real::at_digits(q, d));
        worst = std::min(worst, dd(v - xi(2 * s + 1)));
        worst = std::min(worst, dd(xi(2 * s) - v));
      }
      grid += 8;
    }
  }
  return row("theta/interlacing-string", grid, worst);
}

CheckRow check_negative_power_bound(const PrecisionContext& ctx) {
  long grid = 0;
  double worst = 1e300;
  for (double qd : default_q_grid()) {
    Real q(qd, ctx.working_digits());
    for (int s = 1; s <= 20; ++s) {
      Real x = -pow(Real::at_digits(q, ctx.working_digits()), -s);
      Real th = theta::eval(Query(q, x), ctx).value;
      Real qs = pow(Real::at_digits(q, ctx.working_digits()), s);
      // theta(q, -q^{-s}) in (0, q^s); margin normalized by q^s.
      worst = std::min(worst, dd(min(th, qs - th) / qs));
      ++grid;
    }
  }
  return row("theta/negative-power-window", grid, worst);
}

CheckRow check_lemma1(const PrecisionContext& ctx) {
  struct Cfg { double q; int s_lo; int s_hi; };
  // q regions between consecutive spectral values; s starts past the last
  // coalesced pair.
  const Cfg cfgs[] = {{0.2, 1, 4}, {0.4, 2, 4}, {0.55, 3, 5}, {0.65, 4, 6}};
  long grid = 0;
  double worst = 1e300;
  Real f_target = ctx.tail_tolerance() / 2;
  for (const Cfg& c : cfgs) {
    Real q(c.q, ctx.working_digits());
    for (int s = c.s_lo; s <= c.s_hi; ++s) {
      Real t_s = theta::locate_critical(q, s, CritKind::minimum, ctx, nullptr, f_target).location;
      Real w_s = theta::locate_critical(q, s, CritKind::maximum, ctx, nullptr, f_target).location;
      Real t_s1 = theta::locate_critical(q, s + 1, CritKind::minimum, ctx, nullptr, f_target).location;
      worst = std::min(worst, dd((w_s / q - t_s1) / abs(w_s)));
      worst = std::min(worst, dd((t_s / q - w_s) / abs(w_s)));
      grid += 2;
    }
  }
  return row("theta/lemma1-critical-recursion", grid, worst);
}

CheckRow check_dx_finite_difference(const PrecisionContext& ctx) {
  const double pts[][2] = {{0.3, -2}, {0.5, -1}, {0.7, -8}, {0.2, 3}, {0.9, -15}};
  long d = ctx.working_digits();
  Real h = pow(Real(10L, d), -10);
  double worst = 1e300;
  for (auto& p : pts) {
    Real q(p[0], d);
    Real x(p[1], d);
    Real dx = theta::eval_dx(Query(q, x), ctx).value;
    Real fd = (theta::eval(Query(q, x + h), ctx).value -
               theta::eval(Query(q, x - h), ctx).value) /
              (h * 2);
    double rel = dd(abs(fd - dx) / abs(dx));
    worst = std::min(worst, (1e-12 - rel) / 1e-12);
  }
  return row("theta/dx-matches-finite-difference", 5, worst);
}

CheckRow check_katsnelson(const PrecisionContext& ctx) {
  // theta(q, -20) -> 1/21; the distance must fall along q = 0.9, 0.99, ...
  long d = ctx.working_digits();
  Real limit = Real(1L, d) / 21;
  std::vector<Real> dist;
  for (double qd : {0.9, 0.99, 0.999, 0.9999}) {
    Real v = theta::eval(Query(Real(qd, d), Real(-20L, d)), ctx).value;
    dist.push_back(abs(v - limit));
  }
  double worst = 1e300;
  for (size_t i = 0; i + 1 < dist.size(); ++i)
    worst = std::min(worst, dd((dist[i] - dist[i + 1]) / dist[i]));
  return row("theta/katsnelson-limit-x-minus-20", 4, worst);
}

// ------------------------------------------------------------------ psi --

CheckRow check_psi_dual_route(const PrecisionContext& ctx) {
  const int n = 200;
  double tol = ctx.tail_tolerance().to_double();
  double worst = 1e300;
  for (int i = 0; i < n; ++i) {
    Real q(0.01 + (0.98 * i) / (n - 1), 30);
    Real a = psi::eval(q, psi::Route::series, ctx).psi;
    Real b = psi::eval(q, psi::Route::product, ctx).psi;
    worst = std::min(worst, (10 * tol - dd(abs(a - b))) / tol);
  }
  return row("psi/dual-route-agreement", n, worst);
}

CheckRow check_psi_monotone_convex(const PrecisionContext& ctx, bool convex) {
  const int n = 200;
  std::vector<Real> vals;
  vals.reserve(n);
  for (int i = 0; i < n; ++i) {
    Real q(0.005 + (0.99 * i) / (n - 1), 30);
    vals.push_back(exp(psi::log_psi(q, ctx)));
  }
  double worst = 1e300;
  if (!convex) {
    for (int i = 0; i + 1 < n; ++i)
      worst = std::min(worst, dd((vals[i] - vals[i + 1]) / vals[i]));
    return row("psi/decreasing", n, worst);
  }
  for (int i = 1; i + 1 < n; ++i) {
    Real d2 = vals[i - 1] - vals[i] * 2 + vals[i + 1];
    worst = std::min(worst, dd(d2 / vals[i - 1]));
  }
  return row("psi/convex", n, worst);
}

CheckRow check_psi_flat(const PrecisionContext& ctx) {
  // psi(q)/(1-q)^l -> 0 along q = 1-10^-m. Checked through log psi, which
  // stays conditioned; values themselves underflow everything printable.
  long d = ctx.working_digits();
  double worst = 1e300;
  Real ln10 = log(Real(10L, d));
  for (int l = 1; l <= 4; ++l) {
    Real prev(0L, d);
    for (int m = 1; m <= 5; ++m) {
      Real q = 1 - pow(Real(10L, d), -m);
      // log of psi/(1-q)^l = log psi + l m log 10
      Real lg = psi::log_psi(q, ctx) + ln10 * (l * m);
      if (m > 1) worst = std::min(worst, dd(prev - lg));
      if (m == 5) worst = std::min(worst, dd(-lg - Real(46L, d)));  // < 1e-20
      prev = lg;
    }
  }
  return row("psi/flat-at-one", 20, worst);
}

CheckRow check_tau_monotone(const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  std::vector<double> grid;
  for (int i = 1; i <= 49; ++i) grid.push_back(0.02 * i);
  grid.push_back(0.99);
  grid.push_back(0.995);
  Real pi2_4 = Real::pi(d) * Real::pi(d) / 4;
  double worst = 1e300;
  Real prev(0L, d);
  bool first = true;
  for (double qd : grid) {
    Real tau = psi::tau_bundle(Real(qd, d), ctx).tau;
    if (!first) worst = std::min(worst, dd(tau - prev));
    worst = std::min(worst, dd(pi2_4 - tau));
    prev = tau;
    first = false;
  }
  return row("psi/tau-increasing-below-pi2-4", static_cast<long>(grid.size()), worst);
}

CheckRow check_tau_sandwich(const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
  grid.push_back(0.99);
  double worst = 1e300;
  for (double qd : grid) {
    Real q(qd, d);
    psi::TauBundle tb = psi::tau_bundle(q, ctx);
    Real hq2 = psi::h_series(q * q, ctx);
    // h(q^2)/q <= tau <= h, strict inside (0,1); normalized by (1-q)
    Real scale = 1 - q;
    worst = std::min(worst, dd((tb.tau - hq2 / q) / scale));
    worst = std::min(worst, dd((tb.h - tb.tau) / scale));
  }
  return row("psi/tau-h-sandwich", static_cast<long>(grid.size()), worst);
}

CheckRow check_h_tau_twelfth(const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
  grid.push_back(0.99);
  grid.push_back(0.999);
  double worst = 1e300;
  for (double qd : grid) {
    Real q(qd, d);
    psi::TauBundle tb = psi::tau_bundle(q, ctx);
    Real gap = tb.h - tb.tau;
    Real ub = (1 - q) / 12;
    worst = std::min(worst, dd(min(gap, ub - gap) / ub));
  }
  return row("psi/h-minus-tau-twelfth", static_cast<long>(grid.size()), worst);
}

CheckRow check_sl_inequalities(const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  long grid = 0;
  double worst = 1e300;
  for (double qd : default_q_grid()) {
    Real q(qd, d);
    // S_l = 1 + q + ... + q^l
    std::vector<Real> S;
    S.push_back(Real(1L, d));
    Real qp = q;
    for (int l = 1; l <= 40; ++l) {
      S.push_back(S.back() + qp);
      qp *= q;
    }
    for (int l = 2; l <= 40; ++l) {
      Real lhs = S[static_cast<size_t>(l)] * (l - 1);
      Real rhs = S[static_cast<size_t>(l - 2)] * q * (l + 1);
      worst = std::min(worst, dd((lhs - rhs) / S[static_cast<size_t>(l)]));
      ++grid;
      for (int nu = 1; 2 * nu <= l; ++nu) {
        Real lhs2 = S[static_cast<size_t>(l)] * (l - 2 * nu + 1);
        Real rhs2 = S[static_cast<size_t>(l - 2 * nu)] * pow(q, nu) * (l + 1);
        worst = std::min(worst, dd((lhs2 - rhs2) / S[static_cast<size_t>(l)]));
        ++grid;
      }
    }
  }
  return row("psi/s-l-inequalities", grid, worst);
}

CheckRow check_zeta_bounds(const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  long grid = 0;
  double worst = 1e300;
  std::vector<double> qs = default_q_grid();
  qs.push_back(0.99);
  for (double qd : qs) {
    Real q(qd, d);
    for (long k = 0; k <= 40; ++k) {
      Real z = psi::zeta_k(q, k, ctx);
      Real denom((2 * k + 1) * (2 * k + 1), d);
      Real lb = pow(q, 2 * k + 1) / denom;
      Real ub = pow(q, k + 1) / denom;
      worst = std::min(worst, dd(min(z - lb, ub - z) / ub));
      ++grid;
    }
  }
  return row("psi/zeta-bounds", grid, worst);
}

CheckRow check_lambda_chi_limits(const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  Real half = Real(1L, d) / 2;
  double worst = 1e300;
  long grid = 0;
  for (int s = 1; s <= 3; ++s) {
    Real prev_l(0L, d), prev_c(0L, d);
    for (int m = 1; m <= 5; ++m) {
      Real q = 1 - pow(Real(10L, d), -m);
      Real dl = abs(psi::lambda_s(q, s, ctx) - half);
      Real dc = abs(psi::chi_s(q, s, ctx) - half);
      if (m > 1) {
        worst = std::min(worst, dd((prev_l - dl) / prev_l));
        worst = std::min(worst, dd((prev_c - dc) / prev_c));
      }
      prev_l = dl;
      prev_c = dc;
      grid += 2;
    }
  }
  return row("psi/lambda-chi-limits-half", grid, worst);
}

CheckRow check_h_expansion(const PrecisionContext& ctx) {
  // |h - pi^2/4 - (1/2)(1-q)log(1-q) + D(1-q)| <= C (1-q)^2 |log(1-q)|;
  // empirically C_m stays below 0.03 and falls with m.
  long d = ctx.working_digits();
  Real pi2_4 = Real::pi(d) * Real::pi(d) / 4;
  Real D = Real(1L, d) / 2 + log(Real(2L, d)) + pi2_4 / 2;
  double worst = 1e300;
  double prev = 1e300;
  for (int m = 1; m <= 5; ++m) {
    Real q = 1 - pow(Real(10L, d), -m);
    Real one_minus = 1 - q;
    Real h = psi::h_series(q, ctx);
    Real resid = h - pi2_4 - one_minus * log(one_minus) / 2 + D * one_minus;
    double C = dd(abs(resid) / (one_minus * one_minus * abs(log(one_minus))));
    worst = std::min(worst, 0.05 - C);
    if (m > 1) worst = std::min(worst, prev - C);
    prev = C;
  }
  return row("psi/h-expansion-residual-stable", 5, worst);
}

CheckRow check_k_band(const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  Real D = Real(1L, d) / 2 + log(Real(2L, d)) + Real::pi(d) * Real::pi(d) / 8;
  Real lo = D - Real(1L, d) / 100;
  Real hi = D + Real(1L, d) / 12 + Real(1L, d) / 100;
  double worst = 1e300;
  for (int m : {3, 4}) {
    Real q = 1 - pow(Real(10L, d), -m);
    Real K = psi::tau_bundle(q, ctx).K_est;
    worst = std::min(worst, dd(min(K - lo, hi - K) * 100));
  }
  return row("psi/k-estimator-band", 2, worst);
}

CheckRow check_eq12_cross(const PrecisionContext& ctx) {
  // tau(0.5) against 2 sum_{k<=200} zeta_k(0.5).
  long d = ctx.working_digits();
  Real q(0.5, d);
  Real tau = psi::tau_bundle(q, ctx).tau;
  Real sum(0L, d + 10);
  for (long k = 0; k <= 200; ++k) sum += psi::zeta_k(q, k, ctx);
  sum *= 2;
  double tol = ctx.tail_tolerance().to_double();
  return row("psi/eq12-zeta-identity", 201, (tol - dd(abs(tau - sum))) / tol);
}

CheckRow check_psi_lower_bound(const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  double worst = 1e300;
  for (double qd : {0.9, 0.99, 0.995}) {
    Real q(qd, d);
    Real lp = psi::log_psi(q, ctx);
    Real bound = Real::pi(d) * Real::pi(d) / (4 * (q - 1));
    // e^{pi^2/4(q-1)} < psi  <=>  bound < log psi
    worst = std::min(worst, dd(lp - bound));
  }
  return row("psi/theorem4-lower-bound", 3, worst);
}

// ------------------------------------------------------------- spectral --

void prewarm(int j_max, int parallelism, const PrecisionContext& ctx) {
  parallel_for_indices(1, j_max + 1, parallelism, [&](long s) {
    spectral::r_tilde(static_cast<int>(s), ctx);
  });
  parallel_for_indices(1, j_max, parallelism, [&](long j) {
    spectral::spectral_value(static_cast<int>(j), ctx);
  });
}

CheckRow check_double_zero_certificates(int j_max, const PrecisionContext& ctx) {
  double tol = ctx.tail_tolerance().to_double();
  double worst = 1e300;
  for (int j = 1; j <= j_max; ++j) {
    spectral::SpectralRecord r = spectral::spectral_value(j, ctx);
    worst = std::min(worst, (10 * tol - dd(r.theta_residual)) / tol);
    worst = std::min(worst, (10 * tol - dd(r.dtheta_residual)) / tol);
    if (r.d2.sign() <= 0) worst = -1.0;
  }
  return row("spectral/double-zero-certificates", j_max, worst);
}

CheckRow check_sign_flip(int j_max, const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  double worst = 1e300;
  Real eps = pow(Real(10L, d), -6);
  Real f_target = ctx.tail_tolerance() / 2;
  int js[] = {1, 2, 5};
  long grid = 0;
  for (int j : js) {
    if (j > j_max) break;
    spectral::SpectralRecord r = spectral::spectral_value(j, ctx);
    Real gm = theta::locate_critical(r.q_tilde - eps, j, CritKind::minimum, ctx,
                                     nullptr, f_target)
                  .theta_value;
    Real gp = theta::locate_critical(r.q_tilde + eps, j, CritKind::minimum, ctx,
                                     nullptr, f_target)
                  .theta_value;
    worst = std::min(worst, dd(-gm));
    worst = std::min(worst, dd(gp));
    ++grid;
  }
  return row("spectral/sign-flip-at-qtilde", grid, worst);
}

CheckRow check_monotone_sequences(int j_max, const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  Real e_pi = exp(Real::pi(d));
  double worst = 1e300;
  Real prev_q(0L, d), prev_r(0L, d), prev_y(0L, d);
  for (int j = 1; j <= j_max; ++j) {
    spectral::SpectralRecord sp = spectral::spectral_value(j, ctx);
    Real r = spectral::r_tilde(j, ctx).r_tilde;
    if (j > 1) {
      worst = std::min(worst, dd(sp.q_tilde - prev_q));
      worst = std::min(worst, dd(r - prev_r));
      worst = std::min(worst, dd(prev_y - sp.y));
    }
    worst = std::min(worst, dd(sp.y + e_pi));  // y > -e^pi
    worst = std::min(worst, dd(-sp.y));        // y < 0
    prev_q = sp.q_tilde;
    prev_r = r;
    prev_y = sp.y;
  }
  return row("spectral/monotone-sequences", 3L * j_max, worst);
}

CheckRow check_eq19_equivalence(int s_max, const PrecisionContext& ctx) {
  double rt = ctx.root_tolerance().to_double();
  double worst = 1e300;
  for (int s = 1; s <= s_max; ++s) {
    Real a = spectral::r_tilde(s, ctx).r_tilde;
    Real b = spectral::direct_theta_u_root(s, ctx);
    worst = std::min(worst, (2 * rt - dd(abs(a - b))) / rt);
  }
  return row("spectral/eq19-two-route-root", s_max, worst);
}

CheckRow check_xi_half(int j_max, const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  Real half = Real(1L, d) / 2;
  double worst = 1e300;
  Real prev(0L, d);
  int js[] = {1, 2, 5, 10, 20, 50, 100};
  bool first = true;
  long grid = 0;
  for (int j : js) {
    if (j > j_max) break;
    spectral::PropositionReport rep = spectral::proposition_checks(j, ctx);
    Real dist = abs(rep.xi - half);
    if (!first) worst = std::min(worst, dd(prev - dist));
    if (j >= 100) worst = std::min(worst, dd(Real(1L, d) / 100 - dist));
    prev = dist;
    first = false;
    ++grid;
  }
  return row("spectral/xi-ratio-to-half", grid, worst);
}

CheckRow check_propositions(int j_max, const PrecisionContext& ctx) {
  int j = std::min(10, j_max);
  spectral::PropositionReport rep = spectral::proposition_checks(j, ctx);
  long d = ctx.working_digits();
  double worst = dd(rep.theta_v - Real(1L, d) / 3);
  if (!rep.w_equals_one) worst = -1;
  return row("spectral/propositions-v-and-w", 2, worst);
}

CheckRow check_ordering(int j_max, const PrecisionContext& ctx) {
  spectral::OrderingReport rep = spectral::verify_ordering(j_max, ctx);
  // Pass when the chain holds from some threshold through j_max.
  double margin = rep.threshold <= rep.j_max
                      ? static_cast<double>(rep.j_max - rep.threshold)
                      : -1.0;
  for (int inc : rep.qt_increasing)
    if (!inc) margin = -1.0;
  return row("spectral/ordering-chain", j_max, margin);
}

// ----------------------------------------------------------- asymptotics --

CheckRow check_affine_endpoints(const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  // The printed interval endpoints carry 10 digits; the map must send the
  // b* endpoints onto the alpha* endpoints within display truncation.
  struct Pair { const char* b; const char* alpha; };
  const Pair pairs[] = {
      {"1.735469700", "-1.788936462"},
      {"1.756303033", "-1.830603128"},
      {"3.327099360", "-4.972195782"},
  };
  double worst = 1e300;
  for (const Pair& p : pairs) {
    Real b = Real::parse(p.b, d);
    Real want = Real::parse(p.alpha, d);
    double err = dd(abs(asymptotics::alpha_from_b(b) - want));
    worst = std::min(worst, (4e-9 - err) / 4e-9);
  }
  return row("asymptotics/affine-endpoint-map", 3, worst);
}

CheckRow check_round_trip(const PrecisionContext& ctx) {
  using asymptotics::Kind;
  long d = ctx.working_digits();
  double worst = 1e300;
  struct Cfg { Kind kind; double c; };
  const Cfg cfgs[] = {{Kind::qtilde, 2.0},
                      {Kind::rtilde, 1.75},
                      {Kind::y, -2.5},
                      {Kind::z, -1.8}};
  for (const Cfg& cfg : cfgs) {
    asymptotics::Model m;
    m.kind = cfg.kind;
    Real c(cfg.c, d);
    m.b = c;
    m.b_star = c;
    m.alpha = c;
    m.alpha_star = c;
    std::vector<std::pair<long, Real>> seq;
    for (long j = 20; j <= 80; ++j)
      seq.emplace_back(j, asymptotics::model_eval(m, j, ctx));
    asymptotics::FitResult fit = asymptotics::extract_constant(seq, cfg.kind, ctx);
    double err = dd(abs(fit.extrapolated - c));
    worst = std::min(worst, (1e-6 - err) / 1e-6);
  }
  return row("asymptotics/synthetic-round-trip", 4, worst);
}

CheckRow check_spread_shrinks(int j_max, int parallelism,
                              const PrecisionContext& ctx) {
  using asymptotics::Kind;
  int s_mid = std::max(40, j_max);
  int s_hi = std::min(400, std::max(60, 2 * j_max));
  parallel_for_indices(20, s_hi, parallelism, [&](long s) {
    spectral::r_tilde(static_cast<int>(s), ctx);
  });
  auto spread_of = [&](int hi) {
    std::vector<std::pair<long, Real>> seq;
    for (int s = 20; s <= hi; ++s)
      seq.emplace_back(s, spectral::r_tilde(s, ctx).r_tilde);
    asymptotics::FitResult fit =
        asymptotics::extract_constant(seq, Kind::rtilde, ctx);
    size_t n = fit.per_index_estimates.size();
    size_t quart = std::max<size_t>(2, n / 4);
    double mn = 1e300, mx = -1e300;
    for (size_t i = n - quart; i < n; ++i) {
      double v = dd(fit.per_index_estimates[i].second);
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    return mx - mn;
  };
  double narrow = spread_of(s_mid);
  double wide = spread_of(s_hi);
  return row("asymptotics/tail-spread-shrinks", s_hi - 19, narrow - wide);
}

}  // namespace

std::vector<CheckRow> theta_suite(const PrecisionContext& ctx) {
  std::vector<CheckRow> rows;
  rows.push_back(check_positivity(ctx));
  rows.push_back(check_fe_residual(ctx));
  rows.push_back(check_interlacing(ctx));
  rows.push_back(check_negative_power_bound(ctx));
  rows.push_back(check_lemma1(ctx));
  rows.push_back(check_dx_finite_difference(ctx));
  rows.push_back(check_katsnelson(ctx));
  return rows;
}

std::vector<CheckRow> psi_suite(const PrecisionContext& ctx) {
  std::vector<CheckRow> rows;
  rows.push_back(check_psi_dual_route(ctx));
  rows.push_back(check_psi_monotone_convex(ctx, false));
  rows.push_back(check_psi_monotone_convex(ctx, true));
  rows.push_back(check_psi_flat(ctx));
  rows.push_back(check_tau_monotone(ctx));
  rows.push_back(check_tau_sandwich(ctx));
  rows.push_back(check_h_tau_twelfth(ctx));
  rows.push_back(check_sl_inequalities(ctx));
  rows.push_back(check_zeta_bounds(ctx));
  rows.push_back(check_lambda_chi_limits(ctx));
  rows.push_back(check_h_expansion(ctx));
  rows.push_back(check_k_band(ctx));
  rows.push_back(check_eq12_cross(ctx));
  rows.push_back(check_psi_lower_bound(ctx));
  return rows;
}

std::vector<CheckRow> spectral_suite(int j_max, int parallelism,
                                     const PrecisionContext& ctx) {
  if (j_max < 1) throw InvalidInputError("spectral_suite: j_max must be >= 1");
  prewarm(j_max, parallelism, ctx);
  int s_eq = std::min(30, std::max(3, j_max));
  std::vector<CheckRow> rows;
  rows.push_back(check_double_zero_certificates(j_max, ctx));
  rows.push_back(check_sign_flip(j_max, ctx));
  rows.push_back(check_monotone_sequences(j_max, ctx));
  rows.push_back(check_eq19_equivalence(s_eq, ctx));
  rows.push_back(check_xi_half(j_max, ctx));
  rows.push_back(check_propositions(j_max, ctx));
  rows.push_back(check_ordering(j_max, ctx));
  return rows;
}

std::vector<CheckRow> asymptotics_suite(int j_max, int parallelism,
                                        const PrecisionContext& ctx) {
  std::vector<CheckRow> rows;
  rows.push_back(check_affine_endpoints(ctx));
  rows.push_back(check_round_trip(ctx));
  rows.push_back(check_spread_shrinks(j_max, parallelism, ctx));
  return rows;
}

std::vector<CheckRow> run_suite(std::string_view suite, int j_max,
                                int parallelism, const PrecisionContext& ctx) {
  std::vector<CheckRow> rows;
  auto append = [&rows](std::vector<CheckRow> more) {
    for (auto& r : more) rows.push_back(std::move(r));
  };
  if (suite == "theta") append(theta_suite(ctx));
  else if (suite == "psi") append(psi_suite(ctx));
  else if (suite == "spectral") append(spectral_suite(j_max, parallelism, ctx));
  else if (suite == "asymptotics") append(asymptotics_suite(j_max, parallelism, ctx));
  else if (suite == "all") {
    append(theta_suite(ctx));
    append(psi_suite(ctx));
    append(spectral_suite(j_max, parallelism, ctx));
    append(asymptotics_suite(j_max, parallelism, ctx));
  } else {
    throw InvalidInputError("run_suite: unknown suite (use theta, psi, "
                            "spectral, asymptotics or all)");
  }
  return rows;
}

}  // namespace ptheta::verify
