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
#include <thread>
#include <vector>

#include "core/context.hpp"
#include "core/psi.hpp"
#include "core/roots.hpp"
#include "core/series.hpp"
#include "doctest.h"

using namespace ptheta;

namespace {

const PrecisionContext& ctx() {
  static PrecisionContext c = PrecisionContext::make();
  return c;
}

Real tol_pow(long e) { return pow(Real(10L, 60), e); }

}  // namespace

TEST_CASE("precision context validates its invariants") {
  CHECK_NOTHROW(PrecisionContext::make(60, "1e-40", "1e-30"));
  CHECK_THROWS_AS(PrecisionContext::make(20), InvalidInputError);
  // tail below representable noise at 40 digits
  CHECK_THROWS_AS(PrecisionContext::make(40, "1e-39", "1e-30"), InvalidInputError);
  CHECK_THROWS_AS(PrecisionContext::make(40, "1e-36", "1e-30"), InvalidInputError);
  CHECK_THROWS_AS(PrecisionContext::make(60, "1e-30", "1e-31"), InvalidInputError);
  CHECK_THROWS_AS(PrecisionContext::make(60, "0", "1e-30"), InvalidInputError);
  CHECK(ctx().working_digits() == 60);
}

TEST_CASE("math constants") {
  // e^pi and D, 30+ digits
  Real e_pi = constants::e_pi(ctx());
  CHECK(abs(e_pi - Real::parse("23.1406926327792690057290863679485473802661", 60)) <
        tol_pow(-38));
  Real D = constants::d_constant(ctx());
  CHECK(abs(D - Real::parse("2.426847730696115136771543", 60)) < tol_pow(-23));
  CHECK(abs(exp(constants::pi(ctx())) - e_pi) < tol_pow(-57));
}

TEST_CASE("series engine: constant zero sequence") {
  SeriesOptions opt;
  SeriesResult r = sum_ratio_bounded_series(
      [](long, Real& t) { t = Real(0L, 60); }, 0, ctx(), opt);
  CHECK(r.value.is_zero());
  CHECK(r.tail_bound.is_zero());
  CHECK(r.terms_used > 0);
}

TEST_CASE("series engine: geometric series at q = 1/2") {
  SeriesOptions opt;
  Real q(1L, 60);
  q /= 2;
  Real p(1L, 60);
  SeriesResult r = sum_ratio_bounded_series(
      [&](long j, Real& t) {
        if (j > 0) p *= q;
        t = p;
      },
      0, ctx(), opt);
  CHECK(abs(r.value - 2) <= ctx().tail_tolerance());
  CHECK(r.tail_bound <= ctx().tail_tolerance());
  CHECK(r.terms_used > 100);
}

TEST_CASE("series engine: theta terms against brute-force partial sum") {
  // Oracle: direct 200-term partial sum of q^{j(j+1)/2} x^j at q=0.3, x=1,
  // accumulated independently at 80 digits.
  Real q(0.3, 80);
  Real x(1L, 80);
  Real oracle(0L, 80);
  for (long j = 0; j < 200; ++j) {
    oracle += pow(q, j * (j + 1) / 2) * pow(x, j);
  }

  Real q60(0.3, 60);
  Real p(1L, 60);
  Real term(1L, 60);
  SeriesOptions opt;
  SeriesResult r = sum_ratio_bounded_series(
      [&](long j, Real& t) {
        if (j > 0) {
          p *= q60;
          term *= p;
        }
        t = term;
      },
      2, ctx(), opt);
  CHECK(abs(r.value - oracle) <= ctx().tail_tolerance());
}

TEST_CASE("series engine: hard cap raises a budget error") {
  SeriesOptions opt;
  opt.hard_cap = 50;
  CHECK_THROWS_AS(sum_ratio_bounded_series(
                      [](long, Real& t) { t = Real(1L, 60); }, 1'000'000,
                      ctx(), opt),
                  PrecisionBudgetError);
}

TEST_CASE("series engine: +20 digits moves the value less than the tail") {
  Real q(0.77, 90);
  auto run = [&](const PrecisionContext& c) {
    Real p(1L, 90), term(1L, 90);
    SeriesOptions opt;
    opt.internal_digits = c.working_digits();
    return sum_ratio_bounded_series(
        [&](long j, Real& t) {
          if (j > 0) {
            p *= q;
            term *= p;
            term.negate();
          }
          t = term;
        },
        10, c, opt);
  };
  SeriesResult a = run(ctx());
  SeriesResult b = run(ctx().with_digits(80));
  CHECK(abs(a.value - b.value) <= a.tail_bound + b.tail_bound + tol_pow(-55));
}

TEST_CASE("bracket_root: linear and sqrt2") {
  Real root = bracket_root([](const Real& x) { return x; }, Real(-1L, 60),
                           Real(2L, 60), ctx());
  CHECK(abs(root) <= ctx().root_tolerance());

  Real r2 = bracket_root([](const Real& x) { return x * x - 2; }, Real(1L, 60),
                         Real(2L, 60), ctx());
  CHECK(abs(r2 - sqrt(Real(2L, 60))) <= ctx().root_tolerance());
}

TEST_CASE("bracket_root: same-sign endpoints rejected") {
  CHECK_THROWS_AS(bracket_root([](const Real& x) { return x * x + 1; },
                               Real(-1L, 60), Real(1L, 60), ctx()),
                  BracketError);
}

TEST_CASE("bracket_root: halving the tolerance moves the root < 2 tol") {
  auto f = [](const Real& x) { return exp(x) - 3; };
  Real a = bracket_root(f, Real(0L, 60), Real(2L, 60), ctx());
  PrecisionContext tight = PrecisionContext::make(60, "1e-40", "5e-31");
  Real b = bracket_root(f, Real(0L, 60), Real(2L, 60), tight);
  CHECK(abs(a - b) <= ctx().root_tolerance() * 2);
}

TEST_CASE("bracket_root: psi(sqrt q) = lambda_3(q) interior root") {
  // Oracle 1: dense double-precision sign scan, step 1e-4, over (0, 0.95]
  // (beyond that both series still agree in sign: psi is tiny positive and
  // lambda_3 approaches 1/2). Exactly one crossing is expected.
  auto psi_d = [](double v) {
    double s = 1;
    for (int j = 1; j * j < 400; ++j) s += 2 * (j % 2 ? -1.0 : 1.0) * std::pow(v, j * j);
    return s;
  };
  auto lambda3_d = [](double v) {
    double s = 0;
    for (int j = 6; j * j / 2.0 * std::log(1 / v) < 60; ++j)
      s += (j % 2 ? -1.0 : 1.0) * std::pow(v, j * j / 2.0);
    return s;
  };
  int crossings = 0;
  double lo = 0, hi = 0;
  double prev = psi_d(std::sqrt(1e-4)) - lambda3_d(1e-4);
  for (int i = 2; i <= 9500; ++i) {
    double qd = i * 1e-4;
    double cur = psi_d(std::sqrt(qd)) - lambda3_d(qd);
    if ((prev > 0) != (cur > 0)) {
      ++crossings;
      lo = qd - 1e-4;
      hi = qd;
    }
    prev = cur;
  }
  REQUIRE(crossings == 1);

  // Full-precision root inside the scanned bracket.
  auto f = [&](const Real& q) {
    return exp(psi::log_psi(sqrt(q), ctx())) - psi::lambda_s(q, 3, ctx());
  };
  Real root = bracket_root(f, Real(lo, 60), Real(hi, 60), ctx());
  // Oracle 2: frozen from an independent 50-digit computation.
  Real frozen = Real::parse("0.624951880749058252241574789468", 60);
  CHECK(abs(root - frozen) < tol_pow(-27));
}

TEST_CASE("concurrent evaluation is deterministic") {
  std::vector<std::string> results(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      Real pi = Real::pi(70 + 5 * t);
      Real v = exp(pi * (t + 1));
      results[static_cast<size_t>(t)] = v.str(50);
    });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < 4; ++t) {
    Real v = exp(Real::pi(70 + 5 * t) * (t + 1));
    CHECK(results[static_cast<size_t>(t)] == v.str(50));
  }
}
