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

#include "core/roots.hpp"

namespace ptheta {

namespace {

Real refine(const RealFn& f, Real a, Real b, Real fa, Real fb,
            const Real& stop_width) {
  if (fa.is_zero()) return a;
  if (fb.is_zero()) return b;
  if (fa.sign() == fb.sign())
    throw BracketError("bracket_root: f(lo) and f(hi) have the same sign");

  // Iteration bound: each pair of steps at least halves the bracket.
  Real width = b - a;
  long max_iter = 64;
  {
    Real w = width;
    while (w > stop_width && max_iter < 4'000'000) {
      w /= 2;
      max_iter += 2;
    }
  }

  bool bisect_next = false;
  for (long i = 0; i < max_iter; ++i) {
    width = b - a;
    if (width <= stop_width) break;

    Real mid = a + width / 2;
    Real x = mid;
    if (!bisect_next) {
      // Secant candidate, clamped to the middle 96% of the bracket.
      Real denom = fb - fa;
      if (!denom.is_zero()) {
        Real cand = b - fb * (b - a) / denom;
        Real margin = width / 50;
        if (cand > a + margin && cand < b - margin) x = cand;
      }
    }
    bisect_next = !bisect_next;

    Real fx = f(x);
    if (fx.is_zero()) return x;
    if (fx.sign() == fa.sign()) {
      a = std::move(x);
      fa = std::move(fx);
    } else {
      b = std::move(x);
      fb = std::move(fx);
    }
  }
  return a + (b - a) / 2;
}

}  // namespace

Real bracket_root(const RealFn& f, const Real& lo, const Real& hi,
                  const PrecisionContext& ctx) {
  if (!(lo < hi)) throw InvalidInputError("bracket_root: requires lo < hi");
  long d = ctx.working_digits();
  return refine(f, Real::at_digits(lo, d), Real::at_digits(hi, d), f(lo), f(hi),
                ctx.root_tolerance());
}

Real bracket_root_width(const RealFn& f, const Real& lo, const Real& hi,
                        const Real& stop_width) {
  if (!(lo < hi)) throw InvalidInputError("bracket_root: requires lo < hi");
  return refine(f, lo, hi, f(lo), f(hi), stop_width);
}

Real newton_polish(const RealFn& f, const RealFn& df, Real x, const Real& lo,
                   const Real& hi, const Real& f_target, int max_steps) {
  Real fx = f(x);
  for (int i = 0; i < max_steps; ++i) {
    if (abs(fx) <= f_target) break;
    Real d = df(x);
    if (d.is_zero()) break;
    Real next = x - fx / d;
    if (!(next > lo && next < hi)) break;
    Real fnext = f(next);
    if (!(abs(fnext) < abs(fx))) break;
    x = std::move(next);
    fx = std::move(fnext);
  }
  return x;
}

}  // namespace ptheta
