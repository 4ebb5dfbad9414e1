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

#ifndef PTHETA_CORE_ROOTS_HPP
#define PTHETA_CORE_ROOTS_HPP

#include <functional>

#include "core/context.hpp"
#include "core/real.hpp"

namespace ptheta {

using RealFn = std::function<Real(const Real&)>;

/// Root of a continuous f on [lo, hi] given f(lo), f(hi) of opposite signs.
///
/// Secant-accelerated bisection; every second step bisects, so the bracket
/// provably shrinks and iterates never leave [lo, hi]. Stops when the
/// bracket width is at most the context's root_tolerance and returns the
/// bracket midpoint. Throws BracketError when the endpoint signs match.
Real bracket_root(const RealFn& f, const Real& lo, const Real& hi,
                  const PrecisionContext& ctx);

/// bracket_root with an explicit stopping width (internal solvers use
/// widths tighter than the public root_tolerance).
Real bracket_root_width(const RealFn& f, const Real& lo, const Real& hi,
                        const Real& stop_width);

/// Newton refinements of a bracketed simple root; keeps the iterate inside
/// [lo, hi] and stops once |f| <= f_target or the step stalls. Returns the
/// refined point (last good iterate on failure to improve).
Real newton_polish(const RealFn& f, const RealFn& df, Real x, const Real& lo,
                   const Real& hi, const Real& f_target, int max_steps);

}  // namespace ptheta

#endif  // PTHETA_CORE_ROOTS_HPP
