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

#ifndef PTHETA_CORE_SERIES_HPP
#define PTHETA_CORE_SERIES_HPP

#include <functional>

#include "core/context.hpp"
#include "core/real.hpp"

namespace ptheta {

/// Writes the j-th series term into `out`. Called with j = 0, 1, 2, ...
/// strictly in order, so generators may keep incremental state.
using TermGenerator = std::function<void(long j, Real& out)>;

struct SeriesOptions {
  /// Accumulation precision; must cover the cancellation of the series
  /// being summed (callers pad for their own peak-term estimates).
  long internal_digits = 60;
  /// Terms per evaluation before giving up with a precision-budget error.
  long hard_cap = 10'000'000;
};

/// Sums a series whose terms eventually decay at ratio <= 1/2.
///
/// `ratio_threshold_index` is a caller-derived index N such that
/// |term_{j+1}/term_j| <= 1/2 for every j >= N; from there the omitted tail
/// is bounded by twice the first omitted term. The sum stops at the first
/// index past N where that geometric bound drops below the context's
/// tail_tolerance, and reports the bound.
///
/// Throws PrecisionBudgetError when no qualifying index exists within
/// `hard_cap` terms.
SeriesResult sum_ratio_bounded_series(const TermGenerator& term,
                                      long ratio_threshold_index,
                                      const PrecisionContext& ctx,
                                      const SeriesOptions& opt);

}  // namespace ptheta

#endif  // PTHETA_CORE_SERIES_HPP
