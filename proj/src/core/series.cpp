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

#include "core/series.hpp"

namespace ptheta {

SeriesResult sum_ratio_bounded_series(const TermGenerator& term,
                                      long ratio_threshold_index,
                                      const PrecisionContext& ctx,
                                      const SeriesOptions& opt) {
  if (ratio_threshold_index < 0)
    throw InvalidInputError("sum_ratio_bounded_series: negative threshold index");
  long digits = opt.internal_digits > ctx.working_digits()
                    ? opt.internal_digits
                    : ctx.working_digits();
  Real sum(0L, digits);
  Real t(0L, digits);
  Real bound(0L, ctx.working_digits());
  const Real& tol = ctx.tail_tolerance();

  for (long j = 0; j <= opt.hard_cap; ++j) {
    term(j, t);
    if (j > ratio_threshold_index) {
      // Terms from index ratio_threshold_index on shrink at ratio <= 1/2,
      // so the tail from t on is bounded by 2|t|.
      bound = abs(t);
      bound *= 2;
      if (bound <= tol) {
        return SeriesResult{Real::at_digits(sum, ctx.working_digits()),
                            std::move(bound), j};
      }
    }
    sum += t;
  }
  throw PrecisionBudgetError(
      "series did not reach its tail tolerance within the hard cap "
      "(input too close to a precision-budget boundary)");
}

}  // namespace ptheta
