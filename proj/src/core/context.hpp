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

#ifndef PTHETA_CORE_CONTEXT_HPP
#define PTHETA_CORE_CONTEXT_HPP

#include <stdexcept>
#include <string>

#include "core/real.hpp"

namespace ptheta {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid argument or malformed input (bad range string, missing constant...).
struct InvalidInputError : Error {
  using Error::Error;
};

/// Out-of-domain query (q outside (0,1), x where a formula is undefined...).
struct DomainError : Error {
  using Error::Error;
};

/// A sign-change precondition failed (wrong bracket, missing critical point).
struct BracketError : Error {
  using Error::Error;
};

/// The precision budget cannot absorb the request (series cap, q too close
/// to 1 for the working digits).
struct PrecisionBudgetError : Error {
  using Error::Error;
};

/// A fitted sequence does not settle (tail estimates diverge).
struct DegenerateSequenceError : Error {
  using Error::Error;
};

/// Working precision and tolerance policy for every numeric operation.
///
/// `working_digits` is the accuracy target of returned values; internal
/// evaluations pad precision as needed (for instance to absorb series
/// cancellation) and round back on exit. `tail_tolerance` is the absolute
/// bound demanded of certified series tails, `root_tolerance` the bracket
/// width at which root searches stop.
class PrecisionContext {
 public:
  static PrecisionContext make(long working_digits = 60,
                               const std::string& tail_tolerance = "1e-40",
                               const std::string& root_tolerance = "1e-30");

  long working_digits() const { return working_digits_; }
  const Real& tail_tolerance() const { return tail_tolerance_; }
  const Real& root_tolerance() const { return root_tolerance_; }

  /// Same tolerances, more digits (used by the recompute-and-compare checks).
  PrecisionContext with_digits(long working_digits) const;
  /// Same digits, tighter tail (used internally by residual-driven solvers).
  PrecisionContext with_tail_tolerance(const Real& tail) const;

 private:
  PrecisionContext(long digits, Real tail, Real root);

  long working_digits_;
  Real tail_tolerance_;
  Real root_tolerance_;
};

/// A truncated-series value with its certified tail bound.
struct SeriesResult {
  Real value;
  Real tail_bound;   // >= |omitted tail|
  long terms_used = 0;
};

namespace constants {
Real pi(const PrecisionContext& ctx);
Real e_pi(const PrecisionContext& ctx);  // e^pi = 23.1407...
/// D = 1/2 + log 2 + pi^2/8 = 2.426847731...
Real d_constant(const PrecisionContext& ctx);
}  // namespace constants

}  // namespace ptheta

#endif  // PTHETA_CORE_CONTEXT_HPP
