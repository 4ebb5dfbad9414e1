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

#include "core/context.hpp"

namespace ptheta {

PrecisionContext::PrecisionContext(long digits, Real tail, Real root)
    : working_digits_(digits),
      tail_tolerance_(std::move(tail)),
      root_tolerance_(std::move(root)) {}

PrecisionContext PrecisionContext::make(long working_digits,
                                        const std::string& tail_tolerance,
                                        const std::string& root_tolerance) {
  if (working_digits < 30)
    throw InvalidInputError("PrecisionContext: working_digits must be >= 30");
  Real tail = Real::parse(tail_tolerance, working_digits);
  Real root = Real::parse(root_tolerance, working_digits);
  if (tail.sign() <= 0 || root.sign() <= 0)
    throw InvalidInputError("PrecisionContext: tolerances must be positive");
  // Tails cannot be demanded below representable noise.
  Real floor = pow(Real(10L, working_digits), -working_digits + 5);
  if (tail < floor)
    throw InvalidInputError(
        "PrecisionContext: tail_tolerance below 10^(5-working_digits)");
  if (root < tail)
    throw InvalidInputError(
        "PrecisionContext: root_tolerance must be >= tail_tolerance");
  return PrecisionContext(working_digits, std::move(tail), std::move(root));
}

PrecisionContext PrecisionContext::with_digits(long working_digits) const {
  if (working_digits < 30)
    throw InvalidInputError("PrecisionContext: working_digits must be >= 30");
  return PrecisionContext(working_digits,
                          Real::at_digits(tail_tolerance_, working_digits),
                          Real::at_digits(root_tolerance_, working_digits));
}

PrecisionContext PrecisionContext::with_tail_tolerance(const Real& tail) const {
  return PrecisionContext(working_digits_, Real::at_digits(tail, working_digits_),
                          root_tolerance_);
}

namespace constants {

Real pi(const PrecisionContext& ctx) { return Real::pi(ctx.working_digits()); }

Real e_pi(const PrecisionContext& ctx) { return exp(pi(ctx)); }

Real d_constant(const PrecisionContext& ctx) {
  long d = ctx.working_digits();
  Real p = Real::pi(d);
  return Real(1L, d) / 2 + log(Real(2L, d)) + p * p / 8;
}

}  // namespace constants

}  // namespace ptheta
