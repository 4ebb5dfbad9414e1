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

#ifndef PTHETA_CORE_PSI_HPP
#define PTHETA_CORE_PSI_HPP

#include "core/context.hpp"
#include "core/real.hpp"

namespace ptheta::psi {

enum class Route { series, product };

struct PsiValue {
  Real q;
  Real psi;
  Route via = Route::series;
};

/// psi(q) = 1 + 2 sum_{j>=1} (-1)^j q^{j^2}  =  prod_{j>=1} (1-q^j)/(1+q^j).
///
/// The series route pads precision by pi^2/(4(1-q)) nats of cancellation;
/// the product route is cancellation-free. Both reject q in the flat region
/// q >= 1 - 10^(-working_digits/4) with a precision-budget error.
PsiValue eval(const Real& q, Route via, const PrecisionContext& ctx);

/// log psi(q) = -2 sum_{k>=0} q^{2k+1} / ((2k+1)(1-q^{2k+1})),
/// cancellation-free for any q in (0,1); basis of tau and of the psi values
/// deep in the flat region.
Real log_psi(const Real& q, const PrecisionContext& ctx);

/// lambda_s(q) = sum_{j>=2s} (-1)^j q^{j^2/2}; absolute tail tolerance.
Real lambda_s(const Real& q, int s, const PrecisionContext& ctx);

/// chi_s(q) = lambda_s(q) / q^{2s^2} = sum_{j>=0} (-1)^j q^{(j^2+4js)/2};
/// leading term 1, so the absolute tolerance is also relative.
Real chi_s(const Real& q, int s, const PrecisionContext& ctx);

/// zeta_k(q) = q^{2k+1}(1-q) / ((2k+1)(1-q^{2k+1})); tau = 2 sum_k zeta_k.
Real zeta_k(const Real& q, long k, const PrecisionContext& ctx);

/// h(q) = 2 sum_{k>=0} q^{k+1}/(2k+1)^2 (geometric-ratio tail bound, which
/// is ratio q rather than 1/2, hence its own summation).
Real h_series(const Real& q, const PrecisionContext& ctx);

/// h2(q) = 2 sum_{k>=0} q^{k+1}/((2k+1)^2 (2k+2)); cross-check companion of
/// the closed-form split of h. Feasible for q <= ~0.999 at default digits.
Real h2_series(const Real& q, const PrecisionContext& ctx);

/// tau(q) = (q-1) log psi(q) and its comparison bundle.
struct TauBundle {
  Real q;
  Real tau;
  Real h;      // majorant series
  Real h1;     // closed form (1+sqrt q)log(1+sqrt q) + (1-sqrt q)log(1-sqrt q)
  Real h2;     // h - h1
  Real K_est;  // (pi^2/4 + (1/2)(1-q)log(1-q) - tau) / (1-q)
};

TauBundle tau_bundle(const Real& q, const PrecisionContext& ctx);

}  // namespace ptheta::psi

#endif  // PTHETA_CORE_PSI_HPP
