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

#ifndef PTHETA_CORE_THETA_HPP
#define PTHETA_CORE_THETA_HPP

#include <span>
#include <vector>

#include "core/context.hpp"
#include "core/real.hpp"

namespace ptheta::theta {

/// Evaluation point of theta(q, x) = sum_{j>=0} q^{j(j+1)/2} x^j.
/// Construction rejects q outside the open interval (0, 1).
struct Query {
  Real q;
  Real x;

  Query(Real q_in, Real x_in);
};

/// theta(q, x) with a certified absolute tail bound.
///
/// The alternating series cancels catastrophically for x << -1 and q near 1
/// (peak terms reach exp((ln|x|)^2 / (2 ln(1/q)))); evaluation pads its
/// internal precision by that peak estimate and rounds the result back to
/// the context's working digits.
SeriesResult eval(const Query& query, const PrecisionContext& ctx);

/// First and second x-derivatives, term-wise differentiated, same tail
/// discipline as eval().
SeriesResult eval_dx(const Query& query, const PrecisionContext& ctx);
SeriesResult eval_dxx(const Query& query, const PrecisionContext& ctx);

/// |theta(q,x) - 1 - q x theta(q, qx)|, both sides summed independently at a
/// shared padded precision with tails tightened by the q*x factor, so the
/// result is meaningful down to the tail tolerance.
Real functional_equation_residual(const Query& query, const PrecisionContext& ctx);

enum class ZeroStatus {
  resolved,       // simple real zero, bracketed and refined
  coalesced,      // |theta| at the local minimum is below numeric resolution
  missing_sign_change,  // no real zero at this index for this q
};

struct ZeroRecord {
  int index = 0;  // j in xi_j, rightmost zero is index 1
  ZeroStatus status = ZeroStatus::missing_sign_change;
  Real location;     // xi_j (or the shared minimum for a coalesced pair)
  Real bracket_lo;
  Real bracket_hi;
  Real residual;     // |theta(q, location)|
};

/// The rightmost `count` real zeros xi_1 > xi_2 > ... (all negative).
/// Brackets come from the power-of-q interlacing geometry. Indices whose
/// zeros have become complex are reported with a per-index status instead
/// of failing the whole call.
std::vector<ZeroRecord> real_zeros(const Real& q, int count,
                                   const PrecisionContext& ctx);

enum class CritKind { minimum, maximum };

struct CriticalPointRecord {
  int index = 0;  // s in t_s / w_s
  CritKind kind = CritKind::minimum;
  bool found = false;
  Real location;     // t_s or w_s
  Real theta_value;  // theta(q, location)
};

/// Critical points t_s (minima) and w_s (maxima) for s = 1..s_max, each
/// bracketed between consecutive powers of q so the search works even when
/// the nearby zeros are complex. Order: t_1, w_1, t_2, w_2, ...
std::vector<CriticalPointRecord> critical_points(const Real& q, int s_max,
                                                 const PrecisionContext& ctx);

/// Truncated zero-product prod_j (1 - x / xi_j) over the given records
/// (non-resolved records are skipped).
Real product_eval(const Real& q, const Real& x,
                  std::span<const ZeroRecord> zeros,
                  const PrecisionContext& ctx);

// ---- solver-grade internals (shared with the spectral module) ----

struct CriticalSolve {
  Real location;
  Real theta_value;
  Real d2_value;  // theta_xx at the location
};

/// Locates the index-s critical point of the requested kind, driving
/// |dtheta/dx| below f_target. `warm` may carry an initial guess from a
/// nearby parameter value. Throws BracketError when the sign change is
/// absent (the critical point does not exist at this q).
CriticalSolve locate_critical(const Real& q, int s, CritKind kind,
                              const PrecisionContext& ctx, const Real* warm,
                              const Real& f_target);

}  // namespace ptheta::theta

#endif  // PTHETA_CORE_THETA_HPP
