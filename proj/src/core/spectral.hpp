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

#ifndef PTHETA_CORE_SPECTRAL_HPP
#define PTHETA_CORE_SPECTRAL_HPP

#include <vector>

#include "core/context.hpp"
#include "core/real.hpp"

namespace ptheta::spectral {

/// Root of psi(sqrt q) = lambda_s(q) on (0,1), i.e. of theta(q, u_s) = 0
/// with u_s = -q^{-2s+1/2}; solved in log form, which stays conditioned
/// arbitrarily close to q = 1.
struct RTildeRecord {
  int s = 0;
  Real r_tilde;
  Real z;        // -r_tilde^{-2s+1/2} (equals u_s at the root)
  Real u;        // alias of z, kept for symmetry with v
  Real v;        // -r_tilde^{-2s-1/2}
  Real residual; // |psi(sqrt r) - lambda_s(r)|
  bool flagged_multiple = false;  // coarse scan saw more than one crossing
};

RTildeRecord r_tilde(int s, const PrecisionContext& ctx);

/// Spectral value q_tilde_j with its double zero y_j: bisects
/// g(q) = theta(q, t_j(q)) over the certified bracket [r_tilde_j,
/// r_tilde_{j+1}], relocating the critical point t_j at every step.
struct SpectralRecord {
  int j = 0;
  Real q_tilde;
  Real y;                // t_j(q_tilde), the double zero
  Real theta_residual;   // |theta(q_tilde, y)|
  Real dtheta_residual;  // |theta_x(q_tilde, y)|
  Real d2;               // theta_xx(q_tilde, y) (> 0: the zero is a minimum)
  Real bracket_lo;
  Real bracket_hi;
};

SpectralRecord spectral_value(int j, const PrecisionContext& ctx);

/// Per-index Theorem-style ordering check r_j <= q_j <= r_{j+1}.
struct OrderingReport {
  int j_max = 0;
  std::vector<int> holds;          // 0/1 per j = 1..j_max
  std::vector<int> qt_increasing;  // q_tilde_{j} < q_tilde_{j+1}, per j < j_max
  int threshold = 0;               // smallest j from which the chain holds on
};

OrderingReport verify_ordering(int j_max, const PrecisionContext& ctx);

/// theta(q_j, v_j) vs 1/3, the closed-form Xi_j = sqrt(q)/(1+sqrt(q)) vs 1/2,
/// and theta(q_j, w_j) vs 1.
struct PropositionReport {
  int j = 0;
  Real theta_v;
  Real xi;        // Xi_j
  Real theta_w;
  bool v_above_third = false;
  bool w_equals_one = false;  // within the propagated residual bound
};

PropositionReport proposition_checks(int j, const PrecisionContext& ctx);

/// Root of q -> theta(q, -q^{-2s+1/2}) located directly on the theta side;
/// coincides with r_tilde(s) (the two defining equations are equivalent).
Real direct_theta_u_root(int s, const PrecisionContext& ctx);

}  // namespace ptheta::spectral

#endif  // PTHETA_CORE_SPECTRAL_HPP
