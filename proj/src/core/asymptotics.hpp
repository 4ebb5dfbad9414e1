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

#ifndef PTHETA_CORE_ASYMPTOTICS_HPP
#define PTHETA_CORE_ASYMPTOTICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/context.hpp"
#include "core/real.hpp"

namespace ptheta::asymptotics {

enum class Kind { qtilde, y, rtilde, z };

/// Leading-order models of the four sequences:
///   qtilde/rtilde:  1 - pi/2j + (log j)/8j^2 + c/j^2
///   y/z:            -e^pi * exp(-(log j)/4j + c/j)
/// where c is b, b*, alpha or alpha* according to the kind.
struct Model {
  Kind kind = Kind::qtilde;
  std::optional<Real> b;
  std::optional<Real> b_star;
  std::optional<Real> alpha;
  std::optional<Real> alpha_star;
};

/// Formula value with o-terms dropped. Throws InvalidInputError when the
/// constant the kind needs is absent.
Real model_eval(const Model& model, long index, const PrecisionContext& ctx);

/// alpha = -pi/4 - 2b + pi^2/4 (same affine map links b* to alpha*).
Real alpha_from_b(const Real& b);

struct ReparamDiagnostics {
  long s = 0;
  Real h_s;  // s (1 - q_s)
  Real d_s;  // h_s - pi/2
  Real g_s;  // d_s + (log s)/8s
};

struct FitResult {
  std::string constant_name;  // "b", "b*", "alpha", "alpha*"
  std::vector<std::pair<long, Real>> per_index_estimates;
  Real extrapolated;
  std::pair<double, double> paper_interval;
  bool in_interval = false;  // against paper_interval +- slack 0.1
  std::vector<ReparamDiagnostics> diagnostics;  // filled for qtilde/rtilde
};

/// Per-index constant estimates from a computed sequence, extrapolated by a
/// last-quartile tail average with one Richardson step in 1/j.
///
/// Requires at least 10 entries, all with index >= 20. Throws
/// DegenerateSequenceError when the tail estimates spread instead of
/// settling.
FitResult extract_constant(const std::vector<std::pair<long, Real>>& seq,
                           Kind kind, const PrecisionContext& ctx);

}  // namespace ptheta::asymptotics

#endif  // PTHETA_CORE_ASYMPTOTICS_HPP
