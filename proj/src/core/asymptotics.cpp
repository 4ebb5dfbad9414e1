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

#include "core/asymptotics.hpp"

#include <algorithm>

namespace ptheta::asymptotics {

namespace {

constexpr double kIntervalSlack = 0.1;

const Real& required_constant(const Model& m) {
  const std::optional<Real>* c = nullptr;
  switch (m.kind) {
    case Kind::qtilde: c = &m.b; break;
    case Kind::rtilde: c = &m.b_star; break;
    case Kind::y: c = &m.alpha; break;
    case Kind::z: c = &m.alpha_star; break;
  }
  if (!c->has_value())
    throw InvalidInputError("model_eval: the constant for this kind is missing");
  return **c;
}

const char* constant_name_of(Kind k) {
  switch (k) {
    case Kind::qtilde: return "b";
    case Kind::rtilde: return "b*";
    case Kind::y: return "alpha";
    case Kind::z: return "alpha*";
  }
  return "?";
}

std::pair<double, double> paper_interval_of(Kind k) {
  switch (k) {
    case Kind::qtilde: return {1.735469700, 3.327099360};
    case Kind::rtilde: return {1.735469700, 1.756303033};
    case Kind::y: return {-4.972195782, -1.788936462};
    case Kind::z: return {-1.830603128, -1.788936462};
  }
  return {0, 0};
}

}  // namespace

Real model_eval(const Model& model, long index, const PrecisionContext& ctx) {
  if (index < 1) throw InvalidInputError("model_eval: index must be >= 1");
  const Real& c = required_constant(model);
  long d = ctx.working_digits();
  Real pi = Real::pi(d);
  Real jr(index, d);
  Real lj = log(jr);
  if (model.kind == Kind::qtilde || model.kind == Kind::rtilde)
    return 1 - pi / (2 * index) + lj / (8 * index * index) +
           Real::at_digits(c, d) / (index * index);
  return -exp(pi) * exp(-lj / (4 * index) + Real::at_digits(c, d) / index);
}

Real alpha_from_b(const Real& b) {
  long bits = b.precision_bits();
  long d = static_cast<long>(bits / 3.32) + 4;
  if (d < 30) d = 30;
  Real pi = Real::pi(d);
  return pi * pi / 4 - pi / 4 - Real::at_digits(b, d) * 2;
}

FitResult extract_constant(const std::vector<std::pair<long, Real>>& seq,
                           Kind kind, const PrecisionContext& ctx) {
  if (seq.size() < 10)
    throw InvalidInputError("extract_constant: need at least 10 entries");
  for (const auto& [idx, v] : seq) {
    if (idx < 20)
      throw InvalidInputError("extract_constant: indices must be >= 20");
    if (!v.is_finite())
      throw InvalidInputError("extract_constant: non-finite sequence value");
  }

  long d = ctx.working_digits();
  Real pi = Real::pi(d);
  Real e_pi = exp(pi);

  std::vector<std::pair<long, Real>> data = seq;
  std::sort(data.begin(), data.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  FitResult out;
  out.constant_name = constant_name_of(kind);
  out.paper_interval = paper_interval_of(kind);

  bool second_order = kind == Kind::qtilde || kind == Kind::rtilde;
  for (const auto& [j, v] : data) {
    Real jr(j, d);
    Real lj = log(jr);
    Real c(0L, d);
    if (second_order) {
      // (v - 1 + pi/2j - (log j)/8j^2) * j^2
      c = (Real::at_digits(v, d) - 1 + pi / (2 * j) - lj / (8 * j * j)) *
          (j * j);
      ReparamDiagnostics diag;
      diag.s = j;
      diag.h_s = (1 - Real::at_digits(v, d)) * j;
      diag.d_s = diag.h_s - pi / 2;
      diag.g_s = diag.d_s + lj / (8 * j);
      out.diagnostics.push_back(std::move(diag));
    } else {
      if (!(v < 0L))
        throw InvalidInputError("extract_constant: y/z values must be negative");
      // (log(-v) - pi + (log j)/4j) * j
      c = (log(-Real::at_digits(v, d)) - pi + lj / (4 * j)) * j;
    }
    out.per_index_estimates.emplace_back(j, std::move(c));
  }

  // Tail average over the last quartile plus one Richardson step in 1/j
  // against the preceding quartile: with c(j) = C + beta/j the quartile
  // means satisfy A = C + beta * mean(1/j) exactly.
  size_t n = out.per_index_estimates.size();
  size_t quart = std::max<size_t>(2, n / 4);
  auto block_stats = [&](size_t lo, size_t hi, Real& mean_c, Real& mean_inv,
                         Real& spread) {
    mean_c = Real(0L, d);
    mean_inv = Real(0L, d);
    Real mn = out.per_index_estimates[lo].second;
    Real mx = mn;
    for (size_t i = lo; i < hi; ++i) {
      const auto& [j, c] = out.per_index_estimates[i];
      mean_c += c;
      mean_inv += 1 / Real(j, d);
      mn = min(mn, c);
      mx = max(mx, c);
    }
    mean_c /= static_cast<long>(hi - lo);
    mean_inv /= static_cast<long>(hi - lo);
    spread = mx - mn;
  };

  Real a4(0L, d), x4(0L, d), spread4(0L, d);
  Real a3(0L, d), x3(0L, d), spread3(0L, d);
  block_stats(n - quart, n, a4, x4, spread4);
  block_stats(n - 2 * quart, n - quart, a3, x3, spread3);

  Real tiny = max(abs(a4), Real(1L, d)) * pow(Real(10L, d), -20);
  if (spread4 > spread3 * 10 + tiny)
    throw DegenerateSequenceError(
        "extract_constant: tail estimates spread instead of settling");

  out.extrapolated = (a4 * x3 - a3 * x4) / (x3 - x4);

  double est = out.extrapolated.to_double();
  out.in_interval = est >= out.paper_interval.first - kIntervalSlack &&
                    est <= out.paper_interval.second + kIntervalSlack;
  return out;
}

}  // namespace ptheta::asymptotics
