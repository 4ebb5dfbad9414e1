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

#include "ptheta/ptheta.h"

#include <cstdio>
#include <cstring>
#include <mutex>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/asymptotics.hpp"
#include "core/context.hpp"
#include "core/parallel.hpp"
#include "core/psi.hpp"
#include "core/spectral.hpp"
#include "core/theta.hpp"
#include "core/verify.hpp"

using ptheta::PrecisionContext;
using ptheta::Real;

struct ptf_ctx {
  PrecisionContext cpp;
};

namespace {

thread_local std::string g_last_error;

ptf_status fail(ptf_status s, const char* msg) {
  g_last_error = msg != nullptr ? msg : "";
  return s;
}

// Runs the body, translating exceptions to statuses.
template <typename Fn>
ptf_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PTF_OK;
  } catch (const ptheta::InvalidInputError& e) {
    return fail(PTF_EINVAL, e.what());
  } catch (const ptheta::DomainError& e) {
    return fail(PTF_EDOMAIN, e.what());
  } catch (const ptheta::BracketError& e) {
    return fail(PTF_EBRACKET, e.what());
  } catch (const ptheta::PrecisionBudgetError& e) {
    return fail(PTF_EBUDGET, e.what());
  } catch (const ptheta::DegenerateSequenceError& e) {
    return fail(PTF_EDEGENERATE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PTF_EINVAL, e.what());
  } catch (const std::exception& e) {
    return fail(PTF_EINTERNAL, e.what());
  } catch (...) {
    return fail(PTF_EINTERNAL, "unknown error");
  }
}

ptf_status status_of_exception() {
  try {
    throw;
  } catch (const ptheta::InvalidInputError&) {
    return PTF_EINVAL;
  } catch (const ptheta::DomainError&) {
    return PTF_EDOMAIN;
  } catch (const ptheta::BracketError&) {
    return PTF_EBRACKET;
  } catch (const ptheta::PrecisionBudgetError&) {
    return PTF_EBUDGET;
  } catch (const ptheta::DegenerateSequenceError&) {
    return PTF_EDEGENERATE;
  } catch (...) {
    return PTF_EINTERNAL;
  }
}

const PrecisionContext& ctx_of(const ptf_ctx* ctx) {
  if (ctx == nullptr) throw ptheta::InvalidInputError("null context");
  return ctx->cpp;
}

Real parse_arg(const char* text, const char* what, const PrecisionContext& c) {
  if (text == nullptr)
    throw ptheta::InvalidInputError(std::string("null argument: ") + what);
  return Real::parse(text, c.working_digits() + 10);
}

void write_str(const std::string& s, char* buf, size_t len, const char* what) {
  if (buf == nullptr) return;
  if (s.size() + 1 > len)
    throw ptheta::InvalidInputError(std::string("buffer too small for ") + what);
  std::memcpy(buf, s.c_str(), s.size() + 1);
}

void write_num(const Real& v, const PrecisionContext& c, char* buf, size_t len,
               const char* what) {
  write_str(v.str(c.working_digits()), buf, len, what);
}

void write_num_fixed(const Real& v, const PrecisionContext& c,
                     char (&buf)[PTF_NUM_LEN]) {
  std::string s = v.str(c.working_digits());
  std::memcpy(buf, s.c_str(), s.size() + 1);
}

}  // namespace

extern "C" {

ptf_ctx* ptf_ctx_new(int working_digits, const char* tail_tolerance,
                     const char* root_tolerance) {
  try {
    if (working_digits > PTF_MAX_DIGITS) {
      g_last_error = "working_digits above PTF_MAX_DIGITS";
      return nullptr;
    }
    PrecisionContext c = PrecisionContext::make(
        working_digits,
        tail_tolerance != nullptr ? tail_tolerance : "1e-40",
        root_tolerance != nullptr ? root_tolerance : "1e-30");
    return new ptf_ctx{std::move(c)};
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

void ptf_ctx_free(ptf_ctx* ctx) { delete ctx; }

int ptf_ctx_digits(const ptf_ctx* ctx) {
  return ctx != nullptr ? static_cast<int>(ctx->cpp.working_digits()) : 0;
}

const char* ptf_status_str(ptf_status s) {
  switch (s) {
    case PTF_OK: return "ok";
    case PTF_EINVAL: return "invalid argument";
    case PTF_EDOMAIN: return "domain error";
    case PTF_EBRACKET: return "bracket error";
    case PTF_EBUDGET: return "precision budget exceeded";
    case PTF_EDEGENERATE: return "degenerate sequence";
    case PTF_EINTERNAL: return "internal error";
  }
  return "unknown";
}

const char* ptf_last_error(void) { return g_last_error.c_str(); }

const char* ptf_version(void) { return "1.0.0"; }

ptf_status ptf_theta_eval(const ptf_ctx* ctx, const char* q, const char* x,
                          int deriv, char* value, size_t value_len,
                          char* tail_bound, size_t tail_len,
                          long* terms_used) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    if (deriv < 0 || deriv > 2)
      throw ptheta::InvalidInputError("deriv must be 0, 1 or 2");
    ptheta::theta::Query query(parse_arg(q, "q", c), parse_arg(x, "x", c));
    ptheta::SeriesResult r =
        deriv == 0   ? ptheta::theta::eval(query, c)
        : deriv == 1 ? ptheta::theta::eval_dx(query, c)
                     : ptheta::theta::eval_dxx(query, c);
    write_num(r.value, c, value, value_len, "value");
    write_num(r.tail_bound, c, tail_bound, tail_len, "tail_bound");
    if (terms_used != nullptr) *terms_used = r.terms_used;
  });
}

ptf_status ptf_theta_fe_residual(const ptf_ctx* ctx, const char* q,
                                 const char* x, char* residual,
                                 size_t residual_len) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    ptheta::theta::Query query(parse_arg(q, "q", c), parse_arg(x, "x", c));
    Real r = ptheta::theta::functional_equation_residual(query, c);
    write_num(r, c, residual, residual_len, "residual");
  });
}

ptf_status ptf_real_zeros(const ptf_ctx* ctx, const char* q, int count,
                          ptf_zero_row* rows) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    if (rows == nullptr) throw ptheta::InvalidInputError("null rows");
    auto zeros = ptheta::theta::real_zeros(parse_arg(q, "q", c), count, c);
    for (size_t i = 0; i < zeros.size(); ++i) {
      const auto& z = zeros[i];
      ptf_zero_row& r = rows[i];
      r.index = z.index;
      r.status = z.status == ptheta::theta::ZeroStatus::resolved
                     ? PTF_ZERO_RESOLVED
                     : (z.status == ptheta::theta::ZeroStatus::coalesced
                            ? PTF_ZERO_COALESCED
                            : PTF_ZERO_MISSING);
      write_num_fixed(z.location, c, r.location);
      write_num_fixed(z.bracket_lo, c, r.bracket_lo);
      write_num_fixed(z.bracket_hi, c, r.bracket_hi);
      write_num_fixed(z.residual, c, r.residual);
    }
  });
}

ptf_status ptf_critical_points(const ptf_ctx* ctx, const char* q, int s_max,
                               ptf_critical_row* rows) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    if (rows == nullptr) throw ptheta::InvalidInputError("null rows");
    auto crits = ptheta::theta::critical_points(parse_arg(q, "q", c), s_max, c);
    for (size_t i = 0; i < crits.size(); ++i) {
      const auto& cp = crits[i];
      ptf_critical_row& r = rows[i];
      r.index = cp.index;
      r.is_minimum = cp.kind == ptheta::theta::CritKind::minimum ? 1 : 0;
      r.found = cp.found ? 1 : 0;
      if (cp.found) {
        write_num_fixed(cp.location, c, r.location);
        write_num_fixed(cp.theta_value, c, r.theta_value);
      } else {
        r.location[0] = '\0';
        r.theta_value[0] = '\0';
      }
    }
  });
}

ptf_status ptf_psi_eval(const ptf_ctx* ctx, const char* q, int route,
                        char* value, size_t value_len) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    if (route != 0 && route != 1)
      throw ptheta::InvalidInputError("route must be 0 (series) or 1 (product)");
    ptheta::psi::PsiValue v = ptheta::psi::eval(
        parse_arg(q, "q", c),
        route == 0 ? ptheta::psi::Route::series : ptheta::psi::Route::product,
        c);
    write_num(v.psi, c, value, value_len, "value");
  });
}

ptf_status ptf_lambda_chi(const ptf_ctx* ctx, const char* q, int s,
                          char* lambda, size_t lambda_len, char* chi,
                          size_t chi_len) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    Real qv = parse_arg(q, "q", c);
    write_num(ptheta::psi::lambda_s(qv, s, c), c, lambda, lambda_len, "lambda");
    write_num(ptheta::psi::chi_s(qv, s, c), c, chi, chi_len, "chi");
  });
}

ptf_status ptf_zeta_k(const ptf_ctx* ctx, const char* q, long k, char* value,
                      size_t value_len) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    write_num(ptheta::psi::zeta_k(parse_arg(q, "q", c), k, c), c, value,
              value_len, "value");
  });
}

ptf_status ptf_tau_bundle(const ptf_ctx* ctx, const char* q, ptf_tau_row* row) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    if (row == nullptr) throw ptheta::InvalidInputError("null row");
    ptheta::psi::TauBundle tb = ptheta::psi::tau_bundle(parse_arg(q, "q", c), c);
    write_num_fixed(tb.q, c, row->q);
    write_num_fixed(tb.tau, c, row->tau);
    write_num_fixed(tb.h, c, row->h);
    write_num_fixed(tb.h1, c, row->h1);
    write_num_fixed(tb.h2, c, row->h2);
    write_num_fixed(tb.K_est, c, row->k_est);
  });
}

ptf_status ptf_rtilde_range(const ptf_ctx* ctx, int s_lo, int s_hi,
                            int parallelism, ptf_rtilde_row* rows) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    if (rows == nullptr) throw ptheta::InvalidInputError("null rows");
    if (s_lo < 1 || s_hi < s_lo)
      throw ptheta::InvalidInputError("bad s range");
    int n_fail = 0;
    std::mutex mu;
    ptheta::parallel_for_indices(s_lo, s_hi, parallelism, [&](long s) {
      ptf_rtilde_row& r = rows[s - s_lo];
      r.s = static_cast<int>(s);
      try {
        ptheta::spectral::RTildeRecord rec =
            ptheta::spectral::r_tilde(static_cast<int>(s), c);
        r.status = 0;
        r.flagged_multiple = rec.flagged_multiple ? 1 : 0;
        write_num_fixed(rec.r_tilde, c, r.r_tilde);
        write_num_fixed(rec.z, c, r.z);
        write_num_fixed(rec.u, c, r.u);
        write_num_fixed(rec.v, c, r.v);
        write_num_fixed(rec.residual, c, r.residual);
      } catch (...) {
        r.status = status_of_exception();
        r.flagged_multiple = 0;
        r.r_tilde[0] = r.z[0] = r.u[0] = r.v[0] = r.residual[0] = '\0';
        std::lock_guard<std::mutex> g(mu);
        ++n_fail;
      }
    });
    if (n_fail == s_hi - s_lo + 1)
      throw ptheta::BracketError("every r_tilde row failed");
  });
}

ptf_status ptf_spectral_range(const ptf_ctx* ctx, int j_lo, int j_hi,
                              int parallelism, ptf_spectral_row* rows) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    if (rows == nullptr) throw ptheta::InvalidInputError("null rows");
    if (j_lo < 1 || j_hi < j_lo)
      throw ptheta::InvalidInputError("bad j range");
    int n_fail = 0;
    std::mutex mu;
    ptheta::parallel_for_indices(j_lo, j_hi, parallelism, [&](long j) {
      ptf_spectral_row& r = rows[j - j_lo];
      r.j = static_cast<int>(j);
      try {
        ptheta::spectral::SpectralRecord rec =
            ptheta::spectral::spectral_value(static_cast<int>(j), c);
        r.status = 0;
        write_num_fixed(rec.q_tilde, c, r.q_tilde);
        write_num_fixed(rec.y, c, r.y);
        write_num_fixed(rec.theta_residual, c, r.theta_residual);
        write_num_fixed(rec.dtheta_residual, c, r.dtheta_residual);
        write_num_fixed(rec.bracket_lo, c, r.bracket_lo);
        write_num_fixed(rec.bracket_hi, c, r.bracket_hi);
      } catch (...) {
        r.status = status_of_exception();
        r.q_tilde[0] = r.y[0] = r.theta_residual[0] = r.dtheta_residual[0] =
            r.bracket_lo[0] = r.bracket_hi[0] = '\0';
        std::lock_guard<std::mutex> g(mu);
        ++n_fail;
      }
    });
    if (n_fail == j_hi - j_lo + 1)
      throw ptheta::BracketError("every spectral row failed");
  });
}

ptf_status ptf_verify_ordering(const ptf_ctx* ctx, int j_max, int parallelism,
                               ptf_ordering_row* rows, int* threshold) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    if (rows == nullptr) throw ptheta::InvalidInputError("null rows");
    // Warm the cache in parallel; the report itself is sequential.
    ptheta::parallel_for_indices(1, j_max + 1, parallelism, [&](long s) {
      ptheta::spectral::r_tilde(static_cast<int>(s), c);
    });
    ptheta::parallel_for_indices(1, j_max, parallelism, [&](long j) {
      ptheta::spectral::spectral_value(static_cast<int>(j), c);
    });
    ptheta::spectral::OrderingReport rep =
        ptheta::spectral::verify_ordering(j_max, c);
    for (int j = 1; j <= j_max; ++j) {
      rows[j - 1].j = j;
      rows[j - 1].holds = rep.holds[static_cast<size_t>(j - 1)];
      rows[j - 1].qt_increasing =
          j < j_max ? rep.qt_increasing[static_cast<size_t>(j - 1)] : 1;
    }
    if (threshold != nullptr) *threshold = rep.threshold;
  });
}

ptf_status ptf_verify(const ptf_ctx* ctx, const char* suite, int j_max,
                      int parallelism, ptf_check_row* rows, int max_rows,
                      int* n_rows, int* all_pass) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    if (suite == nullptr) throw ptheta::InvalidInputError("null suite");
    auto checks = ptheta::verify::run_suite(suite, j_max, parallelism, c);
    int n = 0;
    int ok = 1;
    for (const auto& ch : checks) {
      if (!ch.pass) ok = 0;
      if (rows != nullptr && n < max_rows) {
        ptf_check_row& r = rows[n];
        std::snprintf(r.name, sizeof(r.name), "%s", ch.name.c_str());
        r.grid_size = ch.grid_size;
        r.worst_margin = ch.worst_margin;
        r.pass = ch.pass ? 1 : 0;
      }
      ++n;
    }
    if (n_rows != nullptr) *n_rows = n;
    if (all_pass != nullptr) *all_pass = ok;
  });
}

namespace {

ptheta::asymptotics::Kind kind_of(ptf_fit_kind k) {
  switch (k) {
    case PTF_FIT_QTILDE: return ptheta::asymptotics::Kind::qtilde;
    case PTF_FIT_Y: return ptheta::asymptotics::Kind::y;
    case PTF_FIT_RTILDE: return ptheta::asymptotics::Kind::rtilde;
    case PTF_FIT_Z: return ptheta::asymptotics::Kind::z;
  }
  throw ptheta::InvalidInputError("unknown fit kind");
}

}  // namespace

ptf_status ptf_fit(const ptf_ctx* ctx, ptf_fit_kind kind, long index_lo,
                   long index_hi, int parallelism, const char* synthetic,
                   ptf_fit_row* rows, ptf_fit_summary* summary) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    if (rows == nullptr || summary == nullptr)
      throw ptheta::InvalidInputError("null output");
    if (index_lo < 1 || index_hi < index_lo)
      throw ptheta::InvalidInputError("bad index range");
    ptheta::asymptotics::Kind k = kind_of(kind);
    long n = index_hi - index_lo + 1;
    std::vector<std::pair<long, Real>> seq(static_cast<size_t>(n),
                                           {0, Real(0L, 30)});

    if (synthetic != nullptr) {
      // "name=value" with the constant the kind needs.
      std::string s(synthetic);
      auto eq = s.find('=');
      if (eq == std::string::npos)
        throw ptheta::InvalidInputError("synthetic must look like b=2.0");
      Real cval = Real::parse(s.substr(eq + 1), c.working_digits());
      ptheta::asymptotics::Model m;
      m.kind = k;
      m.b = cval;
      m.b_star = cval;
      m.alpha = cval;
      m.alpha_star = cval;
      for (long i = 0; i < n; ++i)
        seq[static_cast<size_t>(i)] = {
            index_lo + i, ptheta::asymptotics::model_eval(m, index_lo + i, c)};
    } else if (kind == PTF_FIT_RTILDE || kind == PTF_FIT_Z) {
      ptheta::parallel_for_indices(index_lo, index_hi, parallelism, [&](long s) {
        ptheta::spectral::RTildeRecord rec =
            ptheta::spectral::r_tilde(static_cast<int>(s), c);
        seq[static_cast<size_t>(s - index_lo)] = {
            s, kind == PTF_FIT_RTILDE ? rec.r_tilde : rec.z};
      });
    } else {
      ptheta::parallel_for_indices(index_lo, index_hi + 1, parallelism,
                                   [&](long s) {
                                     ptheta::spectral::r_tilde(
                                         static_cast<int>(s), c);
                                   });
      ptheta::parallel_for_indices(index_lo, index_hi, parallelism, [&](long j) {
        ptheta::spectral::SpectralRecord rec =
            ptheta::spectral::spectral_value(static_cast<int>(j), c);
        seq[static_cast<size_t>(j - index_lo)] = {
            j, kind == PTF_FIT_QTILDE ? rec.q_tilde : rec.y};
      });
    }

    ptheta::asymptotics::FitResult fit =
        ptheta::asymptotics::extract_constant(seq, k, c);

    bool second_order = kind == PTF_FIT_QTILDE || kind == PTF_FIT_RTILDE;
    for (long i = 0; i < n; ++i) {
      ptf_fit_row& r = rows[i];
      r.index = fit.per_index_estimates[static_cast<size_t>(i)].first;
      write_num_fixed(seq[static_cast<size_t>(i)].second, c, r.value);
      write_num_fixed(fit.per_index_estimates[static_cast<size_t>(i)].second, c,
                      r.estimate);
      if (second_order) {
        const auto& diag = fit.diagnostics[static_cast<size_t>(i)];
        write_num_fixed(diag.h_s, c, r.h_s);
        write_num_fixed(diag.d_s, c, r.d_s);
        write_num_fixed(diag.g_s, c, r.g_s);
      } else {
        r.h_s[0] = r.d_s[0] = r.g_s[0] = '\0';
      }
    }
    std::snprintf(summary->constant_name, sizeof(summary->constant_name), "%s",
                  fit.constant_name.c_str());
    write_num_fixed(fit.extrapolated, c, summary->extrapolated);
    summary->interval_lo = fit.paper_interval.first;
    summary->interval_hi = fit.paper_interval.second;
    summary->in_interval = fit.in_interval ? 1 : 0;
  });
}

ptf_status ptf_model_eval(const ptf_ctx* ctx, ptf_fit_kind kind,
                          const char* constant, long index, char* value,
                          size_t value_len) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    Real cval = parse_arg(constant, "constant", c);
    ptheta::asymptotics::Model m;
    m.kind = kind_of(kind);
    m.b = cval;
    m.b_star = cval;
    m.alpha = cval;
    m.alpha_star = cval;
    write_num(ptheta::asymptotics::model_eval(m, index, c), c, value, value_len,
              "value");
  });
}

ptf_status ptf_alpha_from_b(const ptf_ctx* ctx, const char* b, char* alpha,
                            size_t alpha_len) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    Real bv = parse_arg(b, "b", c);
    write_num(ptheta::asymptotics::alpha_from_b(Real::at_digits(bv, c.working_digits())),
              c, alpha, alpha_len, "alpha");
  });
}

}  // extern "C"
