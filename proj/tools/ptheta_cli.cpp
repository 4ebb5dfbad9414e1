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

// ptheta command line: evaluate the partial theta function, tabulate its
// zeros, critical points, spectral values and companion sequences, extract
// asymptotic constants, and run the verification suites. Links only the C
// API of libptheta.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric
// error (precision budget, missing bracket, degenerate fit).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptheta/ptheta.h"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct CommonOpts {
  int precision = 60;
  std::string format = "csv";
  std::string out_path;
  int parallelism = 1;
  bool no_timestamp = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--precision", o.precision, "working decimal digits")
      ->envname("THETA_PRECISION")
      ->check(CLI::Range(30, PTF_MAX_DIGITS));
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out_path, "write output to this file");
  cmd->add_option("--parallelism", o.parallelism, "worker threads (0 = auto)");
  cmd->add_flag("--no-timestamp", o.no_timestamp,
                "omit the timestamp header line");
}

struct Range {
  long lo = 0;
  long hi = 0;
};

// "7" or "2..15"
Range parse_range(const std::string& text) {
  Range r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stol(text);
    } else {
      r.lo = std::stol(text.substr(0, dots));
      r.hi = std::stol(text.substr(dots + 2));
    }
  } catch (...) {
    throw CLI::ValidationError("range", "expected N or N..M, got '" + text + "'");
  }
  if (r.lo < 1 || r.hi < r.lo)
    throw CLI::ValidationError("range", "need 1 <= lo <= hi in '" + text + "'");
  return r;
}

// Simple column table with meta lines; rendered as CSV or JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> meta;
};

std::string now_iso8601() {
  std::time_t t = std::time(nullptr);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

void render(const Table& t, const CommonOpts& o) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      std::cerr << "cannot open output file: " << o.out_path << "\n";
      std::exit(kExitUsage);
    }
    os = &file;
  }
  if (o.format == "json") {
    nlohmann::ordered_json j;
    if (!o.no_timestamp) j["generated_at"] = now_iso8601();
    for (const auto& [k, v] : t.meta) j[k] = v;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (size_t i = 0; i < t.columns.size(); ++i)
        obj[t.columns[i]] = i < row.size() ? row[i] : "";
      j["rows"].push_back(std::move(obj));
    }
    *os << j.dump(2) << "\n";
    return;
  }
  if (!o.no_timestamp) *os << "# generated_at=" << now_iso8601() << "\n";
  for (const auto& [k, v] : t.meta) *os << "# " << k << "=" << v << "\n";
  for (size_t i = 0; i < t.columns.size(); ++i)
    *os << t.columns[i] << (i + 1 < t.columns.size() ? "," : "\n");
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < t.columns.size(); ++i)
      *os << (i < row.size() ? row[i] : "")
          << (i + 1 < t.columns.size() ? "," : "\n");
  }
}

struct CtxDeleter {
  void operator()(ptf_ctx* c) const { ptf_ctx_free(c); }
};
using CtxPtr = std::unique_ptr<ptf_ctx, CtxDeleter>;

CtxPtr make_ctx(const CommonOpts& o) {
  CtxPtr ctx(ptf_ctx_new(o.precision, nullptr, nullptr));
  if (!ctx) {
    std::cerr << "context error: " << ptf_last_error() << "\n";
    std::exit(kExitUsage);
  }
  return ctx;
}

int exit_code_of(ptf_status s) {
  switch (s) {
    case PTF_OK: return 0;
    case PTF_EINVAL:
    case PTF_EDOMAIN: return kExitUsage;
    default: return kExitNumeric;
  }
}

[[noreturn]] void die(ptf_status s) {
  std::cerr << "error: " << ptf_status_str(s) << ": " << ptf_last_error()
            << "\n";
  std::exit(exit_code_of(s));
}

// ------------------------------------------------------------- commands --

int cmd_eval(const CommonOpts& o, const std::string& q, const std::string& x,
             int deriv) {
  CtxPtr ctx = make_ctx(o);
  char value[PTF_NUM_LEN], tail[PTF_NUM_LEN];
  long terms = 0;
  ptf_status s = ptf_theta_eval(ctx.get(), q.c_str(), x.c_str(), deriv, value,
                                sizeof(value), tail, sizeof(tail), &terms);
  if (s != PTF_OK) die(s);
  Table t;
  t.columns = {"value", "tail_bound", "terms_used"};
  t.rows.push_back({value, tail, std::to_string(terms)});
  render(t, o);
  return 0;
}

int cmd_zeros(const CommonOpts& o, const std::string& q, const Range& r) {
  CtxPtr ctx = make_ctx(o);
  std::vector<ptf_zero_row> rows(static_cast<size_t>(r.hi));
  ptf_status s =
      ptf_real_zeros(ctx.get(), q.c_str(), static_cast<int>(r.hi), rows.data());
  if (s != PTF_OK) die(s);
  Table t;
  t.columns = {"index", "location", "bracket_lo", "bracket_hi", "residual",
               "status"};
  for (long i = r.lo; i <= r.hi; ++i) {
    const auto& z = rows[static_cast<size_t>(i - 1)];
    const char* st = z.status == PTF_ZERO_RESOLVED
                         ? "resolved"
                         : (z.status == PTF_ZERO_COALESCED ? "coalesced"
                                                           : "missing");
    t.rows.push_back({std::to_string(z.index), z.location, z.bracket_lo,
                      z.bracket_hi, z.residual, st});
  }
  render(t, o);
  return 0;
}

int cmd_critical(const CommonOpts& o, const std::string& q, const Range& r) {
  CtxPtr ctx = make_ctx(o);
  std::vector<ptf_critical_row> rows(2 * static_cast<size_t>(r.hi));
  ptf_status s = ptf_critical_points(ctx.get(), q.c_str(),
                                     static_cast<int>(r.hi), rows.data());
  if (s != PTF_OK) die(s);
  Table t;
  t.columns = {"index", "kind", "location", "theta_value", "found"};
  for (const auto& c : rows) {
    if (c.index < r.lo) continue;
    t.rows.push_back({std::to_string(c.index), c.is_minimum ? "min" : "max",
                      c.location, c.theta_value, c.found ? "1" : "0"});
  }
  render(t, o);
  return 0;
}

// "0.5" or "0.1..0.9:17"
std::vector<std::string> parse_q_grid(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return {text};
  auto colon = text.find(':', dots);
  if (colon == std::string::npos)
    throw CLI::ValidationError("grid", "expected lo..hi:n, got '" + text + "'");
  double lo = std::stod(text.substr(0, dots));
  double hi = std::stod(text.substr(dots + 2, colon - dots - 2));
  long n = std::stol(text.substr(colon + 1));
  if (n < 2 || !(lo < hi))
    throw CLI::ValidationError("grid", "need lo < hi and n >= 2");
  std::vector<std::string> out;
  char buf[64];
  for (long i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", lo + (hi - lo) * i / (n - 1));
    out.emplace_back(buf);
  }
  return out;
}

int cmd_psi_table(const CommonOpts& o, const std::string& grid_spec) {
  CtxPtr ctx = make_ctx(o);
  Table t;
  t.columns = {"q", "psi_series", "psi_product", "tau", "h", "h1", "h2",
               "k_est", "error"};
  int n_err = 0;
  std::vector<std::string> grid = parse_q_grid(grid_spec);
  for (const std::string& q : grid) {
    char ps[PTF_NUM_LEN], pp[PTF_NUM_LEN];
    ptf_tau_row tau;
    ptf_status s1 = ptf_psi_eval(ctx.get(), q.c_str(), 0, ps, sizeof(ps));
    ptf_status s2 = ptf_psi_eval(ctx.get(), q.c_str(), 1, pp, sizeof(pp));
    ptf_status s3 = ptf_tau_bundle(ctx.get(), q.c_str(), &tau);
    if (s1 != PTF_OK || s2 != PTF_OK || s3 != PTF_OK) {
      ++n_err;
      ptf_status bad = s1 != PTF_OK ? s1 : (s2 != PTF_OK ? s2 : s3);
      if (bad == PTF_EINVAL || bad == PTF_EDOMAIN) die(bad);
      t.rows.push_back({q, "", "", "", "", "", "", "", ptf_status_str(bad)});
      continue;
    }
    t.rows.push_back({q, ps, pp, tau.tau, tau.h, tau.h1, tau.h2, tau.k_est, ""});
  }
  render(t, o);
  return n_err == static_cast<int>(grid.size()) ? kExitNumeric : 0;
}

int cmd_rtilde(const CommonOpts& o, const Range& r) {
  CtxPtr ctx = make_ctx(o);
  std::vector<ptf_rtilde_row> rows(static_cast<size_t>(r.hi - r.lo + 1));
  ptf_status s = ptf_rtilde_range(ctx.get(), static_cast<int>(r.lo),
                                  static_cast<int>(r.hi), o.parallelism,
                                  rows.data());
  if (s != PTF_OK) die(s);
  Table t;
  t.columns = {"s", "r_tilde", "z", "u", "v", "residual", "flagged", "error"};
  for (const auto& row : rows) {
    t.rows.push_back({std::to_string(row.s), row.r_tilde, row.z, row.u, row.v,
                      row.residual, row.flagged_multiple ? "1" : "0",
                      row.status == 0
                          ? ""
                          : ptf_status_str(static_cast<ptf_status>(row.status))});
  }
  render(t, o);
  return 0;
}

int cmd_spectral(const CommonOpts& o, const Range& r) {
  CtxPtr ctx = make_ctx(o);
  std::vector<ptf_spectral_row> rows(static_cast<size_t>(r.hi - r.lo + 1));
  ptf_status s = ptf_spectral_range(ctx.get(), static_cast<int>(r.lo),
                                    static_cast<int>(r.hi), o.parallelism,
                                    rows.data());
  if (s != PTF_OK) die(s);
  Table t;
  t.columns = {"j", "q_tilde", "y", "theta_residual", "dtheta_residual",
               "error"};
  for (const auto& row : rows) {
    t.rows.push_back({std::to_string(row.j), row.q_tilde, row.y,
                      row.theta_residual, row.dtheta_residual,
                      row.status == 0
                          ? ""
                          : ptf_status_str(static_cast<ptf_status>(row.status))});
  }
  render(t, o);
  return 0;
}

int cmd_fit(const CommonOpts& o, const std::string& kind_name, const Range& r,
            const std::string& synthetic) {
  CtxPtr ctx = make_ctx(o);
  std::map<std::string, ptf_fit_kind> kinds = {{"qtilde", PTF_FIT_QTILDE},
                                               {"y", PTF_FIT_Y},
                                               {"rtilde", PTF_FIT_RTILDE},
                                               {"z", PTF_FIT_Z}};
  auto it = kinds.find(kind_name);
  if (it == kinds.end()) {
    std::cerr << "unknown fit kind: " << kind_name << "\n";
    return kExitUsage;
  }
  std::vector<ptf_fit_row> rows(static_cast<size_t>(r.hi - r.lo + 1));
  ptf_fit_summary summary;
  ptf_status s =
      ptf_fit(ctx.get(), it->second, r.lo, r.hi, o.parallelism,
              synthetic.empty() ? nullptr : synthetic.c_str(), rows.data(),
              &summary);
  if (s != PTF_OK) die(s);
  Table t;
  t.meta = {{"constant", summary.constant_name},
            {"extrapolated", summary.extrapolated},
            {"interval_lo", std::to_string(summary.interval_lo)},
            {"interval_hi", std::to_string(summary.interval_hi)},
            {"slack", "0.1"},
            {"in_interval", summary.in_interval ? "1" : "0"}};
  t.columns = {"index", "value", "estimate", "h_s", "d_s", "g_s"};
  for (const auto& row : rows)
    t.rows.push_back({std::to_string(row.index), row.value, row.estimate,
                      row.h_s, row.d_s, row.g_s});
  render(t, o);
  return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& suite, int j_max) {
  CtxPtr ctx = make_ctx(o);
  std::vector<ptf_check_row> rows(64);
  int n_rows = 0, all_pass = 0;
  ptf_status s =
      ptf_verify(ctx.get(), suite.c_str(), j_max, o.parallelism, rows.data(),
                 static_cast<int>(rows.size()), &n_rows, &all_pass);
  if (s != PTF_OK) die(s);
  Table t;
  t.meta = {{"suite", suite},
            {"j_max", std::to_string(j_max)},
            {"all_pass", all_pass ? "1" : "0"}};
  t.columns = {"name", "grid_size", "worst_margin", "pass"};
  char margin[64];
  for (int i = 0; i < n_rows && i < static_cast<int>(rows.size()); ++i) {
    std::snprintf(margin, sizeof(margin), "%.6g", rows[i].worst_margin);
    t.rows.push_back({rows[i].name, std::to_string(rows[i].grid_size), margin,
                      rows[i].pass ? "1" : "0"});
  }
  render(t, o);
  return all_pass ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial theta function toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string q_arg, x_arg, range_arg = "1", grid_arg, kind_arg, suite_arg;
  std::string synthetic_arg;
  int deriv = 0, j_max = 10;

  CLI::App* eval = app.add_subcommand("eval", "evaluate theta(q, x)");
  add_common(eval, opts);
  eval->add_option("--q", q_arg, "q in (0,1)")->required();
  eval->add_option("--x", x_arg, "x")->required();
  eval->add_option("--deriv", deriv, "x-derivative order (0, 1 or 2)")
      ->check(CLI::Range(0, 2));

  CLI::App* zeros = app.add_subcommand("zeros", "real zeros xi_j");
  add_common(zeros, opts);
  zeros->add_option("--q", q_arg)->required();
  zeros->add_option("--j", range_arg, "index or range a..b");

  CLI::App* critical = app.add_subcommand("critical", "critical points t_s, w_s");
  add_common(critical, opts);
  critical->add_option("--q", q_arg)->required();
  critical->add_option("--s", range_arg, "index or range a..b");

  CLI::App* psit = app.add_subcommand("psi-table", "psi / tau / h / K table");
  add_common(psit, opts);
  psit->add_option("--q", grid_arg, "q or grid lo..hi:n")->required();

  CLI::App* rtilde = app.add_subcommand("rtilde", "companion roots r~_s");
  add_common(rtilde, opts);
  rtilde->add_option("--s", range_arg, "index or range a..b")->required();

  CLI::App* spectral =
      app.add_subcommand("spectral", "spectral values q~_j and double zeros");
  add_common(spectral, opts);
  spectral->add_option("--j", range_arg, "index or range a..b")->required();

  CLI::App* fit = app.add_subcommand("fit", "extract an asymptotic constant");
  add_common(fit, opts);
  fit->add_option("kind", kind_arg, "qtilde | y | rtilde | z")->required();
  fit->add_option("--j,--s", range_arg, "index range a..b")->required();
  fit->add_option("--synthetic", synthetic_arg,
                  "plant a constant (e.g. b=2.0) instead of solving");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, opts);
  verify->add_option("suite", suite_arg,
                     "theta | psi | spectral | asymptotics | all")
      ->required();
  verify->add_option("--j-max", j_max, "spectral depth")->check(CLI::Range(1, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(opts, q_arg, x_arg, deriv);
    if (zeros->parsed()) return cmd_zeros(opts, q_arg, parse_range(range_arg));
    if (critical->parsed())
      return cmd_critical(opts, q_arg, parse_range(range_arg));
    if (psit->parsed()) return cmd_psi_table(opts, grid_arg);
    if (rtilde->parsed()) return cmd_rtilde(opts, parse_range(range_arg));
    if (spectral->parsed()) return cmd_spectral(opts, parse_range(range_arg));
    if (fit->parsed())
      return cmd_fit(opts, kind_arg, parse_range(range_arg), synthetic_arg);
    if (verify->parsed()) return cmd_verify(opts, suite_arg, j_max);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
