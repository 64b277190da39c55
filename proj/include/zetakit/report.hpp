#pragma once

// Check and report plumbing: a CheckResult is one verified identity
// (lhs/rhs/residual/tolerance), a Report aggregates them with the
// configuration echo. Serialization to JSON and CSV lives here; both are
// deterministic (shortest-round-trip doubles in JSON, %.17g in CSV) so
// repeated runs are byte-identical.

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetakit/types.hpp"

namespace zetakit {

struct CheckResult {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string ref;  // identity tag: the formula or constant being checked
};

inline CheckResult make_check(std::string name, double lhs, double rhs, double tol,
                              std::string ref) {
  CheckResult c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_err = std::abs(lhs - rhs);
  c.tol = tol;
  c.pass = c.abs_err <= tol;
  c.ref = std::move(ref);
  return c;
}

struct Report {
  std::vector<CheckResult> checks;
  PrecisionConfig cfg;
  long long sieve_limit = 0;
  std::string zero_source;  // "file", "computed", or "none"
  long long zero_count = 0;
  bool overall_pass = true;

  void add(CheckResult c) {
    overall_pass = overall_pass && c.pass;
    checks.push_back(std::move(c));
  }
};

inline nlohmann::json to_json(const CheckResult& c) {
  return nlohmann::json{
      {"name", c.name}, {"lhs", c.lhs},   {"rhs", c.rhs}, {"abs_err", c.abs_err},
      {"tol", c.tol},   {"pass", c.pass}, {"ref", c.ref},
  };
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return nlohmann::json{
      {"checks", checks},
      {"config",
       {{"em_cutoff", r.cfg.em_cutoff},
        {"bernoulli_terms", r.cfg.bernoulli_terms},
        {"quad_rel_tol", r.cfg.quad_rel_tol},
        {"series_rel_tol", r.cfg.series_rel_tol}}},
      {"sieve_limit", r.sieve_limit},
      {"zero_source", r.zero_source},
      {"zero_count", r.zero_count},
      {"overall_pass", r.overall_pass},
  };
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
  bool needs_quote = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quote) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline std::string to_csv(const Report& r) {
  std::string out = "name,lhs,rhs,abs_err,tol,pass,ref\n";
  for (const auto& c : r.checks) {
    out += detail::csv_escape(c.name);
    out += ',';
    out += detail::fmt_g17(c.lhs);
    out += ',';
    out += detail::fmt_g17(c.rhs);
    out += ',';
    out += detail::fmt_g17(c.abs_err);
    out += ',';
    out += detail::fmt_g17(c.tol);
    out += ',';
    out += c.pass ? "true" : "false";
    out += ',';
    out += detail::csv_escape(c.ref);
    out += '\n';
  }
  return out;
}

/// Human-readable fixed-width table, 12 significant digits.
inline std::string to_table(const Report& r) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line,
                "config: em_cutoff=%d bernoulli_terms=%d quad_rel_tol=%g series_rel_tol=%g\n",
                r.cfg.em_cutoff, r.cfg.bernoulli_terms, r.cfg.quad_rel_tol,
                r.cfg.series_rel_tol);
  out += line;
  std::snprintf(line, sizeof line, "sieve_limit: %lld\n", r.sieve_limit);
  out += line;
  std::snprintf(line, sizeof line, "zeros: %s (%lld ordinates)\n",
                r.zero_source.empty() ? "none" : r.zero_source.c_str(), r.zero_count);
  out += line;
  std::snprintf(line, sizeof line, "%-44s %18s %18s %10s %9s %s\n", "check", "lhs", "rhs",
                "abs_err", "tol", "status");
  out += line;
  for (const auto& c : r.checks) {
    std::snprintf(line, sizeof line, "%-44s %18.12g %18.12g %10.3g %9.3g %s\n", c.name.c_str(),
                  c.lhs, c.rhs, c.abs_err, c.tol, c.pass ? "pass" : "FAIL");
    out += line;
  }
  std::snprintf(line, sizeof line, "overall: %s (%zu checks)\n",
                r.overall_pass ? "pass" : "FAIL", r.checks.size());
  out += line;
  return out;
}

}  // namespace zetakit
