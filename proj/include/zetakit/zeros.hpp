#pragma once

// Nontrivial zeros of zeta: file ingestion (plain ascending ordinates, '#'
// comments), a built-in finder driven by sign changes of the Hardy Z
// function, the Riemann-von Mangoldt smooth count, the constant eta from
// the zero sum, and the explicit formula for the half-jump-averaged
// Chebyshev function psi0.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "zetakit/errors.hpp"
#include "zetakit/gamma.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/types.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit {

struct ZeroTable {
  enum class Source { file, computed };

  std::vector<double> ordinates;  // ascending positive ordinates gamma_k
  Source source = Source::file;

  std::size_t size() const { return ordinates.size(); }
};

/// Parse a zero-table file: one ordinate per line, ascending, blank lines
/// and '#' comments ignored. Errors carry 1-based line numbers.
inline ZeroTable load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("load_zeros: cannot open '" + path + "'");
  ZeroTable table;
  table.source = ZeroTable::Source::file;
  std::string line;
  long lineno = 0;
  double prev = 0.0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    if (line[begin] == '#') continue;
    const char* start = line.c_str() + begin;
    char* end = nullptr;
    double v = std::strtod(start, &end);
    if (end == start) throw ParseError("load_zeros: not a number", lineno);
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    if (*end != '\0') throw ParseError("load_zeros: trailing junk after ordinate", lineno);
    if (!std::isfinite(v) || v <= 0.0) {
      throw ParseError("load_zeros: ordinate must be positive and finite", lineno);
    }
    if (v <= 13.0) {
      throw ParseError("load_zeros: ordinate below the first zero (must exceed 13)", lineno);
    }
    if (v <= prev) throw ParseError("load_zeros: ordinates must be strictly ascending", lineno);
    table.ordinates.push_back(v);
    prev = v;
  }
  if (table.ordinates.empty()) throw ParseError("load_zeros: no ordinates in file");
  return table;
}

/// Riemann-Siegel phase theta(t) = im log Gamma(1/4 + it/2) - (t/2) log pi.
inline double riemann_siegel_theta(double t) {
  Cplx lg = log_gamma(Cplx(0.25, 0.5 * t));
  return lg.imag() - 0.5 * t * std::log(std::numbers::pi);
}

/// Hardy Z(t) = e^{i theta(t)} zeta(1/2 + it): real-valued, sign changes
/// exactly at the critical-line zeros.
inline double hardy_z(const ZetaEngine& engine, double t) {
  double th = riemann_siegel_theta(t);
  Cplx z = engine.zeta(Cplx(0.5, t));
  return std::cos(th) * z.real() - std::sin(th) * z.imag();
}

/// Smooth Riemann-von Mangoldt main term (T/2pi) log(T/2pi) - T/2pi + 7/8.
inline double zero_count_estimate(double T) {
  if (!(T >= 2.0 * std::numbers::pi * std::numbers::e)) {
    throw DomainError("zero_count_estimate: requires T >= 2 pi e");
  }
  double u = T / (2.0 * std::numbers::pi);
  return u * std::log(u) - u + 7.0 / 8.0;
}

namespace detail {

inline double zero_scan_step(double t) {
  // at least 8 sample points per unit mean zero gap
  double density = std::log(t / (2.0 * std::numbers::pi)) / (2.0 * std::numbers::pi);
  return 1.0 / (8.0 * std::max(1.0, density));
}

inline std::vector<double> scan_for_zeros(const ZetaEngine& engine, double t_max,
                                          double step_scale) {
  std::vector<double> found;
  double t = 10.0;  // below the first ordinate; Z has no sign change before 14
  double zt = hardy_z(engine, t);
  while (t < t_max) {
    double step = zero_scan_step(t) * step_scale;
    double tn = std::min(t + step, t_max);
    double zn = hardy_z(engine, tn);
    if ((zt < 0.0 && zn > 0.0) || (zt > 0.0 && zn < 0.0) || zn == 0.0) {
      double a = t, b = tn;
      double za = zt;
      while (b - a >= 1e-9) {
        double m = 0.5 * (a + b);
        double zm = hardy_z(engine, m);
        if (zm == 0.0) {
          a = m - 0.25e-9;
          b = m + 0.25e-9;
          break;
        }
        if ((za < 0.0) == (zm < 0.0)) {
          a = m;
          za = zm;
        } else {
          b = m;
        }
      }
      found.push_back(0.5 * (a + b));
    }
    t = tn;
    zt = zn;
  }
  return found;
}

}  // namespace detail

/// Locate all zeros with 0 < gamma <= t_max by sign changes of Z(t),
/// bisected to 1e-9. If the count disagrees with the smooth estimate by 1
/// or more, the scan is repeated at a tenth of the step; a disagreement of
/// 2 or more after refinement raises ConvergenceError. (The fluctuation
/// term S(T) itself approaches 1.1 below T = 500, so a strict >= 1 trigger
/// would reject correct scans.)
inline ZeroTable find_zeros(const ZetaEngine& engine, double t_max,
                            const PrecisionConfig& cfg = {}) {
  cfg.validate();
  if (!(t_max >= 14.0 && t_max <= 500.0)) {
    throw DomainError("find_zeros: t_max must lie in [14, 500] (certified strip)");
  }
  std::vector<double> found = detail::scan_for_zeros(engine, t_max, 1.0);
  if (t_max >= 2.0 * std::numbers::pi * std::numbers::e) {
    double est = zero_count_estimate(t_max);
    if (std::abs(static_cast<double>(found.size()) - est) >= 1.0) {
      found = detail::scan_for_zeros(engine, t_max, 0.1);
      if (std::abs(static_cast<double>(found.size()) - est) >= 2.0) {
        throw ConvergenceError("find_zeros: zero count disagrees with the smooth estimate");
      }
    }
  }
  ZeroTable table;
  table.ordinates = std::move(found);
  table.source = ZeroTable::Source::computed;
  return table;
}

/// eta = sum_rho 1/(rho(1-rho)) truncated to the first K ordinate pairs:
/// sum_{k<=K} 2/(1/4 + gamma_k^2), plus (optionally) the smooth-density
/// tail integral int_{gamma_K}^inf 2/(1/4+t^2) (1/2pi) log(t/2pi) dt.
inline double eta_from_zeros(const ZeroTable& table, long k_terms, bool with_tail,
                             const PrecisionConfig& cfg = {}) {
  cfg.validate();
  if (k_terms < 1 || static_cast<std::size_t>(k_terms) > table.size()) {
    throw DomainError("eta_from_zeros: K out of range");
  }
  detail::CompensatedSum sum;
  for (long k = k_terms - 1; k >= 0; --k) {
    double g = table.ordinates[static_cast<std::size_t>(k)];
    sum.add(2.0 / (0.25 + g * g));
  }
  double value = sum.value();
  if (with_tail) {
    double gk = table.ordinates[static_cast<std::size_t>(k_terms - 1)];
    auto density_weighted = [](double t) {
      return 2.0 / (0.25 + t * t) * std::log(t / (2.0 * std::numbers::pi)) /
             (2.0 * std::numbers::pi);
    };
    value += integrate_semi_infinite(density_weighted, gk, cfg);
  }
  return value;
}

/// Explicit-formula evaluation of psi0(x):
///   x - sum_{k<=K} 2 re(x^{rho_k}/rho_k) - log(2 pi) - (1/2) log(1 - x^{-2}),
/// rho_k = 1/2 + i gamma_k; the trivial-zero series is summed in closed
/// form. log2pi is supplied by the caller as the engine's zeta'(0)/zeta(0).
inline double explicit_psi(const ZeroTable& table, double x, long k_terms, double log2pi) {
  if (!(x > 1.0)) throw DomainError("explicit_psi: requires x > 1");
  if (k_terms < 0 || static_cast<std::size_t>(k_terms) > table.size()) {
    throw DomainError("explicit_psi: K out of range");
  }
  const double L = std::log(x);
  const double rx = std::sqrt(x);
  detail::CompensatedSum sum;
  for (long k = k_terms - 1; k >= 0; --k) {
    double g = table.ordinates[static_cast<std::size_t>(k)];
    sum.add(2.0 * rx * (0.5 * std::cos(g * L) + g * std::sin(g * L)) / (0.25 + g * g));
  }
  return x - sum.value() - log2pi - 0.5 * std::log1p(-1.0 / (x * x));
}

/// Hadamard partial product over a ZeroTable (see the ordinate-vector
/// overload for the factor grouping).
inline Cplx xi_hadamard_partial(const ZetaEngine& engine, Cplx s, const ZeroTable& table,
                                long k_terms) {
  return xi_hadamard_partial(engine, s, table.ordinates, k_terms);
}

}  // namespace zetakit
