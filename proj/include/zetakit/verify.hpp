#pragma once

// Builds the standard verification report: every identity in the chain
// leading from the prime-counting functions through zeta, the prime zeta
// function and the zero sum to the regularized product over all primes,
// each as a named lhs/rhs check with a pinned tolerance. The extended
// suite appends internal-consistency property checks (recurrences,
// reflection formulas, independent series routes), each reported as a
// max-residual-vs-zero row.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "zetakit/errors.hpp"
#include "zetakit/primes.hpp"
#include "zetakit/primezeta.hpp"
#include "zetakit/report.hpp"
#include "zetakit/types.hpp"
#include "zetakit/zeros.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit {

struct VerifyOptions {
  long long limit = 1000000;     // sieve limit
  std::string zeros_file;        // empty: compute zeros with the built-in finder
  long k_terms = -1;             // zero-sum truncation; -1 picks min(100, available)
  bool with_tail = true;         // add the density tail to the zero sum
  double tol_scale = 1.0;        // multiplies every tolerance
  bool extended = false;         // append the property-check suite
  PrecisionConfig cfg{};
};

namespace detail {

/// Alternating-series zeta via Cohen-Rodriguez Villegas-Zagier
/// acceleration: an independent route with no Euler-Maclaurin or
/// Bernoulli-number content, used only for cross-checks.
inline double zeta_alternating(double s, int n = 48) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0, c = -d;
  CompensatedSum acc;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    acc.add(c * std::pow(static_cast<double>(k + 1), -s));
    b *= static_cast<double>((k + n) * (k - n)) /
         ((static_cast<double>(k) + 0.5) * (static_cast<double>(k) + 1.0));
  }
  double eta = acc.value() / d;
  return eta / (1.0 - std::pow(2.0, 1.0 - s));
}

inline double rel_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

inline std::string format_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return std::string(buf);
}

inline double rel_residual(Cplx lhs, Cplx rhs) {
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

}  // namespace detail

inline Report build_verify_report(const VerifyOptions& opts) {
  opts.cfg.validate();
  if (opts.limit < 10000) {
    throw InsufficientTableError("verify: needs a sieve limit of at least 10000");
  }
  const double ts = opts.tol_scale;
  // scale 0 is allowed: it forces every inexact check red (a self-test of
  // the reporting path), so only negative scales are rejected
  if (!(ts >= 0.0)) throw DomainError("verify: tol-scale must be nonnegative");

  Report report;
  report.cfg = opts.cfg;
  ZetaEngine engine(opts.cfg);
  PrimeTable table = build_prime_table(opts.limit);
  report.sieve_limit = table.limit;

  ZeroTable zeros;
  if (!opts.zeros_file.empty()) {
    zeros = load_zeros(opts.zeros_file);
    report.zero_source = "file:" + opts.zeros_file;
  } else {
    zeros = find_zeros(engine, 240.0, opts.cfg);
    report.zero_source = "computed";
  }
  report.zero_count = static_cast<long long>(zeros.size());
  // default K: the whole file when one is given, else the first 100 found
  long k_eta = opts.k_terms > 0
                   ? std::min<long>(opts.k_terms, static_cast<long>(zeros.size()))
                   : (!opts.zeros_file.empty()
                          ? static_cast<long>(zeros.size())
                          : std::min<long>(100, static_cast<long>(zeros.size())));

  // --- prime-counting partial-summation identities ---
  for (double x : {100.0, 10000.0}) {
    report.add(verify_theta_pi_identity(table, x, opts.cfg, 1e-9 * ts));
    report.add(verify_psi_bigpi_identity(table, x, opts.cfg, 1e-9 * ts));
  }

  // --- explicit formula against the sieve ---
  const double log2pi =
      (engine.zeta_deriv(Cplx(0.0)) / engine.zeta(Cplx(0.0))).real();
  report.add(make_check("explicit-psi-x10.5", explicit_psi(zeros, 10.5, k_eta, log2pi),
                        psi0(table, 10.5), 0.05 * ts,
                        "psi0(x) = x - sum_rho x^rho/rho - log 2pi - (1/2)log(1-x^-2)"));
  report.add(make_check("explicit-psi-x100.5", explicit_psi(zeros, 100.5, k_eta, log2pi),
                        psi0(table, 100.5), 1.5 * ts,
                        "psi0(x) = x - sum_rho x^rho/rho - log 2pi - (1/2)log(1-x^-2)"));

  // --- eta: zero sum versus closed form ---
  {
    double eta_zeros = eta_from_zeros(zeros, k_eta, opts.with_tail, opts.cfg);
    double eta_closed = eta_closed_form(engine);
    double tol = opts.with_tail ? (k_eta >= 1000 ? 5e-5 : 5e-4) : 5e-2;
    report.add(make_check("eta-zero-sum-vs-closed-form", eta_zeros, eta_closed, tol * ts,
                          "sum_rho 1/(rho(1-rho)) = 2 + gamma - log 4pi"));
  }

  // --- prime zeta: sieve route versus Moebius-zeta route ---
  for (double sr : {1.5, 2.0, 3.0}) {
    Cplx s(sr, 0.0);
    report.add(make_check("prime-zeta-routes-s" + detail::format_g(sr),
                          prime_zeta_direct(table, s, opts.cfg).real(),
                          prime_zeta_mobius_auto(engine, s, opts.cfg).real(), 1e-10 * ts,
                          "P(s) = sum_p p^-s = sum_n mu(n)/n log zeta(ns)"));
  }
  report.add(make_check("prime-zeta-deriv-routes-s2",
                        prime_zeta_deriv_direct(engine, table, Cplx(2.0), opts.cfg).real(),
                        prime_zeta_deriv(engine, table, Cplx(2.0)).real(), 1e-10 * ts,
                        "P'(s) = -sum_p log p p^-s = sum_n mu(n) zeta'(ns)/zeta(ns)"));

  // --- Fermi-function integral identity and the zeta(0) limit ---
  for (double x : {0.5, 1.0, 2.0}) {
    CheckResult c = fermi_identity_check(x, opts.cfg);
    c.name += "-x" + detail::format_g(x);
    report.add(c);
  }
  report.add(make_check("zeta0-from-fermi-limit", zeta0_from_fermi(opts.cfg), -0.5,
                        1e-3 * ts, "zeta(0) = lim_{x->0} I(x)/((1-2^{1-x}) Pi(x))"));

  // --- regularized derivative at 0 and the product over all primes ---
  report.add(make_check("prime-zeta-deriv-reg0", prime_zeta_deriv_reg0(engine),
                        -2.0 * std::log(2.0 * std::numbers::pi), 1e-10 * ts,
                        "P'(0)_reg = (1/zeta(0)) zeta'(0)/zeta(0) = -2 log 2pi"));
  RegularizedProductResult closed =
      regularized_prime_product(engine, eta_closed_form(engine), ProductRoute::closed_form);
  report.add(make_check("prime-product-closed-form", closed.product_value,
                        4.0 * std::numbers::pi * std::numbers::pi, 1e-9 * ts,
                        "prod_p p (zeta-regularized) = pi e^mu = 4 pi^2"));
  {
    RegularizedProductResult pp =
        regularized_prime_product(engine, 0.0, ProductRoute::pprime_route);
    report.add(make_check("prime-product-pprime-vs-closed", pp.product_value,
                          closed.product_value, 1e-9 * ts,
                          "prod_p p = exp(-P'(0)_reg), both routes"));
  }
  {
    double eta_zeros = eta_from_zeros(zeros, k_eta, opts.with_tail, opts.cfg);
    RegularizedProductResult zs =
        regularized_prime_product(engine, eta_zeros, ProductRoute::zero_sum);
    double tol = opts.with_tail ? 2e-2 : 2.5;
    report.add(make_check("prime-product-zero-sum-vs-closed", zs.product_value,
                          closed.product_value, tol * ts,
                          "prod_p p with eta from the truncated zero sum"));
  }

  // --- Hadamard partial product at the central point ---
  {
    long k_had = std::min<long>(500, static_cast<long>(zeros.size()));
    report.add(make_check("xi-hadamard-partial-s0.5",
                          xi_hadamard_partial(engine, Cplx(0.5), zeros, k_had).real(),
                          engine.xi(Cplx(0.5)).real(), 1e-3 * ts,
                          "xi(s) = xi(0) prod_rho (1 - s/rho)"));
  }

  if (opts.extended) {
    // gamma recurrence on a pole-free grid
    {
      double worst = 0.0;
      for (int j = 0; j < 100; ++j) {
        Cplx s(0.05 + 0.1 * j, 0.0);
        worst = std::max(worst, detail::rel_residual(gamma(s + 1.0), s * gamma(s)));
      }
      for (int j = -12; j <= 12; ++j) {
        Cplx s(0.25 * j + 0.05, 1.5);
        worst = std::max(worst, detail::rel_residual(gamma(s + 1.0), s * gamma(s)));
      }
      report.add(make_check("gamma-recurrence-grid", worst, 0.0, 1e-12 * ts,
                            "Gamma(s+1) = s Gamma(s), max relative residual"));
    }
    // gamma reflection formula
    {
      double worst = 0.0;
      for (int j = 0; j <= 20; ++j) {
        Cplx s(-2.3 + 0.217 * j, 0.0);
        Cplx prod = gamma(s) * gamma(1.0 - s);
        Cplx ref = std::numbers::pi / std::sin(std::numbers::pi * s);
        worst = std::max(worst, detail::rel_residual(prod, ref));
      }
      report.add(make_check("gamma-reflection-grid", worst, 0.0, 1e-10 * ts,
                            "Gamma(s)Gamma(1-s) = pi/sin(pi s), max relative residual"));
    }
    // digamma against a central difference of log Gamma
    {
      double worst = 0.0;
      const double h = 1e-5;
      for (double sr : {-0.3, 0.5, 1.5, 2.5, 3.7, 10.2}) {
        double fd = (log_gamma(Cplx(sr + 1.0 + h)).real() -
                     log_gamma(Cplx(sr + 1.0 - h)).real()) /
                    (2.0 * h);
        worst = std::max(worst, std::abs(digamma(Cplx(sr)).real() - fd));
      }
      report.add(make_check("digamma-finite-difference", worst, 0.0, 1e-6 * ts,
                            "digamma(s) = d/ds log Pi(s), central difference"));
    }
    // zeta against the accelerated alternating series
    {
      double worst = 0.0;
      for (double sr : {0.5, 1.5, 2.0, 3.0}) {
        worst = std::max(worst, detail::rel_residual(detail::zeta_alternating(sr),
                                                     engine.zeta(Cplx(sr)).real()));
      }
      report.add(make_check("zeta-alternating-series", worst, 0.0, 1e-10 * ts,
                            "zeta(s) from the eta-function series, max relative residual"));
    }
    // Moebius function: Dirichlet convolution with 1 vanishes for n > 1
    {
      const long long n_max = 10000;
      std::vector<int> acc(static_cast<std::size_t>(n_max) + 1, 0);
      for (long long d = 1; d <= n_max; ++d) {
        int mu = mobius(table, d);
        for (long long n = d; n <= n_max; n += d) acc[static_cast<std::size_t>(n)] += mu;
      }
      double worst = 0.0;
      for (long long n = 1; n <= n_max; ++n) {
        int expect = (n == 1) ? 1 : 0;
        worst = std::max(worst, std::abs(static_cast<double>(acc[static_cast<std::size_t>(n)] - expect)));
      }
      report.add(make_check("mobius-dirichlet-convolution", worst, 0.0, 0.5 * ts,
                            "sum_{d|n} mu(d) = [n = 1] for n <= 10^4"));
    }
    // the two psi routes agree to rounding
    {
      double worst = 0.0;
      for (double x : {10.0, 100.0, 1000.0, 9999.5}) {
        worst = std::max(worst, detail::rel_residual(psi(table, x), psi_theta_route(table, x)));
      }
      report.add(make_check("psi-route-agreement", worst, 0.0, 1e-12 * ts,
                            "psi(x) = sum_k theta(x^{1/k}), max relative residual"));
    }
    // xi functional symmetry
    {
      double worst = 0.0;
      for (Cplx s : {Cplx(-2.0, 0.0), Cplx(-0.5, 0.0), Cplx(0.3, 0.0), Cplx(2.7, 0.0),
                     Cplx(4.0, 0.0), Cplx(0.5, 6.0), Cplx(2.0, 11.0), Cplx(-1.5, 19.5)}) {
        worst = std::max(worst, detail::rel_residual(engine.xi(s), engine.xi(1.0 - s)));
      }
      report.add(make_check("xi-functional-symmetry", worst, 0.0, 1e-9 * ts,
                            "xi(s) = xi(1-s), max relative residual"));
    }
    // prime zeta route agreement off the real axis
    {
      double worst = 0.0;
      for (Cplx s : {Cplx(2.0, 1.0), Cplx(3.0, 2.0)}) {
        worst = std::max(
            worst, std::abs(prime_zeta_direct(table, s, opts.cfg) -
                            prime_zeta_mobius_auto(engine, s, opts.cfg)));
      }
      report.add(make_check("prime-zeta-complex-routes", worst, 0.0, 1e-10 * ts,
                            "P(s) route agreement at complex s, max modulus"));
    }
  }

  return report;
}

}  // namespace zetakit
