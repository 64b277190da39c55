#pragma once

// Prime zeta function P(s) = sum_p p^{-s} and its derivative, each by two
// independent routes, plus the regularized derivative at 0 and the
// regularized product over all primes.
//
// The direct route sums primes from the sieve and then corrects for the
// omitted tail exactly: with zeta_{>N}(x) = zeta(x) prod_{p<=N} (1-p^{-x})
// (the Euler product restricted to primes beyond the table),
//   sum_{p>N} p^{-s} = sum_{n>=1} mu(n)/n log zeta_{>N}(ns),
// a series that converges geometrically like N^{-n sigma}. A bare
// truncation at N = 1e6 would be wrong in the 4th decimal at s = 1.5; the
// correction brings the route to full precision so the two routes can be
// compared at 1e-10.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "zetakit/errors.hpp"
#include "zetakit/gamma.hpp"
#include "zetakit/primes.hpp"
#include "zetakit/types.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit {

namespace detail {

/// Mobius mu(n) by trial factorization; for the small n of the zeta-route
/// series only (independent of any PrimeTable).
inline int small_mobius(long n) {
  if (n < 1) throw DomainError("small_mobius: n must be positive");
  int factors = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

/// log zeta_{>N}(x) = log zeta(x) + sum_{p<=N} log(1 - p^{-x}): the
/// logarithm of the Euler product over primes beyond the table.
inline Cplx log_zeta_beyond(const ZetaEngine& engine, const PrimeTable& table, Cplx x) {
  Cplx z = engine.zeta(x);
  CompensatedSum re, im;
  for (std::uint32_t p : table.primes) {
    Cplx term = std::log(1.0 - std::pow(static_cast<double>(p), -x));
    re.add(term.real());
    im.add(term.imag());
  }
  Cplx lz = std::log(z);  // sigma > 1 territory: zeta stays off zero
  return lz + Cplx(re.value(), im.value());
}

/// d/dx log zeta_{>N}(x) = zeta'/zeta(x) + sum_{p<=N} log p p^{-x}/(1-p^{-x}).
inline Cplx log_zeta_beyond_deriv(const ZetaEngine& engine, const PrimeTable& table, Cplx x) {
  Cplx ratio = engine.zeta_deriv(x) / engine.zeta(x);
  CompensatedSum re, im;
  for (std::uint32_t p : table.primes) {
    double dp = static_cast<double>(p);
    Cplx w = std::pow(dp, -x);
    Cplx term = std::log(dp) * w / (1.0 - w);
    re.add(term.real());
    im.add(term.imag());
  }
  return ratio + Cplx(re.value(), im.value());
}

}  // namespace detail

/// P(s) = sum_p p^{-s} by direct summation over the sieve plus the exact
/// Euler-product tail correction; total error <= cfg.series_rel_tol.
inline Cplx prime_zeta_direct(const PrimeTable& table, Cplx s, const PrecisionConfig& cfg = {}) {
  cfg.validate();
  if (!is_finite(s)) throw DomainError("prime_zeta_direct: non-finite argument");
  double sigma = s.real();
  if (!(sigma > 1.0)) throw DomainError("prime_zeta_direct: requires re(s) > 1");
  if (table.limit < 100) {
    throw InsufficientTableError("prime_zeta_direct: sieve limit too small for a certified tail");
  }

  detail::CompensatedSum re, im;
  for (std::uint32_t p : table.primes) {
    Cplx w = std::pow(static_cast<double>(p), -s);
    re.add(w.real());
    im.add(w.imag());
  }
  Cplx main(re.value(), im.value());

  // tail over p > N via the restricted Euler product
  ZetaEngine engine(cfg);
  const double N = static_cast<double>(table.limit);
  Cplx tail(0.0);
  double scale = std::max(std::abs(main), 0.5);
  bool certified = false;
  for (int n = 1; n <= 12; ++n) {
    // remaining terms are bounded by a geometric series in N^{-sigma}
    double next_bound = 3.0 * std::pow(N, 1.0 - (n + 1) * sigma) / ((n + 1) * sigma - 1.0);
    double remainder = next_bound / (1.0 - std::pow(N, -sigma));
    int mu = detail::small_mobius(n);
    if (mu != 0) {
      tail += (static_cast<double>(mu) / n) * detail::log_zeta_beyond(engine, table, static_cast<double>(n) * s);
    }
    if (remainder <= cfg.series_rel_tol * scale) {
      certified = true;
      break;
    }
  }
  if (!certified) {
    throw InsufficientTableError("prime_zeta_direct: tail bound not met; increase the sieve limit");
  }
  Cplx r = main + tail;
  if (s.imag() == 0.0) r = Cplx(r.real(), 0.0);
  return r;
}

/// P(s) = sum_{n<=n_max} mu(n)/n log zeta(ns): the Mobius-zeta route,
/// truncated at exactly n_max terms (the caller owns the truncation; see
/// prime_zeta_mobius_auto for a bound-certified variant).
inline Cplx prime_zeta_mobius(const ZetaEngine& engine, Cplx s, long n_max = 40) {
  if (!is_finite(s)) throw DomainError("prime_zeta_mobius: non-finite argument");
  if (!(s.real() > 1.0)) throw DomainError("prime_zeta_mobius: requires re(s) > 1");
  if (n_max < 1 || n_max > 4096) throw DomainError("prime_zeta_mobius: n_max out of range");
  detail::CompensatedSum re, im;
  for (long n = 1; n <= n_max; ++n) {
    int mu = detail::small_mobius(n);
    if (mu == 0) continue;
    Cplx term = (static_cast<double>(mu) / static_cast<double>(n)) *
                engine.log_zeta(static_cast<double>(n) * s);
    re.add(term.real());
    im.add(term.imag());
  }
  Cplx r(re.value(), im.value());
  if (s.imag() == 0.0) r = Cplx(r.real(), 0.0);
  return r;
}

/// Mobius-zeta route with n_max grown automatically until the geometric
/// tail bound ~2^{-n_max sigma} falls below cfg.series_rel_tol.
inline Cplx prime_zeta_mobius_auto(const ZetaEngine& engine, Cplx s,
                                   const PrecisionConfig& cfg = {}) {
  cfg.validate();
  if (!is_finite(s)) throw DomainError("prime_zeta_mobius: non-finite argument");
  double sigma = s.real();
  if (!(sigma > 1.0)) throw DomainError("prime_zeta_mobius: requires re(s) > 1");
  long n_max = 40;
  while (true) {
    double bound = 3.0 * std::pow(2.0, -static_cast<double>(n_max + 1) * sigma) /
                   (1.0 - std::pow(2.0, -sigma));
    if (bound <= cfg.series_rel_tol) break;
    n_max *= 2;
    if (n_max > 1024) {
      throw InsufficientTableError("prime_zeta_mobius: n_max cap reached before the tail bound");
    }
  }
  return prime_zeta_mobius(engine, s, n_max);
}

/// P'(s) = sum_{n<=n_max} mu(n) zeta'/zeta(ns): term-wise derivative of the
/// Mobius-zeta route, with mu(n) served from the sieve.
inline Cplx prime_zeta_deriv(const ZetaEngine& engine, const PrimeTable& table, Cplx s,
                             long n_max = 40) {
  if (!is_finite(s)) throw DomainError("prime_zeta_deriv: non-finite argument");
  if (!(s.real() > 1.0)) throw DomainError("prime_zeta_deriv: requires re(s) > 1");
  if (n_max < 1 || n_max > 4096) throw DomainError("prime_zeta_deriv: n_max out of range");
  detail::CompensatedSum re, im;
  for (long n = 1; n <= n_max; ++n) {
    int mu = static_cast<std::uint64_t>(n) <= table.limit
                 ? mobius(table, static_cast<std::uint64_t>(n))
                 : detail::small_mobius(n);
    if (mu == 0) continue;
    Cplx ns = static_cast<double>(n) * s;
    Cplx term = static_cast<double>(mu) * (engine.zeta_deriv(ns) / engine.zeta(ns));
    re.add(term.real());
    im.add(term.imag());
  }
  Cplx r(re.value(), im.value());
  if (s.imag() == 0.0) r = Cplx(r.real(), 0.0);
  return r;
}

/// P'(s) = -sum_p log p p^{-s} directly over the sieve, with the exact
/// differentiated Euler-product tail correction for p > N.
inline Cplx prime_zeta_deriv_direct(const ZetaEngine& engine, const PrimeTable& table, Cplx s,
                                    const PrecisionConfig& cfg = {}) {
  cfg.validate();
  if (!is_finite(s)) throw DomainError("prime_zeta_deriv_direct: non-finite argument");
  double sigma = s.real();
  if (!(sigma > 1.0)) throw DomainError("prime_zeta_deriv_direct: requires re(s) > 1");
  if (table.limit < 100) {
    throw InsufficientTableError("prime_zeta_deriv_direct: sieve limit too small");
  }
  detail::CompensatedSum re, im;
  for (std::uint32_t p : table.primes) {
    double dp = static_cast<double>(p);
    Cplx w = -std::log(dp) * std::pow(dp, -s);
    re.add(w.real());
    im.add(w.imag());
  }
  Cplx main(re.value(), im.value());

  const double N = static_cast<double>(table.limit);
  const double logN = std::log(N);
  Cplx tail(0.0);
  double scale = std::max(std::abs(main), 0.5);
  bool certified = false;
  for (int n = 1; n <= 12; ++n) {
    double next_bound =
        3.0 * logN * std::pow(N, 1.0 - (n + 1) * sigma) / ((n + 1) * sigma - 1.0);
    double remainder = next_bound / (1.0 - std::pow(N, -sigma));
    int mu = detail::small_mobius(n);
    if (mu != 0) {
      tail += static_cast<double>(mu) *
              detail::log_zeta_beyond_deriv(engine, table, static_cast<double>(n) * s);
    }
    if (remainder <= cfg.series_rel_tol * scale) {
      certified = true;
      break;
    }
  }
  if (!certified) {
    throw InsufficientTableError("prime_zeta_deriv_direct: tail bound not met");
  }
  Cplx r = main + tail;
  if (s.imag() == 0.0) r = Cplx(r.real(), 0.0);
  return r;
}

/// Regularized P'(0) = (1/zeta(0)) zeta'(0)/zeta(0), both factors from the
/// engine. The regularized coefficient sum mu(n) = -2 enters only through
/// the displayed identity 1/zeta(0); the literal constant -2 never appears.
inline double prime_zeta_deriv_reg0(const ZetaEngine& engine) {
  double z0 = engine.zeta(Cplx(0.0)).real();
  double zp0 = engine.zeta_deriv(Cplx(0.0)).real();
  return (1.0 / z0) * (zp0 / z0);
}

enum class ProductRoute { closed_form, zero_sum, pprime_route };

struct RegularizedProductResult {
  double mu_exponent = 0.0;   // the exponent mu in the product pi e^mu
  double eta_used = 0.0;      // eta = 2 sum 1/(rho(1-rho)) as supplied/implied
  double product_value = 0.0; // pi * exp(mu_exponent), exactly as computed
  ProductRoute route = ProductRoute::closed_form;
};

/// The regularized product over all primes, prod p = pi e^mu with
/// mu = 2 + gamma - eta. For closed_form / zero_sum the caller supplies eta
/// from the matching source; pprime_route instead exponentiates the
/// regularized -P'(0) and back-solves mu, cross-validating the chain.
inline RegularizedProductResult regularized_prime_product(const ZetaEngine& engine, double eta,
                                                          ProductRoute route) {
  RegularizedProductResult r;
  r.route = route;
  double g = euler_gamma();
  if (route == ProductRoute::pprime_route) {
    double log_product = -prime_zeta_deriv_reg0(engine);
    r.mu_exponent = log_product - std::log(std::numbers::pi);
    r.eta_used = 2.0 + g - r.mu_exponent;
  } else {
    r.eta_used = eta;
    r.mu_exponent = 2.0 + g - eta;
  }
  r.product_value = std::numbers::pi * std::exp(r.mu_exponent);
  return r;
}

}  // namespace zetakit
