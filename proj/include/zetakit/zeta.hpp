#pragma once

// Riemann zeta and friends via Euler-Maclaurin continuation:
//   zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//           + sum_{k=1..K} B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{1-s-2k}
// with N = max(em_cutoff, 10 + 2|im s|). The continuation below re(s) = 1
// comes from the correction terms, never from the functional equation, so
// zeta(0), zeta(-1), zeta'(0) are products of this engine itself.
//
// Left of the critical line the direct sum cancels catastrophically in
// binary64 (the summands grow like n^{|sigma|} while zeta stays O(1)), so
// that region runs on double-double arithmetic internally. zeta' is the
// term-by-term derivative of the same formula (-log n weights and the
// product-rule derivative of the Pochhammer factors), not a finite
// difference.
//
// Also here: the completed xi function with the zeta pole folded in
// analytically near s = 1, its Hadamard partial product over zero
// ordinates, log zeta on branch-certified domains, the Fermi-integral
// route to zeta(0) = -1/2, and the closed-form sum of 1/rho.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "zetakit/dd.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/gamma.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/report.hpp"
#include "zetakit/types.hpp"

namespace zetakit {

class ZetaEngine {
public:
  explicit ZetaEngine(PrecisionConfig cfg = {}) : cfg_(cfg) { cfg_.validate(); }

  const PrecisionConfig& config() const { return cfg_; }

  /// zeta(s); certified relative error <= 1e-11 for -10 <= re(s) <= 50,
  /// |im(s)| <= 500, and trivially accurate for re(s) > 50.
  Cplx zeta(Cplx s) const {
    check_domain(s, "zeta");
    if (s == Cplx(1.0)) throw PoleError("zeta: pole at s = 1");
    Cplx r = (s.real() >= 0.5) ? em_double(s, false) : em_dd(s, false);
    if (!is_finite(r)) throw OverflowError("zeta: result exceeds floating range");
    if (s.imag() == 0.0) r = Cplx(r.real(), 0.0);
    return r;
  }

  /// zeta'(s) by term-wise differentiation of the same Euler-Maclaurin
  /// formula; certified relative error <= 1e-9 on the zeta domain.
  Cplx zeta_deriv(Cplx s) const {
    check_domain(s, "zeta_deriv");
    if (s == Cplx(1.0)) throw PoleError("zeta_deriv: pole at s = 1");
    Cplx r = (s.real() >= 0.5) ? em_double(s, true) : em_dd(s, true);
    if (!is_finite(r)) throw OverflowError("zeta_deriv: result exceeds floating range");
    if (s.imag() == 0.0) r = Cplx(r.real(), 0.0);
    return r;
  }

  /// (s-1) zeta(s): the pole is folded into the Euler-Maclaurin formula
  /// analytically ((s-1) N^{1-s}/(s-1) collapses to N^{1-s}), so values
  /// arbitrarily close to s = 1 stay fully accurate; exact 1 at s = 1.
  Cplx zeta_times_sminus1(Cplx s) const {
    check_domain(s, "zeta");
    Cplx r = (s.real() >= 0.5) ? em_double_folded(s) : (s - 1.0) * em_dd(s, false);
    if (!is_finite(r)) throw OverflowError("zeta: result exceeds floating range");
    if (s.imag() == 0.0) r = Cplx(r.real(), 0.0);
    return r;
  }

  /// The branch of log zeta(s) tending to 0 as re(s) -> +inf (the prime
  /// harmonic series branch). Real s > 1 always; off the real axis the
  /// branch is certified for re(s) >= 1.4.
  Cplx log_zeta(Cplx s) const {
    if (!is_finite(s)) throw DomainError("log_zeta: non-finite argument");
    double sigma = s.real();
    if (!(sigma > 1.0)) throw DomainError("log_zeta: requires re(s) > 1");
    if (s.imag() == 0.0) {
      return Cplx(std::log(zeta(s).real()), 0.0);
    }
    if (sigma >= 2.0) {
      // |zeta(s) - 1| <= zeta(2) - 1 < 1: principal log is the series branch
      return std::log(zeta(s));
    }
    if (sigma >= 1.4) {
      // strip the first Euler factors; the remaining product stays inside
      // the unit disc around 1, where the principal log is branch-safe
      static constexpr int kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
      Cplx acc(0.0);
      Cplx stripped = zeta(s);
      for (int p : kSmallPrimes) {
        Cplx factor = 1.0 - std::pow(static_cast<double>(p), -s);
        stripped *= factor;
        acc -= std::log(factor);
      }
      return acc + std::log(stripped);
    }
    throw DomainError("log_zeta: off-axis branch certified only for re(s) >= 1.4");
  }

  /// Completed xi(s) = Pi(s/2) (s-1) pi^{-s/2} zeta(s); entire, symmetric
  /// under s -> 1-s, no pole at s = 1 (folded analytically within radius
  /// 1e-3). At the negative even integers the Pi(s/2) pole cancels the
  /// trivial zero of zeta; there the limit is taken through zeta'.
  Cplx xi(Cplx s) const {
    if (s.imag() == 0.0 && s.real() < 0.0 && std::floor(-0.5 * s.real()) == -0.5 * s.real()) {
      // s = -2m: Pi(s/2) = Gamma(s/2+1+m)/prod_{j<m}(s/2+1+j), whose last
      // factor (s+2m)/2 pairs with zeta(s) ~ zeta'(-2m)(s+2m)
      long m = std::lround(-0.5 * s.real());
      Cplx g = gamma(0.5 * s + Cplx(1.0 + static_cast<double>(m)));
      Cplx denom(1.0);
      for (long j = 0; j + 1 < m; ++j) denom *= 0.5 * s + Cplx(1.0 + static_cast<double>(j));
      Cplx r = (g / denom) * std::pow(std::numbers::pi, -0.5 * s.real()) * (s - 1.0) * 2.0 *
               zeta_deriv(s);
      if (!is_finite(r)) throw OverflowError("xi: result exceeds floating range");
      return Cplx(r.real(), 0.0);
    }
    Cplx g = pi_factorial(0.5 * s);
    Cplx pref = std::pow(std::numbers::pi, -0.5 * s);
    Cplx r;
    if (std::abs(s - Cplx(1.0)) < 1e-3) {
      r = g * pref * zeta_times_sminus1(s);
    } else {
      r = g * pref * (s - 1.0) * zeta(s);
    }
    if (!is_finite(r)) throw OverflowError("xi: result exceeds floating range");
    if (s.imag() == 0.0) r = Cplx(r.real(), 0.0);
    return r;
  }

private:
  PrecisionConfig cfg_;

  static void check_domain(Cplx s, const char* who) {
    if (!is_finite(s)) throw DomainError(std::string(who) + ": non-finite argument");
    if (s.real() < -10.0 || std::abs(s.imag()) > 500.0) {
      throw DomainError(std::string(who) +
                        ": outside certified domain (re >= -10, |im| <= 500)");
    }
  }

  int direct_terms(double t) const {
    double n = std::max(static_cast<double>(cfg_.em_cutoff), 10.0 + 2.0 * std::ceil(std::abs(t)));
    return static_cast<int>(n);
  }

  // binary64 path, re(s) >= 0.5. deriv=false: zeta; deriv=true: zeta'.
  Cplx em_double(Cplx s, bool deriv) const {
    const int N = direct_terms(s.imag());
    const int K = cfg_.bernoulli_terms;
    detail::CompensatedSum sum_re, sum_im;
    for (int n = 1; n < N; ++n) {
      double dn = static_cast<double>(n);
      Cplx w = std::pow(dn, -s);
      if (deriv) w *= -std::log(dn);
      sum_re.add(w.real());
      sum_im.add(w.imag());
    }
    const double dN = static_cast<double>(N);
    const double logN = std::log(dN);
    const Cplx n1s = std::pow(dN, 1.0 - s);  // N^{1-s}
    const Cplx ns = std::pow(dN, -s);        // N^{-s}
    const Cplx sm1 = s - 1.0;
    Cplx tail;
    if (!deriv) {
      tail = n1s / sm1 + 0.5 * ns;
    } else {
      tail = -logN * n1s / sm1 - n1s / (sm1 * sm1) - 0.5 * logN * ns;
    }
    const auto& bf = detail::bernoulli_over_factorial_dd();
    const double invN2 = 1.0 / (dN * dN);
    Cplx poch = s;        // s(s+1)...(s+2k-2)
    Cplx dpoch(1.0);      // its derivative
    Cplx cur = n1s * invN2;  // N^{1-s-2k}
    Cplx em;
    for (int k = 1; k <= K; ++k) {
      double c = bf[k].to_double();
      if (!deriv) {
        em += c * poch * cur;
      } else {
        em += c * (dpoch * cur - poch * logN * cur);
      }
      // extend the Pochhammer product by (s+2k-1)(s+2k)
      Cplx f1 = s + (2.0 * k - 1.0);
      Cplx f2 = s + (2.0 * k);
      dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
      poch = poch * f1 * f2;
      cur *= invN2;
    }
    return Cplx(sum_re.value(), sum_im.value()) + tail + em;
  }

  // binary64 path for (s-1) zeta(s) with the pole term folded.
  Cplx em_double_folded(Cplx s) const {
    const int N = direct_terms(s.imag());
    const int K = cfg_.bernoulli_terms;
    detail::CompensatedSum sum_re, sum_im;
    for (int n = 1; n < N; ++n) {
      Cplx w = std::pow(static_cast<double>(n), -s);
      sum_re.add(w.real());
      sum_im.add(w.imag());
    }
    const double dN = static_cast<double>(N);
    const Cplx n1s = std::pow(dN, 1.0 - s);
    const Cplx ns = std::pow(dN, -s);
    const auto& bf = detail::bernoulli_over_factorial_dd();
    const double invN2 = 1.0 / (dN * dN);
    Cplx poch = s;
    Cplx cur = n1s * invN2;
    Cplx em;
    for (int k = 1; k <= K; ++k) {
      em += bf[k].to_double() * poch * cur;
      poch = poch * (s + (2.0 * k - 1.0)) * (s + (2.0 * k));
      cur *= invN2;
    }
    return (s - 1.0) * (Cplx(sum_re.value(), sum_im.value()) + 0.5 * ns + em) + n1s;
  }

  // double-double path, re(s) < 0.5: the direct sum loses up to
  // ~|sigma| log10 N digits to cancellation, far beyond binary64.
  Cplx em_dd(Cplx s, bool deriv) const {
    using detail::cdd;
    using detail::dd;
    const int N = direct_terms(s.imag());
    const int K = cfg_.bernoulli_terms;
    const cdd sd(dd(s.real()), dd(s.imag()));
    const cdd neg_s(-sd.re, -sd.im);
    const cdd one_minus_s(dd(1.0) - sd.re, -sd.im);
    cdd sum(dd(0.0), dd(0.0));
    for (int n = 1; n < N; ++n) {
      dd ln = detail::log_dd(dd(static_cast<double>(n)));
      cdd w = detail::exp_cdd(cdd(neg_s.re * ln, neg_s.im * ln));
      if (deriv) w = cdd(-(w.re * ln), -(w.im * ln));
      sum += w;
    }
    const dd lnN = detail::log_dd(dd(static_cast<double>(N)));
    const cdd n1s = detail::exp_cdd(cdd(one_minus_s.re * lnN, one_minus_s.im * lnN));
    const cdd ns = detail::exp_cdd(cdd(neg_s.re * lnN, neg_s.im * lnN));
    const cdd sm1(sd.re - dd(1.0), sd.im);
    cdd tail;
    if (!deriv) {
      tail = n1s / sm1 + cdd(ns.re * dd(0.5), ns.im * dd(0.5));
    } else {
      cdd a = n1s / sm1;
      cdd b = a / sm1;
      tail = cdd(-(a.re * lnN) - b.re - dd(0.5) * (ns.re * lnN),
                 -(a.im * lnN) - b.im - dd(0.5) * (ns.im * lnN));
    }
    const auto& bf = detail::bernoulli_over_factorial_dd();
    const dd invN2 = dd(1.0) / (dd(static_cast<double>(N)) * dd(static_cast<double>(N)));
    cdd poch = sd;
    cdd dpoch(dd(1.0), dd(0.0));
    cdd cur(n1s.re * invN2, n1s.im * invN2);
    cdd em(dd(0.0), dd(0.0));
    for (int k = 1; k <= K; ++k) {
      cdd weighted(cur.re * bf[k], cur.im * bf[k]);
      if (!deriv) {
        em += poch * weighted;
      } else {
        cdd t1 = dpoch * weighted;
        cdd t2 = poch * weighted;
        em += cdd(t1.re - t2.re * lnN, t1.im - t2.im * lnN);
      }
      cdd f1(sd.re + dd(2.0 * k - 1.0), sd.im);
      cdd f2(sd.re + dd(2.0 * k), sd.im);
      dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
      poch = poch * f1 * f2;
      cur = cdd(cur.re * invN2, cur.im * invN2);
    }
    cdd total = sum + tail + em;
    return Cplx(total.re.to_double(), total.im.to_double());
  }
};

/// Left side of the Fermi-integral identity: int_0^inf x t^{x-1}/(e^t+1) dt,
/// by quadrature, with the t^{x-1} endpoint singularity declared for x < 1.
inline double fermi_integral_lhs(double x, const PrecisionConfig& cfg) {
  if (!(x > 0.0)) throw DomainError("fermi_integral_lhs: requires x > 0");
  auto f = [x](double t) {
    if (t <= 0.0) return 0.0;
    double e = std::exp(-t);
    return x * std::pow(t, x - 1.0) * e / (1.0 + e);
  };
  return integrate_semi_infinite(f, 0.0, cfg, x);
}

/// The integrated-by-parts form int_0^inf t^x e^t/(e^t+1)^2 dt (equal to the
/// left side above; tends to 1/2 as x -> 0+).
inline double fermi_transformed_integral(double x, const PrecisionConfig& cfg) {
  if (!(x > 0.0)) throw DomainError("fermi_transformed_integral: requires x > 0");
  auto f = [x](double t) {
    if (t <= 0.0) return 0.0;
    double e = std::exp(-t);
    double d = 1.0 + e;
    return std::pow(t, x) * e / (d * d);
  };
  return integrate_semi_infinite(f, 0.0, cfg, 1.0);
}

/// Right side (1 - 2^{1-x}) zeta(x) Gamma(x+1) from the zeta and gamma
/// kernels; at x = 1 the analytic limit (1-2^{1-x}) zeta(x) -> log 2 is used.
inline double fermi_integral_rhs(const ZetaEngine& engine, double x) {
  if (!(x > 0.0)) throw DomainError("fermi_integral_rhs: requires x > 0");
  double g = gamma(Cplx(x + 1.0)).real();
  if (x == 1.0) return std::log(2.0) * g;
  double z = engine.zeta(Cplx(x)).real();
  return (1.0 - std::pow(2.0, 1.0 - x)) * z * g;
}

/// Quadrature-vs-kernels check of the Fermi-integral identity.
inline CheckResult fermi_identity_check(double x, const PrecisionConfig& cfg = {}) {
  ZetaEngine engine(cfg);
  double lhs = fermi_integral_lhs(x, cfg);
  double rhs = fermi_integral_rhs(engine, x);
  double tol = 1e-8 * (1.0 + std::abs(rhs));
  return make_check("fermi-integral-identity", lhs, rhs, tol,
                    "int_0^inf x t^{x-1}/(e^t+1) dt = (1-2^{1-x}) zeta(x) Gamma(x+1)");
}

/// zeta(0) estimated through the Fermi route at x = 1e-3: the transformed
/// integral divided by (1 - 2^{1-x}) Gamma(x+1). Approaches -1/2 as x -> 0.
inline double zeta0_from_fermi(const PrecisionConfig& cfg, double x = 1e-3) {
  double integral = fermi_transformed_integral(x, cfg);
  double g = gamma(Cplx(x + 1.0)).real();
  return integral / ((1.0 - std::pow(2.0, 1.0 - x)) * g);
}

/// Partial Hadamard product xi(0) prod_{k<=K} (1 - s(1-s)/(1/4 + gamma_k^2)).
/// Each factor is one conjugate pair (1 - s/rho)(1 - s/conj(rho)) with
/// rho = 1/2 + i gamma; pairing keeps the product real for real s and
/// absolutely convergent.
inline Cplx xi_hadamard_partial(const ZetaEngine& engine, Cplx s,
                                const std::vector<double>& ordinates, long k_terms) {
  if (k_terms < 0 || static_cast<std::size_t>(k_terms) > ordinates.size()) {
    throw DomainError("xi_hadamard_partial: K out of range");
  }
  Cplx product = engine.xi(Cplx(0.0));
  Cplx s1ms = s * (1.0 - s);
  for (long k = 0; k < k_terms; ++k) {
    double g = ordinates[static_cast<std::size_t>(k)];
    product *= 1.0 - s1ms / (0.25 + g * g);
  }
  if (s.imag() == 0.0) product = Cplx(product.real(), 0.0);
  return product;
}

/// Closed-form sum over nontrivial zeros:
///   sum 1/rho = -digamma(0)/2 + log(pi)/2 + 1 - zeta'(0)/zeta(0),
/// every term from this library's own kernels. Equals eta/2.
inline double sum_inv_rho_closed(const ZetaEngine& engine) {
  double dg = digamma(Cplx(0.0)).real();
  Cplx z0 = engine.zeta(Cplx(0.0));
  Cplx zp0 = engine.zeta_deriv(Cplx(0.0));
  double ratio = (zp0 / z0).real();
  return -0.5 * dg + 0.5 * std::log(std::numbers::pi) + 1.0 - ratio;
}

/// eta = 2 sum 1/rho = gamma + 2 - log(4 pi), via the closed-form chain
/// above (every constant kernel-computed).
inline double eta_closed_form(const ZetaEngine& engine) {
  return 2.0 * sum_inv_rho_closed(engine);
}

}  // namespace zetakit
