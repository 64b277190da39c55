#pragma once

// Gamma-family kernel: Gamma, the shifted factorial Pi(s) = Gamma(s+1) with
// its Gauss-product partial evaluator, digamma in the Pi convention
// (digamma(s) = classical psi(s+1)), the Euler-Mascheroni constant computed
// from the harmonic limit, and Bernoulli numbers from the tangent-number
// triangle (all-positive recurrence, no cancellation).

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "zetakit/dd.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/types.hpp"

namespace zetakit {

namespace detail {

// Lanczos rational approximation, g = 607/128, 15 terms (Godfrey's
// coefficient set); certified ~3e-15 worst relative error for re(z) >= 1/2
// on the domain this library uses (|z| <= 50 and the critical-strip shifts).
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr std::array<double, 15> kLanczosC = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

template <class T>
T lanczos_sum(T w) {
  // w = z - 1 with re(z) >= 1/2
  T x(kLanczosC[0]);
  for (int k = 1; k < 15; ++k) x += T(kLanczosC[k]) / (w + T(static_cast<double>(k)));
  return x;
}

inline bool is_nonpositive_integer(Cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

inline double gamma_real_positive(double z) {
  // re(z) >= 1/2 assumed
  double w = z - 1.0;
  double x = lanczos_sum(w);
  double t = w + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, w + 0.5) * std::exp(-t) * x;
}

inline Cplx gamma_cplx_right(Cplx z) {
  Cplx w = z - 1.0;
  Cplx x = lanczos_sum(w);
  Cplx t = w + (kLanczosG + 0.5);
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, w + 0.5) * std::exp(-t) * x;
}

}  // namespace detail

/// Gamma(s). Reflection is used for re(s) < 1/2; poles at nonpositive
/// integers raise PoleError, results outside floating range raise
/// OverflowError. Certified relative error <= 1e-12 for |s| <= 50.
inline Cplx gamma(Cplx s) {
  if (!is_finite(s)) throw DomainError("gamma: non-finite argument");
  if (detail::is_nonpositive_integer(s)) throw PoleError("gamma: pole at nonpositive integer");
  Cplx r;
  if (s.imag() == 0.0) {
    double x = s.real();
    double v;
    if (x >= 0.5) {
      v = detail::gamma_real_positive(x);
    } else {
      // Gamma(x) Gamma(1-x) = pi / sin(pi x)
      v = std::numbers::pi / (std::sin(std::numbers::pi * x) * detail::gamma_real_positive(1.0 - x));
    }
    r = Cplx(v, 0.0);
  } else if (s.real() >= 0.5) {
    r = detail::gamma_cplx_right(s);
  } else {
    r = std::numbers::pi / (std::sin(std::numbers::pi * s) * detail::gamma_cplx_right(1.0 - s));
  }
  if (!is_finite(r)) throw OverflowError("gamma: result exceeds floating range");
  return r;
}

/// log Gamma(s), continuous on the half-plane re(s) > 0 and continued from
/// the upper half-plane elsewhere off the poles. Real on the positive real
/// axis.
inline Cplx log_gamma(Cplx s) {
  if (!is_finite(s)) throw DomainError("log_gamma: non-finite argument");
  if (detail::is_nonpositive_integer(s)) throw PoleError("log_gamma: pole at nonpositive integer");
  // shift until re >= 1.5 so the Lanczos sum stays in the right half-plane
  Cplx shift(0.0);
  Cplx z = s;
  while (z.real() < 1.5) {
    if (detail::is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at nonpositive integer");
    shift += std::log(z);
    z += 1.0;
  }
  Cplx w = z - 1.0;
  Cplx x = detail::lanczos_sum(w);
  Cplx t = w + (detail::kLanczosG + 0.5);
  Cplx lg = (w + 0.5) * std::log(t) - t + std::log(std::sqrt(2.0 * std::numbers::pi) * x);
  Cplx r = lg - shift;
  if (s.imag() == 0.0 && s.real() > 0.0) r = Cplx(r.real(), 0.0);
  return r;
}

/// Pi(s) = s Gamma(s) = Gamma(s+1).
inline Cplx pi_factorial(Cplx s) {
  if (detail::is_nonpositive_integer(s + 1.0)) {
    throw PoleError("pi_factorial: pole (s+1 is a nonpositive integer)");
  }
  return gamma(s + 1.0);
}

/// First N factors of the Gauss-type product
///   Pi(s) = prod_{n>=1} n^{1-s} (n+1)^s / (s+n),
/// converging to pi_factorial(s) at rate O(1/N). Cross-check path only.
inline Cplx pi_factorial_product(Cplx s, long n_terms) {
  if (n_terms < 1) throw DomainError("pi_factorial_product: need at least one factor");
  Cplx acc(1.0);
  for (long n = 1; n <= n_terms; ++n) {
    double dn = static_cast<double>(n);
    Cplx den = s + dn;
    if (den == Cplx(0.0)) throw PoleError("pi_factorial_product: pole (s+1 is a nonpositive integer)");
    // n^{1-s} (n+1)^s = n * (1 + 1/n)^s
    acc *= dn * std::pow((dn + 1.0) / dn, s) / den;
  }
  return acc;
}

namespace detail {

// Classical digamma psi(w); accurate to ~1e-13 absolute on |w| <= 60.
template <class T>
T digamma_classical(T w) {
  T acc(0.0);
  double re = [&] {
    if constexpr (std::is_same_v<T, double>) return w; else return w.real();
  }();
  if (re < 0.5) {
    // psi(w) = psi(1-w) - pi cot(pi w)
    T pw = std::numbers::pi * w;
    acc -= std::numbers::pi * std::cos(pw) / std::sin(pw);
    w = T(1.0) - w;
  }
  while (true) {
    double r = [&] {
      if constexpr (std::is_same_v<T, double>) return w; else return w.real();
    }();
    if (r >= 15.0) break;
    acc -= T(1.0) / w;
    w += T(1.0);
  }
  // asymptotic series: log w - 1/(2w) - sum B_{2k}/(2k w^{2k})
  static constexpr std::array<double, 8> b2k_over_2k = {
      +1.0 / 12.0,        // B2/2
      -1.0 / 120.0,       // B4/4
      +1.0 / 252.0,       // B6/6
      -1.0 / 240.0,       // B8/8
      +1.0 / 132.0,       // B10/10
      -691.0 / 32760.0,   // B12/12
      +1.0 / 12.0,        // B14/14
      -3617.0 / 8160.0,   // B16/16
  };
  T inv2 = T(1.0) / (w * w);
  T p = inv2;
  T series(0.0);
  for (double c : b2k_over_2k) {
    series += c * p;
    p *= inv2;
  }
  return acc + std::log(w) - T(0.5) / w - series;
}

}  // namespace detail

/// digamma(s) = Pi'(s)/Pi(s) = classical psi(s+1). Poles at negative
/// integers s.
inline Cplx digamma(Cplx s) {
  if (!is_finite(s)) throw DomainError("digamma: non-finite argument");
  Cplx w = s + 1.0;
  if (detail::is_nonpositive_integer(w)) throw PoleError("digamma: pole at negative integer");
  if (s.imag() == 0.0) return Cplx(detail::digamma_classical(w.real()), 0.0);
  return detail::digamma_classical(w);
}

/// Raw harmonic-limit sequence H_n - log(n+1); tends to the
/// Euler-Mascheroni constant at rate Theta(1/n).
inline double euler_gamma_sequence(long n) {
  if (n < 1) throw DomainError("euler_gamma_sequence: n must be positive");
  detail::CompensatedSum h;
  for (long k = 1; k <= n; ++k) h.add(1.0 / static_cast<double>(k));
  return h.value() - std::log(static_cast<double>(n) + 1.0);
}

/// Euler-Mascheroni constant computed (not hardcoded) by Euler-Maclaurin
/// acceleration of the harmonic limit:
///   gamma = H_n - log n - 1/(2n) + sum_{k>=1} B_{2k}/(2k n^{2k}).
inline double euler_gamma() {
  static const double value = [] {
    constexpr long n = 25;
    detail::CompensatedSum h;
    for (long k = 1; k <= n; ++k) h.add(1.0 / static_cast<double>(k));
    double g = h.value() - std::log(static_cast<double>(n)) - 0.5 / n;
    // same B_{2k}/(2k) leading coefficients as the digamma series
    static constexpr std::array<double, 10> b2k_over_2k = {
        +1.0 / 12.0,      -1.0 / 120.0,     +1.0 / 252.0,     -1.0 / 240.0,
        +1.0 / 132.0,     -691.0 / 32760.0, +1.0 / 12.0,      -3617.0 / 8160.0,
        +43867.0 / 14364.0, -174611.0 / 6600.0,
    };
    double inv2 = 1.0 / (static_cast<double>(n) * n);
    double p = inv2;
    for (double c : b2k_over_2k) {
      g += c * p;
      p *= inv2;
    }
    return g;
  }();
  return value;
}

namespace detail {

// Tangent numbers T_1..T_30 by the in-place triangle (all operations on
// nonnegative integers, so the only rounding is the 106-bit double-double
// representation of values beyond 2^106).
inline const std::array<dd, 31>& tangent_numbers_dd() {
  static const std::array<dd, 31> table = [] {
    std::array<dd, 31> t{};
    t[1] = dd(1.0);
    for (int k = 2; k <= 30; ++k) t[k] = t[k - 1] * dd(static_cast<double>(k - 1));
    for (int k = 2; k <= 30; ++k) {
      for (int j = k; j <= 30; ++j) {
        t[j] = t[j - 1] * dd(static_cast<double>(j - k)) +
               t[j] * dd(static_cast<double>(j - k + 2));
      }
    }
    return t;
  }();
  return table;
}

/// B_{2n} in double-double via B_{2n} = (-1)^{n-1} 2n T_n / (4^n (4^n - 1)).
inline dd bernoulli_dd_2n(int n) {
  const auto& t = tangent_numbers_dd();
  dd four_n(std::ldexp(1.0, 2 * n));  // exact 4^n
  dd num = t[n] * dd(2.0 * n);
  dd val = num / (four_n * (four_n - dd(1.0)));
  return (n % 2 == 1) ? val : -val;
}

inline dd factorial_dd(int m) {
  dd f(1.0);
  for (int i = 2; i <= m; ++i) f *= dd(static_cast<double>(i));
  return f;
}

/// B_k / k! for even k, double-double; the Euler-Maclaurin correction weights.
inline const std::array<dd, 31>& bernoulli_over_factorial_dd() {
  static const std::array<dd, 31> table = [] {
    std::array<dd, 31> w{};
    for (int n = 1; n <= 30; ++n) w[n] = bernoulli_dd_2n(n) / factorial_dd(2 * n);
    return w;
  }();
  return table;
}

}  // namespace detail

/// Bernoulli number B_k for even k, 2 <= k <= 60.
inline double bernoulli(int k) {
  if (k < 2 || k > 60 || k % 2 != 0) {
    throw DomainError("bernoulli: supported indices are even k in [2, 60]");
  }
  return detail::bernoulli_dd_2n(k / 2).to_double();
}

}  // namespace zetakit
