#pragma once

// Sieve-backed arithmetic functions: prime/Mobius/von-Mangoldt tables, the
// Chebyshev step functions theta and psi, the prime-power counting function,
// and the partial-summation identities linking them. The step-function
// integrals are evaluated in closed form per step (each piece of
// int theta(t)/(t log^2 t) dt telescopes to a_j (1/log u - 1/log v)), so the
// identity residuals carry no quadrature error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "zetakit/errors.hpp"
#include "zetakit/report.hpp"
#include "zetakit/types.hpp"

namespace zetakit {

struct PrimeTable {
  struct PrimePower {
    std::uint64_t n;  // the prime power p^k
    std::uint32_t p;  // its base prime
  };

  std::uint64_t limit = 0;
  std::vector<std::uint32_t> primes;       // ascending
  std::vector<std::int8_t> mobius_values;  // index 0..limit
  std::vector<PrimePower> prime_powers;    // ascending by n; includes k = 1
};

inline PrimeTable build_prime_table(std::uint64_t limit) {
  if (limit < 2 || limit > 100'000'000ULL) {
    throw DomainError("build_prime_table: limit must be in [2, 1e8]");
  }
  PrimeTable t;
  t.limit = limit;

  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
  }
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (!composite[n]) t.primes.push_back(static_cast<std::uint32_t>(n));
  }

  // Mobius by Eratosthenes-style sign flips: one pass negating multiples of
  // each prime, one pass zeroing multiples of its square.
  t.mobius_values.assign(limit + 1, 1);
  t.mobius_values[0] = 0;
  for (std::uint32_t p : t.primes) {
    for (std::uint64_t m = p; m <= limit; m += p) t.mobius_values[m] = -t.mobius_values[m];
    std::uint64_t sq = static_cast<std::uint64_t>(p) * p;
    if (sq <= limit) {
      for (std::uint64_t m = sq; m <= limit; m += sq) t.mobius_values[m] = 0;
    }
  }

  for (std::uint32_t p : t.primes) {
    std::uint64_t q = p;
    while (q <= limit) {
      t.prime_powers.push_back({q, p});
      if (q > limit / p) break;
      q *= p;
    }
  }
  std::sort(t.prime_powers.begin(), t.prime_powers.end(),
            [](const PrimeTable::PrimePower& a, const PrimeTable::PrimePower& b) {
              return a.n < b.n;
            });
  return t;
}

inline int mobius(const PrimeTable& t, std::uint64_t n) {
  if (n < 1 || n > t.limit) throw DomainError("mobius: n out of table range");
  return t.mobius_values[n];
}

/// Lambda(n) = log p when n = p^k, else 0.
inline double mangoldt(const PrimeTable& t, std::uint64_t n) {
  if (n < 1 || n > t.limit) throw DomainError("mangoldt: n out of table range");
  auto it = std::lower_bound(t.prime_powers.begin(), t.prime_powers.end(), n,
                             [](const PrimeTable::PrimePower& e, std::uint64_t v) { return e.n < v; });
  if (it != t.prime_powers.end() && it->n == n) return std::log(static_cast<double>(it->p));
  return 0.0;
}

namespace detail {

inline void check_x_range(const PrimeTable& t, double x, double lo, const char* who) {
  if (!(x >= lo) || x > static_cast<double>(t.limit)) {
    throw DomainError(std::string(who) + ": x out of table range");
  }
}

/// floor(x^{1/k}) with integer correction so perfect k-th powers are never
/// missed or overshot by floating rounding.
inline std::uint64_t floor_root(double x, int k) {
  if (x < 1.0) return 0;
  auto ipow_le = [](std::uint64_t r, int kk, double bound) {
    // r^kk <= bound, overflow-safe for the small r used here
    double acc = 1.0;
    for (int i = 0; i < kk; ++i) {
      acc *= static_cast<double>(r);
      if (acc > bound) return false;
    }
    return acc <= bound;
  };
  auto r = static_cast<std::uint64_t>(std::floor(std::pow(x, 1.0 / k)));
  while (ipow_le(r + 1, k, x)) ++r;
  while (r > 0 && !ipow_le(r, k, x)) --r;
  return r;
}

}  // namespace detail

/// theta(x) = sum of log p over primes p <= x, compensated, ascending order.
inline double theta(const PrimeTable& t, double x) {
  detail::check_x_range(t, x, 0.0, "theta");
  detail::CompensatedSum s;
  for (std::uint32_t p : t.primes) {
    if (static_cast<double>(p) > x) break;
    s.add(std::log(static_cast<double>(p)));
  }
  return s.value();
}

/// psi(x) = sum of Lambda(n) over n <= x, via the prime-power table.
inline double psi(const PrimeTable& t, double x) {
  detail::check_x_range(t, x, 0.0, "psi");
  detail::CompensatedSum s;
  for (const auto& e : t.prime_powers) {
    if (static_cast<double>(e.n) > x) break;
    s.add(std::log(static_cast<double>(e.p)));
  }
  return s.value();
}

/// psi(x) through the identity psi(x) = sum_k theta(x^{1/k}); independent
/// route used for cross-checks.
inline double psi_theta_route(const PrimeTable& t, double x) {
  detail::check_x_range(t, x, 0.0, "psi_theta_route");
  detail::CompensatedSum s;
  for (int k = 1;; ++k) {
    std::uint64_t r = detail::floor_root(x, k);
    if (r < 2) break;
    s.add(theta(t, static_cast<double>(r)));
  }
  return s.value();
}

/// Half-jump averaged psi: psi(x) minus Lambda(x)/2 when x is a prime power.
inline double psi0(const PrimeTable& t, double x) {
  detail::check_x_range(t, x, 2.0, "psi0");
  double value = psi(t, x);
  if (x == std::floor(x)) {
    double jump = mangoldt(t, static_cast<std::uint64_t>(x));
    if (jump != 0.0) value -= 0.5 * jump;
  }
  return value;
}

/// Number of primes <= x.
inline long long pi_count(const PrimeTable& t, double x) {
  detail::check_x_range(t, x, 0.0, "pi_count");
  auto it = std::upper_bound(t.primes.begin(), t.primes.end(), x,
                             [](double v, std::uint32_t p) { return v < static_cast<double>(p); });
  return static_cast<long long>(it - t.primes.begin());
}

/// Riemann prime-power counting function
/// Pi(x) = pi(x) + pi(x^{1/2})/2 + pi(x^{1/3})/3 + ...
inline double big_pi(const PrimeTable& t, double x) {
  detail::check_x_range(t, x, 2.0, "big_pi");
  detail::CompensatedSum s;
  for (int k = 1;; ++k) {
    std::uint64_t r = detail::floor_root(x, k);
    if (r < 2) break;
    s.add(static_cast<double>(pi_count(t, static_cast<double>(r))) / k);
  }
  return s.value();
}

namespace detail {

// Closed-form integral of a step function F against dt/(t log^2 t) from 2
// to x: on a piece where F = a, the integral is a (1/log u - 1/log v).
// `jumps` must be the ascending jump points of F in [2, x] with the value
// log-increments `increments`; F(2^-) = 0 and the first jump is at 2.
template <class Jumps>
double step_integral_against_dlog(const Jumps& jumps, double x) {
  CompensatedSum integral;
  CompensatedSum height;
  for (std::size_t j = 0; j < jumps.size(); ++j) {
    double u = jumps[j].first;
    double next = (j + 1 < jumps.size()) ? jumps[j + 1].first : x;
    if (next > x) next = x;
    height.add(jumps[j].second);
    if (next > u) integral.add(height.value() * (1.0 / std::log(u) - 1.0 / std::log(next)));
  }
  return integral.value();
}

}  // namespace detail

/// Residual of pi(x) = theta(x)/log x + int_2^x theta(t)/(t log^2 t) dt,
/// with the step-function integral evaluated exactly piece by piece.
inline CheckResult verify_theta_pi_identity(const PrimeTable& t, double x,
                                            const PrecisionConfig& cfg, double tol = 1e-9) {
  cfg.validate();
  detail::check_x_range(t, x, 2.0, "verify_theta_pi_identity");
  std::vector<std::pair<double, double>> jumps;
  for (std::uint32_t p : t.primes) {
    if (static_cast<double>(p) > x) break;
    jumps.emplace_back(static_cast<double>(p), std::log(static_cast<double>(p)));
  }
  double th = theta(t, x);
  double rhs = th / std::log(x) + detail::step_integral_against_dlog(jumps, x);
  double lhs = static_cast<double>(pi_count(t, x));
  return make_check("pi-from-theta-partial-summation", lhs, rhs, tol,
                    "pi(x) = theta(x)/log x + int_2^x theta(t)/(t log^2 t) dt");
}

/// Residual of Pi(x) = psi(x)/log x + int_2^x psi(t)/(t log^2 t) dt, same
/// piecewise-exact integration over the prime-power jump points.
inline CheckResult verify_psi_bigpi_identity(const PrimeTable& t, double x,
                                             const PrecisionConfig& cfg, double tol = 1e-9) {
  cfg.validate();
  detail::check_x_range(t, x, 2.0, "verify_psi_bigpi_identity");
  std::vector<std::pair<double, double>> jumps;
  for (const auto& e : t.prime_powers) {
    if (static_cast<double>(e.n) > x) break;
    jumps.emplace_back(static_cast<double>(e.n), std::log(static_cast<double>(e.p)));
  }
  double ps = psi(t, x);
  double rhs = ps / std::log(x) + detail::step_integral_against_dlog(jumps, x);
  double lhs = big_pi(t, x);
  return make_check("bigpi-from-psi-partial-summation", lhs, rhs, tol,
                    "Pi(x) = psi(x)/log x + int_2^x psi(t)/(t log^2 t) dt");
}

}  // namespace zetakit
