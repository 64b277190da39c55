// Gamma-family kernels and the double-double substrate.
//
// Reference values are frozen from independent 30-digit evaluations
// (mpmath 1.3.0) and from exact rational arithmetic where the quantity is
// rational; tests compare this library's binary64 results against those
// to stated tolerances.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>

#include <zetakit/dd.hpp>
#include <zetakit/errors.hpp>
#include <zetakit/gamma.hpp>

using namespace zetakit;
using zetakit::detail::dd;

namespace {
dd dd_from_u64(std::uint64_t n) {
  double hi = static_cast<double>(n);
  double lo = static_cast<double>(static_cast<std::int64_t>(n - static_cast<std::uint64_t>(hi)));
  return dd(hi) + dd(lo);
}
}  // namespace

TEST_CASE("double-double exp/log round-trip") {
  CHECK(detail::exp_dd(dd(0.0)).to_double() == 1.0);
  // exp(ln 2) = 2 to full dd precision
  dd two = detail::exp_dd(detail::kDdLn2);
  CHECK(std::abs((two - dd(2.0)).to_double()) < 1e-30);
  for (double v : {0.5, 3.5, -2.25, 10.0}) {
    dd back = detail::log_dd(detail::exp_dd(dd(v)));
    CHECK(std::abs((back - dd(v)).to_double()) < 1e-28);
  }
  CHECK_THROWS_AS(detail::log_dd(dd(0.0)), DomainError);
  CHECK_THROWS_AS(detail::exp_dd(dd(800.0)), OverflowError);
}

TEST_CASE("double-double sin/cos: reduction and Pythagoras") {
  // large-argument reduction agrees with binary64 libm
  for (double v : {1e4, 123.456, -777.25}) {
    dd s, c;
    detail::sincos_dd(dd(v), s, c);
    CHECK(s.to_double() == doctest::Approx(std::sin(v)).epsilon(1e-13));
    CHECK(c.to_double() == doctest::Approx(std::cos(v)).epsilon(1e-13));
    dd pyth = s * s + c * c - dd(1.0);
    CHECK(std::abs(pyth.to_double()) < 1e-30);
  }
}

TEST_CASE("gamma at half-integers and integers") {
  // mpmath: gamma(0.5) = 1.7724538509055160273
  CHECK(gamma(Cplx(0.5)).real() == doctest::Approx(1.7724538509055160273).epsilon(1e-14));
  // mpmath: gamma(1.5) = 0.886226925452758013649
  CHECK(gamma(Cplx(1.5)).real() == doctest::Approx(0.886226925452758013649).epsilon(1e-14));
  CHECK(gamma(Cplx(1.0)).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma(Cplx(5.0)).real() == doctest::Approx(24.0).epsilon(1e-15));
  // mpmath: gamma(10.3) = 716430.689062375244548
  CHECK(gamma(Cplx(10.3)).real() == doctest::Approx(716430.689062375244548).epsilon(1e-14));
  // mpmath: gamma(0.3) = 2.99156898768759062831
  CHECK(gamma(Cplx(0.3)).real() == doctest::Approx(2.99156898768759062831).epsilon(1e-14));
  // reflection region; mpmath: gamma(-2.5) = -0.945308720482941881226
  CHECK(gamma(Cplx(-2.5)).real() == doctest::Approx(-0.945308720482941881226).epsilon(1e-13));
}

TEST_CASE("gamma at a complex point") {
  // mpmath: gamma(2+3i) = -0.0823952726656118836739 + 0.0917742874352593145957i
  Cplx g = gamma(Cplx(2.0, 3.0));
  CHECK(g.real() == doctest::Approx(-0.0823952726656118836739).epsilon(1e-13));
  CHECK(g.imag() == doctest::Approx(0.0917742874352593145957).epsilon(1e-13));
}

TEST_CASE("gamma poles raise PoleError") {
  CHECK_THROWS_AS(gamma(Cplx(0.0)), PoleError);
  CHECK_THROWS_AS(gamma(Cplx(-1.0)), PoleError);
  CHECK_THROWS_AS(gamma(Cplx(-5.0)), PoleError);
  CHECK_THROWS_AS(pi_factorial(Cplx(-1.0)), PoleError);
  CHECK_THROWS_AS(pi_factorial(Cplx(-4.0)), PoleError);
}

TEST_CASE("gamma recurrence and reflection on a grid") {
  for (int j = 0; j < 100; ++j) {
    Cplx s(0.05 + 0.1 * j, 0.0);
    Cplx lhs = gamma(s + 1.0);
    Cplx rhs = s * gamma(s);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
  }
  for (int j = 0; j <= 20; ++j) {
    Cplx s(-2.3 + 0.217 * j, 0.0);
    Cplx prod = gamma(s) * gamma(1.0 - s);
    Cplx ref = std::numbers::pi / std::sin(std::numbers::pi * s);
    CHECK(std::abs(prod - ref) <= 1e-10 * std::abs(ref));
  }
}

TEST_CASE("log_gamma principal values") {
  // mpmath: loggamma(10.3) = 13.4820367861383569706
  CHECK(log_gamma(Cplx(10.3)).real() ==
        doctest::Approx(13.4820367861383569706).epsilon(1e-14));
  CHECK(log_gamma(Cplx(10.3)).imag() == 0.0);
  // mpmath: loggamma(0.25+7.0675i) = -10.6713843069113219284 + 6.36181961591244929018i
  Cplx lg = log_gamma(Cplx(0.25, 7.0675));
  CHECK(lg.real() == doctest::Approx(-10.6713843069113219284).epsilon(1e-12));
  CHECK(lg.imag() == doctest::Approx(6.36181961591244929018).epsilon(1e-12));
  // exp(log_gamma) == gamma off the axis
  Cplx s(1.7, 2.9);
  CHECK(std::abs(std::exp(log_gamma(s)) - gamma(s)) < 1e-13 * std::abs(gamma(s)));
}

TEST_CASE("pi_factorial and its defining infinite product") {
  CHECK(pi_factorial(Cplx(0.0)).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pi_factorial(Cplx(4.0)).real() == doctest::Approx(24.0).epsilon(1e-15));
  // Pi(1/2) = Gamma(3/2)
  CHECK(pi_factorial(Cplx(0.5)).real() ==
        doctest::Approx(0.886226925452758013649).epsilon(1e-14));
  // Pi(-1/2) = Gamma(1/2)
  CHECK(pi_factorial(Cplx(-0.5)).real() ==
        doctest::Approx(1.7724538509055160273).epsilon(1e-14));
  // the n-term product converges like O(1/n) toward the closed form
  double target = 0.886226925452758013649;
  double e5 = std::abs(pi_factorial_product(Cplx(0.5), 100000).real() - target);
  double e6 = std::abs(pi_factorial_product(Cplx(0.5), 200000).real() - target);
  CHECK(e5 < 5e-6);
  CHECK(e6 < e5);
  // product route agrees with gamma route at a complex point
  Cplx s(1.25, 0.75);
  CHECK(std::abs(pi_factorial_product(s, 200000) - pi_factorial(s)) < 1e-5);
}

TEST_CASE("digamma values (argument convention: derivative of log Pi)") {
  // digamma(s) here is the classical psi(s+1)
  // mpmath: psi(2) = 0.422784335098467139393
  CHECK(digamma(Cplx(1.0)).real() == doctest::Approx(0.422784335098467139393).epsilon(1e-13));
  // mpmath: psi(1.5) = 0.036489973978576520559
  CHECK(digamma(Cplx(0.5)).real() == doctest::Approx(0.036489973978576520559).epsilon(1e-13));
  // mpmath: psi(0.5) = -1.96351002602142347944 (reflection path)
  CHECK(digamma(Cplx(-0.5)).real() == doctest::Approx(-1.96351002602142347944).epsilon(1e-13));
  // mpmath: psi(10.3) = 2.28281544643912259309
  CHECK(digamma(Cplx(9.3)).real() == doctest::Approx(2.28281544643912259309).epsilon(1e-13));
  // digamma(0) = -euler_gamma ties the two kernels together
  CHECK(digamma(Cplx(0.0)).real() == doctest::Approx(-euler_gamma()).epsilon(1e-14));
  CHECK_THROWS_AS(digamma(Cplx(-1.0)), PoleError);
  CHECK_THROWS_AS(digamma(Cplx(-7.0)), PoleError);
}

TEST_CASE("euler_gamma is computed, not recited") {
  // mpmath: euler gamma = 0.577215664901532860607
  CHECK(euler_gamma() == doctest::Approx(0.577215664901532860607).epsilon(1e-15));
  // the defining sequence H_n - log(n+1) approaches it from below
  // mpmath: H_10 - log 11 = 0.531072981169883424192
  CHECK(euler_gamma_sequence(10) ==
        doctest::Approx(0.531072981169883424192).epsilon(1e-14));
  double prev = euler_gamma_sequence(10);
  for (long n : {30L, 100L, 300L, 1000L}) {
    double cur = euler_gamma_sequence(n);
    CHECK(cur > prev);
    CHECK(cur < euler_gamma());
    prev = cur;
  }
  CHECK(std::abs(euler_gamma_sequence(1000) - euler_gamma()) < 1e-3);
}

TEST_CASE("tangent-number triangle is exact against 64-bit integer recomputation") {
  // T_1..T_12 fit in uint64; recompute the triangle exactly and require
  // bit-for-bit agreement with the double-double table
  constexpr int kN = 12;
  std::uint64_t t[kN + 1] = {0};
  t[1] = 1;
  for (int k = 2; k <= kN; ++k) t[k] = static_cast<std::uint64_t>(k - 1) * t[k - 1];
  for (int k = 2; k <= kN; ++k) {
    for (int j = k; j <= kN; ++j) {
      t[j] = static_cast<std::uint64_t>(j - k) * t[j - 1] +
             static_cast<std::uint64_t>(j - k + 2) * t[j];
    }
  }
  const auto& table = detail::tangent_numbers_dd();
  for (int k = 1; k <= kN; ++k) {
    dd diff = table[static_cast<std::size_t>(k)] - dd_from_u64(t[k]);
    CHECK(diff.to_double() == 0.0);
  }
  // spot values of the classical sequence
  CHECK(t[5] == 7936u);
  CHECK(t[8] == 1903757312u);
}

TEST_CASE("bernoulli numbers") {
  // exact small rationals
  CHECK(bernoulli(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-16));
  CHECK(bernoulli(4) == doctest::Approx(-1.0 / 30.0).epsilon(1e-16));
  CHECK(bernoulli(8) == doctest::Approx(-1.0 / 30.0).epsilon(1e-16));
  // mpmath: B_12 = -0.253113553113553113553
  CHECK(bernoulli(12) == doctest::Approx(-0.253113553113553113553).epsilon(1e-15));
  // mpmath: B_20 = -529.124242424242424242
  CHECK(bernoulli(20) == doctest::Approx(-529.124242424242424242).epsilon(1e-15));
  // mpmath: B_30 = 601580873.900642368384
  CHECK(bernoulli(30) == doctest::Approx(601580873.900642368384).epsilon(1e-15));
  // mpmath: B_60 = -2.13999492572253336658e+34
  CHECK(bernoulli(60) == doctest::Approx(-2.13999492572253336658e34).epsilon(1e-14));
  CHECK_THROWS_AS(bernoulli(3), DomainError);
  CHECK_THROWS_AS(bernoulli(0), DomainError);
  CHECK_THROWS_AS(bernoulli(62), DomainError);
  CHECK_THROWS_AS(bernoulli(-2), DomainError);
}
