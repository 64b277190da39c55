// Prime zeta P(s) and P'(s) by two independent routes each, the
// regularized derivative at 0, and the regularized product over all
// primes. Reference values frozen from mpmath 1.3.0 (mp.dps = 30,
// primezeta / nsum over primes).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include <zetakit/errors.hpp>
#include <zetakit/primes.hpp>
#include <zetakit/primezeta.hpp>
#include <zetakit/zeta.hpp>

using namespace zetakit;
using std::numbers::pi;

namespace {

const PrimeTable& table1e6() {
  static PrimeTable t = build_prime_table(1000000);
  return t;
}

const ZetaEngine& engine() {
  static ZetaEngine e;
  return e;
}

}  // namespace

TEST_CASE("prime zeta values match mpmath") {
  const PrimeTable& t = table1e6();
  // mpmath 1.3.0: primezeta(1.5) = 0.849562683621566446351
  CHECK(prime_zeta_direct(t, Cplx(1.5)).real() ==
        doctest::Approx(0.849562683621566446351).epsilon(1e-11));
  // mpmath: primezeta(2) = 0.452247420041065498507
  CHECK(prime_zeta_direct(t, Cplx(2.0)).real() ==
        doctest::Approx(0.452247420041065498507).epsilon(1e-11));
  // mpmath: primezeta(3) = 0.174762639299443536423
  CHECK(prime_zeta_direct(t, Cplx(3.0)).real() ==
        doctest::Approx(0.174762639299443536423).epsilon(1e-11));
  // mpmath: primezeta(4) = 0.0769931397642468449426
  CHECK(prime_zeta_direct(t, Cplx(4.0)).real() ==
        doctest::Approx(0.0769931397642468449426).epsilon(1e-11));
  // deep in the tail the first two primes dominate completely
  double p20 = prime_zeta_direct(t, Cplx(20.0)).real();
  CHECK(std::abs(p20 - std::pow(2.0, -20.0) - std::pow(3.0, -20.0)) <
        2.0 * std::pow(5.0, -20.0));
  // mpmath: primezeta(20) = 9.53961124103623326353e-7
  CHECK(p20 == doctest::Approx(9.53961124103623326353e-7).epsilon(1e-12));
  // strictly decreasing along the real axis
  CHECK(prime_zeta_direct(t, Cplx(1.5)).real() > prime_zeta_direct(t, Cplx(2.0)).real());
  CHECK(prime_zeta_direct(t, Cplx(2.0)).real() > prime_zeta_direct(t, Cplx(3.0)).real());
  CHECK(prime_zeta_direct(t, Cplx(3.0)).real() > prime_zeta_direct(t, Cplx(4.0)).real());
  CHECK(p20 > 0.0);
}

TEST_CASE("prime zeta at complex arguments matches mpmath") {
  const PrimeTable& t = table1e6();
  // mpmath: primezeta(2+i) = 0.210546015465857147087 - 0.323320672787188156723i
  Cplx p2i = prime_zeta_direct(t, Cplx(2.0, 1.0));
  CHECK(std::abs(p2i - Cplx(0.210546015465857147087, -0.323320672787188156723)) < 1e-11);
  // mpmath: primezeta(3+2i) = -0.00819264587975508699648 - 0.149047563607879457796i
  Cplx p3i = prime_zeta_direct(t, Cplx(3.0, 2.0));
  CHECK(std::abs(p3i - Cplx(-0.00819264587975508699648, -0.149047563607879457796)) < 1e-11);
}

TEST_CASE("the two prime-zeta routes agree to 1e-10") {
  const PrimeTable& t = table1e6();
  for (Cplx s : {Cplx(1.5), Cplx(2.0), Cplx(3.0), Cplx(4.0), Cplx(2.0, 1.0), Cplx(3.0, 2.0)}) {
    Cplx direct = prime_zeta_direct(t, s);
    Cplx mob = prime_zeta_mobius_auto(engine(), s);
    CHECK(std::abs(direct - mob) <= 1e-10);
  }
  // one Mobius term is exactly log zeta(s)
  CHECK(prime_zeta_mobius(engine(), Cplx(2.0), 1) == engine().log_zeta(Cplx(2.0)));
  // the fixed default truncation already reaches the direct route at s = 2
  CHECK(std::abs(prime_zeta_mobius(engine(), Cplx(2.0), 40) -
                 prime_zeta_direct(t, Cplx(2.0))) <= 1e-12);
}

TEST_CASE("exponentiated Mobius route is the zeta-power product") {
  // exp(P(2)) = prod_{n squarefree} zeta(2n)^{mu(n)/n}
  double prod = 1.0;
  for (long n = 1; n <= 40; ++n) {
    int mu = detail::small_mobius(n);
    if (mu == 0) continue;
    prod *= std::pow(engine().zeta(Cplx(2.0 * n)).real(),
                     static_cast<double>(mu) / static_cast<double>(n));
  }
  double viaP = std::exp(prime_zeta_mobius(engine(), Cplx(2.0), 40).real());
  CHECK(std::abs(viaP - prod) <= 1e-10);
}

TEST_CASE("prime zeta domain and table guards") {
  const PrimeTable& t = table1e6();
  CHECK_THROWS_AS(prime_zeta_direct(t, Cplx(1.0)), DomainError);
  CHECK_THROWS_AS(prime_zeta_direct(t, Cplx(0.5)), DomainError);
  CHECK_THROWS_AS(prime_zeta_mobius(engine(), Cplx(1.0, 3.0)), DomainError);
  CHECK_THROWS_AS(prime_zeta_mobius(engine(), Cplx(2.0), 0), DomainError);
  CHECK_THROWS_AS(prime_zeta_mobius(engine(), Cplx(2.0), 5000), DomainError);
  CHECK_THROWS_AS(prime_zeta_deriv(engine(), t, Cplx(1.0)), DomainError);
  // a table too small for a certified tail is rejected, not silently used
  PrimeTable tiny = build_prime_table(50);
  CHECK_THROWS_AS(prime_zeta_direct(tiny, Cplx(2.0)), InsufficientTableError);
  CHECK_THROWS_AS(prime_zeta_deriv_direct(engine(), tiny, Cplx(2.0)), InsufficientTableError);
  // an unreachable tolerance must trip the n_max cap, not loop forever
  PrecisionConfig hopeless;
  hopeless.series_rel_tol = 1e-300;
  CHECK_THROWS_AS(prime_zeta_mobius_auto(engine(), Cplx(1.01), hopeless),
                  InsufficientTableError);
}

TEST_CASE("prime zeta derivative: oracles and route agreement") {
  const PrimeTable& t = table1e6();
  // mpmath: P'(2) = -0.493091109368764462198
  CHECK(prime_zeta_deriv_direct(engine(), t, Cplx(2.0)).real() ==
        doctest::Approx(-0.493091109368764462198).epsilon(1e-11));
  // mpmath: P'(3) = -0.15075755554395042218
  CHECK(prime_zeta_deriv_direct(engine(), t, Cplx(3.0)).real() ==
        doctest::Approx(-0.15075755554395042218).epsilon(1e-11));
  for (Cplx s : {Cplx(2.0), Cplx(3.0)}) {
    CHECK(std::abs(prime_zeta_deriv_direct(engine(), t, s) -
                   prime_zeta_deriv(engine(), t, s)) <= 1e-12);
  }
  CHECK(std::abs(prime_zeta_deriv_direct(engine(), t, Cplx(2.0, 1.0)) -
                 prime_zeta_deriv(engine(), t, Cplx(2.0, 1.0))) <= 1e-10);
  // one term of the Mobius-derivative series is exactly zeta'/zeta(s)
  Cplx ratio = engine().zeta_deriv(Cplx(2.0)) / engine().zeta(Cplx(2.0));
  CHECK(prime_zeta_deriv(engine(), t, Cplx(2.0), 1) == ratio);
}

TEST_CASE("regularized P'(0)") {
  double reg0 = prime_zeta_deriv_reg0(engine());
  // mpmath: -2 log(2 pi) = -3.67575413281869096712
  CHECK(reg0 == doctest::Approx(-3.67575413281869096712).epsilon(1e-11));
  // 1/zeta(0) is the analytic -2, so reg0 must equal -2 zeta'(0)/zeta(0)
  double ratio = (engine().zeta_deriv(Cplx(0.0)) / engine().zeta(Cplx(0.0))).real();
  CHECK(reg0 == doctest::Approx(-2.0 * ratio).epsilon(1e-11));
  // mpmath: exp(2 log(2 pi)) = 4 pi^2 = 39.4784176043574344753
  CHECK(std::exp(-reg0) == doctest::Approx(39.4784176043574344753).epsilon(1e-9));
}

TEST_CASE("regularized prime product, all three routes") {
  double eta = eta_closed_form(engine());
  RegularizedProductResult closed =
      regularized_prime_product(engine(), eta, ProductRoute::closed_form);
  CHECK(closed.route == ProductRoute::closed_form);
  CHECK(closed.eta_used == eta);
  // mpmath: log(4 pi) = 2.53102424696929079298
  CHECK(closed.mu_exponent == doctest::Approx(2.53102424696929079298).epsilon(1e-11));
  // mpmath: 4 pi^2 = 39.4784176043574344753
  CHECK(closed.product_value == doctest::Approx(39.4784176043574344753).epsilon(1e-9));

  RegularizedProductResult pp =
      regularized_prime_product(engine(), 0.0, ProductRoute::pprime_route);
  CHECK(pp.route == ProductRoute::pprime_route);
  CHECK(pp.product_value == doctest::Approx(39.4784176043574344753).epsilon(1e-9));
  CHECK(pp.mu_exponent == doctest::Approx(std::log(4.0 * pi)).epsilon(1e-10));
  // the back-solved eta lands on the closed-form value
  CHECK(pp.eta_used == doctest::Approx(eta).epsilon(1e-9));

  // a zero-sum eta carrying truncation error moves the product proportionally
  RegularizedProductResult zs =
      regularized_prime_product(engine(), eta + 5e-4, ProductRoute::zero_sum);
  CHECK(zs.eta_used == eta + 5e-4);
  CHECK(std::abs(zs.product_value - 39.4784176043574344753) < 2e-2);
  CHECK(zs.product_value < closed.product_value);  // larger eta, smaller product

  // invariant: the reported value is exactly pi e^mu for every route
  for (const auto& r : {closed, pp, zs}) {
    CHECK(r.product_value == pi * std::exp(r.mu_exponent));
  }
}
