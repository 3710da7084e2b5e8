#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fcone/quad.hpp"
#include "fcone/specfun.hpp"

using namespace fcone;
using namespace fcone::specfun;

TEST_CASE("log_gamma basic values and recursion") {
    CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
    CHECK(std::abs(log_gamma({0.5, 0.0}).real() - std::log(SQRT_PI)) < 1e-14);
    const Complex z{5.3, 2.1};
    CHECK(std::abs(log_gamma(z + 1.0) - log_gamma(z) - std::log(z)) < 1e-13);
    // reflection region agrees with the real gamma function
    for (double x : {-0.3, -1.7, -4.2})
        CHECK(gamma(Complex(x, 0.0)).real() ==
              doctest::Approx(std::tgamma(x)).epsilon(1e-12));
    CHECK_THROWS_AS((void)log_gamma({-3.0, 0.0}), PoleAtNonpositiveInteger);
}

TEST_CASE("rgamma zeros and values") {
    CHECK(rgamma(-2.0) == 0.0);
    CHECK(rgamma(0.0) == 0.0);
    CHECK(rgamma(3.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rgamma(-0.5) == doctest::Approx(1.0 / std::tgamma(-0.5)).epsilon(1e-13));
}

TEST_CASE("bessel closed forms") {
    // K_{1/2}(z) = sqrt(pi/2z) e^{-z}
    const double z = 2.0;
    CHECK(bessel(BesselKind::K, 0.5, z) ==
          doctest::Approx(std::sqrt(PI / (2 * z)) * std::exp(-z)).epsilon(1e-13));
    // K_{3/2} finite sum: sqrt(pi/2z) e^{-z} (1 + 1/z)
    CHECK(bessel(BesselKind::K, 1.5, 1.0) ==
          doctest::Approx(std::sqrt(PI / 2.0) * std::exp(-1.0) * 2.0)
              .epsilon(1e-13));
    // J0 at small argument -> 1
    CHECK(bessel(BesselKind::J, 0.0, 1e-8) == doctest::Approx(1.0));
    CHECK_THROWS_AS((void)bessel(BesselKind::J, 0.0, -1.0), DomainError);
    CHECK_THROWS_AS((void)bessel(BesselKind::J, 0.0, 0.0), DomainError);
}

TEST_CASE("bessel_tilde small-argument behavior") {
    // Jtilde_0(0+) = 1
    CHECK(bessel_tilde(BesselKind::J, 0.0, 1e-12) == doctest::Approx(1.0));
    // Ktilde_1(x) ~ Gamma(1)/2 (x/2)^{-2}
    const double x = 1e-5;
    CHECK(bessel_tilde(BesselKind::K, 1.0, x) * std::pow(0.5 * x, 2.0) ==
          doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("gegenbauer_tilde values and limits") {
    CHECK(gegenbauer_tilde(0, 0.75, 0.3) ==
          doctest::Approx(std::tgamma(0.75)).epsilon(1e-14));
    const double th = 0.7;
    CHECK(gegenbauer_tilde(2, 0.0, std::cos(th)) ==
          doctest::Approx(std::cos(2 * th)).epsilon(1e-13));
    CHECK_THROWS_AS((void)gegenbauer_tilde(1, 0.5, 1.5), DomainError);
    CHECK_THROWS_AS((void)gegenbauer_tilde(0, 0.0, 0.5), DomainError);
    // orthogonality l=1, m=2, mu=1 by Gauss-Jacobi
    quad::Rule rule = quad::gauss_jacobi(32, 0.5, 0.5);
    double s = 0;
    for (std::size_t i = 0; i < rule.x.size(); ++i)
        s += rule.w[i] * gegenbauer_tilde(1, 1.0, rule.x[i]) *
             gegenbauer_tilde(2, 1.0, rule.x[i]);
    CHECK(std::abs(s) < 1e-14);
}

TEST_CASE("funk_hecke_weight limits at two-dimensional ambient") {
    CHECK(funk_hecke_weight(0, 2, 0.3) == doctest::Approx(2.0));
    CHECK(funk_hecke_weight(2, 2, std::cos(0.4)) ==
          doctest::Approx(2.0 * std::cos(0.8)).epsilon(1e-13));
}

TEST_CASE("assoc_legendre definition and relation") {
    // mu = 0, x -> 1-: 2F1 at 0 equals 1
    CHECK(assoc_legendre(1.3, 0.0, 1.0 - 1e-12) == doctest::Approx(1.0));
    // 1 - mu at a nonpositive integer returns 0 by the prefactor convention
    CHECK(assoc_legendre(0.7, 1.0, 0.2) == 0.0);
    CHECK(assoc_legendre(0.7, 3.0, 0.2) == 0.0);
    // functional relation d/dx[(1-x^2)^{-mu/2} P(-x)] =
    // (1-x^2)^{-(mu+1)/2} P^{mu+1}(-x), by central differences
    const double nu = 0.8, mu = 0.3, x = 0.2, h = 1e-5;
    auto g = [&](double xx) {
        return std::pow(1 - xx * xx, -0.5 * mu) * assoc_legendre(nu, mu, -xx);
    };
    const double lhs = (g(x + h) - g(x - h)) / (2 * h);
    const double rhs =
        std::pow(1 - x * x, -0.5 * (mu + 1)) * assoc_legendre(nu, mu + 1, -x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
    CHECK_THROWS_AS((void)assoc_legendre(1.0, 0.5, 1.5), DomainError);
}

TEST_CASE("hyp_pfq basic behavior") {
    CHECK(hyp_pfq({0.3, 1.2}, {0.9}, 0.0) == 1.0);
    // terminating 2F1 equals the Gegenbauer connection at sample points
    for (double x : {-0.7, 0.1, 0.64}) {
        const unsigned l = 2;
        const double mu = 0.8;
        const double lhs = std::tgamma(l + 2 * mu) * std::tgamma(mu) /
                           (std::tgamma(l + 1.0) * std::tgamma(2 * mu)) *
                           hyp_pfq({double(l) + 2 * mu, -double(l)},
                                   {mu + 0.5}, 0.5 * (1 - x));
        CHECK(lhs == doctest::Approx(gegenbauer_tilde(l, mu, x)).epsilon(1e-12));
    }
    // 0F1(nu+1; -x^2/4)/Gamma(nu+1) = Jtilde_nu(x)
    const double nu = 0.5, x = 1.3;
    CHECK(hyp_pfq({}, {nu + 1.0}, -x * x / 4.0) / std::tgamma(nu + 1.0) ==
          doctest::Approx(bessel_tilde(BesselKind::J, nu, x)).epsilon(1e-13));
    CHECK_THROWS_AS((void)hyp_pfq({1.0}, {-2.0}, 0.3), ParameterError);
    // divergent series for |x| > 1 with p = q+1
    SeriesControl ctl;
    ctl.max_terms = 64;
    CHECK_THROWS_AS((void)hyp_pfq({1.0, 2.0}, {0.5}, 1.8, ctl), NonConvergent);
}

TEST_CASE("appell_f4 region and trivial value") {
    CHECK(appell_f4(1.2, 0.7, 1.5, 0.7, 0.0, 0.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS((void)appell_f4(1.0, 1.0, 1.5, 1.5, 0.6, 0.5),
                    NonConvergent);
}

TEST_CASE("quadrature rules") {
    // Gauss-Jacobi reproduces monomial moments within exactness
    quad::Rule r = quad::gauss_jacobi(12, 1.0, 0.0);
    auto moment = [&](unsigned k) {
        double s = 0;
        for (std::size_t i = 0; i < r.x.size(); ++i)
            s += r.w[i] * std::pow(r.x[i], double(k));
        return s;
    };
    // reference by deep tanh-sinh
    for (unsigned k : {0u, 3u, 10u, 17u}) {
        const double want = quad::tanh_sinh(
            [&](double x) { return std::pow(x, double(k)) * (1.0 - x); }, -1.0,
            1.0, 1e-14);
        CHECK(moment(k) == doctest::Approx(want).epsilon(1e-13));
    }
    // tanh-sinh picks up an integrable endpoint singularity
    CHECK(quad::tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                          1e-12) == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(quad::exp_sinh([](double x) { return std::exp(-x); }, 0.0, 1e-12) ==
          doctest::Approx(1.0).epsilon(1e-11));
}
