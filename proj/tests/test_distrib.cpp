#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fcone/distrib.hpp"
#include "fcone/quad.hpp"
#include "fcone/specfun.hpp"

using namespace fcone;
using namespace fcone::distrib;

namespace {

TestFn gaussian_bump(double w = 1.0, unsigned k_max = 6) {
    TestFn f;
    f.support_radius = 30.0;
    f.k_max = k_max;
    f.value = [w](double t) {
        return std::abs(t) >= 30.0 ? 0.0 : std::exp(-w * t * t);
    };
    f.deriv = [w](double t, unsigned k) {
        // Hermite-type recurrence: d/dt (p e^{-w t^2}) with polynomial p
        std::vector<double> p = {1.0};
        for (unsigned j = 0; j < k; ++j) {
            std::vector<double> q(p.size() + 1, 0.0);
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                q[i] = (i + 1) * p[i + 1];
            for (std::size_t i = 0; i < p.size(); ++i) q[i + 1] -= 2.0 * w * p[i];
            p = q;
        }
        double v = 0.0, tp = 1.0;
        for (double c : p) {
            v += c * tp;
            tp *= t;
        }
        return v * std::exp(-w * t * t);
    };
    return f;
}

} // namespace

TEST_CASE("riesz pairing examples") {
    // lambda = 0: plain integral of a one-sided exponential
    TestFn f;
    f.support_radius = 40.0;
    f.k_max = 4;
    f.value = [](double t) { return std::abs(t) >= 40.0 ? 0.0 : std::exp(-t); };
    f.deriv = [](double t, unsigned k) {
        const double s = (k % 2 == 0) ? 1.0 : -1.0;
        return std::abs(t) >= 40.0 ? 0.0 : s * std::exp(-t);
    };
    CHECK(riesz_pair({0.0, 0.0}, +1, f).real() ==
          doctest::Approx(1.0).epsilon(1e-10));
    // residue at lambda = -2 equals -phi'(0): numerically via
    // eps * <x_+^{-2+eps}, phi>
    TestFn g = gaussian_bump(0.7);
    auto near = [&](double eps) {
        return (riesz_pair({-2.0 + eps, 0.0}, +1, g) * eps).real();
    };
    const double res = 2.0 * near(1e-5) - near(2e-5); // Richardson
    CHECK(res == doctest::Approx(-g.derivative(1, 0.0)).epsilon(1e-6));
    // lambda = -1.5 against an integration-by-parts oracle:
    // <x_+^l, phi> = -1/(l+1) <x_+^{l+1}, phi'>
    TestFn gp = g;
    gp.value = [&g](double t) { return g.derivative(1, t); };
    gp.deriv = [&g](double t, unsigned k) { return g.derivative(k + 1, t); };
    const double direct = riesz_pair({-1.5, 0.0}, +1, g).real();
    const double parts = -riesz_pair({-0.5, 0.0}, +1, gp).real() / (-0.5);
    CHECK(direct == doctest::Approx(parts).epsilon(1e-9));
    CHECK_THROWS_AS((void)riesz_pair({-2.0, 0.0}, +1, g), PoleError);
}

TEST_CASE("principal value pairing") {
    TestFn even = gaussian_bump(1.0);
    CHECK(std::abs(pv_power_pair(1, even)) < 1e-12);
    // phi = t e^{-t^2}: <t^{-1}, phi> = integral e^{-t^2} = sqrt(pi)
    TestFn odd;
    odd.support_radius = 30.0;
    odd.k_max = 4;
    odd.value = [](double t) {
        return std::abs(t) >= 30.0 ? 0.0 : t * std::exp(-t * t);
    };
    CHECK(pv_power_pair(1, odd) == doctest::Approx(SQRT_PI).epsilon(1e-9));
    // k = 2 finite part matches the subtracted quadrature directly
    TestFn g = gaussian_bump(0.9);
    const double fp = pv_power_pair(2, g);
    const double ref =
        2.0 * quad::tanh_sinh(
                  [&](double t) { return (g(t) + g(-t) - 2.0 * g(0.0)) * 0.5 /
                                         (t * t); },
                  0.0, 30.0, 1e-12) -
        2.0 * g(0.0) / 30.0;
    CHECK(fp == doctest::Approx(ref).epsilon(1e-8));
    CHECK_THROWS_AS((void)pv_power_pair(0, g), ParameterError);
}

TEST_CASE("bessel_dist structure") {
    auto d0 = bessel_dist(0, DistKind::PsiPlus);
    CHECK(d0.singular.empty());
    CHECK(d0.regular(0.5) ==
          doctest::Approx(specfun::bessel(specfun::BesselKind::J, 0.0,
                                          2.0 * std::sqrt(2.0 * 0.5)))
              .epsilon(1e-13));
    CHECK(d0.regular(-0.5) == 0.0);
    auto d1 = bessel_dist(1, DistKind::PsiPlus);
    REQUIRE(d1.singular.delta_coeffs.size() == 1);
    CHECK(d1.singular.delta_coeffs[0].first == 0);
    CHECK(d1.singular.delta_coeffs[0].second.to_double() ==
          doctest::Approx(-0.5));
    auto p1 = bessel_dist(1, DistKind::Psi);
    REQUIRE(p1.singular.pv_coeffs.size() == 1);
    CHECK(p1.singular.pv_coeffs[0].first == 1);
    CHECK(p1.singular.pv_coeffs[0].second.to_double() ==
          doctest::Approx(-1.0 / (2.0 * PI)));
    auto phi = bessel_dist(2, DistKind::Phi);
    CHECK(phi.singular.empty());
}

TEST_CASE("pairing with the regular Phi_0^+") {
    TestFn g = gaussian_bump(1.3);
    auto d = bessel_dist(0, DistKind::PhiPlus);
    const double got = bessel_dist_pair(d, g);
    const double want = quad::tanh_sinh(
        [&](double t) {
            return specfun::bessel(specfun::BesselKind::J, 0.0,
                                   2.0 * std::sqrt(2.0 * t)) *
                   g(t);
        },
        0.0, 30.0, 1e-13);
    CHECK(got == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("regular parts are consistent across the series switch") {
    for (unsigned m : {0u, 1u, 3u}) {
        auto d = bessel_dist(m, DistKind::Phi);
        for (double t : {0.124, 0.126, -0.124, -0.126}) {
            // the switch sits at |2t| = 0.25; both branches agree nearby
            const double a = d.regular(t);
            const double h = 1e-4;
            const double b = 0.5 * (d.regular(t - h) + d.regular(t + h));
            CHECK(a == doctest::Approx(b).epsilon(5e-4));
        }
    }
}

TEST_CASE("Laurent consistency of the Mellin-Barnes residues") {
    // res_{lambda=-k} Gamma(-lambda)/Gamma(lambda+1+m) <(2t)_+^lambda, phi>
    // equals the delta-term this pairing books
    const unsigned m = 2;
    TestFn g = gaussian_bump(0.8);
    for (unsigned k = 1; k <= m; ++k) {
        const int nn = 400;
        const double r = 0.23;
        Complex acc(0, 0);
        for (int i = 0; i < nn; ++i) {
            const double th = 2 * PI * (i + 0.5) / nn;
            const Complex lam = -double(k) + r * Complex(std::cos(th), std::sin(th));
            const Complex dlam =
                r * Complex(-std::sin(th), std::cos(th)) * (2 * PI / nn);
            const Complex quot = std::exp(specfun::log_gamma(-lam) -
                                          specfun::log_gamma(lam + 1.0 + double(m)));
            acc += quot * std::exp(std::log(2.0) * lam) *
                   riesz_pair(lam, +1, g) * dlam;
        }
        const Complex res = acc / Complex(0, 2 * PI);
        double fact = 1.0;
        for (unsigned i = 2; i <= m - k; ++i) fact *= i;
        const double want = (k % 2 == 1 ? 1.0 : -1.0) /
                            (std::pow(2.0, double(k)) * fact) *
                            g.derivative(k - 1, 0.0);
        CHECK(res.real() == doctest::Approx(want).epsilon(1e-8));
        CHECK(std::abs(res.imag()) < 1e-10);
    }
}

TEST_CASE("ode residuals away from the origin") {
    auto dp = bessel_dist(2, DistKind::PhiPlus);
    CHECK(std::abs(dist_ode_residual(dp, 1.7)) < 1e-6);
    auto ds = bessel_dist(1, DistKind::Psi);
    CHECK(std::abs(dist_ode_residual(ds, -2.0)) < 1e-6);
    auto dphi = bessel_dist(1, DistKind::Phi);
    CHECK(std::abs(dist_ode_residual(dphi, 0.5)) < 1e-5);
    CHECK_THROWS_AS((void)dist_ode_residual(dp, 0.003), DomainError);
}

TEST_CASE("smoothness requirements are enforced") {
    auto d = bessel_dist(3, DistKind::PsiPlus);
    TestFn f = gaussian_bump(1.0, 1); // k_max too small for delta''
    CHECK_THROWS_AS((void)bessel_dist_pair(d, f), InsufficientSmoothness);
    CHECK_THROWS_AS((void)f.derivative(4, 0.0), InsufficientSmoothness);
}
