#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fcone/quad.hpp"
#include "fcone/radial.hpp"
#include "fcone/specfun.hpp"

using namespace fcone;
using namespace fcone::radial;
using specfun::BesselKind;

namespace {

RadialGrid small_grid() { return {-14.0, 7.0, 1024}; }

double rel_l2(const Signature& s, const RadialFn& a, const RadialFn& b) {
    double e = 0, n = 0;
    for (std::size_t j = 0; j < a.grid.n; ++j) {
        const double w = std::pow(a.grid.r(j), double(s.p + s.q) - 4.0);
        e += std::pow(a.samples[j] - b.samples[j], 2) * w;
        n += std::pow(b.samples[j], 2) * w;
    }
    return std::sqrt(e / n);
}

} // namespace

TEST_CASE("signature admissibility and sector bookkeeping") {
    CHECK_THROWS_AS(Signature(3, 2), ParameterError); // p+q odd
    CHECK_THROWS_AS(Signature(2, 2), ParameterError); // p+q < 6
    Signature swapped(2, 6);
    CHECK(swapped.p == 6);
    CHECK(swapped.q == 2);
    Signature s(6, 2);
    CHECK(SectorIndex{1, 0}.a_lk(s) == 1);
    CHECK(SectorIndex{1, 0}.eigenvalue(s) == -1.0);
    CHECK(SectorIndex{0, 2}.sector_case(s) == SectorCase::Boundary);
    CHECK(SectorIndex{0, 3}.sector_case(s) == SectorCase::Two);
    Signature b(4, 4);
    CHECK(SectorIndex{1, 1}.sector_case(b) == SectorCase::Boundary);
}

TEST_CASE("f_lk closed forms") {
    Signature s62(6, 2);
    for (unsigned l : {0u, 2u})
        for (unsigned k : {0u, 1u})
            for (double r : {0.4, 1.5}) {
                const double want =
                    0.5 * SQRT_PI * std::pow(r, double(l)) * std::exp(-2.0 * r);
                CHECK(f_lk(s62, {l, k}, r) == doctest::Approx(want).epsilon(1e-13));
            }
    Signature s33(3, 3);
    CHECK(f_lk(s33, {0, 1}, 0.7) ==
          doctest::Approx(0.7 * specfun::bessel(BesselKind::K, 0.0, 1.4))
              .epsilon(1e-13));
    // large-r asymptotics: f ~ c r^{-(q-2)/2 + l} e^{-2r} (Case 1)
    Signature s44(4, 4);
    const double r1 = 18.0, r2 = 24.0;
    const double ratio = f_lk(s44, {2, 1}, r2) / f_lk(s44, {2, 1}, r1);
    const double want = std::pow(r2 / r1, -1.0 + 2.0) * std::exp(-2.0 * (r2 - r1));
    CHECK(ratio == doctest::Approx(want).epsilon(1e-2));
}

TEST_CASE("f_lk norms") {
    Signature s33(3, 3);
    CHECK(f_lk_norm_sq(s33, {0, 0}) == doctest::Approx(1.0 / 16.0));
    // quadrature cross-check at (4,4,1,2)
    Signature s44(4, 4);
    const double got = quad::exp_sinh(
        [&](double r) {
            const double v = f_lk(s44, {1, 2}, r);
            return 0.5 * v * v * std::pow(r, 3.0);
        },
        0.0, 1e-13);
    CHECK(got == doctest::Approx(f_lk_norm_sq(s44, {1, 2})).epsilon(1e-9));
    // boundary sector evaluates identically through both case branches
    CHECK(f_lk_norm_sq(s44, {1, 1}) ==
          doctest::Approx(f_lk_norm_sq(Signature(4, 4), {1, 1})));
}

TEST_CASE("mellin transform closed form") {
    Signature s33(3, 3);
    CHECK(f_lk_mellin(s33, {0, 0}, 0.0).real() == doctest::Approx(PI / 4.0));
    CHECK(f_lk_mellin(s33, {0, 0}, 0.0).imag() == doctest::Approx(0.0));
}

TEST_CASE("kernel values") {
    // q = 2 shortcut equals the Bessel closed form
    Signature s62(6, 2);
    const double t = 1.3;
    const double want = 4.0 * std::pow(-1.0, 1.0 + 2.0) *
                        std::pow(t, -1.5) *
                        specfun::bessel(BesselKind::J, 5.0, 4.0 * std::sqrt(t));
    CHECK(kernel_K_lk(s62, {1, 0}, t) == doctest::Approx(want).epsilon(1e-12));
    CHECK(kernel_K_lk(s62, {1, 1}, t) == doctest::Approx(want).epsilon(1e-12));
    // small-t order: O(t^{-q+3+l-k}) in Case 1 (q > 2)
    Signature s44(4, 4);
    const double v1 = kernel_K_lk(s44, {2, 0}, 1e-3);
    const double v2 = kernel_K_lk(s44, {2, 0}, 1e-4);
    CHECK(std::abs(std::log(v2 / v1) / std::log(0.1) - 1.0) < 0.05);
    CHECK_THROWS_AS((void)kernel_K_lk(s44, {0, 0}, -1.0), DomainError);
}

TEST_CASE("psi multiplier properties") {
    Signature s(4, 4);
    CHECK(psi_multiplier(s, {1, 1}, Complex(0, 0)).real() ==
          doctest::Approx(-1.0));
    for (double z : {0.5, -3.0, 20.0})
        CHECK(std::abs(psi_multiplier(s, {1, 2}, Complex(z, 0))) ==
              doctest::Approx(1.0).epsilon(1e-13));
    // pole set sits on the negative imaginary axis
    CHECK_THROWS_AS((void)psi_multiplier(s, {0, 0}, Complex(0.0, -2.0)),
                    PoleAtNonpositiveInteger);
}

TEST_CASE("sigma maps") {
    Signature s(3, 3);
    auto f = [](double r) { return std::exp(-(std::log(r) + 1.0) *
                                            (std::log(r) + 1.0)); };
    auto sp = sigma_map(+1, s, f);
    auto sm = sigma_map(-1, s, f);
    for (double x : {-2.0, 0.0, 1.3})
        CHECK(sm(x) == doctest::Approx(sp(-x)).epsilon(1e-14));
    // unitarity: int |sigma_+ f|^2 dx = measure norm of f
    const double lhs = quad::tanh_sinh([&](double x) { return sp(x) * sp(x); },
                                       -14.0, 9.0, 1e-12);
    const double rhs = quad::exp_sinh(
        [&](double r) { return 0.5 * f(r) * f(r) * std::pow(r, 1.0); }, 0.0,
        1e-12);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    // inverse roundtrip
    auto back = sigma_inverse(+1, s, sp);
    CHECK(back(0.7) == doctest::Approx(f(0.7)).epsilon(1e-13));
    // recurrence: d/dx sigma_- f_lk = -((p+q-4)/2 + l + k) sigma_- f_lk
    //             + 2 sigma_- f_{l+1,k+1}
    auto flk = [&](unsigned l, unsigned k) {
        return sigma_map(-1, s, [&, l, k](double r) {
            return f_lk(s, {l, k}, r);
        });
    };
    auto g0 = flk(1, 0);
    auto g1 = flk(2, 1);
    const double x = 0.4, h = 1e-5;
    const double lhs2 = (g0(x + h) - g0(x - h)) / (2 * h);
    const double rhs2 = -(1.0 + 1.0 + 0.0) * g0(x) + 2.0 * g1(x);
    CHECK(lhs2 == doctest::Approx(rhs2).epsilon(1e-8));
}

TEST_CASE("dilation on the grid") {
    Signature s(3, 3);
    RadialGrid g = small_grid();
    RadialFn f = f_lk_fn(s, {1, 1}, g);
    // exact integer shift
    const double t = 16.0 * g.dx();
    RadialFn d = dilation(s, f, t);
    const double a = s.sigma_exponent();
    for (std::size_t j = 100; j < g.n; j += 300)
        CHECK(d.samples[j] ==
              doctest::Approx(std::exp(-a * t) * f.samples[j - 16])
                  .epsilon(1e-14));
    // fractional shift against the analytic dilation
    const double tf = 0.3;
    RadialFn df = dilation(s, f, tf);
    double worst = 0;
    for (std::size_t j = 200; j + 200 < g.n; j += 50) {
        const double want = std::exp(-a * tf) * f_lk(s, {1, 1},
                                                     std::exp(g.x(j) - tf));
        worst = std::max(worst, std::abs(df.samples[j] - want));
    }
    CHECK(worst < 2e-5);
}

TEST_CASE("transforms on a small grid") {
    RadialGrid g = small_grid();
    Signature s(3, 3);
    SectorIndex idx{1, 1};
    RadialFn f = f_lk_fn(s, idx, g);
    // eigenvector through both paths
    RadialFn tm = t_lk_multiplier(s, idx, f);
    RadialFn want = f;
    for (double& v : want.samples) v *= idx.eigenvalue(s);
    CHECK(rel_l2(s, tm, want) < 2e-5);
    RadialFn td = t_lk_direct(s, idx, f);
    CHECK(rel_l2(s, td, want) < 2e-5);
    // unitarity and involutivity
    CHECK(std::abs(norm_sq(s, tm) / norm_sq(s, f) - 1.0) < 1e-6);
    RadialFn tmm = t_lk_multiplier(s, idx, tm);
    CHECK(rel_l2(s, tmm, f) < 2e-5);
}

TEST_CASE("transform guard rails") {
    RadialGrid g = small_grid();
    Signature s(3, 3);
    // Nyquist-loaded input trips the aliasing check
    RadialFn bad;
    bad.grid = g;
    bad.samples.resize(g.n);
    const double a = s.sigma_exponent();
    for (std::size_t j = 0; j < g.n; ++j) {
        const double x = g.x(j);
        bad.samples[j] = std::exp(-a * x) * (j % 2 ? -1.0 : 1.0) *
                         std::exp(-(x + 3) * (x + 3));
    }
    CHECK_THROWS_AS((void)t_lk_multiplier(s, {0, 0}, bad), AliasingDetected);
    // support reaching into unresolvable products trips the grid check
    RadialFn wide = RadialFn::from_callable(g, [](double r) {
        const double x = std::log(r);
        return std::exp(-0.02 * (x - 5.0) * (x - 5.0));
    });
    CHECK_THROWS_AS((void)t_lk_direct(s, {0, 0}, wide), GridTooCoarse);
}

TEST_CASE("fox transform parameter resolution") {
    FoxParameters fp = resolve_fox(0.0, 0.0, 1.0);
    CHECK(fp.sig.p == 3);
    CHECK(fp.sig.q == 3);
    CHECK(fp.idx.l == 0);
    CHECK(fp.idx.k == 0);
    // a q = 2 realization
    FoxParameters hp = resolve_fox(0.5, 0.0, 2.0);
    CHECK(hp.sig.q == 2);
    CHECK_THROWS_AS((void)resolve_fox(-1.0, 0.0, 1.0), ParameterOutOfRange);
    CHECK_THROWS_AS((void)resolve_fox(0.25, 0.0, 1.0), ParameterOutOfRange);
    CHECK_THROWS_AS((void)resolve_fox(0.0, 1.0, 1.0), ParameterOutOfRange);
}

TEST_CASE("fox transform reciprocity") {
    RadialGrid g{-16.0, 8.0, 2048};
    auto fy = [](double y) {
        const double u = std::log(y);
        return std::exp(-(u + 4.0) * (u + 4.0) / 3.0);
    };
    FoxResult once = fox_g_transform(0.0, 0.0, 1.0, fy, g);
    // interpolate the output as the next input
    auto fy2 = [&](double y) {
        const double rr = std::sqrt(y);
        const double pos = (std::log(rr) - g.x_min) / g.dx();
        if (pos < 0 || pos > double(g.n - 1)) return 0.0;
        const std::size_t j = std::min(std::size_t(pos), g.n - 2);
        const double w = pos - double(j);
        return (1 - w) * once.values[j] + w * once.values[j + 1];
    };
    FoxResult twice = fox_g_transform(0.0, 0.0, 1.0, fy2, g);
    double e = 0, n = 0;
    for (std::size_t j = 0; j < g.n; ++j) {
        const double dxj = 2.0 * once.x[j] * g.dx();
        e += std::pow(twice.values[j] - fy(once.x[j]), 2) * dxj;
        n += std::pow(fy(once.x[j]), 2) * dxj;
    }
    CHECK(std::sqrt(e / n) < 1e-4);
}
