#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fcone/cone.hpp"

using namespace fcone;
using namespace fcone::cone;
using namespace fcone::radial;

namespace {

RadialGrid grid1k() { return {-14.0, 7.0, 1024}; }

ConeFunctionStructured one_sector(const Signature& s, SectorIndex idx,
                                  const RadialGrid& g) {
    ConeFunctionStructured u;
    u.sig = s;
    std::vector<double> w0(s.p - 1, 0.0), e0(s.q - 1, 0.0);
    w0[0] = 1.0;
    e0[s.q - 2] = 1.0;
    u.sectors.push_back({idx, f_lk_fn(s, idx, g), w0, e0});
    return u;
}

} // namespace

TEST_CASE("cone norms across representations") {
    Signature s(3, 3);
    RadialGrid g = grid1k();
    ConeFunctionStructured u = one_sector(s, {0, 0}, g);
    CHECK(cone_norm_sq(u) == doctest::Approx(PI * PI / 4.0).epsilon(1e-8));
    // zero function
    ConeFunctionStructured z = u;
    for (double& v : z.sectors[0].f.samples) v = 0.0;
    CHECK(cone_norm_sq(z) == 0.0);
    // Parseval between representations, multi-sector
    ConeFunctionStructured m = u;
    m.sectors.push_back({SectorIndex{1, 2}, f_lk_fn(s, {1, 2}, g),
                         m.sectors[0].omega0, m.sectors[0].eta0});
    ConeGridFunction gu = synthesize(m, g, 24, 24);
    CHECK(cone_norm_sq(gu) ==
          doctest::Approx(cone_norm_sq(m)).epsilon(1e-6));
    // duplicate sectors are rejected
    ConeFunctionStructured dup = u;
    dup.sectors.push_back(dup.sectors[0]);
    CHECK_THROWS_AS((void)cone_norm_sq(dup), ParameterError);
}

TEST_CASE("harmonic projection") {
    Signature s(4, 4);
    RadialGrid g = grid1k();
    ConeFunctionStructured u = one_sector(s, {2, 1}, g);
    ConeGridFunction gu = synthesize(u, g, 24, 24);
    RadialFn back = harmonic_project(gu, 2, 1);
    double worst = 0;
    for (std::size_t j = 0; j < g.n; ++j)
        worst = std::max(worst,
                         std::abs(back.samples[j] - u.sectors[0].f.samples[j]));
    CHECK(worst < 1e-10);
    RadialFn cross = harmonic_project(gu, 1, 1);
    for (double v : cross.samples) CHECK(std::abs(v) < 1e-10);
    CHECK_THROWS_AS((void)harmonic_project(gu, 30, 0), QuadratureFailure);
}

TEST_CASE("parabolic action on structured functions") {
    Signature s(4, 4);
    RadialGrid g = grid1k();
    ConeFunctionStructured u = one_sector(s, {1, 0}, g);
    // dilation acts exactly on the radial factor
    ConeFunctionStructured d =
        act_parabolic(GroupElement::dilation(32.0 * g.dx()), u);
    CHECK(d.sectors[0].f.samples[200] ==
          doctest::Approx(std::exp(-2.0 * 32.0 * g.dx()) *
                          u.sectors[0].f.samples[168])
              .epsilon(1e-13));
    // m0 is a global sign (-1)^{(p-q)/2} = +1 for (4,4)
    ConeFunctionStructured m0 = act_parabolic(GroupElement::m_zero(), u);
    CHECK(m0.sectors[0].f.samples[500] ==
          doctest::Approx(u.sectors[0].f.samples[500]));
    Signature s53(5, 3); // (p-q)/2 odd flips the sign
    ConeFunctionStructured v = one_sector(s53, {0, 0}, grid1k());
    ConeFunctionStructured vm = act_parabolic(GroupElement::m_zero(), v);
    CHECK(vm.sectors[0].f.samples[500] ==
          doctest::Approx(-v.sectors[0].f.samples[500]));
    // rotation moves the zonal axes
    std::vector<double> rot = {0, -1, 0, 1, 0, 0, 0, 0, 1}; // 3x3 block
    ConeFunctionStructured rr =
        act_parabolic(GroupElement::rotation(rot, rot), u);
    CHECK(rr.sectors[0].omega0[1] == doctest::Approx(1.0));
    std::vector<double> bad = {2, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK_THROWS_AS(
        (void)act_parabolic(GroupElement::rotation(bad, rot), u),
        ResamplingError);
    // translation characters act pointwise only
    CHECK_THROWS_AS(
        (void)act_parabolic(GroupElement::translation({1, 0, 0, 0, 0, 0}), u),
        ParameterError);
    ConePoint xi;
    xi.s = 1.2;
    xi.omega = {0.6, 0.8, 0.0};
    xi.eta = {0.0, 0.8, 0.6};
    const Complex ph = translation_phase({0.3, 0, 0, 0.1, 0, -0.2}, xi);
    CHECK(std::abs(ph) == doctest::Approx(1.0));
}

TEST_CASE("radon transform of a zonal sector") {
    Signature s(4, 4);
    RadialGrid g = grid1k();
    ConeFunctionStructured u = one_sector(s, {1, 0}, g);
    ConePoint xi;
    xi.s = 1.0;
    xi.omega = {0.8, 0.6, 0.0};
    xi.eta = {0.0, 0.6, 0.8};
    // support bound
    CHECK(radon_transform(u, xi, 1e5) == 0.0);
    // continuity at 0 for p+q = 8
    const double v0 = radon_transform(u, xi, 0.0);
    const double v1 = radon_transform(u, xi, 1e-7);
    CHECK(std::abs(v1 - v0) < 1e-5 * (1.0 + std::abs(v0)));
    // logarithmic blow-up bound for (3,3)
    Signature s33(3, 3);
    ConeFunctionStructured w = one_sector(s33, {0, 0}, g);
    ConePoint xj;
    xj.s = 1.0;
    xj.omega = {0.6, 0.8};
    xj.eta = {0.8, 0.6};
    double prev_ratio = 0.0;
    for (double t : {1e-3, 1e-5, 1e-7}) {
        const double ratio =
            std::abs(radon_transform(w, xj, t)) / std::abs(std::log(t));
        if (prev_ratio > 0.0) CHECK(ratio < 1.6 * prev_ratio);
        prev_ratio = ratio;
    }
    CHECK_THROWS_AS((void)radon_transform(w, xj, 0.0), DomainError);
}

TEST_CASE("kernel pointwise properties") {
    Signature s(4, 4);
    ConePoint x, xp;
    x.s = 1.1;
    x.omega = {0.6, 0.8, 0.0};
    x.eta = {0.0, 1.0, 0.0};
    xp.s = 0.8;
    xp.omega = {1.0, 0.0, 0.0};
    xp.eta = {0.0, 0.6, 0.8};
    CHECK(kernel_pointwise(s, x, xp) ==
          doctest::Approx(kernel_pointwise(s, xp, x)).epsilon(1e-14));
    // orthogonal inner product hits the singular support
    ConePoint y = xp;
    y.omega = {0.0, 0.0, 1.0};
    y.eta = {1.0, 0.0, 0.0};
    CHECK_THROWS_AS((void)kernel_pointwise(s, x, y), OnSingularSupport);
}

TEST_CASE("radon route agrees with the harmonic route (6,2)") {
    Signature s(6, 2);
    RadialGrid g = grid1k();
    ConeFunctionStructured u = one_sector(s, {1, 0}, g);
    ConeFunctionStructured tu = inversion_fc(u);
    ConePoint xi;
    xi.s = g.r(700);
    xi.omega = {0.5, 0.5, 0.5, 0.5, 0.0};
    xi.eta = {1.0};
    const double harmonic = tu.eval(xi);
    const double radon = fc_via_radon(u, xi);
    CHECK(radon == doctest::Approx(harmonic).epsilon(1e-4));
}

TEST_CASE("group words") {
    Signature s(3, 3);
    RadialGrid g = grid1k();
    ConeFunctionStructured u = one_sector(s, {1, 1}, g);
    auto w = std::vector<GroupElement>{GroupElement::m_zero(),
                                       GroupElement::m_zero()};
    ConeFunctionStructured mm = group_word_apply(w, u);
    for (std::size_t j = 300; j < 900; j += 100)
        CHECK(mm.sectors[0].f.samples[j] ==
              doctest::Approx(u.sectors[0].f.samples[j]));
}
