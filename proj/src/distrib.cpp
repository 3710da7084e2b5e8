#include "fcone/distrib.hpp"

#include <cmath>

#include "fcone/quad.hpp"
#include "fcone/specfun.hpp"

namespace fcone::distrib {

using specfun::BesselKind;

double TestFn::derivative(unsigned k, double t) const {
    if (k == 0) return value(t);
    if (k > k_max)
        throw InsufficientSmoothness("TestFn: derivative order beyond k_max");
    if (deriv) return deriv(t, k);
    // Richardson-extrapolated central differences
    const double h = 1e-3 * support_radius;
    auto fd = [&](double step) {
        // k-th central difference
        double acc = 0.0;
        for (unsigned i = 0; i <= k; ++i) {
            const double c = std::tgamma(k + 1.0) /
                             (std::tgamma(i + 1.0) * std::tgamma(k - i + 1.0));
            const double sgn = ((k - i) % 2 == 0) ? 1.0 : -1.0;
            acc += sgn * c * value(t + (double(i) - 0.5 * k) * step);
        }
        return acc / std::pow(step, k);
    };
    const double d1 = fd(2.0 * h), d2 = fd(h);
    return d2 + (d2 - d1) / 3.0;
}

TestFn TestFn::mirrored() const {
    TestFn m = *this;
    auto v = value;
    m.value = [v](double t) { return v(-t); };
    if (deriv) {
        auto d = deriv;
        m.deriv = [d](double t, unsigned k) {
            const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            return sgn * d(-t, k);
        };
    }
    return m;
}

namespace {

Complex integrate_complex(const std::function<Complex(double)>& f, double a,
                          double b, double tol = 1e-13) {
    const double re = quad::tanh_sinh([&](double t) { return f(t).real(); }, a, b, tol);
    const double im = quad::tanh_sinh([&](double t) { return f(t).imag(); }, a, b, tol);
    return {re, im};
}

// phi with its first N Taylor terms at 0 removed
double taylor_remainder(const TestFn& phi, unsigned N, double x) {
    double v = phi(x);
    double xk = 1.0;
    for (unsigned k = 1; k <= N; ++k) {
        v -= phi.derivative(k - 1, 0.0) / std::tgamma(double(k)) * xk;
        xk *= x;
    }
    return v;
}

Complex riesz_plus(Complex lambda, const TestFn& phi) {
    // subtract enough Taylor terms that the remaining integrand exponent
    // stays above -0.4 (the quadrature degrades near a -1 endpoint power)
    const int want = int(std::ceil(0.1 - lambda.real()));
    const unsigned N = unsigned(std::max(0, want));
    if (N >= 1 && phi.k_max + 1 < N)
        throw InsufficientSmoothness("riesz_pair: need more derivatives at 0");
    Complex sum(0.0, 0.0);
    for (unsigned k = 1; k <= N; ++k) {
        const Complex denom = lambda + double(k);
        if (std::abs(denom) < 1e-13)
            throw PoleError("riesz_pair: lambda at a pole");
        sum += phi.derivative(k - 1, 0.0) / std::tgamma(double(k)) / denom;
    }
    sum += integrate_complex(
        [&](double x) {
            return std::pow(Complex(x, 0.0), lambda) * taylor_remainder(phi, N, x);
        },
        0.0, 1.0);
    const double R = std::max(phi.support_radius, 1.0);
    sum += integrate_complex(
        [&](double x) { return std::pow(Complex(x, 0.0), lambda) * phi(x); },
        1.0, R);
    return sum;
}

} // namespace

Complex riesz_pair(Complex lambda, int sign, const TestFn& phi) {
    if (sign != 1 && sign != -1) throw ParameterError("riesz_pair: sign");
    return riesz_plus(lambda, sign == 1 ? phi : phi.mirrored());
}

double pv_power_pair(unsigned k, const TestFn& phi) {
    if (k == 0) throw ParameterError("pv_power_pair: k >= 1");
    if (phi.k_max + 1 < k)
        throw InsufficientSmoothness("pv_power_pair: need k-1 derivatives");
    // finite parts of <x_pm^lambda, .> at lambda = -k; the simple poles
    // cancel between the two sides
    auto finite_part = [&](const TestFn& f) {
        double sum = 0.0;
        for (unsigned j = 1; j <= k; ++j) {
            if (j == k) continue;
            sum += f.derivative(j - 1, 0.0) /
                   (std::tgamma(double(j)) * (double(j) - double(k)));
        }
        sum += quad::tanh_sinh(
            [&](double x) {
                return std::pow(x, -double(k)) * taylor_remainder(f, k, x);
            },
            0.0, 1.0, 1e-13);
        const double R = std::max(f.support_radius, 1.0);
        sum += quad::tanh_sinh(
            [&](double x) { return std::pow(x, -double(k)) * f(x); }, 1.0, R,
            1e-13);
        return sum;
    };
    const double fp = finite_part(phi);
    const double fm = finite_part(phi.mirrored());
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    return fp + sgn * fm;
}

double ExactCoeff::to_double() const {
    double v = double(num) / double(den);
    return over_pi ? v / PI : v;
}

namespace {

std::int64_t factorial64(unsigned n) {
    std::int64_t f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// locally integrable part Phi_m(t): the Y/K-Bessel composite with the
// t^{-k} sum removed; near 0 the log-plus-power-series form is used.
double phi_m_regular(unsigned m, double t) {
    const double at = std::abs(t);
    if (at == 0.0) return 0.0; // realization off the origin only
    if (2.0 * at >= 0.25) {
        double sum = 0.0;
        for (unsigned k = 1; k <= m; ++k) {
            const double c =
                double(factorial64(k - 1)) /
                (std::pow(2.0, double(k)) * double(factorial64(m - k)));
            sum += c * std::pow(t, -double(k)); // t^{-k} literal, both signs
        }
        const double z = 2.0 * std::sqrt(2.0 * at);
        if (t > 0)
            return specfun::bessel_tilde(BesselKind::Y, double(m), z) *
                       std::pow(2.0 * t, 0.0) +
                   sum / PI;
        const double sgn = (m % 2 == 0) ? -1.0 : 1.0; // (-1)^{m+1}
        return 2.0 * sgn / PI *
                   specfun::bessel_tilde(BesselKind::K, double(m), z) +
               sum / PI;
    }
    // series with digamma coefficients plus the log terms
    double series = 0.0;
    double pw = 1.0; // (2|t|)^j
    const double w = 2.0 * t;
    double pwsigned = 1.0; // (-2t)^j
    double jpart = 0.0;    // Jtilde or Itilde composite series
    double jp = 1.0;       // (2t)^j resp. (2|t|)^j with alternating sign
    for (unsigned j = 0; j < 60; ++j) {
        const double base =
            (specfun::digamma(double(m + j + 1)) + specfun::digamma(double(j + 1))) /
            (std::tgamma(double(j + 1)) * std::tgamma(double(m + j + 1)));
        series += pwsigned * base;
        jpart += jp / (std::tgamma(double(j + 1)) * std::tgamma(double(m + j + 1)));
        pwsigned *= -w;
        jp *= (t > 0) ? -w : -w; // J-series in 2t for t>0; I-series in 2|t| below
        pw *= std::abs(w);
        if (std::abs(pwsigned * base) < 1e-18 && j > 4) break;
    }
    if (t > 0) {
        // jpart = sum (-2t)^j / (j! (m+j)!) = Jtilde_m(2 sqrt(2t))
        return (-series + jpart * std::log(w)) / PI;
    }
    // t < 0: I-series has positive terms (2|t|)^j / (j!(m+j)!)
    double ipart = 0.0, ip = 1.0;
    for (unsigned j = 0; j < 60; ++j) {
        ipart += ip / (std::tgamma(double(j + 1)) * std::tgamma(double(m + j + 1)));
        ip *= std::abs(w);
        if (ip / std::tgamma(double(j + 1)) < 1e-18 && j > 4) break;
    }
    return (-series + ipart * std::log(std::abs(w))) / PI;
}

} // namespace

BesselDistribution bessel_dist(unsigned m, DistKind kind) {
    BesselDistribution d;
    d.m = m;
    d.kind = kind;
    const auto jreg = [m](double t) {
        if (t <= 0.0) return 0.0;
        return specfun::bessel_tilde(BesselKind::J, double(m),
                                     2.0 * std::sqrt(2.0 * t));
    };
    switch (kind) {
        case DistKind::PhiPlus:
            d.regular = jreg;
            break;
        case DistKind::PsiPlus: {
            d.regular = jreg;
            for (unsigned k = 1; k <= m; ++k) {
                ExactCoeff c;
                const std::int64_t s = (k % 2 == 1) ? 1 : -1; // (-1)^{k-1}
                c.num = -s;
                c.den = (std::int64_t(1) << k) * factorial64(m - k);
                c.over_pi = false;
                d.singular.delta_coeffs.push_back({k - 1, c});
            }
            break;
        }
        case DistKind::Psi: {
            d.regular = [m](double t) { return phi_m_regular(m, t); };
            for (unsigned k = 1; k <= m; ++k) {
                ExactCoeff c;
                c.num = -factorial64(k - 1);
                c.den = (std::int64_t(1) << k) * factorial64(m - k);
                c.over_pi = true;
                d.singular.pv_coeffs.push_back({k, c});
            }
            break;
        }
        case DistKind::Phi:
            d.regular = [m](double t) { return phi_m_regular(m, t); };
            break;
    }
    return d;
}

double BesselDistribution::value_off_origin(double t) const {
    if (t == 0.0) throw OnSingularSupport("value_off_origin");
    double v = regular(t);
    for (const auto& [k, c] : singular.pv_coeffs)
        v += c.to_double() * std::pow(t, -double(k));
    return v;
}

namespace {

// integral over (0, R) on the geometric mesh t_j = R 2^{-j}; absorbs the
// |t|^{-eps} / log-type endpoint behavior of the regular parts
double graded_integral(const std::function<double(double)>& f, double R,
                       double tol) {
    static thread_local quad::Rule rule = quad::gauss_legendre(16);
    double total = 0.0;
    double hi = R;
    for (unsigned j = 0; j < 60; ++j) {
        const double lo = 0.5 * hi;
        double panel = 0.0;
        for (unsigned i = 0; i < 16; ++i) {
            const double t = 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.x[i];
            const double v = f(t);
            if (std::isfinite(v)) panel += rule.w[i] * v;
        }
        panel *= 0.5 * (hi - lo);
        total += panel;
        if (j > 8 && std::abs(panel) < 0.25 * tol * (1.0 + std::abs(total)))
            break;
        hi = lo;
    }
    return total;
}

} // namespace

double bessel_dist_pair(const BesselDistribution& d, const TestFn& phi,
                        double tol) {
    unsigned need = 0;
    for (const auto& [j, c] : d.singular.delta_coeffs)
        need = std::max(need, j);
    for (const auto& [k, c] : d.singular.pv_coeffs)
        need = std::max(need, k - 1);
    if (phi.k_max < need)
        throw InsufficientSmoothness("bessel_dist_pair: k_max too small");
    const double R = phi.support_radius;
    // regular part; split at 0, the integrand may have log/|t|^{-eps}
    // integrable singularities there
    double v = graded_integral([&](double t) { return d.regular(t) * phi(t); },
                               R, tol);
    v += graded_integral([&](double t) { return d.regular(-t) * phi(-t); }, R,
                         tol);
    for (const auto& [j, c] : d.singular.delta_coeffs) {
        const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        v += c.to_double() * sgn * phi.derivative(j, 0.0);
    }
    for (const auto& [k, c] : d.singular.pv_coeffs)
        v += c.to_double() * pv_power_pair(k, phi);
    return v;
}

double dist_ode_residual(const BesselDistribution& d, double t) {
    if (std::abs(t) <= 0.01)
        throw DomainError("dist_ode_residual: |t| > 0.01 required");
    const double h = std::abs(t) * 5e-3;
    auto u = [&](double s) { return d.value_off_origin(s); };
    const double um2 = u(t - 2 * h), um1 = u(t - h), u0 = u(t),
                 up1 = u(t + h), up2 = u(t + 2 * h);
    const double d1 = (um2 - 8 * um1 + 8 * up1 - up2) / (12 * h);
    const double d2 = (-um2 + 16 * um1 - 30 * u0 + 16 * up1 - up2) / (12 * h * h);
    const double m = double(d.m);
    if (d.kind != DistKind::Phi) return t * d2 + (m + 1.0) * d1 + 2.0 * u0;
    // third order: theta(theta^2 + m theta + 2t) u with theta = t d/dt
    const double um3 = u(t - 3 * h), up3 = u(t + 3 * h);
    const double d3 =
        (um3 - 8 * um2 + 13 * um1 - 13 * up1 + 8 * up2 - up3) / (8 * h * h * h);
    return t * t * t * d3 + (3.0 + m) * t * t * d2 +
           (1.0 + m + 2.0 * t) * t * d1 + 2.0 * t * u0;
}

} // namespace fcone::distrib
