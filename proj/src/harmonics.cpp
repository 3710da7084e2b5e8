#include "fcone/harmonics.hpp"

#include <cmath>

#include "fcone/specfun.hpp"

namespace fcone::harmonics {

using specfun::funk_hecke_weight;
using specfun::rgamma;
using specfun::sphere_area;

SphereQuad SphereQuad::build(unsigned m, unsigned nodes) {
    if (m < 1) throw DomainError("SphereQuad: ambient dim >= 1");
    SphereQuad s;
    s.ambient_dim = m;
    if (m == 1) { // S^0 = {+1, -1}, unit point masses
        s.x = {1.0, -1.0};
        s.w = {1.0, 1.0};
        return s;
    }
    const double a = 0.5 * (double(m) - 3.0);
    quad::Rule r = quad::gauss_jacobi(nodes, a, a);
    s.x = r.x;
    s.w = r.w;
    const double ring = sphere_area(m - 1); // |S^{m-2}|
    for (double& w : s.w) w *= ring;
    return s;
}

double SphereQuad::total_measure() const {
    double t = 0.0;
    for (double w : w) t += w;
    return t;
}

double funk_hecke(const std::function<double(double)>& h, unsigned l,
                  unsigned n, unsigned nodes) {
    if (n < 2) throw DomainError("funk_hecke: n >= 2");
    const double pref =
        std::pow(2.0, double(n) - 2.0) * std::pow(PI, 0.5 * (double(n) - 2.0));
    const double a = 0.5 * (double(n) - 3.0);
    quad::Rule r = quad::gauss_jacobi(nodes, a, a);
    double s = 0.0;
    for (unsigned i = 0; i < nodes; ++i)
        s += r.w[i] * h(r.x[i]) * funk_hecke_weight(l, n, r.x[i]);
    return pref * s;
}

namespace {

// inner integral against the y factor, split at y = -x for kernels with an
// antidiagonal edge
double inner_y(const std::function<double(double, double)>& h, double x,
               unsigned k, unsigned q, double tol) {
    auto f = [&](double y) {
        return h(x, y) * funk_hecke_weight(k, q - 1, y) *
               std::pow(1.0 - y * y, 0.5 * (double(q) - 4.0));
    };
    const double ysplit = -x;
    if (ysplit > -1.0 && ysplit < 1.0)
        return quad::tanh_sinh(f, -1.0, ysplit, tol) +
               quad::tanh_sinh(f, ysplit, 1.0, tol);
    return quad::tanh_sinh(f, -1.0, 1.0, tol);
}

} // namespace

double alpha_lk(const std::function<double(double, double)>& h, unsigned l,
                unsigned k, unsigned p, unsigned q, const AlphaOptions& opt) {
    if (p < q) throw ParameterError("alpha_lk: requires p >= q");
    if (q == 2) {
        if (k >= 2) return 0.0;
        const double pref = std::pow(2.0, double(p) - 3.0) *
                            std::pow(PI, 0.5 * (double(p) - 3.0));
        auto uk = [&](double x) {
            const double s = (k % 2 == 0) ? 1.0 : -1.0;
            return h(x, 1.0) + s * h(x, -1.0);
        };
        auto f = [&](double x) {
            return uk(x) * funk_hecke_weight(l, p - 1, x) *
                   std::pow(1.0 - x * x, 0.5 * (double(p) - 4.0));
        };
        return pref * quad::tanh_sinh(f, -1.0, 1.0, opt.tol);
    }
    const double pref = std::pow(2.0, double(p + q) - 6.0) *
                        std::pow(PI, 0.5 * (double(p + q) - 6.0));
    if (opt.nodes > 0) {
        const double ax = 0.5 * (double(p) - 4.0);
        const double ay = 0.5 * (double(q) - 4.0);
        quad::Rule rx = quad::gauss_jacobi(opt.nodes, ax, ax);
        quad::Rule ry = quad::gauss_jacobi(opt.nodes, ay, ay);
        double s = 0.0;
        for (unsigned i = 0; i < opt.nodes; ++i) {
            double row = 0.0;
            for (unsigned j = 0; j < opt.nodes; ++j)
                row += ry.w[j] * h(rx.x[i], ry.x[j]) *
                       funk_hecke_weight(k, q - 1, ry.x[j]);
            s += rx.w[i] * row * funk_hecke_weight(l, p - 1, rx.x[i]);
        }
        return pref * s;
    }
    auto outer = [&](double x) {
        return inner_y(h, x, k, q, 0.3 * opt.tol) *
               funk_hecke_weight(l, p - 1, x) *
               std::pow(1.0 - x * x, 0.5 * (double(p) - 4.0));
    };
    return pref * quad::tanh_sinh(outer, -1.0, 1.0, opt.tol);
}

double riesz_spectrum(double lambda, int sign, unsigned l, unsigned k,
                      unsigned p, unsigned q) {
    if (!(lambda > -1.0)) throw ParameterError("riesz_spectrum: lambda > -1");
    const double L = double(l), K = double(k), P = double(p), Q = double(q);
    const double sgn = (sign > 0 || (l + k) % 2 == 0) ? 1.0 : -1.0;
    return sgn * std::pow(2.0, 1.0 - lambda) * std::pow(PI, 0.5 * (P + Q - 2.0)) *
           std::tgamma(lambda + 0.5 * (P + Q - 4.0)) *
           rgamma(0.5 * (lambda + P + Q - 4.0 + L + K)) *
           rgamma(0.5 * (lambda + P - 1.0 + L - K)) *
           rgamma(0.5 * (lambda + Q - 1.0 - L + K)) *
           rgamma(0.5 * (lambda - L - K + 2.0));
}

double hlambda_kernel(double lambda, unsigned p, unsigned q, double x, double y) {
    if (p <= 2 || q <= 2 || (p + q) % 2 != 0)
        throw ParameterError("hlambda_kernel: p, q > 2 with p+q even");
    if (near_integer(lambda))
        throw PoleError("hlambda_kernel: integer lambda");
    const double s = x + y;
    const double pref = std::tgamma(-lambda) *
                        rgamma(lambda + 0.5 * (double(p + q) - 4.0));
    const bool even = (p % 2 == 0);
    if (even) return pref * (s > 0 ? std::pow(s, lambda) : 0.0);
    const double plus = s > 0 ? std::pow(s, lambda) : 0.0;
    const double minus = s < 0 ? std::pow(-s, lambda) : 0.0;
    return pref * (plus / std::tan(lambda * PI) + minus / std::sin(lambda * PI));
}

double hlambda_spectrum(double lambda, unsigned l, unsigned k, unsigned p,
                        unsigned q) {
    if (p <= 2 || q <= 2 || (p + q) % 2 != 0)
        throw ParameterError("hlambda_spectrum: p, q > 2 with p+q even");
    if (!(lambda > -1.0)) throw ParameterError("hlambda_spectrum: lambda > -1");
    const double L = double(l), K = double(k), P = double(p), Q = double(q);
    auto numer_gamma = [](double arg) {
        if (near_nonpositive_integer(arg))
            throw PoleError("hlambda_spectrum: numerator gamma pole");
        return std::tgamma(arg);
    };
    const double common = std::pow(PI, 0.5 * (P + Q - 4.0)) *
                          std::pow(2.0, -lambda) *
                          numer_gamma(0.5 * (L + K - lambda));
    // parity adjudicated against direct quadrature of the kernel
    const double s1 = ((l + (q - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    const double a1 = s1 * common *
                      numer_gamma(0.5 * (-Q + 3.0 + L - K - lambda)) *
                      rgamma(0.5 * (lambda + P + Q + L + K - 4.0)) *
                      rgamma(0.5 * (lambda + P - 1.0 + L - K));
    const double s2 = ((k + (p - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    const double a2 = s2 * common *
                      numer_gamma(0.5 * (-P + 3.0 - L + K - lambda)) *
                      rgamma(0.5 * (P + Q - 4.0 + L + K + lambda)) *
                      rgamma(0.5 * (Q - 1.0 - L + K + lambda));
    if (std::abs(a1 - a2) > 1e-12 * (1.0 + std::abs(a1)))
        throw Error("hlambda_spectrum: the two gamma forms disagree");
    return a1;
}

double intertwiner_apply(unsigned i, unsigned j, unsigned m,
                         const std::function<double(double)>& profile_zonal,
                         double x0, const std::vector<double>& xvec) {
    if (i > j) throw ParameterError("intertwiner_apply: need i <= j");
    if (xvec.size() + 1 != m)
        throw ArityMismatch("intertwiner_apply: point dimension");
    double n2 = x0 * x0;
    for (double c : xvec) n2 += c * c;
    if (std::abs(n2 - 1.0) > 1e-12)
        throw DomainError("intertwiner_apply: point off the unit sphere");
    double nx = 0.0;
    for (double c : xvec) nx += c * c;
    nx = std::sqrt(nx);
    const double mu = 0.5 * (double(m) - 2.0) + double(i);
    const double geg = specfun::gegenbauer_tilde(j - i, mu, x0);
    if (i == 0) return profile_zonal(1.0) * geg; // constant profile
    const double profile = profile_zonal(nx > 0 ? xvec[0] / nx : 1.0);
    return std::pow(nx, double(i)) * profile * geg;
}

double fractional_integral_2d(double lambda, double mu, double nu, unsigned l,
                              unsigned k, int sign) {
    if (!(mu > -0.5) || !(nu > -0.5) || !(lambda > -1.0))
        throw ParameterError("fractional_integral_2d: parameter range");
    const double L = double(l), K = double(k);
    const double sgn = (sign > 0 || (l + k) % 2 == 0) ? 1.0 : -1.0;
    const double b = sgn * PI * PI * std::tgamma(2.0 * mu + L) *
                     std::tgamma(2.0 * nu + K) /
                     (std::pow(2.0, 2.0 * mu + 2.0 * nu) *
                      std::tgamma(L + 1.0) * std::tgamma(K + 1.0));
    return b * std::pow(2.0, 1.0 - lambda) *
           std::tgamma(lambda + mu + nu + 1.0) *
           rgamma(0.5 * (lambda + 2.0 * mu + 2.0 * nu + L + K + 2.0)) *
           rgamma(0.5 * (lambda + 2.0 * mu + L - K + 2.0)) *
           rgamma(0.5 * (lambda + 2.0 * nu - L + K + 2.0)) *
           rgamma(0.5 * (lambda - L - K + 2.0));
}

} // namespace fcone::harmonics
