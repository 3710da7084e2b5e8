#include "fcone/quad.hpp"

#include <algorithm>
#include <cmath>

namespace fcone::quad {

Rule gauss_legendre(unsigned n) {
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    const unsigned m = (n + 1) / 2;
    for (unsigned i = 0; i < m; ++i) {
        double z = std::cos(PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (unsigned j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        r.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        r.w[n - 1 - i] = r.w[i];
    }
    return r;
}

namespace {

// Symmetric tridiagonal QL with implicit shifts; d = diagonal, e = offdiag,
// z = first-row accumulator for Golub-Welsch weights.
void tql_first_row(std::vector<double>& d, std::vector<double>& e,
                   std::vector<double>& z) {
    const int n = int(d.size());
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw QuadratureFailure("tql: no convergence");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double rr = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(rr) : -std::abs(rr)));
                double s = 1.0, c = 1.0, p = 0.0;
                bool breakdown = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    rr = std::hypot(f, g);
                    e[i + 1] = rr;
                    if (rr == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        breakdown = true;
                        break;
                    }
                    s = f / rr;
                    c = g / rr;
                    g = d[i + 1] - p;
                    rr = (d[i] - g) * s + 2.0 * c * b;
                    p = s * rr;
                    d[i + 1] = g + p;
                    g = c * rr - b;
                    double zf = z[i + 1];
                    z[i + 1] = s * z[i] + c * zf;
                    z[i] = c * z[i] - s * zf;
                }
                if (breakdown) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

Rule gauss_jacobi(unsigned n, double alpha, double beta) {
    if (n == 0) throw QuadratureFailure("gauss_jacobi: n >= 1");
    if (alpha <= -1.0 || beta <= -1.0)
        throw QuadratureFailure("gauss_jacobi: alpha, beta > -1 required");
    // Jacobi matrix recurrence coefficients
    std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
    const double ab = alpha + beta;
    d[0] = (beta - alpha) / (ab + 2.0);
    for (unsigned k = 1; k < n; ++k) {
        double kk = double(k);
        double den = (2.0 * kk + ab) * (2.0 * kk + ab + 2.0);
        d[k] = (beta * beta - alpha * alpha) / den;
        double num = 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab);
        double dd = (2.0 * kk + ab);
        e[k - 1] = std::sqrt(num / (dd * dd * (dd + 1.0) * (dd - 1.0)));
    }
    if (n >= 1 && ab + 2.0 != 0.0 && n > 1) {
        // k = 1 offdiagonal needs the k=1 special form when ab = -1
        double num = 4.0 * (1.0 + alpha) * (1.0 + beta);
        double den = (ab + 2.0) * (ab + 2.0) * (ab + 3.0);
        e[0] = std::sqrt(num / den);
    }
    // total weight integral of (1-x)^a (1+x)^b over [-1,1]
    const double mu0 = std::pow(2.0, ab + 1.0) * std::exp(
        std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
    std::vector<double> z(n, 0.0);
    z[0] = 1.0;
    tql_first_row(d, e, z);
    // sort ascending
    std::vector<unsigned> idx(n);
    for (unsigned i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](unsigned a_, unsigned b_) { return d[a_] < d[b_]; });
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        r.x[i] = d[idx[i]];
        r.w[i] = mu0 * z[idx[i]] * z[idx[i]];
    }
    return r;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    unsigned panels, unsigned order) {
    static thread_local unsigned cached_order = 0;
    static thread_local Rule rule;
    if (cached_order != order) {
        rule = gauss_legendre(order);
        cached_order = order;
    }
    double sum = 0.0;
    const double h = (b - a) / panels;
    for (unsigned p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (unsigned i = 0; i < order; ++i)
            sum += rule.w[i] * f(mid + 0.5 * h * rule.x[i]);
    }
    return 0.5 * h * sum;
}

namespace {

// one symmetric tanh-sinh level evaluation; returns sum over new nodes
template <class F>
double ts_level(const F& g, double h, unsigned level, double hmax) {
    double sum = 0.0;
    const unsigned stride = (level == 0) ? 1 : 2;
    const double start = (level == 0) ? 0.0 : h;
    for (double t = start;; t += stride * h) {
        if (t > hmax) break;
        const double sh = std::sinh(t);
        const double u = std::tanh(0.5 * PI * sh);
        const double dudt = 0.5 * PI * std::cosh(t) / std::pow(std::cosh(0.5 * PI * sh), 2);
        if (dudt < 1e-17 && t > 3.0) break;
        if (std::abs(u) >= 1.0 - 1e-15) continue; // avoid touching endpoints
        double v = g(u) * dudt;
        if (t > 0.0) v += g(-u) * dudt;
        if (std::isfinite(v)) sum += v;
    }
    return sum;
}

} // namespace

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double tol, unsigned max_level) {
    if (!(b > a)) {
        if (a == b) return 0.0;
        return -tanh_sinh(f, b, a, tol, max_level);
    }
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    auto g = [&](double u) { return f(c + r * u); };
    const double hmax = 6.5;
    double h = 1.0;
    double integral = ts_level(g, h, 0, hmax) * h;
    for (unsigned level = 1; level <= max_level; ++level) {
        h *= 0.5;
        const double add = ts_level(g, h, level, hmax);
        const double next = 0.5 * integral + h * add;
        if (level >= 3 && std::abs(next - integral) <= tol * (1.0 + std::abs(next)))
            return r * next;
        integral = next;
    }
    return r * integral;
}

double exp_sinh(const std::function<double(double)>& f, double a, double tol,
                unsigned max_level) {
    // x = a + exp((pi/2) sinh t), t in (-inf, inf)
    auto eval_level = [&](double h, unsigned level, double& out) {
        double sum = 0.0;
        const unsigned stride = (level == 0) ? 1 : 2;
        const double tmax = 4.5;
        for (double s = (level == 0) ? 0.0 : h;; s += stride * h) {
            if (s > tmax) break;
            for (int sgn = 0; sgn < 2; ++sgn) {
                const double t = sgn ? -s : s;
                if (sgn && s == 0.0) continue;
                const double ex = std::exp(0.5 * PI * std::sinh(t));
                const double dx = 0.5 * PI * std::cosh(t) * ex;
                const double v = f(a + ex) * dx;
                if (std::isfinite(v)) sum += v;
            }
            if (level == 0 && s == 0.0) continue;
        }
        out = sum;
    };
    double h = 1.0, sum0 = 0.0;
    eval_level(h, 0, sum0);
    double integral = h * sum0;
    for (unsigned level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        eval_level(h, level, add);
        const double next = 0.5 * integral + h * add;
        if (level >= 3 && std::abs(next - integral) <= tol * (1.0 + std::abs(next)))
            return next;
        integral = next;
    }
    return integral;
}

} // namespace fcone::quad
