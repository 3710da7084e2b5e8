#include "fcone/radial.hpp"

#include <algorithm>
#include <cmath>

#include "fcone/fftr.hpp"
#include "fcone/parallel.hpp"
#include "fcone/specfun.hpp"

namespace fcone::radial {

using specfun::BesselKind;
using specfun::log_gamma;

Signature::Signature(unsigned p_, unsigned q_) : p(p_), q(q_) {
    if (p < q) std::swap(p, q); // the omega <-> eta swap symmetry
    if (q < 2 || (p + q) % 2 != 0 || p + q < 6)
        throw ParameterError("Signature: need p >= q >= 2, p+q even, p+q >= 6");
}

SectorCase SectorIndex::sector_case(const Signature& s) const {
    const int d = s.half_pq() + int(l) - int(k);
    if (d > 0) return SectorCase::One;
    if (d < 0) return SectorCase::Two;
    return SectorCase::Boundary;
}

int SectorIndex::a_lk(const Signature& s) const {
    return std::max(int(l), int(k) - s.half_pq());
}

double SectorIndex::eigenvalue(const Signature& s) const {
    return ((a_lk(s) + s.half_pq()) % 2 == 0) ? 1.0 : -1.0;
}

void RadialGrid::validate() const {
    if (n < 256 || (n & (n - 1)) != 0)
        throw ParameterError("RadialGrid: n must be a power of two >= 256");
    if (!(x_max - x_min >= 10.0))
        throw ParameterError("RadialGrid: span must be >= 10");
}

RadialFn RadialFn::from_callable(const RadialGrid& g,
                                 const std::function<double(double)>& f) {
    RadialFn out;
    out.grid = g;
    out.samples.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) out.samples[i] = f(g.r(i));
    return out;
}

// ---- eigenvectors -------------------------------------------------------

namespace {

double f_lk_order(const Signature& s, const SectorIndex& i) {
    // K-Bessel order: Case 1 uses (q-3)/2 + k, Case 2 uses (p-3)/2 + l;
    // the two agree on the boundary.
    if (i.sector_case(s) == SectorCase::Two)
        return 0.5 * (double(s.p) - 3.0) + double(i.l);
    return 0.5 * (double(s.q) - 3.0) + double(i.k);
}

} // namespace

double f_lk(const Signature& s, const SectorIndex& i, double r) {
    if (!(r > 0)) throw DomainError("f_lk: r > 0");
    const double nu = f_lk_order(s, i);
    if (2.0 * r > 600.0) return 0.0; // K-Bessel underflow range
    return std::pow(r, double(i.l + i.k)) *
           specfun::bessel_tilde(BesselKind::K, nu, 2.0 * r);
}

RadialFn f_lk_fn(const Signature& s, const SectorIndex& i, const RadialGrid& g) {
    RadialFn f = RadialFn::from_callable(g, [&](double r) { return f_lk(s, i, r); });
    f.exp_tail = true;
    return f;
}

double f_lk_norm_sq(const Signature& s, const SectorIndex& i) {
    double P = double(s.p), Q = double(s.q), L = double(i.l), K = double(i.k);
    if (i.sector_case(s) == SectorCase::Two) {
        std::swap(P, Q);
        std::swap(L, K);
    }
    const double g1 = std::tgamma(0.5 * (P - 1.0) + L);
    return g1 * g1 * std::tgamma(0.5 * (P + Q - 4.0) + L + K) *
           std::tgamma(0.5 * (P - Q + 2.0) + L - K) /
           (16.0 * std::tgamma(P - 1.0 + 2.0 * L));
}

Complex f_lk_mellin(const Signature& s, const SectorIndex& i, double x) {
    double P = double(s.p), Q = double(s.q), L = double(i.l), K = double(i.k);
    if (i.sector_case(s) == SectorCase::Two) {
        std::swap(P, Q);
        std::swap(L, K);
    }
    const Complex ix(0.0, x);
    return 0.25 *
           std::exp(log_gamma(0.25 * (P + Q - 4.0) + 0.5 * (L + K + ix)) +
                    log_gamma(0.25 * (P - Q) + 0.5 * (L - K + 1.0 + ix)));
}

// ---- kernel -------------------------------------------------------------

gfun::GSpec klk_gspec(const Signature& s, const SectorIndex& i, double* sign) {
    const double P = double(s.p), Q = double(s.q), L = double(i.l),
                 K = double(i.k);
    gfun::GSpec g;
    g.m = 2;
    g.n = 0;
    g.p = 0;
    g.q = 4;
    if (i.sector_case(s) == SectorCase::Two) {
        g.b = {0.5 * (L + K), 0.5 * (-P + 3.0 - L + K),
               0.5 * (-P - Q + 6.0 - L - K), 0.5 * (-Q + 3.0 + L - K)};
        if (sign) *sign = (i.k % 2 == 0) ? 1.0 : -1.0;
    } else {
        g.b = {0.5 * (L + K), 0.5 * (-Q + 3.0 + L - K),
               0.5 * (-P - Q + 6.0 - L - K), 0.5 * (-P + 3.0 - L + K)};
        if (sign)
            *sign = ((int(i.l) + s.half_pq()) % 2 == 0) ? 1.0 : -1.0;
    }
    return g;
}

namespace {

// q = 2, k <= 1: the kernel reduces to a J-Bessel profile.
bool jbessel_shortcut(const Signature& s, const SectorIndex& i) {
    return s.q == 2 && i.k <= 1;
}

double kernel_jbessel(const Signature& s, const SectorIndex& i, double t) {
    const double P = double(s.p), L = double(i.l);
    const double sgn = ((int(i.l) + s.half_pq()) % 2 == 0) ? 1.0 : -1.0;
    const double arg = 4.0 * std::sqrt(t);
    return 4.0 * sgn * std::pow(t, -0.5 * (P - 3.0)) *
           specfun::bessel(BesselKind::J, P - 3.0 + 2.0 * L, arg);
}

// contour parameters for the G-argument range [ug_lo, ug_hi] (ug = log t^2);
// gamma trades tail decay against the x^gamma cancellation on the asymptote
gfun::Contour kernel_contour(const Signature& s, const gfun::GSpec& g,
                             double ug_lo, double ug_hi) {
    gfun::Contour L;
    L.jog_height = 1.0;
    const double gmin = (g.mu() + 2.2) / 4.0; // decay exponent -3.2
    if (ug_hi <= 4.0)
        L.gamma = gmin + 3.0;
    else
        L.gamma = std::max(gmin, std::min(gmin + 3.0, 18.0 / ug_hi));
    if (ug_lo < -4.0)
        L.s0 = g.min_b_head() - 0.1;
    else
        L.s0 = -0.25 * (double(s.p + s.q) - 5.0);
    if (!(L.s0 < g.min_b_head())) L.s0 = g.min_b_head() - 0.1;
    return L;
}

} // namespace

double kernel_K_lk(const Signature& s, const SectorIndex& i, double t) {
    if (!(t > 0)) throw DomainError("kernel_K_lk: t > 0");
    if (jbessel_shortcut(s, i)) return kernel_jbessel(s, i, t);
    double sign = 1.0;
    const gfun::GSpec g = klk_gspec(s, i, &sign);
    const double ug = 2.0 * std::log(t);
    gfun::Contour L = kernel_contour(s, g, ug, ug);
    gfun::QuadControl ctl;
    return 4.0 * sign * gfun::g_contour(t * t, g, L, ctl);
}

KernelCache build_kernel_cache(const Signature& s, const SectorIndex& i,
                               double u0, double du, std::size_t count,
                               bool use_threads) {
    KernelCache cache;
    cache.u0 = u0;
    cache.du = du;
    cache.values.assign(count, 0.0);
    cache.cap_index = count;
    if (jbessel_shortcut(s, i)) {
        parallel_for(count, use_threads, [&](std::size_t m) {
            cache.values[m] = kernel_jbessel(s, i, std::exp(u0 + double(m) * du));
        });
        return cache;
    }
    double sign = 1.0;
    const gfun::GSpec g = klk_gspec(s, i, &sign);
    // bucket the product grid by log(t^2) so each bucket gets contour
    // parameters adapted to its argument scale; the tolerance relaxes to an
    // absolute budget at large arguments where the kernel itself is small
    const double bucket_width = 2.0;
    std::size_t m = 0;
    while (m < count) {
        const double ug_lo = 2.0 * (u0 + double(m) * du);
        std::size_t m_end = m;
        while (m_end < count &&
               2.0 * (u0 + double(m_end) * du) < ug_lo + bucket_width)
            ++m_end;
        const double ug_hi = 2.0 * (u0 + double(m_end - 1) * du);
        gfun::QuadControl ctl;
        ctl.truncation_tol = (ug_hi <= 4.0) ? 1e-11 : 1e-9;
        gfun::Contour L = kernel_contour(s, g, ug_lo, ug_hi);
        gfun::ContourTable tab =
            gfun::build_contour_table(g, L, ctl, ug_lo, ug_hi);
        std::vector<double> vals = gfun::eval_table_grid(
            tab, ug_lo, 2.0 * du, m_end - m, use_threads);
        for (std::size_t j = 0; j < vals.size(); ++j)
            cache.values[m + j] = 4.0 * sign * vals[j];
        m = m_end;
    }
    return cache;
}

// ---- multiplier ---------------------------------------------------------

namespace {

// Gamma(c - w) / Gamma(c + w). When c is a nonpositive integer the two
// poles cancel; reflection gives the removable value -G(1-c-w)/G(1-c+w).
Complex gamma_ratio_sym(double c, Complex w) {
    if (near_nonpositive_integer(c))
        return -std::exp(log_gamma(1.0 - c - w) - log_gamma(1.0 - c + w));
    return std::exp(log_gamma(c - w) - log_gamma(c + w));
}

} // namespace

Complex psi_multiplier(const Signature& s, const SectorIndex& i, Complex zeta) {
    const double P = double(s.p), Q = double(s.q), L = double(i.l),
                 K = double(i.k);
    const Complex w = Complex(0.0, 0.5) * zeta;
    const double c1 = 0.25 * (P + Q - 4.0) + 0.5 * (L + K);
    const double s1 = ((int(i.l) + s.half_pq()) % 2 == 0) ? 1.0 : -1.0;
    const Complex v1 = s1 * gamma_ratio_sym(c1, w) *
                       gamma_ratio_sym(0.25 * (P - Q) + 0.5 * (L - K + 1.0), w);
    const double s2 = (i.k % 2 == 0) ? 1.0 : -1.0;
    const Complex v2 =
        s2 * gamma_ratio_sym(c1, w) *
        gamma_ratio_sym(-0.25 * (P - Q) + 0.5 * (-L + K + 1.0), w);
    if (std::abs(v1 - v2) > 1e-11 * (1.0 + std::abs(v1)))
        throw Error("psi_multiplier: case forms disagree");
    return v1;
}

// ---- transforms ---------------------------------------------------------

namespace {

struct Support {
    std::size_t lo = 0, hi = 0; // inclusive
    bool empty = true;
};

Support find_support(const std::vector<double>& v, double rel_tol) {
    Support s;
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, std::abs(x));
    if (mx == 0.0) return s;
    const double thr = mx * rel_tol;
    std::size_t lo = 0, hi = v.size() - 1;
    while (lo < v.size() && std::abs(v[lo]) < thr) ++lo;
    while (hi > lo && std::abs(v[hi]) < thr) --hi;
    s.lo = lo;
    s.hi = hi;
    s.empty = false;
    return s;
}

} // namespace

RadialFn t_lk_direct(const Signature& s, const SectorIndex& i,
                     const RadialFn& f, const DirectOptions& opt) {
    f.grid.validate();
    const RadialGrid& g = f.grid;
    const double dx = g.dx();
    RadialFn out;
    out.grid = g;
    out.samples.assign(g.n, 0.0);
    const Support supp = find_support(f.samples, opt.support_rel_tol);
    if (supp.empty) return out;
    // resolution cap: the kernel phase 4 sqrt(r r') must advance less than
    // pi/2 per grid step over the used products; the contour cap applies
    // only when the kernel needs Mellin-Barnes evaluation
    const double res_cap = 2.0 * std::log(PI / (4.0 * dx));
    const double u_cap = jbessel_shortcut(s, i)
                             ? res_cap
                             : std::min(opt.log_t_cap, res_cap);
    if (2.0 * g.x(supp.hi) > u_cap)
        throw GridTooCoarse(
            "t_lk_direct: kernel unresolved over the support products");
    // output indices with all products under the cap
    std::size_t i_hi = g.n;
    while (i_hi > 0 && g.x(i_hi - 1) + g.x(supp.hi) > u_cap) --i_hi;
    if (i_hi == 0) return out;
    const std::size_t nprod = (i_hi - 1) + supp.hi - supp.lo + 1;
    const double u0 = g.x(0) + g.x(supp.lo);
    KernelCache cache =
        build_kernel_cache(s, i, u0, dx, nprod, opt.use_threads);
    // weights g_j = f_j r_j^{p+q-4} dx (log substitution of the measure)
    std::vector<double> wf(supp.hi - supp.lo + 1);
    for (std::size_t j = supp.lo; j <= supp.hi; ++j)
        wf[j - supp.lo] =
            f.samples[j] * std::pow(g.r(j), double(s.p + s.q) - 4.0) * dx;
    parallel_for(i_hi, opt.use_threads, [&](std::size_t ii) {
        double acc = 0.0;
        for (std::size_t j = 0; j < wf.size(); ++j)
            acc += cache.values[ii + j] * wf[j];
        out.samples[ii] = 0.5 * acc;
    });
    return out;
}

RadialFn t_lk_multiplier(const Signature& s, const SectorIndex& i,
                         const RadialFn& f) {
    f.grid.validate();
    const RadialGrid& g = f.grid;
    const std::size_t N = g.n;
    const double a = s.sigma_exponent();
    const double dzeta = 2.0 * PI / (double(N) * g.dx());
    std::vector<Complex> u(N);
    for (std::size_t j = 0; j < N; ++j)
        u[j] = Complex(std::exp(a * g.x(j)) * f.samples[j] / std::sqrt(2.0), 0.0);
    fftr::fft(u, +1);
    // aliasing check: energy near the Nyquist bin
    {
        double total = 0.0, nyq = 0.0;
        for (std::size_t n = 0; n < N; ++n) total += std::norm(u[n]);
        for (std::size_t n = N / 2 - 1; n <= N / 2 + 1; ++n) nyq += std::norm(u[n]);
        if (total > 0.0 && nyq > 1e-8 * total)
            throw AliasingDetected("t_lk_multiplier: spectrum reaches Nyquist");
    }
    // W_n = psi(-zeta_n) e^{-2 i x_min zeta_n} U_{-n}
    std::vector<Complex> w(N);
    for (std::size_t n = 0; n < N; ++n) {
        const double freq =
            (n <= N / 2) ? double(n) * dzeta : (double(n) - double(N)) * dzeta;
        const std::size_t nneg = (n == 0) ? 0 : N - n;
        const Complex phase = std::exp(Complex(0.0, -2.0 * g.x_min * freq));
        w[n] = psi_multiplier(s, i, Complex(-freq, 0.0)) * phase * u[nneg];
    }
    fftr::fft(w, -1);
    RadialFn out;
    out.grid = g;
    out.samples.resize(N);
    for (std::size_t j = 0; j < N; ++j)
        out.samples[j] = std::sqrt(2.0) * std::exp(-a * g.x(j)) *
                         (w[j].real() / double(N));
    return out;
}

std::function<double(double)> sigma_map(int direction, const Signature& s,
                                        const std::function<double(double)>& f) {
    const double a = s.sigma_exponent();
    if (direction > 0)
        return [a, f](double x) {
            return std::exp(a * x) * f(std::exp(x)) / std::sqrt(2.0);
        };
    return [a, f](double x) {
        return std::exp(-a * x) * f(std::exp(-x)) / std::sqrt(2.0);
    };
}

std::function<double(double)> sigma_inverse(int direction, const Signature& s,
                                            const std::function<double(double)>& F) {
    const double a = s.sigma_exponent();
    if (direction > 0)
        return [a, F](double r) {
            return std::sqrt(2.0) * std::pow(r, -a) * F(std::log(r));
        };
    return [a, F](double r) {
        return std::sqrt(2.0) * std::pow(r, -a) * F(-std::log(r));
    };
}

RadialFn dilation(const Signature& s, const RadialFn& f, double t) {
    const RadialGrid& g = f.grid;
    const double a = s.sigma_exponent();
    const double shift = t / g.dx();
    RadialFn out;
    out.grid = g;
    out.samples.assign(g.n, 0.0);
    const double damp = std::exp(-a * t);
    if (near_integer(shift, 1e-9)) {
        const long m = long(std::llround(shift));
        for (long j = 0; j < long(g.n); ++j) {
            const long src = j - m;
            if (src >= 0 && src < long(g.n))
                out.samples[j] = damp * f.samples[src];
        }
        return out;
    }
    // fractional shift: translate the sigma_+ line by trigonometric
    // interpolation; the e^{-at} damping cancels against the sigma weights
    const std::size_t N = g.n;
    std::vector<Complex> u(N);
    for (std::size_t j = 0; j < N; ++j)
        u[j] = Complex(std::exp(a * g.x(j)) * f.samples[j], 0.0);
    fftr::fft(u, +1);
    const double dzeta = 2.0 * PI / (double(N) * g.dx());
    for (std::size_t n = 0; n < N; ++n) {
        const double freq =
            (n <= N / 2) ? double(n) * dzeta : (double(n) - double(N)) * dzeta;
        u[n] *= std::exp(Complex(0.0, freq * t));
    }
    fftr::fft(u, -1);
    for (std::size_t j = 0; j < N; ++j)
        out.samples[j] = std::exp(-a * g.x(j)) * u[j].real() / double(N);
    return out;
}

double norm_sq(const Signature& s, const RadialFn& f) {
    const RadialGrid& g = f.grid;
    double acc = 0.0;
    for (std::size_t j = 0; j < g.n; ++j)
        acc += f.samples[j] * f.samples[j] *
               std::pow(g.r(j), double(s.p + s.q) - 4.0);
    return 0.5 * acc * g.dx();
}

double inner(const Signature& s, const RadialFn& f, const RadialFn& g) {
    if (!(f.grid == g.grid)) throw ParameterError("inner: grid mismatch");
    double acc = 0.0;
    for (std::size_t j = 0; j < f.grid.n; ++j)
        acc += f.samples[j] * g.samples[j] *
               std::pow(f.grid.r(j), double(s.p + s.q) - 4.0);
    return 0.5 * acc * f.grid.dx();
}

// ---- Fox G-transform ----------------------------------------------------

FoxParameters resolve_fox(double b1, double b2, double gamma_hat) {
    if (!(b1 >= 0.0) || !(gamma_hat >= 1.0) || !(2.0 * b1 == std::floor(2.0 * b1)) ||
        !(2.0 * b2 == std::floor(2.0 * b2)) ||
        !(gamma_hat == std::floor(gamma_hat)))
        throw ParameterOutOfRange(
            "fox: b1 >= 0, half-integer b's, integer gamma >= 1 required");
    if (!(b2 >= 0.5 * (1.0 - gamma_hat)) || !(b2 <= 0.5 + b1))
        throw ParameterOutOfRange("fox: (1-gamma)/2 <= b2 <= 1/2 + b1");
    // Case-1 identification: l+k = 2 b1, l-k = 2 b2 + q - 3,
    // p + q = 2 gamma + 4; choose the smallest parity-consistent q >= 2
    // keeping l, k >= 0 and p >= q.
    const bool q_odd = near_integer(b1 - b2);
    for (unsigned q = q_odd ? 3 : 2;; q += 2) {
        const double l = b1 + b2 + 0.5 * (double(q) - 3.0);
        const double k = b1 - b2 - 0.5 * (double(q) - 3.0);
        const double p = 2.0 * gamma_hat + 4.0 - double(q);
        if (l < -1e-9) continue;
        if (k < -1e-9 || p < q) break;
        if (near_integer(l) && near_integer(k)) {
            FoxParameters fp;
            fp.b1 = b1;
            fp.b2 = b2;
            fp.gamma_hat = gamma_hat;
            fp.sig = Signature(unsigned(p), q);
            fp.idx = SectorIndex{unsigned(std::llround(l)),
                                 unsigned(std::llround(k))};
            fp.sign = ((int(fp.idx.l) + fp.sig.half_pq()) % 2 == 0) ? 1.0 : -1.0;
            return fp;
        }
    }
    throw ParameterOutOfRange("fox: no sector realization");
}

FoxResult fox_g_transform(double b1, double b2, double gamma_hat,
                          const std::function<double(double)>& f,
                          const RadialGrid& g) {
    FoxParameters fp = resolve_fox(b1, b2, gamma_hat);
    RadialFn fr;
    fr.grid = g;
    fr.samples.resize(g.n);
    for (std::size_t j = 0; j < g.n; ++j)
        fr.samples[j] = f(std::pow(g.r(j), 2.0 * gamma_hat));
    RadialFn tf = t_lk_multiplier(fp.sig, fp.idx, fr);
    FoxResult out;
    out.x.resize(g.n);
    out.values.resize(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        out.x[j] = std::pow(g.r(j), 2.0 * gamma_hat);
        out.values[j] = fp.sign * tf.samples[j];
    }
    return out;
}

double multiplier_calibration(const RadialGrid& g, bool use_threads) {
    const Signature s(3, 3);
    const SectorIndex idx{0, 0};
    RadialFn f = RadialFn::from_callable(g, [](double r) {
        const double x = std::log(r);
        return std::exp(-(x + 2.5) * (x + 2.5) / (2.0 * 0.6 * 0.6));
    });
    DirectOptions opt;
    opt.use_threads = use_threads;
    RadialFn td = t_lk_direct(s, idx, f, opt);
    RadialFn tm = t_lk_multiplier(s, idx, f);
    // fit tm = c * td in L2
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < g.n; ++j) {
        const double wgt = std::pow(g.r(j), double(s.p + s.q) - 4.0);
        num += tm.samples[j] * td.samples[j] * wgt;
        den += td.samples[j] * td.samples[j] * wgt;
    }
    return num / den;
}

} // namespace fcone::radial
