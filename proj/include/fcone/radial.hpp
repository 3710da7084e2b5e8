#ifndef FCONE_RADIAL_HPP
#define FCONE_RADIAL_HPP

#include <functional>
#include <optional>
#include <vector>

#include "fcone/gfun.hpp"
#include "fcone/scalar.hpp"

namespace fcone::radial {

// Admissible signature (p, q): p >= q >= 2, p + q even and >= 6.
// Constructing with p < q swaps the arguments.
struct Signature {
    unsigned p = 3, q = 3;

    Signature() = default;
    Signature(unsigned p_, unsigned q_);

    unsigned n() const { return p + q - 2; }
    unsigned kernel_m() const { return (p + q - 6) / 2; }
    int half_pq() const { return (int(p) - int(q)) / 2; }
    double sigma_exponent() const { return 0.5 * (double(p + q) - 4.0); }
    double measure_power() const { return double(p + q) - 5.0; }
};

enum class SectorCase { One, Two, Boundary };

struct SectorIndex {
    unsigned l = 0, k = 0;

    SectorCase sector_case(const Signature& s) const;
    // a(l,k) = max(l, k - (p-q)/2)
    int a_lk(const Signature& s) const;
    // eigenvalue (-1)^{a(l,k) + (p-q)/2} of the radial transform
    double eigenvalue(const Signature& s) const;
};

// Log-uniform radial grid: x_i = x_min + i dx, r_i = e^{x_i}.
struct RadialGrid {
    double x_min = -14.0;
    double x_max = 7.0;
    std::size_t n = 4096;

    static RadialGrid standard() { return {}; }
    double dx() const { return (x_max - x_min) / double(n); }
    double x(std::size_t i) const { return x_min + double(i) * dx(); }
    double r(std::size_t i) const { return std::exp(x(i)); }
    void validate() const;
    bool operator==(const RadialGrid& o) const {
        return x_min == o.x_min && x_max == o.x_max && n == o.n;
    }
};

struct RadialFn {
    RadialGrid grid;
    std::vector<double> samples;
    // optional analytic tail: |f| <= C r^dec_pow e^{-2r} style decay marker
    bool exp_tail = false;

    static RadialFn from_callable(const RadialGrid& g,
                                  const std::function<double(double)>& f);
};

// ---- eigenvectors -------------------------------------------------------

double f_lk(const Signature& s, const SectorIndex& i, double r);
RadialFn f_lk_fn(const Signature& s, const SectorIndex& i, const RadialGrid& g);
double f_lk_norm_sq(const Signature& s, const SectorIndex& i);
Complex f_lk_mellin(const Signature& s, const SectorIndex& i, double x);

// ---- kernel -------------------------------------------------------------

// G-function parameter block of the sector kernel (case-resolved) and the
// sign prefactor in K = sign * 4 * G(t^2 | b).
gfun::GSpec klk_gspec(const Signature& s, const SectorIndex& i, double* sign);

double kernel_K_lk(const Signature& s, const SectorIndex& i, double t);

// K_{l,k} on the log-uniform product grid u_m = u0 + m du (u = log t).
// Entries beyond the evaluability cap are zero; `cap_index` is the first
// zeroed slot (values.size() when none).
struct KernelCache {
    double u0 = 0.0, du = 0.0;
    std::vector<double> values;
    std::size_t cap_index = 0;
};

KernelCache build_kernel_cache(const Signature& s, const SectorIndex& i,
                               double u0, double du, std::size_t count,
                               bool use_threads);

// ---- multiplier ---------------------------------------------------------

// psi(zeta): the unimodular gamma-quotient symbol; both case forms are
// computed and must agree.
Complex psi_multiplier(const Signature& s, const SectorIndex& i, Complex zeta);

// ---- transforms ---------------------------------------------------------

struct DirectOptions {
    bool use_threads = true;
    double support_rel_tol = 1e-14; // f support detection threshold
    double log_t_cap = 9.6;         // contour-evaluability cap on log(r r')
};

// T_{l,k} f by direct kernel quadrature over the log grid (kernel values
// cached over the product set, which is one-dimensional by log-uniformity).
RadialFn t_lk_direct(const Signature& s, const SectorIndex& i,
                     const RadialFn& f, const DirectOptions& opt = {});

// T_{l,k} f through the Fourier multiplier on the sigma_+ line.
RadialFn t_lk_multiplier(const Signature& s, const SectorIndex& i,
                         const RadialFn& f);

// sigma maps on callables: (sigma_+ f)(x) = 2^{-1/2} e^{ax} f(e^x),
// (sigma_- f)(x) = (sigma_+ f)(-x), a = (p+q-4)/2.
std::function<double(double)> sigma_map(int direction, const Signature& s,
                                        const std::function<double(double)>& f);
std::function<double(double)> sigma_inverse(int direction, const Signature& s,
                                            const std::function<double(double)>& F);

// rho(t): f(r) -> e^{-a t} f(e^{-t} r); exact index shift when t is a grid
// multiple, trigonometric interpolation otherwise.
RadialFn dilation(const Signature& s, const RadialFn& f, double t);

double norm_sq(const Signature& s, const RadialFn& f);
double inner(const Signature& s, const RadialFn& f, const RadialFn& g);

// ---- Fox G-transform ----------------------------------------------------

struct FoxParameters {
    double b1 = 0.0, b2 = 0.0, gamma_hat = 1.0;
    Signature sig;   // resolved sector realization
    SectorIndex idx;
    double sign = 1.0; // S = sign * T_{l,k} after the change of variables
};

FoxParameters resolve_fox(double b1, double b2, double gamma_hat);

// S_{b1,b2,gamma} f on L^2(R_+, dx); f given as a callable of y, result
// sampled at x_i = r_i^{2 gamma}; unitary on L^2(R_+, dx).
struct FoxResult {
    std::vector<double> x;
    std::vector<double> values;
};
FoxResult fox_g_transform(double b1, double b2, double gamma_hat,
                          const std::function<double(double)>& f,
                          const RadialGrid& g);

// one-time check that the discrete multiplier normalization matches the
// direct kernel path on the reference sector; returns the fitted constant
double multiplier_calibration(const RadialGrid& g, bool use_threads = true);

} // namespace fcone::radial

#endif
