#ifndef FCONE_GFUN_HPP
#define FCONE_GFUN_HPP

#include <vector>

#include "fcone/scalar.hpp"

namespace fcone::gfun {

// Parameter block of G^{m,n}_{p,q}(x | a; b).
struct GSpec {
    unsigned m = 0, n = 0, p = 0, q = 0;
    std::vector<double> a;
    std::vector<double> b;

    double cstar() const { return double(m) + double(n) - 0.5 * (double(p) + double(q)); }
    double mu() const;
    double min_b_head() const; // min over b_1..b_m
    double max_a_head() const; // max over a_1..a_n (-inf when n = 0)
    void validate() const;
};

// Piecewise-linear integration path: gamma-i*inf -> gamma-i*jog -> s0-i*jog
// -> s0+i*jog -> gamma+i*jog -> gamma+i*inf.
struct Contour {
    double gamma = 0.0;
    double s0 = 0.0;
    double jog_height = 1.0;

    // Checks the pole-separation conditions; with for_distribution also the
    // negative-integer avoidance used by the distribution pairings.
    void validate(const GSpec& spec, bool for_distribution = false) const;
};

struct QuadControl {
    unsigned panel_order = 24;     // Gauss-Legendre order per panel, in [8,64]
    double truncation_tol = 1e-11; // target quadrature + truncation error
    double max_height = 2e4;       // hard cap on the vertical truncation
};

// The quotient of gamma factors in the integrand; zero at denominator
// poles, PoleError at numerator poles.
Complex gamma_quotient(Complex lambda, const GSpec& spec);

// Precomputed quadrature: G(x) = Im(sum_i coeff_i e^{lambda_i log x}) / pi
// over the upper half-path (the integrand is conjugate-symmetric for real
// parameters and x > 0).
struct ContourTable {
    std::vector<Complex> lambda;
    std::vector<Complex> coeff;
    double abs_sum = 0.0; // sum |coeff|, cancellation monitor
};

// Build a table able to serve log x anywhere in [u_min, u_max].
ContourTable build_contour_table(const GSpec& spec, const Contour& L,
                                 const QuadControl& ctl, double u_min,
                                 double u_max);

double eval_table(const ContourTable& tab, double log_x);

// As eval_table, also reporting the absolute term sum (the cancellation
// scale of the evaluation; roundoff is ~1e-16 times this).
double eval_table_diag(const ContourTable& tab, double log_x,
                       double* abs_scale);

// Bulk evaluation on the uniform log-grid u_j = u0 + j du, 0 <= j < count.
// The per-node geometric recurrence makes this the fast path for kernel
// caches; use_threads selects the OpenMP loop or the serial reference.
std::vector<double> eval_table_grid(const ContourTable& tab, double u0,
                                    double du, std::size_t count,
                                    bool use_threads);

// One-off evaluation with internal refinement check.
double g_contour(double x, const GSpec& spec, const Contour& L,
                 const QuadControl& ctl = {});

// Residue series (p <= q, b_j - b_k non-integer for j < k <= m).
double g_series(double x, const GSpec& spec, const SeriesControl& ctl = {});

// Leading-order large-x expansion for G^{m,0}_{p,q} with
// 0 <= p <= q-2, p+1 <= m <= q-1.
double g_asymptotic(double x, const GSpec& spec, double crossover = 100.0);

// A default contour for the given spec (used by tests and the CLI).
Contour default_contour(const GSpec& spec, double u_min = -6.0,
                        double u_max = 6.0);

} // namespace fcone::gfun

#endif
