#ifndef FCONE_HARMONICS_HPP
#define FCONE_HARMONICS_HPP

#include <functional>
#include <vector>

#include "fcone/quad.hpp"
#include "fcone/scalar.hpp"

namespace fcone::harmonics {

// Zonal quadrature for the sphere S^{m-1}: nodes x in [-1,1] with the
// Gauss-Jacobi weights of (1-x^2)^{(m-3)/2}; the full spherical measure is
// weight * |S^{m-2}|. For m = 1 (the two-point sphere S^0) the nodes are
// +-1 with unit weights.
struct SphereQuad {
    unsigned ambient_dim = 0; // sphere S^{m-1} in R^m
    std::vector<double> x;
    std::vector<double> w; // includes the |S^{m-2}| factor

    static SphereQuad build(unsigned m, unsigned nodes = 128);
    double total_measure() const;
};

// Funk-Hecke eigenvalue c_{l,n}(h) of the zonal operator with profile h on
// S^{n-1} acting on degree-l spherical harmonics.
double funk_hecke(const std::function<double(double)>& h, unsigned l,
                  unsigned n, unsigned nodes = 192);

struct AlphaOptions {
    unsigned nodes = 0;   // 0: adaptive tanh-sinh path
    double tol = 1e-9;
};

// Spectrum alpha_{l,k}(h) of the two-sphere zonal operator on
// S^{p-2} x S^{q-2}; q = 2 uses the U_k reduction.
double alpha_lk(const std::function<double(double, double)>& h, unsigned l,
                unsigned k, unsigned p, unsigned q, const AlphaOptions& opt = {});

// Closed-form spectrum of the Riesz kernel (x+y)_pm^lambda / Gamma(lambda+1).
double riesz_spectrum(double lambda, int sign, unsigned l, unsigned k,
                      unsigned p, unsigned q);

// Closed-form spectrum of the h_lambda kernel (p, q > 2, p + q even); both
// equivalent gamma forms are evaluated and must agree.
double hlambda_spectrum(double lambda, unsigned l, unsigned k, unsigned p,
                        unsigned q);

// The h_lambda kernel itself, as a function of (x, y) (for quadrature
// cross-checks); parity: true when p, q are both even.
double hlambda_kernel(double lambda, unsigned p, unsigned q, double x, double y);

// Degree-raising zonal intertwiner on S^{m-1}:
// (x0, x) -> |x|^i profile(x/|x|) * Gegenbauer factor of degree j-i.
double intertwiner_apply(unsigned i, unsigned j, unsigned m,
                         const std::function<double(double)>& profile_zonal,
                         double x0, const std::vector<double>& xvec);

// Closed form of the two-variable fractional integral of the Riesz kernel
// against a product of Gegenbauer polynomials and Jacobi weights.
double fractional_integral_2d(double lambda, double mu, double nu, unsigned l,
                              unsigned k, int sign);

} // namespace fcone::harmonics

#endif
