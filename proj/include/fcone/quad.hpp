#ifndef FCONE_QUAD_HPP
#define FCONE_QUAD_HPP

#include <functional>
#include <vector>

#include "fcone/scalar.hpp"

namespace fcone::quad {

struct Rule {
    std::vector<double> x;
    std::vector<double> w;
};

// Gauss-Legendre rule on [-1, 1].
Rule gauss_legendre(unsigned n);

// Gauss-Jacobi rule on [-1, 1] for weight (1-x)^alpha (1+x)^beta, via the
// Golub-Welsch eigenvalue method on the Jacobi matrix.
Rule gauss_jacobi(unsigned n, double alpha, double beta);

// Integrate f over [a, b] with composite Gauss-Legendre panels.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    unsigned panels, unsigned order = 16);

// tanh-sinh (double exponential) quadrature on (a, b); tolerates integrable
// algebraic/log endpoint singularities.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12, unsigned max_level = 12);

// Semi-infinite integral of f over (a, inf) for integrands decaying at
// least exponentially: exp-sinh mapping.
double exp_sinh(const std::function<double(double)>& f, double a,
                double tol = 1e-12, unsigned max_level = 12);

} // namespace fcone::quad

#endif
