#ifndef FCONE_DISTRIB_HPP
#define FCONE_DISTRIB_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "fcone/scalar.hpp"

namespace fcone::distrib {

// Compactly supported test function with derivatives up to k_max.
// Analytic derivatives may be supplied; otherwise Richardson finite
// differences with step 1e-3 * support_radius are used.
struct TestFn {
    std::function<double(double)> value;
    std::function<double(double, unsigned)> deriv; // optional, k >= 1
    double support_radius = 1.0;
    unsigned k_max = 0;

    double operator()(double t) const { return value(t); }
    double derivative(unsigned k, double t) const;
    TestFn mirrored() const; // t -> value(-t)
};

// <x_+^lambda, phi> (sign=+1) or <x_-^lambda, phi> (sign=-1) by analytic
// continuation with Taylor subtraction at 0.
Complex riesz_pair(Complex lambda, int sign, const TestFn& phi);

// <t^{-k}, phi>: the homogeneous extension x_+^lambda + (-1)^lambda x_-^lambda
// evaluated at lambda = -k (principal value for k = 1, finite part beyond).
double pv_power_pair(unsigned k, const TestFn& phi);

enum class DistKind { PhiPlus, PsiPlus, Psi, Phi };

// Exact rational coefficient with an optional 1/pi factor.
struct ExactCoeff {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool over_pi = false;
    double to_double() const;
};

struct SingularPart {
    // (derivative order j, coefficient) for delta^{(j)}(t)
    std::vector<std::pair<unsigned, ExactCoeff>> delta_coeffs;
    // (power k, coefficient) for t^{-k}
    std::vector<std::pair<unsigned, ExactCoeff>> pv_coeffs;
    bool empty() const { return delta_coeffs.empty() && pv_coeffs.empty(); }
};

struct BesselDistribution {
    unsigned m = 0;
    DistKind kind = DistKind::PhiPlus;
    std::function<double(double)> regular; // locally integrable part
    SingularPart singular;

    // smooth realization away from 0 (regular + literal power functions)
    double value_off_origin(double t) const;
};

BesselDistribution bessel_dist(unsigned m, DistKind kind);

// <d, phi> = integral of regular * phi + delta-derivative terms
// (<delta^{(j)}, phi> = (-1)^j phi^{(j)}(0)) + principal-value terms.
double bessel_dist_pair(const BesselDistribution& d, const TestFn& phi,
                        double tol = 1e-12);

// Residual of the second-order equation t u'' + (m+1) u' + 2u at t != 0
// for PhiPlus/PsiPlus/Psi; for Phi, of the third-order equation
// theta(theta^2 + m theta + 2t) u = 0, theta = t d/dt.
double dist_ode_residual(const BesselDistribution& d, double t);

} // namespace fcone::distrib

#endif
