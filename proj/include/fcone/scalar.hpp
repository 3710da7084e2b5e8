#ifndef FCONE_SCALAR_HPP
#define FCONE_SCALAR_HPP

#include <cmath>
#include <complex>
#include <cstddef>

#include "fcone/errors.hpp"

namespace fcone {

using Complex = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;
inline constexpr double SQRT_PI = 1.77245385090551602729816748334114518;
inline constexpr double LOG_PI = 1.14472988584940017414342735135305871;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Series summation control shared by the hypergeometric evaluators.
struct SeriesControl {
    double abs_tol = 1e-15;
    double rel_tol = 1e-14;
    std::size_t max_terms = 4096;

    void validate() const {
        if (abs_tol <= 0 || rel_tol <= 0)
            throw ParameterError("SeriesControl tolerances must be positive");
        if (max_terms < 16)
            throw ParameterError("SeriesControl max_terms must be >= 16");
    }
};

// True when x is within `ulps`-scaled tolerance of an integer <= 0.
inline bool near_nonpositive_integer(double x, double tol = 1e-12) {
    if (x > 0.5) return false;
    return std::abs(x - std::round(x)) < tol;
}

inline bool near_integer(double x, double tol = 1e-12) {
    return std::abs(x - std::round(x)) < tol;
}

} // namespace fcone

#endif
