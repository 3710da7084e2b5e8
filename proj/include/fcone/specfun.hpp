#ifndef FCONE_SPECFUN_HPP
#define FCONE_SPECFUN_HPP

#include <vector>

#include "fcone/scalar.hpp"

namespace fcone::specfun {

// Principal branch of log Gamma. Lanczos on Re z >= 1/2, reflection
// otherwise. Relative accuracy ~1e-14 on the strips the contour code uses.
Complex log_gamma(Complex z);

// Gamma(z) = exp(log_gamma(z)); throws PoleAtNonpositiveInteger at poles.
Complex gamma(Complex z);
double gamma(double x);

// 1/Gamma(x): entire, exact zero at nonpositive integers.
double rgamma(double x);

// Digamma (logarithmic derivative of Gamma) for real arguments off the poles.
double digamma(double x);

enum class BesselKind { J, Y, I, K };

// Standard Bessel value for x > 0.  J/Y/I/K with real order.
double bessel(BesselKind kind, double nu, double x);

// (x/2)^(-nu) * bessel(kind, nu, x); J/I variants evaluated stably at small x.
double bessel_tilde(BesselKind kind, double nu, double x);

// Normalized Gegenbauer polynomial: Gamma(mu) * C_l^mu(x); at mu = 0 the
// limit 2 cos(l theta)/l (l >= 1, x = cos theta).
double gegenbauer_tilde(unsigned l, double mu, double x);

// Combined fh weight l! / Gamma(n-2+l) * gegenbauer_tilde(l, (n-2)/2, x),
// finite for every ambient dimension n >= 2 (the n = 2 limit is built in).
double funk_hecke_weight(unsigned l, unsigned n, double x);

// Associated Legendre function P_nu^mu on (-1,1) defined through the
// hypergeometric series.  Returns 0 when 1-mu is a nonpositive integer.
double assoc_legendre(double nu, double mu, double x);

// Barnes generalized hypergeometric sum pFq(a; b; x) by direct summation.
double hyp_pfq(const std::vector<double>& a, const std::vector<double>& b,
               double x, const SeriesControl& ctl = {});

// Gauss 2F1 with the standard argument transformations for z in (-inf, 1).
double hyp2f1(double a, double b, double c, double z,
              const SeriesControl& ctl = {});

// Appell F4(alpha, beta; gamma, gamma'; x, y), double series inside the
// convergence region sqrt|x| + sqrt|y| < 1.
double appell_f4(double alpha, double beta, double gamma, double gammap,
                 double x, double y, const SeriesControl& ctl = {});

// Surface measure of the unit sphere S^{m-1} in R^m.
double sphere_area(unsigned m);

// Pochhammer (a)_n for small integer n.
double pochhammer(double a, unsigned n);

} // namespace fcone::specfun

#endif
