#ifndef FCONE_CONE_HPP
#define FCONE_CONE_HPP

#include <functional>
#include <vector>

#include "fcone/distrib.hpp"
#include "fcone/harmonics.hpp"
#include "fcone/radial.hpp"

namespace fcone::cone {

// Point of the isotropic cone in bipolar form: x = s (omega; eta) with
// omega in S^{p-2}, eta in S^{q-2}.
struct ConePoint {
    double s = 1.0;
    std::vector<double> omega;
    std::vector<double> eta;

    void validate(const radial::Signature& sig) const;
    std::vector<double> ambient() const; // (s omega; s eta)
};

// Zonal angular profile on S^{m-1}: the normalized Gegenbauer factor, the
// cosine limit on S^1, the sign pairing on S^0.
double zonal_profile(unsigned l, unsigned m, double x);
double zonal_profile_norm_sq(unsigned l, unsigned m);

struct ZonalSector {
    radial::SectorIndex idx;
    radial::RadialFn f;
    std::vector<double> omega0; // unit axis in R^{p-1}
    std::vector<double> eta0;   // unit axis in R^{q-1}
};

struct ConeFunctionStructured {
    radial::Signature sig;
    std::vector<ZonalSector> sectors;

    double eval(const ConePoint& xi) const;
};

// Samples on RadialGrid x SphereQuad x SphereQuad in the zonal coordinates
// about fixed axes (all sectors synthesized on shared axes).
struct ConeGridFunction {
    radial::Signature sig;
    radial::RadialGrid grid;
    harmonics::SphereQuad sq_omega; // S^{p-2}
    harmonics::SphereQuad sq_eta;   // S^{q-2}
    std::vector<double> samples;    // [(i * nx + a) * ny + b]

    std::size_t nx() const { return sq_omega.x.size(); }
    std::size_t ny() const { return sq_eta.x.size(); }
    double& at(std::size_t i, std::size_t a, std::size_t b) {
        return samples[(i * nx() + a) * ny() + b];
    }
    double at(std::size_t i, std::size_t a, std::size_t b) const {
        return samples[(i * nx() + a) * ny() + b];
    }
};

double cone_norm_sq(const ConeFunctionStructured& u);
double cone_norm_sq(const ConeGridFunction& u);

// zonal synthesis on shared axes (sector axes must match)
ConeGridFunction synthesize(const ConeFunctionStructured& u,
                            const radial::RadialGrid& g, unsigned nodes_omega,
                            unsigned nodes_eta);

// radial coefficient of the (l,k) zonal component
radial::RadialFn harmonic_project(const ConeGridFunction& u, unsigned l,
                                  unsigned k);

// ---- parabolic action ---------------------------------------------------

struct GroupElement {
    enum class Kind { Rotation, MZero, Dilation, Translation, Inversion };
    Kind kind = Kind::MZero;
    double t = 0.0;                       // dilation parameter
    std::vector<double> rot_omega;        // (p-1)x(p-1) row-major block
    std::vector<double> rot_eta;          // (q-1)x(q-1) row-major block
    std::vector<double> a;                // translation character

    static GroupElement dilation(double t);
    static GroupElement m_zero();
    static GroupElement inversion();
    static GroupElement rotation(std::vector<double> rw, std::vector<double> re);
    static GroupElement translation(std::vector<double> a);
};

// Action of the parabolic generators on structured functions (rotation,
// m_0, dilation). Translation characters are unimodular multipliers that
// leave the zonal class; they act through translation_phase below.
ConeFunctionStructured act_parabolic(const GroupElement& g,
                                     const ConeFunctionStructured& u);

// e^{2 i <a, x>} at a cone point.
Complex translation_phase(const std::vector<double>& a, const ConePoint& xi);

// sector-wise application of the radial inversion (multiplier path)
ConeFunctionStructured inversion_fc(const ConeFunctionStructured& u);

// left-to-right word application on structured functions
ConeFunctionStructured group_word_apply(const std::vector<GroupElement>& word,
                                        const ConeFunctionStructured& u);

// ---- Radon factorization ------------------------------------------------

// kernel constant c_{p,q} and the Bessel-distribution selection
double kernel_constant(const radial::Signature& sig);
distrib::BesselDistribution kernel_distribution(const radial::Signature& sig);

// Codimension-two slice density: integral of the zonal pair against the
// level set x + y = c of the product Jacobi weights (q = 2 collapses to
// the two-point evaluation).
double rho_profile(const radial::Signature& sig, const radial::SectorIndex& idx,
                   double c);

// Interpolation table for rho_profile on (-2, 2), clustered at the
// endpoints and the possible kink at 0.
struct RhoTable {
    radial::Signature sig;
    radial::SectorIndex idx;
    double tau0, dtau;
    std::vector<double> values; // on the double-exponential node map
    double operator()(double c) const;
};
RhoTable build_rho_table(const radial::Signature& sig,
                         const radial::SectorIndex& idx, unsigned n = 1600);

// Radon transform of a single zonal sector at (xi, t).
double radon_transform(const ConeFunctionStructured& u, const ConePoint& xi,
                       double t, const RhoTable* rho = nullptr);

// F_C u(xi) through the Radon factorization and the one-dimensional
// Bessel-distribution pairing.
double fc_via_radon(const ConeFunctionStructured& u, const ConePoint& xi);

// c_{p,q} * regular part of the Bessel distribution at <x, x'>.
double kernel_pointwise(const radial::Signature& sig, const ConePoint& x,
                        const ConePoint& xp);

} // namespace fcone::cone

#endif
