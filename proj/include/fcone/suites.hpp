#ifndef FCONE_SUITES_HPP
#define FCONE_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fcone/distrib.hpp"
#include "fcone/scalar.hpp"

namespace fcone::suites {

struct Row {
    std::string suite;
    std::string id;     // identity key carried by every report row
    std::string params;
    double error = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct Report {
    std::vector<Row> rows;
    std::uint64_t seed = 0;

    void add(const std::string& suite, const std::string& id,
             const std::string& params, double error, double tol);
    bool all_pass() const;
    std::size_t failures() const;
};

struct SuiteConfig {
    std::vector<std::pair<unsigned, unsigned>> signatures = {
        {3, 3}, {4, 4}, {4, 2}, {6, 2}};
    unsigned lmax = 3;
    unsigned kmax = 3;
    std::size_t grid_n = 4096;
    double x_min = -21.0;
    double x_max = 7.0;
    double tol_scale = 1.0; // multiplies every pinned tolerance
    std::uint64_t seed = 20260811;
    bool use_threads = true;
    std::vector<std::string> suites; // empty selects all
};

bool suite_selected(const SuiteConfig& c, const std::string& name);

void run_specfun_identities(Report& r, const SuiteConfig& c);
void run_gfun_reductions(Report& r, const SuiteConfig& c);
void run_distrib_pairings(Report& r, const SuiteConfig& c);
void run_weyl_exact(Report& r, const SuiteConfig& c);
void run_harmonics_spectra(Report& r, const SuiteConfig& c);
void run_radial_unitary(Report& r, const SuiteConfig& c);
void run_cone_consistency(Report& r, const SuiteConfig& c);

Report run_all(const SuiteConfig& c);

// Mellin-Barnes pairing oracles for the Bessel distributions, built from
// the Riesz pairing and contour quadrature; independent of the
// regular-plus-singular evaluation path they cross-check.
double mb_pairing_oracle(unsigned m, distrib::DistKind kind,
                         const distrib::TestFn& phi);

} // namespace fcone::suites

#endif
