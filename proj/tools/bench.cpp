// Benchmark comparing the OpenMP kernels against the serial reference
// implementations: the contour-table grid evaluation and the direct
// radial transform.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "fcone/gfun.hpp"
#include "fcone/parallel.hpp"
#include "fcone/radial.hpp"

using namespace fcone;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class F>
double timed(F&& fn) {
    const auto t0 = Clock::now();
    fn();
    return seconds(t0, Clock::now());
}

} // namespace

int main() {
    std::printf("threads available: %d\n\n", hardware_threads());

    // contour-table bulk evaluation
    {
        radial::Signature s(3, 3);
        radial::SectorIndex idx{1, 1};
        double sign = 1.0;
        gfun::GSpec g = radial::klk_gspec(s, idx, &sign);
        gfun::Contour L = gfun::default_contour(g, -4.0, 4.0);
        gfun::QuadControl ctl;
        gfun::ContourTable tab = gfun::build_contour_table(g, L, ctl, -4.0, 4.0);
        const std::size_t count = 20000;
        std::vector<double> serial, parallel;
        const double tser = timed([&] {
            serial = gfun::eval_table_grid(tab, -4.0, 8.0 / count, count, false);
        });
        const double tpar = timed([&] {
            parallel = gfun::eval_table_grid(tab, -4.0, 8.0 / count, count, true);
        });
        double maxdiff = 0.0;
        for (std::size_t i = 0; i < count; ++i)
            maxdiff = std::max(maxdiff, std::abs(serial[i] - parallel[i]));
        std::printf("contour-table grid eval (%zu points, %zu nodes)\n", count,
                    tab.lambda.size());
        std::printf("  serial   %8.3f s\n", tser);
        std::printf("  openmp   %8.3f s   speedup %.2fx   maxdiff %.2e\n\n",
                    tpar, tser / tpar, maxdiff);
    }

    // direct radial transform
    {
        radial::RadialGrid grid{-16.0, 8.0, 4096};
        radial::Signature s(4, 4);
        radial::SectorIndex idx{1, 1};
        radial::RadialFn f =
            radial::RadialFn::from_callable(grid, [](double r) {
                const double x = std::log(r);
                return std::exp(-(x + 2.2) * (x + 2.2) / (2 * 0.45 * 0.45));
            });
        radial::DirectOptions oser, opar;
        oser.use_threads = false;
        opar.use_threads = true;
        radial::RadialFn a, b;
        const double tser = timed([&] { a = radial::t_lk_direct(s, idx, f, oser); });
        const double tpar = timed([&] { b = radial::t_lk_direct(s, idx, f, opar); });
        double maxdiff = 0.0;
        for (std::size_t i = 0; i < grid.n; ++i)
            maxdiff = std::max(maxdiff, std::abs(a.samples[i] - b.samples[i]));
        std::printf("direct radial transform (N = %zu)\n", grid.n);
        std::printf("  serial   %8.3f s\n", tser);
        std::printf("  openmp   %8.3f s   speedup %.2fx   maxdiff %.2e\n",
                    tpar, tser / tpar, maxdiff);
    }
    return 0;
}
