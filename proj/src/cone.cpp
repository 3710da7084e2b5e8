#include "fcone/cone.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "fcone/specfun.hpp"

namespace fcone::cone {

using radial::RadialFn;
using radial::RadialGrid;
using radial::SectorIndex;
using radial::Signature;

void ConePoint::validate(const Signature& sig) const {
    if (omega.size() != sig.p - 1 || eta.size() != sig.q - 1)
        throw DomainError("ConePoint: component dimensions");
    if (!(s > 0)) throw DomainError("ConePoint: s > 0");
    double no = 0, ne = 0;
    for (double c : omega) no += c * c;
    for (double c : eta) ne += c * c;
    if (std::abs(no - 1.0) > 1e-10 || std::abs(ne - 1.0) > 1e-10)
        throw DomainError("ConePoint: direction vectors must be unit");
}

std::vector<double> ConePoint::ambient() const {
    std::vector<double> x;
    x.reserve(omega.size() + eta.size());
    for (double c : omega) x.push_back(s * c);
    for (double c : eta) x.push_back(s * c);
    return x;
}

double zonal_profile(unsigned l, unsigned m, double x) {
    if (m == 1) return (l % 2 == 0) ? 1.0 : x; // S^0: 1 and sgn
    if (m == 2) {
        if (l == 0) return 1.0;
        return 2.0 * std::cos(l * std::acos(std::clamp(x, -1.0, 1.0))) /
               double(l);
    }
    return specfun::gegenbauer_tilde(l, 0.5 * (double(m) - 2.0), x);
}

double zonal_profile_norm_sq(unsigned l, unsigned m) {
    if (m == 1) return 2.0;
    if (m == 2) return (l == 0) ? 2.0 * PI : 4.0 * PI / double(l * l);
    const double mu = 0.5 * (double(m) - 2.0);
    const double diag = std::pow(2.0, 1.0 - 2.0 * mu) * PI *
                        std::tgamma(double(l) + 2.0 * mu) /
                        ((double(l) + mu) * std::tgamma(double(l) + 1.0));
    return specfun::sphere_area(m - 1) * diag;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double sector_eval_angular(const Signature& sig, const ZonalSector& sec,
                           double cx, double cy) {
    return zonal_profile(sec.idx.l, sig.p - 1, cx) *
           zonal_profile(sec.idx.k, sig.q - 1, cy);
}

double interp_radial(const RadialFn& f, double r) {
    const RadialGrid& g = f.grid;
    const double pos = (std::log(r) - g.x_min) / g.dx();
    if (pos < 0.0 || pos > double(g.n - 1)) return 0.0;
    const std::size_t j = std::min(std::size_t(pos), g.n - 2);
    const double w = pos - double(j);
    return (1.0 - w) * f.samples[j] + w * f.samples[j + 1];
}

} // namespace

double ConeFunctionStructured::eval(const ConePoint& xi) const {
    xi.validate(sig);
    double v = 0.0;
    for (const auto& sec : sectors) {
        const double cx = dot(xi.omega, sec.omega0);
        const double cy = dot(xi.eta, sec.eta0);
        v += interp_radial(sec.f, xi.s) * sector_eval_angular(sig, sec, cx, cy);
    }
    return v;
}

double cone_norm_sq(const ConeFunctionStructured& u) {
    std::set<std::pair<unsigned, unsigned>> seen;
    for (const auto& sec : u.sectors)
        if (!seen.insert({sec.idx.l, sec.idx.k}).second)
            throw ParameterError("cone_norm_sq: sectors must be distinct");
    double total = 0.0;
    for (const auto& sec : u.sectors) {
        total += radial::norm_sq(u.sig, sec.f) *
                 zonal_profile_norm_sq(sec.idx.l, u.sig.p - 1) *
                 zonal_profile_norm_sq(sec.idx.k, u.sig.q - 1);
    }
    return total;
}

double cone_norm_sq(const ConeGridFunction& u) {
    const std::size_t nx = u.nx(), ny = u.ny();
    double total = 0.0;
    for (std::size_t i = 0; i < u.grid.n; ++i) {
        double ang = 0.0;
        for (std::size_t a = 0; a < nx; ++a) {
            double row = 0.0;
            for (std::size_t b = 0; b < ny; ++b) {
                const double v = u.at(i, a, b);
                row += u.sq_eta.w[b] * v * v;
            }
            ang += u.sq_omega.w[a] * row;
        }
        total += ang * std::pow(u.grid.r(i), u.sig.measure_power() + 1.0);
    }
    return 0.5 * total * u.grid.dx();
}

ConeGridFunction synthesize(const ConeFunctionStructured& u,
                            const RadialGrid& g, unsigned nodes_omega,
                            unsigned nodes_eta) {
    for (const auto& sec : u.sectors)
        if (sec.omega0 != u.sectors.front().omega0 ||
            sec.eta0 != u.sectors.front().eta0)
            throw ParameterError("synthesize: sectors must share axes");
    ConeGridFunction out;
    out.sig = u.sig;
    out.grid = g;
    out.sq_omega = harmonics::SphereQuad::build(u.sig.p - 1, nodes_omega);
    out.sq_eta = harmonics::SphereQuad::build(u.sig.q - 1, nodes_eta);
    out.samples.assign(g.n * out.nx() * out.ny(), 0.0);
    for (const auto& sec : u.sectors) {
        for (std::size_t i = 0; i < g.n; ++i) {
            const double fr =
                (i < sec.f.samples.size()) ? sec.f.samples[i] : 0.0;
            for (std::size_t a = 0; a < out.nx(); ++a)
                for (std::size_t b = 0; b < out.ny(); ++b)
                    out.at(i, a, b) +=
                        fr * sector_eval_angular(u.sig, sec, out.sq_omega.x[a],
                                                 out.sq_eta.x[b]);
        }
    }
    return out;
}

RadialFn harmonic_project(const ConeGridFunction& u, unsigned l, unsigned k) {
    const unsigned degree_need = l + k + 2;
    if (u.nx() < degree_need || u.ny() < (u.sig.q > 2 ? degree_need : 1))
        throw QuadratureFailure("harmonic_project: quadrature too small");
    RadialFn out;
    out.grid = u.grid;
    out.samples.assign(u.grid.n, 0.0);
    const double nl = zonal_profile_norm_sq(l, u.sig.p - 1);
    const double nk = zonal_profile_norm_sq(k, u.sig.q - 1);
    for (std::size_t i = 0; i < u.grid.n; ++i) {
        double acc = 0.0;
        for (std::size_t a = 0; a < u.nx(); ++a) {
            const double zl = zonal_profile(l, u.sig.p - 1, u.sq_omega.x[a]);
            double row = 0.0;
            for (std::size_t b = 0; b < u.ny(); ++b)
                row += u.sq_eta.w[b] *
                       zonal_profile(k, u.sig.q - 1, u.sq_eta.x[b]) *
                       u.at(i, a, b);
            acc += u.sq_omega.w[a] * zl * row;
        }
        out.samples[i] = acc / (nl * nk);
    }
    return out;
}

// ---- parabolic action ---------------------------------------------------

GroupElement GroupElement::dilation(double t) {
    GroupElement g;
    g.kind = Kind::Dilation;
    g.t = t;
    return g;
}

GroupElement GroupElement::m_zero() {
    GroupElement g;
    g.kind = Kind::MZero;
    return g;
}

GroupElement GroupElement::inversion() {
    GroupElement g;
    g.kind = Kind::Inversion;
    return g;
}

GroupElement GroupElement::rotation(std::vector<double> rw,
                                    std::vector<double> re) {
    GroupElement g;
    g.kind = Kind::Rotation;
    g.rot_omega = std::move(rw);
    g.rot_eta = std::move(re);
    return g;
}

GroupElement GroupElement::translation(std::vector<double> a) {
    GroupElement g;
    g.kind = Kind::Translation;
    g.a = std::move(a);
    return g;
}

namespace {

std::vector<double> mat_apply(const std::vector<double>& m,
                              const std::vector<double>& v) {
    const std::size_t n = v.size();
    if (m.size() != n * n) throw ArityMismatch("rotation block size");
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += m[i * n + j] * v[j];
    double nn = 0;
    for (double c : out) nn += c * c;
    if (std::abs(nn - 1.0) > 1e-9)
        throw ResamplingError("rotation is not orthogonal on the axis");
    return out;
}

} // namespace

ConeFunctionStructured act_parabolic(const GroupElement& g,
                                     const ConeFunctionStructured& u) {
    ConeFunctionStructured out = u;
    switch (g.kind) {
        case GroupElement::Kind::Rotation:
            for (auto& sec : out.sectors) {
                sec.omega0 = mat_apply(g.rot_omega, sec.omega0);
                sec.eta0 = mat_apply(g.rot_eta, sec.eta0);
            }
            return out;
        case GroupElement::Kind::MZero: {
            const double sgn = (u.sig.half_pq() % 2 == 0) ? 1.0 : -1.0;
            for (auto& sec : out.sectors)
                for (double& v : sec.f.samples) v *= sgn;
            return out;
        }
        case GroupElement::Kind::Dilation:
            for (auto& sec : out.sectors)
                sec.f = radial::dilation(u.sig, sec.f, g.t);
            return out;
        case GroupElement::Kind::Inversion:
            return inversion_fc(u);
        case GroupElement::Kind::Translation:
            throw ParameterError(
                "act_parabolic: translation characters act pointwise; use "
                "translation_phase");
    }
    throw ParameterError("act_parabolic: unknown element");
}

Complex translation_phase(const std::vector<double>& a, const ConePoint& xi) {
    const std::vector<double> x = xi.ambient();
    if (a.size() != x.size()) throw ArityMismatch("translation_phase");
    double ax = 0;
    for (std::size_t i = 0; i < a.size(); ++i) ax += a[i] * x[i];
    return std::exp(Complex(0.0, 2.0 * ax));
}

ConeFunctionStructured inversion_fc(const ConeFunctionStructured& u) {
    ConeFunctionStructured out = u;
    for (auto& sec : out.sectors)
        sec.f = radial::t_lk_multiplier(u.sig, sec.idx, sec.f);
    return out;
}

ConeFunctionStructured group_word_apply(const std::vector<GroupElement>& word,
                                        const ConeFunctionStructured& u) {
    ConeFunctionStructured v = u;
    for (const auto& g : word) v = act_parabolic(g, v);
    return v;
}

// ---- Radon factorization ------------------------------------------------

double kernel_constant(const Signature& sig) {
    const unsigned e = (sig.p - 1) * (sig.p + 2) / 2;
    const double sgn = (e % 2 == 0) ? 1.0 : -1.0;
    return 2.0 * sgn / std::pow(PI, 0.5 * (double(sig.p + sig.q) - 4.0));
}

distrib::BesselDistribution kernel_distribution(const Signature& sig) {
    const unsigned m = sig.kernel_m();
    if (sig.q == 2) return distrib::bessel_dist(m, distrib::DistKind::PhiPlus);
    if (sig.p % 2 == 0) return distrib::bessel_dist(m, distrib::DistKind::PsiPlus);
    return distrib::bessel_dist(m, distrib::DistKind::Psi);
}

double rho_profile(const Signature& sig, const SectorIndex& idx, double c) {
    using specfun::funk_hecke_weight;
    const double P = double(sig.p), Q = double(sig.q);
    if (sig.q == 2) {
        double v = 0.0;
        for (int sgn_y : {+1, -1}) {
            const double x = c - double(sgn_y);
            if (x <= -1.0 || x >= 1.0) continue;
            const double parity = (sgn_y > 0 || idx.k % 2 == 0) ? 1.0 : -1.0;
            v += parity * funk_hecke_weight(idx.l, sig.p - 1, x) *
                 std::pow(1.0 - x * x, 0.5 * (P - 4.0));
        }
        return v;
    }
    const double lo = std::max(-1.0, c - 1.0), hi = std::min(1.0, c + 1.0);
    if (!(hi > lo)) return 0.0;
    const double ap = 0.5 * (P - 4.0), aq = 0.5 * (Q - 4.0);
    auto full = [&](double x) {
        const double y = c - x;
        return funk_hecke_weight(idx.l, sig.p - 1, x) *
               funk_hecke_weight(idx.k, sig.q - 1, y) *
               std::pow(1.0 - x * x, ap) * std::pow(1.0 - y * y, aq);
    };
    if (std::abs(c) < 0.05) {
        // near c = 0 the x- and y-endpoint singularities collide
        return quad::tanh_sinh(full, lo, hi, 1e-9, 10);
    }
    // Gauss-Jacobi rule absorbing the two endpoint powers exactly.
    // For c > 0 the window is [c-1, 1]: (1-x)^ap vanishes at hi, (1-y)^aq
    // at lo, and the remaining factor (1+x)^ap (1+y)^aq is smooth; c < 0
    // is the mirror image.
    const double a_hi = (c > 0) ? ap : aq;
    const double a_lo = (c > 0) ? aq : ap;
    static thread_local std::map<std::pair<double, double>, quad::Rule> cache;
    auto [it, inserted] = cache.try_emplace({a_hi, a_lo});
    if (inserted) it->second = quad::gauss_jacobi(48, a_hi, a_lo);
    const quad::Rule& rule = it->second;
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (unsigned i = 0; i < rule.x.size(); ++i) {
        const double x = mid + half * rule.x[i];
        const double y = c - x;
        double gs = funk_hecke_weight(idx.l, sig.p - 1, x) *
                    funk_hecke_weight(idx.k, sig.q - 1, y);
        gs *= (c > 0) ? std::pow(1.0 + x, ap) * std::pow(1.0 + y, aq)
                      : std::pow(1.0 - x, ap) * std::pow(1.0 - y, aq);
        sum += rule.w[i] * gs;
    }
    return std::pow(half, 1.0 + a_hi + a_lo) * sum;
}

RhoTable build_rho_table(const Signature& sig, const SectorIndex& idx,
                         unsigned n) {
    RhoTable t;
    t.sig = sig;
    t.idx = idx;
    t.tau0 = -3.2;
    t.dtau = 6.4 / double(n - 1);
    t.values.resize(2 * n); // [0, n): side c < 0; [n, 2n): side c > 0
    for (unsigned j = 0; j < n; ++j) {
        const double tau = t.tau0 + t.dtau * double(j);
        const double v = std::tanh(0.5 * PI * std::sinh(tau));
        t.values[j] = rho_profile(sig, idx, -(1.0 + v));
        t.values[n + j] = rho_profile(sig, idx, 1.0 + v);
    }
    return t;
}

double RhoTable::operator()(double c) const {
    const unsigned n = unsigned(values.size() / 2);
    if (std::abs(c) >= 2.0 || c == 0.0) return (c == 0.0) ? values[0] : 0.0;
    const double v = std::abs(c) - 1.0;
    const double tau = std::asinh(std::atanh(v) * 2.0 / PI);
    double pos = (tau - tau0) / dtau;
    pos = std::clamp(pos, 0.0, double(n - 1));
    const unsigned j = std::min(unsigned(pos), n - 2);
    const double w = pos - double(j);
    const unsigned base = (c > 0) ? n : 0;
    // the c < 0 side is stored with tau increasing toward -2
    if (c > 0) return (1.0 - w) * values[base + j] + w * values[base + j + 1];
    return (1.0 - w) * values[j] + w * values[j + 1];
}

namespace {

// Per-(sector, point) context for the one-dimensional Radon profile sum.
struct SectorRuCtx {
    const ZonalSector* sec = nullptr;
    const RhoTable* rho = nullptr;
    double s = 1.0;
    double zw = 0.0;   // 1/2 * prefactor * zonal pair
    double mpow = 0.0; // p + q - 4
    std::vector<double> rs;  // r_j * s over the support
    std::vector<double> wgt; // f_j r_j^{p+q-4}
    std::size_t j0 = 0;      // first support index
    double rho_edge_pos = 0.0, rho_edge_neg = 0.0;
};

double radon_prefactor(const Signature& sig) {
    if (sig.q == 2)
        return std::pow(2.0, double(sig.p) - 3.0) *
               std::pow(PI, 0.5 * (double(sig.p) - 3.0));
    return std::pow(2.0, double(sig.p + sig.q) - 6.0) *
           std::pow(PI, 0.5 * (double(sig.p + sig.q) - 6.0));
}

SectorRuCtx make_ru_ctx(const Signature& sig, const ZonalSector& sec,
                        const RhoTable* rho, const ConePoint& xi,
                        double pref) {
    SectorRuCtx c;
    c.sec = &sec;
    c.rho = rho;
    c.s = xi.s;
    c.mpow = sig.measure_power() + 1.0;
    const double zpair = sector_eval_angular(
        sig, sec, dot(xi.omega, sec.omega0), dot(xi.eta, sec.eta0));
    c.zw = 0.5 * pref * zpair;
    const RadialGrid& g = sec.f.grid;
    double fmax = 0.0;
    for (double v : sec.f.samples) fmax = std::max(fmax, std::abs(v));
    std::size_t lo = 0, hi = g.n ? g.n - 1 : 0;
    while (lo < g.n && std::abs(sec.f.samples[lo]) < 1e-15 * fmax) ++lo;
    while (hi > lo && std::abs(sec.f.samples[hi]) < 1e-15 * fmax) --hi;
    c.j0 = lo;
    for (std::size_t j = lo; j <= hi && j < g.n; ++j) {
        const double rj = g.r(j);
        c.rs.push_back(rj * xi.s);
        c.wgt.push_back(sec.f.samples[j] * std::pow(rj, c.mpow));
    }
    c.rho_edge_pos = (*rho)(2.0 - 1e-6);
    c.rho_edge_neg = (*rho)(-(2.0 - 1e-6));
    return c;
}

// Cubic interpolation of the radial samples at log-coordinate x.
double interp_samples_cubic(const RadialFn& f, double x) {
    const RadialGrid& g = f.grid;
    const double pos = (x - g.x_min) / g.dx();
    if (pos < 0.0 || pos > double(g.n - 1)) return 0.0;
    long j = long(pos) - 1;
    j = std::clamp(j, 0L, long(g.n) - 4);
    const double u = pos - double(j); // in [0,3] about nodes j..j+3
    double acc = 0.0;
    for (int m = 0; m < 4; ++m) {
        double lag = 1.0;
        for (int v = 0; v < 4; ++v)
            if (v != m) lag *= (u - double(v)) / (double(m) - double(v));
        acc += lag * f.samples[std::size_t(j + m)];
    }
    return acc;
}

// Radon profile of one sector at level t. The integrand in x' = log r' is
// smooth except at x* = log(|t| / 2s) where the window |c| < 2 opens
// (jump or algebraic cusp of the rho profile): panels are graded toward
// that point, Gauss-Legendre elsewhere.
double eval_ru(const SectorRuCtx& c, double t) {
    if (c.zw == 0.0 || c.rs.empty()) return 0.0;
    const RadialGrid& g = c.sec->f.grid;
    const double xlo = g.x(c.j0);
    const double xhi = g.x(c.j0 + c.rs.size() - 1);
    auto integrand = [&](double x) {
        const double r = std::exp(x);
        const double arg = t / (r * c.s);
        if (std::abs(arg) >= 2.0) return 0.0;
        return interp_samples_cubic(c.sec->f, x) * std::pow(r, c.mpow) *
               (*c.rho)(arg) / (r * c.s);
    };
    static thread_local quad::Rule gl = quad::gauss_legendre(16);
    static thread_local quad::Rule gl8 = quad::gauss_legendre(8);
    auto panel = [&](double a, double b, const quad::Rule& rule) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.x.size(); ++i)
            sum += rule.w[i] * integrand(0.5 * (a + b) + 0.5 * (b - a) * rule.x[i]);
        return 0.5 * (b - a) * sum;
    };
    auto regular_panels = [&](double a, double b) {
        if (!(b > a)) return 0.0;
        const unsigned np = std::max(1u, unsigned(std::ceil((b - a) / 0.75)));
        double sum = 0.0;
        for (unsigned i = 0; i < np; ++i)
            sum += panel(a + (b - a) * i / np, a + (b - a) * (i + 1) / np, gl);
        return sum;
    };
    double total = 0.0;
    if (t == 0.0) {
        total = regular_panels(xlo, xhi);
    } else {
        const double xstar = std::log(std::abs(t) / (2.0 * c.s));
        if (xstar >= xhi) return 0.0;
        if (xstar <= xlo) {
            total = regular_panels(xlo, xhi);
        } else {
            // graded panels from the opening point
            const double h = std::min(xhi - xstar, 1.0);
            double w = h;
            for (unsigned j = 0; j < 28; ++j) {
                total += panel(xstar + 0.5 * w, xstar + w, gl8);
                w *= 0.5;
            }
            total += regular_panels(xstar + h, xhi);
        }
    }
    return c.zw * total;
}

} // namespace

double radon_transform(const ConeFunctionStructured& u, const ConePoint& xi,
                       double t, const RhoTable* rho) {
    xi.validate(u.sig);
    if (t == 0.0 && u.sig.p + u.sig.q < 8 && u.sig.q > 2)
        throw DomainError("radon_transform: t = 0 not defined for p+q = 6");
    double total = 0.0;
    const double pref = radon_prefactor(u.sig);
    for (const auto& sec : u.sectors) {
        RhoTable local;
        const RhoTable* tab = rho;
        if (!tab || !(tab->idx.l == sec.idx.l && tab->idx.k == sec.idx.k)) {
            local = build_rho_table(u.sig, sec.idx);
            tab = &local;
        }
        total += eval_ru(make_ru_ctx(u.sig, sec, tab, xi, pref), t);
    }
    return total;
}

double fc_via_radon(const ConeFunctionStructured& u, const ConePoint& xi) {
    xi.validate(u.sig);
    const Signature sig = u.sig;
    distrib::BesselDistribution dist = kernel_distribution(sig);
    unsigned demand = 0;
    for (const auto& [j, c] : dist.singular.delta_coeffs)
        demand = std::max(demand, j + 1);
    for (const auto& [k, c] : dist.singular.pv_coeffs) demand = std::max(demand, k);
    const int budget =
        (sig.q == 2) ? 0 : std::max(0, (int(sig.p + sig.q) - 8) / 2);
    if (int(demand) > budget + 1)
        throw InsufficientSmoothness("fc_via_radon: signature too small");
    const double pref = radon_prefactor(sig);
    std::vector<RhoTable> tables;
    std::vector<SectorRuCtx> ctx;
    tables.reserve(u.sectors.size());
    for (const auto& sec : u.sectors)
        tables.push_back(build_rho_table(sig, sec.idx));
    for (std::size_t i = 0; i < u.sectors.size(); ++i)
        ctx.push_back(make_ru_ctx(sig, u.sectors[i], &tables[i], xi, pref));
    double rmax = 0.0;
    for (const auto& c : ctx)
        if (!c.rs.empty()) rmax = std::max(rmax, c.rs.back());
    auto ru = [&](double t) {
        double total = 0.0;
        for (const auto& c : ctx) total += eval_ru(c, t);
        return total;
    };
    distrib::TestFn phi;
    phi.value = ru;
    phi.support_radius = 2.05 * rmax;
    phi.k_max = demand == 0 ? 0 : demand;
    return kernel_constant(sig) * distrib::bessel_dist_pair(dist, phi, 1e-11);
}

double kernel_pointwise(const Signature& sig, const ConePoint& x,
                        const ConePoint& xp) {
    x.validate(sig);
    xp.validate(sig);
    const double t =
        x.s * xp.s * (dot(x.omega, xp.omega) + dot(x.eta, xp.eta));
    if (t == 0.0) throw OnSingularSupport("kernel_pointwise");
    distrib::BesselDistribution dist = kernel_distribution(sig);
    return kernel_constant(sig) * dist.value_off_origin(t);
}

} // namespace fcone::cone
