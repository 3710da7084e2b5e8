// Command-line front end: batch verification suites, pointwise evaluators,
// and file-based transforms over the radial grids.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fcone/cone.hpp"
#include "fcone/gfun.hpp"
#include "fcone/radial.hpp"
#include "fcone/specfun.hpp"
#include "fcone/suites.hpp"

using nlohmann::json;
using namespace fcone;

namespace {

std::string fullprec(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct OutputOptions {
    std::string format = "csv";
    std::string out;
};

void emit_table(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows,
                const OutputOptions& opt) {
    std::ostringstream os;
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
            arr.push_back(obj);
        }
        os << arr.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < header.size(); ++i)
            os << header[i] << (i + 1 < header.size() ? "," : "\n");
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                os << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
    if (opt.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(opt.out);
        if (!f) throw ConfigError("cannot open output file: " + opt.out);
        f << os.str();
    }
}

// flat key-value config file
void load_config(const std::string& path, suites::SuiteConfig& cfg) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    std::string line;
    while (std::getline(f, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key.empty() || key[0] == '#') continue;
        if (key == "signature") {
            unsigned p, q;
            if (!(ls >> p >> q)) throw ConfigError("config: signature p q");
            static bool fresh = true;
            if (fresh) {
                cfg.signatures.clear();
                fresh = false;
            }
            cfg.signatures.push_back({p, q});
        } else if (key == "lmax") {
            ls >> cfg.lmax;
        } else if (key == "kmax") {
            ls >> cfg.kmax;
        } else if (key == "grid_n") {
            ls >> cfg.grid_n;
        } else if (key == "xmin") {
            ls >> cfg.x_min;
        } else if (key == "xmax") {
            ls >> cfg.x_max;
        } else if (key == "tol_scale") {
            ls >> cfg.tol_scale;
        } else if (key == "seed") {
            ls >> cfg.seed;
        } else if (key == "suite") {
            std::string s;
            ls >> s;
            cfg.suites.push_back(s);
        } else {
            throw ConfigError("config: unknown key " + key);
        }
    }
}

struct SpecFile {
    radial::RadialGrid grid;
    unsigned p = 3, q = 3, l = 0, k = 0;
    radial::RadialFn f;
};

SpecFile load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open spec file: " + path);
    SpecFile sf;
    std::string line;
    bool have_samples = false, have_preset = false;
    std::string preset;
    std::vector<std::string> preset_args;
    std::vector<double> samples;
    bool reading_samples = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key.empty() || key[0] == '#') continue;
        if (reading_samples) {
            samples.push_back(std::stod(key));
            double v;
            while (ls >> v) samples.push_back(v);
            continue;
        }
        if (key == "p") ls >> sf.p;
        else if (key == "q") ls >> sf.q;
        else if (key == "l") ls >> sf.l;
        else if (key == "k") ls >> sf.k;
        else if (key == "xmin") ls >> sf.grid.x_min;
        else if (key == "xmax") ls >> sf.grid.x_max;
        else if (key == "n") ls >> sf.grid.n;
        else if (key == "preset") {
            ls >> preset;
            std::string a;
            while (ls >> a) preset_args.push_back(a);
            have_preset = true;
        } else if (key == "samples") {
            reading_samples = true;
            have_samples = true;
        } else {
            throw SpecParseError("spec file: unknown key " + key);
        }
    }
    sf.grid.validate();
    radial::Signature sig(sf.p, sf.q);
    if (have_samples) {
        if (samples.size() != sf.grid.n)
            throw SpecParseError("spec file: sample count does not match n");
        sf.f.grid = sf.grid;
        sf.f.samples = std::move(samples);
    } else if (have_preset) {
        if (preset == "flk") {
            if (preset_args.size() == 2) {
                sf.l = unsigned(std::stoul(preset_args[0]));
                sf.k = unsigned(std::stoul(preset_args[1]));
            }
            sf.f = radial::f_lk_fn(sig, {sf.l, sf.k}, sf.grid);
        } else if (preset == "gauss-bump") {
            if (preset_args.size() != 2)
                throw SpecParseError("preset gauss-bump x0 w");
            const double x0 = std::stod(preset_args[0]);
            const double w = std::stod(preset_args[1]);
            sf.f = radial::RadialFn::from_callable(sf.grid, [x0, w](double r) {
                const double x = std::log(r);
                return std::exp(-(x - x0) * (x - x0) / (2.0 * w * w));
            });
        } else {
            throw SpecParseError("unknown preset: " + preset);
        }
    } else {
        throw SpecParseError("spec file: needs 'preset' or 'samples'");
    }
    return sf;
}

void write_spec(const std::string& path, const SpecFile& sf) {
    std::ofstream out(path);
    if (!out) throw SpecParseError("cannot open output file: " + path);
    out << "p " << sf.p << "\nq " << sf.q << "\nl " << sf.l << "\nk " << sf.k
        << "\n";
    out << "xmin " << fullprec(sf.grid.x_min) << "\nxmax "
        << fullprec(sf.grid.x_max) << "\nn " << sf.grid.n << "\n";
    out << "samples\n";
    for (double v : sf.f.samples) out << fullprec(v) << "\n";
}

int cmd_verify(const suites::SuiteConfig& cfg, const OutputOptions& opt) {
    suites::Report rep = suites::run_all(cfg);
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : rep.rows)
        rows.push_back({row.suite, row.id, row.params, fullprec(row.error),
                        fullprec(row.tol), row.pass ? "pass" : "fail"});
    rows.push_back({"meta", "seed", std::to_string(rep.seed), "", "", ""});
    emit_table({"suite", "id", "params", "error", "tol", "status"}, rows, opt);
    if (!rep.all_pass()) {
        std::cerr << rep.failures() << " row(s) failed\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for the cone inversion operator"};
    app.require_subcommand(1);

    // shared options
    suites::SuiteConfig cfg;
    OutputOptions out;
    std::string config_path;

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    std::vector<unsigned> pq;
    verify->add_option("--config", config_path, "flat key-value config file");
    verify->add_option("--suite", cfg.suites, "suite selection (repeatable)");
    verify->add_option("--p", pq, "restrict to one signature: use with --q");
    verify->add_option("--lmax", cfg.lmax, "maximum l");
    verify->add_option("--kmax", cfg.kmax, "maximum k");
    verify->add_option("--grid-n", cfg.grid_n, "radial grid size");
    verify->add_option("--xmin", cfg.x_min, "log-grid lower end");
    verify->add_option("--xmax", cfg.x_max, "log-grid upper end");
    verify->add_option("--tol", cfg.tol_scale, "tolerance scale factor");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--format", out.format, "csv or json");
    verify->add_option("--out", out.out, "output file");

    auto* eval = app.add_subcommand("eval", "evaluate one function at points");
    std::string what;
    unsigned ep = 3, eq = 3, el = 0, ek = 0;
    std::vector<double> ts, rs, zetas, xs;
    double enu = 0.0;
    std::string ekind = "J";
    eval->add_option("what", what,
                     "bessel | gfun | kernel-Klk | psi | flk")->required();
    eval->add_option("--p", ep, "signature p");
    eval->add_option("--q", eq, "signature q");
    eval->add_option("--l", el, "sector l");
    eval->add_option("--k", ek, "sector k");
    eval->add_option("--t", ts, "kernel argument(s)");
    eval->add_option("--r", rs, "radius argument(s)");
    eval->add_option("--zeta", zetas, "multiplier argument(s)");
    eval->add_option("--x", xs, "argument(s)");
    eval->add_option("--nu", enu, "order");
    eval->add_option("--kind", ekind, "bessel kind: J Y I K");
    eval->add_option("--format", out.format, "csv or json");
    eval->add_option("--out", out.out, "output file");

    auto* trans = app.add_subcommand("transform", "transform a sampled function");
    std::string op = "tlk", in_path, out_path;
    bool twice = false;
    double b1 = 0.0, b2 = 0.0, ghat = 1.0;
    unsigned tl = 0, tk = 0;
    bool have_l = false, have_k = false;
    trans->add_option("--op", op, "tlk | fc | fox")->required();
    trans->add_option("--in", in_path, "input function spec file")->required();
    trans->add_option("--out", out_path, "output samples file");
    trans->add_flag("--twice", twice, "apply twice, report the residual");
    trans->add_option("--l", tl, "sector l")->each([&](const std::string&) {
        have_l = true;
    });
    trans->add_option("--k", tk, "sector k")->each([&](const std::string&) {
        have_k = true;
    });
    trans->add_option("--b1", b1, "fox b1");
    trans->add_option("--b2", b2, "fox b2");
    trans->add_option("--gamma", ghat, "fox gamma");

    auto* table = app.add_subcommand("table", "sector summary table");
    unsigned tp = 3, tq = 3, tlmax = 3, tkmax = 3;
    table->add_option("--p", tp, "signature p")->required();
    table->add_option("--q", tq, "signature q")->required();
    table->add_option("--lmax", tlmax, "maximum l");
    table->add_option("--kmax", tkmax, "maximum k");
    table->add_option("--format", out.format, "csv or json");
    table->add_option("--out", out.out, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            if (!config_path.empty()) load_config(config_path, cfg);
            // command-line overrides re-applied by CLI11 already
            if (pq.size() == 1) throw ConfigError("--p requires --q");
            return cmd_verify(cfg, out);
        }
        if (*eval) {
            std::vector<std::vector<std::string>> rows;
            if (what == "bessel") {
                specfun::BesselKind kind = specfun::BesselKind::J;
                if (ekind == "Y") kind = specfun::BesselKind::Y;
                else if (ekind == "I") kind = specfun::BesselKind::I;
                else if (ekind == "K") kind = specfun::BesselKind::K;
                else if (ekind != "J") throw ParameterError("bad --kind");
                for (double x : xs)
                    rows.push_back({fullprec(x),
                                    fullprec(specfun::bessel(kind, enu, x))});
                emit_table({"x", "value"}, rows, out);
            } else if (what == "kernel-Klk") {
                radial::Signature sig(ep, eq);
                for (double t : ts)
                    rows.push_back(
                        {fullprec(t),
                         fullprec(radial::kernel_K_lk(sig, {el, ek}, t))});
                emit_table({"t", "value"}, rows, out);
            } else if (what == "psi") {
                radial::Signature sig(ep, eq);
                for (double z : zetas) {
                    const Complex v =
                        radial::psi_multiplier(sig, {el, ek}, Complex(z, 0.0));
                    rows.push_back({fullprec(z), fullprec(v.real()),
                                    fullprec(v.imag())});
                }
                emit_table({"zeta", "re", "im"}, rows, out);
            } else if (what == "flk") {
                radial::Signature sig(ep, eq);
                for (double rr : rs)
                    rows.push_back(
                        {fullprec(rr),
                         fullprec(radial::f_lk(sig, {el, ek}, rr))});
                emit_table({"r", "value"}, rows, out);
            } else if (what == "gfun") {
                // G_04^20(x | b) with b from --t (4 values) at --x points
                if (ts.size() != 4)
                    throw ParameterError("gfun eval: pass the 4 b's via --t");
                gfun::GSpec s{2, 0, 0, 4, {}, ts};
                for (double x : xs) {
                    gfun::Contour L =
                        gfun::default_contour(s, std::log(x), std::log(x));
                    rows.push_back(
                        {fullprec(x), fullprec(gfun::g_contour(x, s, L))});
                }
                emit_table({"x", "value"}, rows, out);
            } else {
                throw ParameterError("unknown eval target: " + what);
            }
            return 0;
        }
        if (*trans) {
            SpecFile sf = load_spec(in_path);
            radial::Signature sig(sf.p, sf.q);
            if (have_l) sf.l = tl;
            if (have_k) sf.k = tk;
            if (op == "tlk" || op == "fc") {
                radial::SectorIndex idx{sf.l, sf.k};
                radial::RadialFn tf = radial::t_lk_multiplier(sig, idx, sf.f);
                std::printf("norm_in            %.17g\n",
                            std::sqrt(radial::norm_sq(sig, sf.f)));
                std::printf("norm_out           %.17g\n",
                            std::sqrt(radial::norm_sq(sig, tf)));
                if (twice) {
                    radial::RadialFn tff = radial::t_lk_multiplier(sig, idx, tf);
                    double e = 0, n = 0;
                    for (std::size_t j = 0; j < sf.grid.n; ++j) {
                        const double w = std::pow(sf.grid.r(j),
                                                  double(sf.p + sf.q) - 4.0);
                        e += std::pow(tff.samples[j] - sf.f.samples[j], 2) * w;
                        n += std::pow(sf.f.samples[j], 2) * w;
                    }
                    std::printf("twice_residual     %.17g\n", std::sqrt(e / n));
                }
                if (!out_path.empty()) {
                    SpecFile so = sf;
                    so.f = tf;
                    write_spec(out_path, so);
                }
            } else if (op == "fox") {
                // interpret the file samples as f(y) on y = r^2gamma
                SpecFile in = sf;
                auto fy = [&](double y) {
                    const double rr = std::pow(y, 0.5 / ghat);
                    const double pos =
                        (std::log(rr) - in.grid.x_min) / in.grid.dx();
                    if (pos < 0 || pos > double(in.grid.n - 1)) return 0.0;
                    const std::size_t j =
                        std::min(std::size_t(pos), in.grid.n - 2);
                    const double w = pos - double(j);
                    return (1 - w) * in.f.samples[j] + w * in.f.samples[j + 1];
                };
                radial::FoxResult res =
                    radial::fox_g_transform(b1, b2, ghat, fy, in.grid);
                double n_in = 0, n_out = 0;
                for (std::size_t j = 0; j < in.grid.n; ++j) {
                    const double dxj =
                        2.0 * ghat * res.x[j] * in.grid.dx(); // dx = 2g x dlogr
                    n_in += fy(res.x[j]) * fy(res.x[j]) * dxj;
                    n_out += res.values[j] * res.values[j] * dxj;
                }
                std::printf("norm_in            %.17g\n", std::sqrt(n_in));
                std::printf("norm_out           %.17g\n", std::sqrt(n_out));
                if (!out_path.empty()) {
                    std::ofstream o(out_path);
                    for (std::size_t j = 0; j < in.grid.n; ++j)
                        o << fullprec(res.x[j]) << " "
                          << fullprec(res.values[j]) << "\n";
                }
            } else {
                throw ParameterError("unknown transform op: " + op);
            }
            return 0;
        }
        if (*table) {
            radial::Signature sig(tp, tq);
            std::vector<std::vector<std::string>> rows;
            for (unsigned l = 0; l <= tlmax; ++l)
                for (unsigned k = 0; k <= tkmax; ++k) {
                    radial::SectorIndex idx{l, k};
                    const auto cs = idx.sector_case(sig);
                    rows.push_back(
                        {std::to_string(l), std::to_string(k),
                         cs == radial::SectorCase::One
                             ? "1"
                             : (cs == radial::SectorCase::Two ? "2" : "1/2"),
                         std::to_string(idx.a_lk(sig)),
                         fullprec(idx.eigenvalue(sig)),
                         fullprec(radial::f_lk_norm_sq(sig, idx)),
                         fullprec(radial::psi_multiplier(sig, idx, Complex(0, 0))
                                      .real())});
                }
            emit_table({"l", "k", "case", "a_lk", "eigenvalue", "flk_norm_sq",
                        "psi0"},
                       rows, out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
