#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lf/bands.hpp"
#include "lf/errors.hpp"
#include "lf/potentials.hpp"
#include "lf/suite.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

const char* kCsvHelp = R"(CSV columns:
  spectrum : index,lo,hi
  bands    : band,emin,emax   (with --samples: theta1,theta2,E1,...,EP)
  gap-scan : lambda,components,energy,gap_left,gap_right,width
             (gap_left/gap_right empty and width 0 when the energy is covered)
JSON output always carries "schema": 1.)";

struct RunConfig {
    std::string lattice;
    std::vector<int> periods;
    std::string potential = "zero";
    double lambda = 1.0;
    std::vector<int> grid;
    double merge_tol = lf::kDefaultMergeTol;
    double refine_tol = 1e-9;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 0;
};

struct Resolved {
    lf::LatticeKind kind;
    lf::Periods periods;
    lf::PeriodicPotential q;
    lf::GridSpec grid;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

Resolved resolve(const RunConfig& c) {
    Resolved r;
    std::optional<lf::LatticeKind> kind;
    if (!c.lattice.empty()) kind = lf::parse_lattice(c.lattice);
    std::optional<lf::Periods> periods;
    if (!c.periods.empty()) periods = lf::Periods{c.periods[0], c.periods[1]};

    std::string source = c.potential;
    if (source.starts_with("random:") && std::count(source.begin(), source.end(), ':') == 1)
        source += ":" + std::to_string(c.seed);
    const bool carries_geometry = source.starts_with("builtin:") || source.starts_with("file:");
    if (carries_geometry) {
        r.q = lf::resolve_potential(source, lf::LatticeKind::square, {1, 1});
        if (kind && *kind != r.q.kind)
            throw UsageError("--lattice " + c.lattice + " does not match potential lattice " +
                             lf::to_string(r.q.kind));
        if (periods && !(*periods == r.q.periods))
            throw UsageError("--periods do not match the potential's periods");
        r.kind = r.q.kind;
        r.periods = r.q.periods;
    } else {
        if (!kind) throw UsageError("--lattice is required for potential '" + c.potential + "'");
        r.kind = *kind;
        r.periods = periods.value_or(lf::Periods{1, 1});
        r.q = lf::resolve_potential(source, r.kind, r.periods);
    }
    r.grid = lf::default_grid(r.periods);
    if (!c.grid.empty()) {
        r.grid.n1 = c.grid[0];
        r.grid.n2 = c.grid[1];
    }
    r.grid.refine_tol = c.refine_tol;
    lf::check_grid(r.grid);
    if (!(c.merge_tol > 0)) throw UsageError("--merge-tol must be positive");
    return r;
}

void emit(const RunConfig& c, const std::string& text) {
    if (c.out.empty() || c.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw lf::Error(lf::ErrorCode::io, "cannot write '" + c.out + "'", "out");
    f << text;
}

json header(const std::string& command, const Resolved& r) {
    return {{"schema", 1},
            {"command", command},
            {"lattice", lf::to_string(r.kind)},
            {"periods", {r.periods.p1, r.periods.p2}}};
}

json gaps_json(const lf::GapReport& rep) {
    json gaps = json::array();
    for (const auto& g : rep.gaps)
        gaps.push_back({{"left", g.left},
                        {"right", g.right},
                        {"width", g.right - g.left},
                        {"exceptional", g.nearest_exceptional ? json(*g.nearest_exceptional) : json(nullptr)}});
    return gaps;
}

int cmd_spectrum(const RunConfig& c) {
    const auto r = resolve(c);
    const auto table = lf::band_edges(r.kind, r.periods, r.q.scaled(c.lambda), r.grid);
    const auto rep = lf::gap_report(r.kind, lf::spectrum(table, c.merge_tol), c.lambda);
    std::ostringstream os;
    if (c.format == "csv") {
        os << "index,lo,hi\n";
        for (std::size_t i = 0; i < rep.spectrum.intervals.size(); ++i)
            os << i << ',' << num(rep.spectrum.intervals[i].lo) << ',' << num(rep.spectrum.intervals[i].hi) << '\n';
    } else {
        json j = header("spectrum", r);
        j["lambda"] = c.lambda;
        j["merge_tol"] = c.merge_tol;
        j["components"] = rep.components;
        json iv = json::array();
        for (const auto& i : rep.spectrum.intervals) iv.push_back({i.lo, i.hi});
        j["intervals"] = iv;
        j["gaps"] = gaps_json(rep);
        os << j.dump(2) << '\n';
    }
    emit(c, os.str());
    return kExitOk;
}

int cmd_bands(const RunConfig& c, bool samples) {
    const auto r = resolve(c);
    const auto q = r.q.scaled(c.lambda);
    std::ostringstream os;
    if (samples) {
        const auto s = lf::sample_grid(r.kind, r.periods, q, r.grid);
        if (c.format == "csv") {
            os << "theta1,theta2";
            for (int k = 1; k <= s.P; ++k) os << ",E" << k;
            os << '\n';
            for (int i2 = 0; i2 < s.n2; ++i2)
                for (int i1 = 0; i1 < s.n1; ++i1) {
                    const auto th = s.theta(i1, i2);
                    os << num(th.theta1) << ',' << num(th.theta2);
                    for (int k = 0; k < s.P; ++k) os << ',' << num(s.at(i1, i2, k));
                    os << '\n';
                }
        } else {
            json j = header("bands", r);
            j["lambda"] = c.lambda;
            j["grid"] = {s.n1, s.n2};
            json rows = json::array();
            for (int i2 = 0; i2 < s.n2; ++i2)
                for (int i1 = 0; i1 < s.n1; ++i1) {
                    const auto th = s.theta(i1, i2);
                    json e = json::array();
                    for (int k = 0; k < s.P; ++k) e.push_back(s.at(i1, i2, k));
                    rows.push_back({{"theta", {th.theta1, th.theta2}}, {"eigenvalues", e}});
                }
            j["samples"] = rows;
            os << j.dump(2) << '\n';
        }
        emit(c, os.str());
        return kExitOk;
    }
    const auto table = lf::band_edges(r.kind, r.periods, q, r.grid);
    if (c.format == "csv") {
        os << "band,emin,emax\n";
        for (std::size_t k = 0; k < table.bands.size(); ++k)
            os << k + 1 << ',' << num(table.bands[k].emin) << ',' << num(table.bands[k].emax) << '\n';
    } else {
        json j = header("bands", r);
        j["lambda"] = c.lambda;
        j["grid"] = {r.grid.n1, r.grid.n2};
        json bands = json::array();
        for (std::size_t k = 0; k < table.bands.size(); ++k) {
            const auto& b = table.bands[k];
            bands.push_back({{"band", k + 1},
                             {"emin", b.emin},
                             {"emax", b.emax},
                             {"argmin", {b.argmin.theta1, b.argmin.theta2}},
                             {"argmax", {b.argmax.theta1, b.argmax.theta2}}});
        }
        j["bands"] = bands;
        os << j.dump(2) << '\n';
    }
    emit(c, os.str());
    return kExitOk;
}

std::vector<double> lambda_list(const RunConfig& c, std::optional<double> lo, std::optional<double> hi,
                                int steps, bool log_spacing, bool lambda_given) {
    if (!lo && !hi) {
        if (!lambda_given) throw UsageError("gap-scan needs --lambda or --lambda-min/--lambda-max");
        return {c.lambda};
    }
    if (!lo || !hi) throw UsageError("--lambda-min and --lambda-max go together");
    if (!(*lo > 0 && *hi >= *lo)) throw UsageError("need 0 < lambda-min <= lambda-max");
    if (steps < 1) throw UsageError("--steps must be at least 1");
    std::vector<double> out;
    for (int i = 0; i < steps; ++i) {
        const double t = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
        out.push_back(log_spacing ? *lo * std::pow(*hi / *lo, t) : *lo + (*hi - *lo) * t);
    }
    return out;
}

int cmd_gap_scan(const RunConfig& c, const std::vector<double>& lambdas, std::vector<double> energies) {
    const auto r = resolve(c);
    if (energies.empty()) energies = lf::exceptional_energies(r.kind);
    const auto reps = lf::gap_scan(r.kind, r.periods, r.q, lambdas, r.grid, c.merge_tol);
    std::ostringstream os;
    if (c.format == "csv") os << "lambda,components,energy,gap_left,gap_right,width\n";
    json rows = json::array(), fits = json::array();
    for (double e : energies) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (const auto& rep : reps) {
            const auto g = lf::gap_at(rep.spectrum, e);
            const bool open = g.status == lf::GapQuery::Status::gap;
            const double w = open ? g.right - g.left : 0.0;
            if (open) {
                const double lx = std::log(rep.lambda), ly = std::log(w);
                sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly; ++n;
            }
            if (c.format == "csv") {
                os << num(rep.lambda) << ',' << rep.components << ',' << num(e) << ','
                   << (open ? num(g.left) : "") << ',' << (open ? num(g.right) : "") << ',' << num(w) << '\n';
            } else {
                rows.push_back({{"lambda", rep.lambda},
                                {"components", rep.components},
                                {"energy", e},
                                {"gap_left", open ? json(g.left) : json(nullptr)},
                                {"gap_right", open ? json(g.right) : json(nullptr)},
                                {"width", w}});
            }
        }
        const double slope = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : NAN;
        fits.push_back({{"energy", e}, {"points", n}, {"exponent", std::isfinite(slope) ? json(slope) : json(nullptr)}});
    }
    if (c.format != "csv") {
        json j = header("gap-scan", r);
        j["rows"] = rows;
        j["fits"] = fits;
        os << j.dump(2) << '\n';
    }
    emit(c, os.str());
    return kExitOk;
}

int cmd_verify(const RunConfig& c, const std::string& suite, bool potential_given) {
    lf::SuiteOptions opt;
    if (potential_given) {
        if (!(c.potential.starts_with("builtin:") || c.potential.starts_with("file:")))
            throw UsageError("verify --potential takes builtin:NAME or file:PATH");
        opt.overrides.push_back(lf::resolve_potential(c.potential, lf::LatticeKind::square, {1, 1}));
    }
    const auto results = lf::run_suite(suite, opt);
    emit(c, lf::report_json(suite, results));
    bool ok = true;
    for (const auto& r : results)
        if (!r.pass) {
            ok = false;
            std::cerr << "FAIL " << r.check_id << ": measured " << r.measured << ", expected " << r.expected
                      << " (tolerance " << r.tolerance << ")\n";
        }
    return ok ? kExitOk : kExitFailure;
}

void add_common(CLI::App* app, RunConfig& c) {
    app->add_option("--lattice", c.lattice, "square | triangular | hexagonal | ehm");
    app->add_option("--periods", c.periods, "periods P1 P2")->expected(2);
    app->add_option("--potential", c.potential,
                    "builtin:NAME | file:PATH | zero | random:SUP[:SEED]")
        ->capture_default_str();
    app->add_option("--grid", c.grid, "theta grid N1 N2 (default 64x64, scaled with the periods)")->expected(2);
    app->add_option("--merge-tol", c.merge_tol, "band merge tolerance")->capture_default_str();
    app->add_option("--refine-tol", c.refine_tol, "band-edge refinement tolerance")->capture_default_str();
    app->add_option("--format", c.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app->add_option("--out", c.out, "output path (default stdout)");
    app->add_option("--seed", c.seed, "seed for random:SUP potentials")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Floquet band structure and gap analysis for periodic lattice operators"};
    app.footer(kCsvHelp);
    app.require_subcommand(1);

    RunConfig c;
    auto* spectrum = app.add_subcommand("spectrum", "spectrum of Delta + lambda Q as disjoint intervals");
    auto* bands = app.add_subcommand("bands", "per-band edges, or the raw grid samples");
    auto* scan = app.add_subcommand("gap-scan", "gap widths at tracked energies over a lambda sweep");
    auto* verify = app.add_subcommand("verify", "run a verification suite, JSON report on stdout");

    for (auto* sub : {spectrum, bands, scan}) {
        add_common(sub, c);
        sub->add_option("--lambda", c.lambda, "coupling constant")->capture_default_str();
        sub->footer(kCsvHelp);
    }
    bool samples = false;
    bands->add_flag("--samples", samples, "dump every grid sample (theta1, theta2, E1..EP)");

    std::optional<double> lmin, lmax;
    int steps = 10;
    bool log_spacing = false;
    std::vector<double> energies;
    scan->add_option("--lambda-min", lmin, "smallest lambda");
    scan->add_option("--lambda-max", lmax, "largest lambda");
    scan->add_option("--steps", steps, "number of lambda values")->capture_default_str();
    scan->add_flag("--log", log_spacing, "geometric lambda spacing");
    scan->add_option("--energy", energies, "energies to track (default: the lattice's exceptional energies)");

    std::string suite = "all";
    verify->add_option("--suite", suite, "all | tri | hex | ehm | lemmas | floquet")
        ->check(CLI::IsMember(lf::suite_names()))
        ->capture_default_str();
    verify->add_option("--potential", c.potential, "replace the builtin with matching geometry");
    verify->add_option("--out", c.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*spectrum) return cmd_spectrum(c);
        if (*bands) return cmd_bands(c, samples);
        if (*scan)
            return cmd_gap_scan(c, lambda_list(c, lmin, lmax, steps, log_spacing, scan->count("--lambda") > 0),
                                energies);
        if (*verify) return cmd_verify(c, suite, verify->count("--potential") > 0);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const lf::Error& e) {
        std::cerr << "error [" << lf::to_string(e.code()) << (e.field().empty() ? "" : " " + e.field())
                  << "]: " << e.what() << '\n';
        switch (e.code()) {
            case lf::ErrorCode::non_hermitian:
            case lf::ErrorCode::no_convergence:
            case lf::ErrorCode::ill_conditioned:
            case lf::ErrorCode::solution_family:
                return kExitFailure;
            default:
                return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
