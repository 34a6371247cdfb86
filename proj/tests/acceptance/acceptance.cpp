// Acceptance criteria. Run with --criterion N for one criterion or without
// arguments for all of them; each prints one PASS/FAIL line.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lf/bands.hpp"
#include "lf/errors.hpp"
#include "lf/verify.hpp"

using namespace lf;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string failures;

    // Records a sub-check; failing ones are listed after the detail.
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures += " [fail: " + what + "]";
        }
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

SpectrumIntervals spectrum_of(const PeriodicPotential& q, double lambda = 1.0) {
    return spectrum(band_edges(q.kind, q.periods, q.scaled(lambda), default_grid(q.periods)));
}

bool gap_contains(const GapQuery& g, double lo, double hi) {
    return g.status == GapQuery::Status::gap && g.left <= lo && g.right >= hi;
}

bool gap_within(const GapQuery& g, double lo, double hi) {
    return g.status == GapQuery::Status::gap && g.left >= lo && g.right <= hi;
}

PeriodicPotential ensemble_member(LatticeKind kind, Periods periods, int seed) {
    // Rescaled so that the sup norm is exactly 0.01.
    PeriodicPotential q = random_potential(kind, periods, 1.0, 1000 + seed);
    return q.scaled(0.01 / q.sup_norm());
}

constexpr int kEnsemble = 25;

// ---- 1 ----
void free_spectra(Outcome& o) {
    const std::pair<double, double> hull[] = {{-4, 4}, {-3, 6}, {-3, 3}, {-4, 8}};
    double worst = 0.0;
    for (auto kind : all_lattices()) {
        GridSpec grid;
        const auto spec = spectrum(band_edges(kind, {2, 2}, zero_potential(kind, {2, 2}), grid));
        const auto [lo, hi] = hull[static_cast<int>(kind)];
        o.expect(spec.components() == 1, to_string(kind) + " components");
        const double err = std::max(std::abs(spec.intervals.front().lo - lo), std::abs(spec.intervals.back().hi - hi));
        o.expect(err <= 1e-6, to_string(kind) + " endpoints");
        worst = std::max(worst, err);
    }
    o.detail << "max endpoint error " << fmt(worst);
}

// ---- 2 ----
void dispersion_oracle(Outcome& o) {
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::uniform_int_distribution<int> p5(1, 5), p7(1, 7);
    double tri = 0.0, ehm = 0.0, hex = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Periods per{p5(gen), p7(gen)};
        const FloquetPoint th{ang(gen), ang(gen)};
        auto diff = [](const std::vector<double>& a, const std::vector<double>& b) {
            double d = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
            return d;
        };
        tri = std::max(tri, diff(sorted_eigs(LatticeKind::triangular, per,
                                             zero_potential(LatticeKind::triangular, per), th),
                                 free_dispersion(LatticeKind::triangular, per, th)));
        ehm = std::max(ehm, diff(sorted_eigs(LatticeKind::ehm, per, zero_potential(LatticeKind::ehm, per), th),
                                 free_dispersion(LatticeKind::ehm, per, th)));
        hex = std::max(hex, diff(sorted_eigs(LatticeKind::hexagonal, per,
                                             zero_potential(LatticeKind::hexagonal, per), th),
                                 hex_bands_from_tri(per, th)));
    }
    o.expect(tri <= 1e-10, "triangular");
    o.expect(ehm <= 1e-10, "ehm");
    o.expect(hex <= 1e-10, "hexagonal");
    o.detail << "max deviation tri " << fmt(tri) << ", ehm " << fmt(ehm) << ", hex " << fmt(hex);
}

// ---- 3 ----
void exact_tri_gap(Outcome& o) {
    const auto q = builtin("tri-2x2");
    double worst = 0.0;
    for (double lambda : {0.05, 0.1, 0.2}) {
        const auto spec = spectrum_of(q, lambda);
        const auto [lo, hi] = tri_gap_exact(lambda);
        const auto g = gap_at(spec, -2.0);
        o.expect(spec.components() == 2, "components at " + fmt(lambda));
        if (g.status != GapQuery::Status::gap) {
            o.expect(false, "no gap at " + fmt(lambda));
            continue;
        }
        const double err = std::max(std::abs(g.left - lo), std::abs(g.right - hi));
        o.expect(err <= 1e-6, "endpoints at " + fmt(lambda));
        worst = std::max(worst, err);
    }
    o.detail << "max endpoint error " << fmt(worst);
}

// ---- 4 ----
void hex_z(Outcome& o) {
    const auto q = builtin("hex-1x1-Z");
    double worst = 0.0;
    for (double lambda : {0.1, 0.25}) {
        const auto g = gap_at(spectrum_of(q, lambda), 0.0);
        if (g.status != GapQuery::Status::gap) {
            o.expect(false, "no gap at " + fmt(lambda));
            continue;
        }
        const double err = std::max(std::abs(g.left + lambda), std::abs(g.right - lambda));
        o.expect(err <= 1e-8, "endpoints at " + fmt(lambda));
        worst = std::max(worst, err);
    }
    o.detail << "max endpoint error " << fmt(worst);
}

// ---- 5 ----
void hex_2x2(Outcome& o) {
    const auto q = builtin("hex-2x2");
    double accuracy = 0.0;
    for (double lambda : {0.05, 0.1}) {
        const auto qs = q.scaled(lambda);
        const auto bands = band_edges(qs.kind, qs.periods, qs, default_grid(qs.periods));
        const auto spec = spectrum(bands);
        const std::string at = " at " + fmt(lambda);
        o.expect(spec.components() == 4, "components" + at);
        const auto g0 = gap_at(spec, 0.0);
        o.expect(gap_contains(g0, -lambda / 5, lambda / 5), "gap at 0 too small" + at);
        o.expect(gap_within(g0, -lambda / 4, lambda / 4), "gap at 0 too large" + at);
        const double l2 = lambda * lambda;
        for (double c : {-1.0, 1.0}) {
            const auto g = gap_at(spec, c);
            o.expect(gap_contains(g, c - l2 / 20, c + l2 / 20), "gap at " + fmt(c) + " too small" + at);
            o.expect(gap_within(g, c - l2 / 2, c + l2 / 2), "gap at " + fmt(c) + " too large" + at);
        }
        // Reference edges from a finer grid and a tighter refinement tolerance.
        GridSpec fine;
        fine.n1 = fine.n2 = 128;
        fine.refine_tol = 1e-12;
        const auto ref = band_edges(qs.kind, qs.periods, qs, fine);
        for (std::size_t k = 0; k < bands.bands.size(); ++k)
            accuracy = std::max({accuracy, std::abs(bands.bands[k].emin - ref.bands[k].emin),
                                 std::abs(bands.bands[k].emax - ref.bands[k].emax)});
    }
    o.expect(accuracy <= 1e-7, "edge accuracy");
    o.detail << "edge deviation from 128x128 reference " << fmt(accuracy);
}

// ---- 6 ----
void ehm_3x3(Outcome& o) {
    const double lambda = 0.1;
    const auto spec = spectrum_of(builtin("ehm-3x3"), lambda);
    const auto g = gap_at(spec, -1.0);
    o.expect(spec.components() == 2, "components");
    o.expect(gap_contains(g, -1 - lambda / 10, -1 + lambda / 10), "gap too small");
    o.expect(gap_within(g, -1 - lambda / 4, -1 + lambda / 4), "gap too large");
    if (g.status == GapQuery::Status::gap) o.detail << "gap (" << g.left << ", " << g.right << ")";
}

// ---- 7 ----
void no_gap_laws(Outcome& o) {
    int tri_bad = 0, ehm_bad = 0, hex_count_bad = 0, hex_zero_bad = 0;
    double hex_offset = 0.0;
    for (int seed = 0; seed < kEnsemble; ++seed) {
        if (spectrum_of(ensemble_member(LatticeKind::triangular, {3, 4}, seed)).components() != 1) ++tri_bad;
        if (spectrum_of(ensemble_member(LatticeKind::ehm, {4, 3}, seed)).components() != 1) ++ehm_bad;
        const auto spec = spectrum_of(ensemble_member(LatticeKind::hexagonal, {3, 2}, seed));
        if (spec.components() > 2) ++hex_count_bad;
        bool zero_ok = true;
        for (std::size_t i = 0; i + 1 < spec.intervals.size(); ++i) {
            const double lo = spec.intervals[i].hi, hi = spec.intervals[i + 1].lo;
            if (!(lo < 0.0 && hi > 0.0)) {
                zero_ok = false;
                hex_offset = std::max(hex_offset, std::min(std::abs(lo), std::abs(hi)));
            }
        }
        if (!zero_ok) ++hex_zero_bad;
    }
    o.expect(tri_bad == 0, "triangular (3,4) not connected in " + std::to_string(tri_bad) + " runs");
    o.expect(ehm_bad == 0, "ehm (4,3) not connected in " + std::to_string(ehm_bad) + " runs");
    o.expect(hex_count_bad == 0, "hexagonal (3,2) over 2 components in " + std::to_string(hex_count_bad) + " runs");
    o.expect(hex_zero_bad == 0, "hexagonal (3,2) gap missing 0 in " + std::to_string(hex_zero_bad) + " runs");
    o.detail << kEnsemble << " potentials per lattice, |Q| = 0.01; largest distance from a hexagonal gap to 0 "
             << fmt(hex_offset);
}

// ---- 8 ----
void exceptional_localization(Outcome& o) {
    struct Case {
        LatticeKind kind;
        Periods periods;
    };
    const Case cases[] = {{LatticeKind::triangular, {2, 2}}, {LatticeKind::ehm, {3, 3}}, {LatticeKind::hexagonal, {2, 2}}};
    for (const auto& c : cases) {
        int gaps = 0, misses = 0;
        double far = 0.0;
        for (int seed = 0; seed < kEnsemble; ++seed) {
            const auto q = ensemble_member(c.kind, c.periods, seed);
            const auto rep = gap_report(c.kind, spectrum_of(q), 1.0);
            for (const auto& g : rep.gaps) {
                ++gaps;
                if (g.nearest_exceptional) continue;
                ++misses;
                double d = INFINITY;
                for (double e : exceptional_energies(c.kind))
                    d = std::min(d, std::max({0.0, g.left - e, e - g.right}));
                far = std::max(far, d);
            }
        }
        o.expect(misses == 0, to_string(c.kind) + " " + std::to_string(misses) + " of " + std::to_string(gaps) +
                                  " gaps miss the exceptional set");
        o.detail << to_string(c.kind) << ": " << gaps << " gaps, farthest " << fmt(far) << " from the set; ";
    }
    o.detail << "potential sup norm 0.01";
}

// ---- 9 ----
void determinant_identities(Outcome& o) {
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> ang(0, 2 * kPi), lam(0.0, 0.5), eps(-0.5, 0.5), ss(-0.9, 0.9);
    double det = 0.0;
    for (int i = 0; i < 200; ++i) {
        const FloquetPoint th{ang(gen), ang(gen)};
        const double l = lam(gen), e = eps(gen);
        const double num = tri_det_numeric(th, l, e);
        det = std::max(det, std::abs(tri_det_poly(th, l, e) - num) / std::max(std::abs(num), 1e-300));
    }
    o.expect(det <= 1e-9, "triangular determinant");
    double w = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double l = lam(gen), e = eps(gen);
        w = std::max(w, std::abs(tri_W1(l, e) - (l - e) * (l - e) * (e * e - 8 * e - l * l - 4 * l)));
        w = std::max(w, std::abs(tri_W2(l, e) - (e - l) * (e - l - 4) * (e * e - 4 * e - l * l)));
        w = std::max(w, std::abs(tri_W2(l, e) - (tri_W1(l, e) - 16 * e * (l - e))));
    }
    o.expect(w <= 1e-10, "W1/W2 factorizations");

    // Fitted coefficients against every printed formula.
    double hex = 0.0, ehm = 0.0;
    for (int i = 0; i < 20; ++i) {
        const FloquetPoint th{ang(gen), ang(gen)};
        const double s = ss(gen);
        for (auto c : {HexCenter::plus1, HexCenter::minus1}) {
            const auto f = hex_det_coeffs(th, s, c);
            const double x[] = {hex_X0(th), 0, 0, 0, hex_X4(th, s, c), 0, hex_X6(th, s, c)};
            for (int j = 0; j < 7; ++j) hex = std::max(hex, std::abs(f[j] - x[j]));
        }
        const auto f = hex_det_coeffs(th, s, HexCenter::zero);
        const double y[] = {hex_Y0(th), 0, hex_Y2(th, s), 0, hex_Y4(th, s)};
        for (int j = 0; j < 5; ++j) hex = std::max(hex, std::abs(f[j] - y[j]));
        const auto g = ehm_det_coeffs(th, s);
        const auto x = ehm_X_closed(th, s);
        for (int j = 0; j < 10; ++j) ehm = std::max(ehm, std::abs(g[j] - x[j]));
    }
    o.expect(hex <= 1e-6, "hexagonal coefficient formulas");
    o.expect(ehm <= 1e-6, "ehm coefficient formulas");

    // Printed point values.
    double pt = 0.0;
    for (auto c : {HexCenter::plus1, HexCenter::minus1})
        pt = std::max(pt, std::abs(hex_det_coeffs({kPi / 2, kPi}, 0.3, c)[0] + 16));
    o.expect(pt <= 1e-6, "X0 at (pi/2, pi) equals -16");
    o.expect(std::abs(hex_det_coeffs({0, 0}, 0.3, HexCenter::zero)[0] - 9) <= 1e-6, "Y0(0,0) equals 9");
    double y2 = 0.0, y6 = 0.0, y8 = 0.0;
    for (double s : {-0.7, -0.2, 0.1, 0.6}) {
        // X2 at (pi, pi) is Y2(s).
        y2 = std::max(y2, std::abs(ehm_det_coeffs({kPi, kPi}, s)[2] - 512 * (20 - 9 * s * s)));
        const auto y = ehm_Y(s);
        y6 = std::max(y6, std::abs(y.Y61 + y.Y62 + y.Y63 + y.Y64));
        y8 = std::max(y8, std::abs(y.Y8 - ehm_Y9_derivative(s)));
    }
    o.expect(y2 <= 1e-6, "Y2(s) = 512(20 - 9s^2)");
    o.expect(y6 <= 1e-6, "Y61 + Y62 + Y63 + Y64 = 0");
    o.expect(y8 <= 1e-6, "Y8 = Y9'");
    // The printed X0 formula gives 4096 at (pi, pi); the stated value at (0,0) is checked as written.
    const double x00 = ehm_det_coeffs({0, 0}, 0.3)[0];
    const double xpp = ehm_det_coeffs({kPi, kPi}, 0.3)[0];
    o.expect(std::abs(x00 - 4096) <= 1e-6, "X0((0,0), s) = 4096, fitted " + fmt(x00));
    o.detail << "det rel err " << fmt(det) << ", W " << fmt(w) << ", hex fit " << fmt(hex) << ", ehm fit "
             << fmt(ehm) << ", X0((pi,pi), s) = " << xpp;
}

// ---- 10 ----
bool same_points(std::vector<std::pair<double, double>> got, std::vector<std::pair<double, double>> want) {
    if (got.size() != want.size()) return false;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i].first - want[i].first) > 1e-8 || std::abs(got[i].second - want[i].second) > 1e-8)
            return false;
    return true;
}

void lemma_sets(Outcome& o) {
    const double a = 2 * kPi / 3, b = 4 * kPi / 3;
    o.expect(same_points(solve_trig_system(TrigSystem::tri_grad, -2).points, {{0, kPi}, {kPi, 0}, {kPi, kPi}}),
             "tri_grad at -2");
    for (double e : {-1.0, 1.0, 3.0, 5.0})
        o.expect(solve_trig_system(TrigSystem::tri_grad, e).points.empty(), "tri_grad at " + fmt(e));
    o.expect(same_points(solve_trig_system(TrigSystem::sqn_grad, 0).points, {{kPi, kPi}}), "sqn_grad at 0");
    o.expect(same_points(solve_trig_system(TrigSystem::sqn_grad, -1).points, {{a, a}, {a, b}, {b, a}, {b, b}}),
             "sqn_grad at -1");
    for (double e : {1.0, 3.0})
        o.expect(solve_trig_system(TrigSystem::sqn_grad, e).points.empty(), "sqn_grad at " + fmt(e));
    o.detail << "11 solution sets";
}

// ---- 11 ----
void nonnegativity(Outcome& o) {
    double worst = INFINITY;
    for (double a : {0.0, 27.0, 54.0}) {
        const auto m = trig_poly_nonneg(a, 512);
        o.expect(m.value >= -1e-9, "trig poly min at a = " + fmt(a));
        worst = std::min(worst, m.value);
    }
    const auto mx = trig_poly_max(54, 512);
    const double at_origin = std::hypot(std::remainder(mx.arg.theta1, 2 * kPi), std::remainder(mx.arg.theta2, 2 * kPi));
    o.expect(std::abs(mx.value - 216) <= 1e-9 && at_origin <= 1e-6, "max 216 at the origin");
    const auto y0 = hex_Y0_nonneg(512);
    o.expect(std::abs(y0.value) <= 1e-9, "Y0 minimum 0");
    o.expect(std::abs(hex_Y0({2 * kPi / 3, 4 * kPi / 3})) <= 1e-9, "Y0(2pi/3, 4pi/3) = 0");
    o.expect(std::abs(hex_Y0({0, 0}) - 9) <= 1e-9, "Y0(0,0) = 9");
    o.detail << "lowest trig poly min " << fmt(worst) << ", Y0 min " << fmt(y0.value) << " at (" << y0.arg.theta1
             << ", " << y0.arg.theta2 << ")";
}

// ---- 12 ----
void structural(Outcome& o) {
    std::mt19937_64 gen(12);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::uniform_int_distribution<int> p3(1, 3);
    double sq = 0.0, sym = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Periods per{p3(gen), p3(gen)};
        const FloquetPoint th{ang(gen), ang(gen)};
        sq = std::max(sq, hex_square_relation(per, th));
        const auto e = sorted_eigs(LatticeKind::hexagonal, per, zero_potential(LatticeKind::hexagonal, per), th);
        for (std::size_t k = 0; k < e.size(); ++k) sym = std::max(sym, std::abs(e[k] + e[e.size() - 1 - k]));
    }
    o.expect(sq <= 1e-12, "square relation");
    o.expect(sym <= 1e-10, "symmetry under negation");
    o.detail << "square relation residual " << fmt(sq) << ", symmetry " << fmt(sym);
}

// ---- 13 ----
void lipschitz(Outcome& o) {
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> ang(0, 2 * kPi), sup(0.01, 2.0);
    std::uniform_int_distribution<int> p3(1, 3);
    double excess = -INFINITY;
    for (int i = 0; i < 50; ++i) {
        const auto kind = all_lattices()[i % 4];
        const Periods per{p3(gen), p3(gen)};
        const auto q = random_potential(kind, per, sup(gen), gen());
        auto q2 = q;
        const auto d = random_potential(kind, per, sup(gen), gen());
        for (std::size_t k = 0; k < q2.values.size(); ++k) q2.values[k] += d.values[k];
        double dq = 0.0;
        for (std::size_t k = 0; k < q.values.size(); ++k) dq = std::max(dq, std::abs(q.values[k] - q2.values[k]));
        for (int j = 0; j < 10; ++j) {
            const FloquetPoint th{ang(gen), ang(gen)};
            const auto a = sorted_eigs(kind, per, q, th), b = sorted_eigs(kind, per, q2, th);
            for (std::size_t k = 0; k < a.size(); ++k) excess = std::max(excess, std::abs(a[k] - b[k]) - dq);
        }
    }
    o.expect(excess <= 1e-10, "eigenvalue shift exceeds |Q - Q'|");
    o.detail << "max of |E_k(Q) - E_k(Q')| - |Q - Q'| is " << fmt(excess);
}

// ---- 14 ----
void perturb_and_count(Outcome& o) {
    int runs = 0;
    auto conserved = [&](const JSetReport& r) {
        ++runs;
        return static_cast<int>(r.J0.size() + r.Jplus.size() + r.Jminus.size()) == r.r;
    };
    const auto t = j_sets(LatticeKind::triangular, {1, 1}, -2, {0, kPi}, {0, 1});
    o.expect(conserved(t) && t.r == 1 && t.J0.size() == 1 && t.Jplus.empty() && t.Jminus.empty(),
             "triangular (1,1) at (0, pi)");
    for (int p2 : {3, 4, 5})
        for (int p1 : {1, 2, 3}) {
            const Periods per{p1, p2};
            const double n = std::hypot(p1, p2);
            const auto r = j_sets(LatticeKind::triangular, per, -2, {0, kPi}, {p1 / n, p2 / n});
            o.expect(conserved(r), "conservation triangular " + std::to_string(p1) + "x" + std::to_string(p2));
        }
    std::ostringstream census;
    for (int p1 : {1, 2, 4}) {
        const Periods per{p1, 3};
        const auto r = j_sets(LatticeKind::ehm, per, -1, ehm_census_theta(per), {1, 0});
        const auto [plus, minus] = ehm_census_prediction(per);
        const std::string tag = "ehm (" + std::to_string(p1) + ",3)";
        o.expect(conserved(r), "conservation " + tag);
        o.expect(r.J0.empty(), "J0 empty " + tag);
        o.expect(static_cast<int>(r.Jplus.size()) == plus && static_cast<int>(r.Jminus.size()) == minus,
                 "census " + tag);
        o.expect(r.Jplus.size() != r.Jminus.size(), "|J+| differs from |J-| " + tag);
        census << " " << tag << " (" << r.Jplus.size() << "," << r.Jminus.size() << ")";
    }
    o.detail << runs << " runs; census" << census.str();
}

// ---- 15 ----
void impossibility(Outcome& o) {
    int bad = 0;
    if (!hex_linear_gap_impossibility(builtin("hex-2x2"), 1.0, {1e-3})) ++bad;
    for (int seed = 0; seed < 20; ++seed)
        if (!hex_linear_gap_impossibility(random_potential(LatticeKind::hexagonal, {2, 2}, 1.0, 300 + seed), 1.0,
                                          {1e-3}))
            ++bad;
    o.expect(bad == 0, std::to_string(bad) + " potentials open a linear gap");
    o.detail << "21 potentials, c = 1, lambda = 1e-3";
}

// ---- 16 ----
double fitted_exponent(const PeriodicPotential& q, double energy) {
    std::vector<double> lambdas;
    for (int i = 0; i < 8; ++i) lambdas.push_back(0.02 * std::pow(10.0, i / 7.0));
    const auto reports = gap_scan(q.kind, q.periods, q, lambdas, default_grid(q.periods));
    std::vector<double> x, y;
    for (const auto& r : reports) {
        const auto g = gap_at(r.spectrum, energy);
        if (g.status != GapQuery::Status::gap) return NAN;
        x.push_back(std::log(r.lambda));
        y.push_back(std::log(g.right - g.left));
    }
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void scaling(Outcome& o) {
    const double tri = fitted_exponent(builtin("tri-2x2"), -2.0);
    const double z = fitted_exponent(builtin("hex-1x1-Z"), 0.0);
    const double hm = fitted_exponent(builtin("hex-2x2"), -1.0);
    const double hp = fitted_exponent(builtin("hex-2x2"), 1.0);
    o.expect(std::abs(tri - 1) <= 0.05, "tri-2x2 exponent");
    o.expect(std::abs(z - 1) <= 0.05, "hex-1x1-Z exponent");
    o.expect(std::abs(hm - 2) <= 0.1, "hex-2x2 exponent at -1");
    o.expect(std::abs(hp - 2) <= 0.1, "hex-2x2 exponent at +1");
    o.detail << "exponents tri " << tri << ", hex-Z " << z << ", hex-2x2 " << hm << " / " << hp;
}

struct Criterion {
    const char* title;
    std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {"free spectra", free_spectra},
        {"dispersion oracle", dispersion_oracle},
        {"exact triangular gap", exact_tri_gap},
        {"hexagonal Z potential", hex_z},
        {"hexagonal 2x2 example", hex_2x2},
        {"ehm 3x3 example", ehm_3x3},
        {"no-gap laws", no_gap_laws},
        {"exceptional-energy localization", exceptional_localization},
        {"determinant identities", determinant_identities},
        {"lemma solution sets", lemma_sets},
        {"nonnegativity sweeps", nonnegativity},
        {"structural identities", structural},
        {"Lipschitz property", lipschitz},
        {"perturb-and-count", perturb_and_count},
        {"linear gap impossibility", impossibility},
        {"scaling exponents", scaling},
    };
    return list;
}

bool run_one(int n) {
    const auto& c = criteria()[n - 1];
    Outcome o;
    try {
        c.run(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.failures += std::string(" [error: ") + e.what() + "]";
    }
    std::printf("criterion %2d %s: %s: %s%s\n", n, o.pass ? "PASS" : "FAIL", c.title, o.detail.str().c_str(),
                o.failures.c_str());
    std::fflush(stdout);
    return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
    const int count = static_cast<int>(criteria().size());
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            const int n = std::atoi(argv[++i]);
            if (n < 1 || n > count) {
                std::fprintf(stderr, "criterion must be between 1 and %d\n", count);
                return 2;
            }
            which.push_back(n);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
            return 2;
        }
    }
    if (which.empty())
        for (int n = 1; n <= count; ++n) which.push_back(n);
    bool ok = true;
    for (int n : which) ok = run_one(n) && ok;
    return ok ? 0 : 1;
}
