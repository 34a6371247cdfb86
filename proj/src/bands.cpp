#include "lf/bands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "lf/errors.hpp"
#include "lf/parallel.hpp"

namespace lf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kSeedsPerEdge = 4;
constexpr double kSimplexTol = 1e-6;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

int scaled_axis(int p) { return ((64 + p - 1) / p) * p; }

struct Point {
    double x, y;
};

// Minimizes sign * E_k(theta) near a seed.
class EdgeSearch {
public:
    EdgeSearch(LatticeKind kind, Periods periods, const PeriodicPotential& q, int k, double sign)
        : kind_(kind), periods_(periods), q_(q), k_(k), sign_(sign) {}

    double operator()(Point p) const {
        const auto e = sorted_eigs(kind_, periods_, q_, {p.x, p.y});
        return sign_ * e[k_];
    }

    Point nelder_mead(Point start, double step, double tol, double& fbest) const {
        std::array<Point, 3> s = {start, Point{start.x + step, start.y},
                                  Point{start.x, start.y + step}};
        std::array<double, 3> f = {(*this)(s[0]), (*this)(s[1]), (*this)(s[2])};
        for (int it = 0; it < 400; ++it) {
            std::array<int, 3> idx = {0, 1, 2};
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return f[a] < f[b]; });
            const int b = idx[0], m = idx[1], w = idx[2];
            const double diam = std::max({std::hypot(s[m].x - s[b].x, s[m].y - s[b].y),
                                          std::hypot(s[w].x - s[b].x, s[w].y - s[b].y)});
            if (diam < tol) break;
            const Point c{(s[b].x + s[m].x) / 2, (s[b].y + s[m].y) / 2};
            auto along = [&](double t) { return Point{c.x + t * (s[w].x - c.x), c.y + t * (s[w].y - c.y)}; };
            const Point r = along(-1.0);
            const double fr = (*this)(r);
            if (fr < f[b]) {
                const Point e = along(-2.0);
                const double fe = (*this)(e);
                if (fe < fr) { s[w] = e; f[w] = fe; } else { s[w] = r; f[w] = fr; }
            } else if (fr < f[m]) {
                s[w] = r; f[w] = fr;
            } else {
                const bool outside = fr < f[w];
                const Point k = along(outside ? -0.5 : 0.5);
                const double fk = (*this)(k);
                if (fk < (outside ? fr : f[w])) {
                    s[w] = k; f[w] = fk;
                } else {
                    for (int i : {m, w}) {
                        s[i] = {(s[i].x + s[b].x) / 2, (s[i].y + s[b].y) / 2};
                        f[i] = (*this)(s[i]);
                    }
                }
            }
        }
        const int best = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
        fbest = f[best];
        return s[best];
    }

    // Compass search over the eight axis and diagonal directions.
    Point pattern(Point p, double step, double tol, double& fp) const {
        static const std::array<Point, 8> dirs = {
            Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1},
            Point{kInvSqrt2, kInvSqrt2}, Point{-kInvSqrt2, -kInvSqrt2},
            Point{kInvSqrt2, -kInvSqrt2}, Point{-kInvSqrt2, kInvSqrt2}};
        double h = step;
        int evals = 0;
        while (h >= tol && evals < 4000) {
            Point best = p;
            double fbest = fp;
            for (const auto& d : dirs) {
                const Point c{p.x + h * d.x, p.y + h * d.y};
                const double fc = (*this)(c);
                ++evals;
                if (fc < fbest) { fbest = fc; best = c; }
            }
            if (fbest < fp) {
                p = best;
                fp = fbest;
            } else {
                h /= 2;
            }
        }
        return p;
    }

private:
    LatticeKind kind_;
    Periods periods_;
    const PeriodicPotential& q_;
    int k_;
    double sign_;
};

}  // namespace

FloquetPoint GridSamples::theta(int i1, int i2) const {
    return {kTwoPi * i1 / n1, kTwoPi * i2 / n2};
}

GridSpec default_grid(Periods periods) {
    GridSpec g;
    if (periods.p1 > 3 || periods.p2 > 3) {
        g.n1 = scaled_axis(periods.p1);
        g.n2 = scaled_axis(periods.p2);
    }
    return g;
}

void check_grid(const GridSpec& grid) {
    if (grid.n1 < 4 || grid.n2 < 4)
        throw Error(ErrorCode::invalid_argument, "grid needs at least 4 samples per axis", "grid");
    if (!(grid.refine_tol > 0.0))
        throw Error(ErrorCode::invalid_argument, "refine_tol must be positive", "refine_tol");
    if (grid.max_refine_rounds < 0)
        throw Error(ErrorCode::invalid_argument, "max_refine_rounds must be nonnegative",
                    "max_refine_rounds");
}

GridSamples sample_grid(LatticeKind kind, Periods periods, const PeriodicPotential& q,
                        const GridSpec& grid) {
    check_grid(grid);
    validate(q);
    GridSamples s{grid.n1, grid.n2, site_count(kind, periods), {}};
    s.eigenvalues.resize(static_cast<std::size_t>(s.n1) * s.n2 * s.P);
    parallel_for(static_cast<std::size_t>(s.n2), [&](std::size_t row) {
        const int i2 = static_cast<int>(row);
        for (int i1 = 0; i1 < s.n1; ++i1) {
            const FloquetPoint th = s.theta(i1, i2);
            std::vector<double> e;
            try {
                e = sorted_eigs(kind, periods, q, th);
            } catch (const Error& err) {
                throw Error(err.code(),
                            std::string(err.what()) + " at theta=(" + std::to_string(th.theta1) +
                                "," + std::to_string(th.theta2) + ")",
                            err.field());
            }
            std::copy(e.begin(), e.end(),
                      s.eigenvalues.begin() + (static_cast<std::size_t>(i2) * s.n1 + i1) * s.P);
        }
    });
    return s;
}

BandTable band_edges(LatticeKind kind, Periods periods, const PeriodicPotential& q,
                     const GridSpec& grid) {
    const GridSamples s = sample_grid(kind, periods, q, grid);
    BandTable table;
    table.grid = grid;
    table.bands.resize(s.P);
    const double spacing = kTwoPi / std::max(s.n1, s.n2);

    // Each (band, side) pair is refined independently; slot 2k is the minimum of band k.
    parallel_for(static_cast<std::size_t>(2 * s.P), [&](std::size_t job) {
        const int k = static_cast<int>(job / 2);
        const double sign = job % 2 == 0 ? 1.0 : -1.0;

        struct Cand {
            double f;
            int i1, i2;
        };
        auto value = [&](int i1, int i2) { return sign * s.at(floor_mod(i1, s.n1), floor_mod(i2, s.n2), k); };
        std::vector<Cand> local;
        Cand global{INFINITY, 0, 0};
        for (int i2 = 0; i2 < s.n2; ++i2)
            for (int i1 = 0; i1 < s.n1; ++i1)
                if (value(i1, i2) < global.f) global = {value(i1, i2), i1, i2};
        for (int i2 = 0; i2 < s.n2; ++i2) {
            for (int i1 = 0; i1 < s.n1; ++i1) {
                const double f = value(i1, i2);
                bool extremal = true;
                double spread = 0.0;
                for (int d2 = -1; d2 <= 1; ++d2)
                    for (int d1 = -1; d1 <= 1; ++d1) {
                        const double g = value(i1 + d1, i2 + d2);
                        if (g < f) extremal = false;
                        spread = std::max(spread, g - f);
                    }
                // A seed can only beat the global grid value by about one cell's variation.
                if (extremal && f - 2.0 * spread <= global.f) local.push_back({f, i1, i2});
            }
        }
        std::stable_sort(local.begin(), local.end(), [](const Cand& a, const Cand& b) { return a.f < b.f; });
        // Mirror images under theta -> -theta carry equal grid values.
        local.erase(std::unique(local.begin(), local.end(),
                                [](const Cand& a, const Cand& b) {
                                    return std::abs(a.f - b.f) <= 1e-12 * (1.0 + std::abs(a.f));
                                }),
                    local.end());
        if (local.size() > kSeedsPerEdge) local.resize(kSeedsPerEdge);
        if (local.empty()) local.push_back(global);

        double best = global.f;
        Point arg{s.theta(global.i1, global.i2).theta1, s.theta(global.i1, global.i2).theta2};
        if (grid.refine) {
            const EdgeSearch search(kind, periods, q, k, sign);
            for (const auto& c : local) {
                Point p{s.theta(c.i1, c.i2).theta1, s.theta(c.i1, c.i2).theta2};
                double fp = c.f;
                for (int round = 0; round < grid.max_refine_rounds; ++round) {
                    // Later rounds only confirm the point with a short compass search.
                    double fn = fp;
                    Point pn = p;
                    if (round == 0) {
                        pn = search.nelder_mead(p, spacing, kSimplexTol, fn);
                        if (fn > fp) { pn = p; fn = fp; }
                    }
                    pn = search.pattern(pn, round == 0 ? 8 * kSimplexTol : 16 * kSimplexTol, grid.refine_tol, fn);
                    const double change = fp - fn;
                    p = pn;
                    fp = fn;
                    if (change < grid.refine_tol) break;
                }
                if (fp < best) {
                    best = fp;
                    arg = p;
                }
            }
        }
        auto& rec = table.bands[k];
        const FloquetPoint at{std::remainder(arg.x, kTwoPi), std::remainder(arg.y, kTwoPi)};
        if (sign > 0) { rec.emin = best; rec.argmin = at; }
        else { rec.emax = -best; rec.argmax = at; }
    });
    return table;
}

SpectrumIntervals spectrum(const BandTable& bands, double merge_tol) {
    if (!(merge_tol > 0.0))
        throw Error(ErrorCode::invalid_argument, "merge_tol must be positive", "merge_tol");
    std::vector<Interval> raw;
    for (const auto& b : bands.bands) raw.push_back({b.emin, b.emax});
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    SpectrumIntervals out;
    out.merge_tol = merge_tol;
    for (const auto& iv : raw) {
        if (!out.intervals.empty() && iv.lo <= out.intervals.back().hi + 2.0 * merge_tol)
            out.intervals.back().hi = std::max(out.intervals.back().hi, iv.hi);
        else
            out.intervals.push_back(iv);
    }
    return out;
}

GapQuery gap_at(const SpectrumIntervals& spec, double energy) {
    GapQuery g;
    if (spec.intervals.empty() || energy < spec.intervals.front().lo ||
        energy > spec.intervals.back().hi) {
        g.status = GapQuery::Status::outside_hull;
        return g;
    }
    for (std::size_t i = 0; i + 1 < spec.intervals.size(); ++i) {
        if (energy > spec.intervals[i].hi && energy < spec.intervals[i + 1].lo) {
            g.status = GapQuery::Status::gap;
            g.left = spec.intervals[i].hi;
            g.right = spec.intervals[i + 1].lo;
            return g;
        }
    }
    g.status = GapQuery::Status::covered;
    return g;
}

const std::vector<double>& exceptional_energies(LatticeKind kind) {
    static const std::vector<double> sq = {0.0}, tri = {-2.0}, hex = {-1.0, 0.0, 1.0}, ehm = {-1.0};
    switch (kind) {
        case LatticeKind::square: return sq;
        case LatticeKind::triangular: return tri;
        case LatticeKind::hexagonal: return hex;
        case LatticeKind::ehm: return ehm;
    }
    return sq;
}

GapReport gap_report(LatticeKind kind, const SpectrumIntervals& spec, double lambda) {
    GapReport r;
    r.lambda = lambda;
    r.components = spec.components();
    r.spectrum = spec;
    for (std::size_t i = 0; i + 1 < spec.intervals.size(); ++i) {
        Gap g{spec.intervals[i].hi, spec.intervals[i + 1].lo, std::nullopt};
        for (double e : exceptional_energies(kind))
            if (e > g.left && e < g.right) g.nearest_exceptional = e;
        r.gaps.push_back(g);
    }
    return r;
}

std::vector<GapReport> gap_scan(LatticeKind kind, Periods periods, const PeriodicPotential& q,
                                const std::vector<double>& lambdas, const GridSpec& grid,
                                double merge_tol) {
    std::vector<GapReport> out;
    for (double lambda : lambdas) {
        if (!(lambda > 0.0))
            throw Error(ErrorCode::invalid_argument, "lambda values must be positive", "lambda");
        const auto table = band_edges(kind, periods, q.scaled(lambda), grid);
        out.push_back(gap_report(kind, spectrum(table, merge_tol), lambda));
    }
    return out;
}

bool check_interior(LatticeKind kind, Periods periods, double energy, double margin,
                    const GridSpec& grid) {
    if (!(margin > 0.0))
        throw Error(ErrorCode::invalid_argument, "margin must be positive", "margin");
    const auto table = band_edges(kind, periods, zero_potential(kind, periods), grid);
    for (const auto& b : table.bands)
        if (b.emin + margin <= energy && energy <= b.emax - margin) return true;
    return false;
}

}  // namespace lf
