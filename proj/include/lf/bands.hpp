#pragma once

#include <optional>
#include <vector>

#include "lf/floquet.hpp"

namespace lf {

struct GridSpec {
    int n1 = 64;
    int n2 = 64;
    double refine_tol = 1e-9;
    int max_refine_rounds = 40;
    bool refine = true;
};

// 64x64 for periods up to (3,3), otherwise ceil(64/p_j)*p_j per axis.
GridSpec default_grid(Periods periods);
void check_grid(const GridSpec& grid);

struct BandRecord {
    double emin = 0.0;
    double emax = 0.0;
    FloquetPoint argmin;
    FloquetPoint argmax;
};

struct BandTable {
    std::vector<BandRecord> bands;
    GridSpec grid;
};

// Raw sweep: eigenvalues[(i2 * n1 + i1) * P + k] at theta = 2*pi*(i1/n1, i2/n2).
struct GridSamples {
    int n1 = 0;
    int n2 = 0;
    int P = 0;
    std::vector<double> eigenvalues;

    FloquetPoint theta(int i1, int i2) const;
    double at(int i1, int i2, int k) const { return eigenvalues[(static_cast<std::size_t>(i2) * n1 + i1) * P + k]; }
};

GridSamples sample_grid(LatticeKind kind, Periods periods, const PeriodicPotential& q,
                        const GridSpec& grid);

BandTable band_edges(LatticeKind kind, Periods periods, const PeriodicPotential& q,
                     const GridSpec& grid);

struct Interval {
    double lo;
    double hi;
};

struct SpectrumIntervals {
    std::vector<Interval> intervals;
    double merge_tol = 1e-7;

    int components() const { return static_cast<int>(intervals.size()); }
};

constexpr double kDefaultMergeTol = 1e-7;

// Bands closer than 2*merge_tol are joined, so every remaining gap is wider
// than 2*merge_tol and the component count is the interval count.
SpectrumIntervals spectrum(const BandTable& bands, double merge_tol = kDefaultMergeTol);

struct GapQuery {
    enum class Status { gap, covered, outside_hull };
    Status status = Status::covered;
    double left = 0.0;
    double right = 0.0;
};

GapQuery gap_at(const SpectrumIntervals& spec, double energy);

// Energies where small potentials may open gaps: -2 triangular, -1 ehm,
// {-1,0,1} hexagonal, 0 square.
const std::vector<double>& exceptional_energies(LatticeKind kind);

struct Gap {
    double left;
    double right;
    std::optional<double> nearest_exceptional;  // exceptional energy inside the gap, if any
};

struct GapReport {
    double lambda = 0.0;
    int components = 0;
    std::vector<Gap> gaps;
    SpectrumIntervals spectrum;
};

GapReport gap_report(LatticeKind kind, const SpectrumIntervals& spec, double lambda);

std::vector<GapReport> gap_scan(LatticeKind kind, Periods periods, const PeriodicPotential& q,
                                const std::vector<double>& lambdas, const GridSpec& grid,
                                double merge_tol = kDefaultMergeTol);

bool check_interior(LatticeKind kind, Periods periods, double energy, double margin,
                    const GridSpec& grid);

}  // namespace lf
