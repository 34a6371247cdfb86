#include "lf/lattice.hpp"

#include <cmath>

#include "lf/errors.hpp"

namespace lf {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::mismatch: return "mismatch";
        case ErrorCode::non_hermitian: return "non_hermitian";
        case ErrorCode::no_convergence: return "no_convergence";
        case ErrorCode::parse: return "parse";
        case ErrorCode::io: return "io";
        case ErrorCode::out_of_range: return "out_of_range";
        case ErrorCode::ill_conditioned: return "ill_conditioned";
        case ErrorCode::solution_family: return "solution_family";
    }
    return "unknown";
}

namespace {

const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;

const std::vector<LatticeInfo>& infos() {
    static const std::vector<LatticeInfo> table = {
        {LatticeKind::square, "square", 1, 4, {{{1.0, 0.0}, {0.0, 1.0}}}},
        {LatticeKind::triangular, "triangular", 1, 6, {{{1.0, 0.0}, {0.5, kHalfSqrt3}}}},
        {LatticeKind::hexagonal, "hexagonal", 2, 3, {{{1.5, kHalfSqrt3}, {1.5, -kHalfSqrt3}}}},
        {LatticeKind::ehm, "ehm", 1, 8, {{{1.0, 0.0}, {0.0, 1.0}}}},
    };
    return table;
}

std::vector<StencilEdge> single(std::initializer_list<std::array<int, 2>> offsets) {
    std::vector<StencilEdge> out;
    for (auto o : offsets) out.push_back({0, 0, o, 1.0});
    return out;
}

}  // namespace

const LatticeInfo& lattice_info(LatticeKind kind) { return infos()[static_cast<int>(kind)]; }

std::string to_string(LatticeKind kind) { return lattice_info(kind).name; }

LatticeKind parse_lattice(std::string_view name) {
    for (const auto& info : infos())
        if (info.name == name) return info.kind;
    if (name == "tri") return LatticeKind::triangular;
    if (name == "hex") return LatticeKind::hexagonal;
    throw Error(ErrorCode::invalid_argument,
                "unknown lattice '" + std::string(name) +
                    "' (expected square, triangular, hexagonal or ehm)",
                "lattice");
}

const std::vector<LatticeKind>& all_lattices() {
    static const std::vector<LatticeKind> kinds = {LatticeKind::square, LatticeKind::triangular,
                                                   LatticeKind::hexagonal, LatticeKind::ehm};
    return kinds;
}

void check_periods(Periods periods) {
    if (periods.p1 < 1 || periods.p2 < 1)
        throw Error(ErrorCode::invalid_argument, "periods must be positive integers", "periods");
}

int site_count(LatticeKind kind, Periods periods) {
    check_periods(periods);
    return lattice_info(kind).p0 * periods.p1 * periods.p2;
}

int linear_index(LatticeKind kind, Periods periods, FundamentalSite site) {
    return lattice_info(kind).p0 * (site.l2 * periods.p1 + site.l1) + site.sublattice;
}

FundamentalSite site_at(LatticeKind kind, Periods periods, int index) {
    const int p0 = lattice_info(kind).p0;
    const int cell = index / p0;
    return {cell % periods.p1, cell / periods.p1, index % p0};
}

const std::vector<StencilEdge>& stencil(LatticeKind kind) {
    static const std::vector<StencilEdge> sq = single({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    static const std::vector<StencilEdge> tri =
        single({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, 1}, {1, -1}});
    static const std::vector<StencilEdge> ehm =
        single({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}});
    static const std::vector<StencilEdge> hex = {
        {0, 1, {0, 0}, 1.0}, {0, 1, {0, -1}, 1.0}, {0, 1, {-1, 0}, 1.0},
        {1, 0, {0, 0}, 1.0}, {1, 0, {0, 1}, 1.0},  {1, 0, {1, 0}, 1.0},
    };
    switch (kind) {
        case LatticeKind::square: return sq;
        case LatticeKind::triangular: return tri;
        case LatticeKind::hexagonal: return hex;
        case LatticeKind::ehm: return ehm;
    }
    return sq;
}

std::vector<FundamentalSite> fundamental_sites(LatticeKind kind, Periods periods) {
    const int n = site_count(kind, periods);
    std::vector<FundamentalSite> sites;
    sites.reserve(n);
    for (int i = 0; i < n; ++i) sites.push_back(site_at(kind, periods, i));
    return sites;
}

std::vector<Neighbor> neighbor_list(LatticeKind kind, Periods periods, FundamentalSite site) {
    std::vector<Neighbor> out;
    for (const auto& e : stencil(kind)) {
        if (e.from_sublattice != site.sublattice) continue;
        const int n = site.l1 + e.offset[0];
        const int m = site.l2 + e.offset[1];
        out.push_back({{floor_mod(n, periods.p1), floor_mod(m, periods.p2), e.to_sublattice},
                       {floor_div(n, periods.p1), floor_div(m, periods.p2)}});
    }
    return out;
}

}  // namespace lf
