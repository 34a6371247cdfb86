#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace lf {

enum class LatticeKind { square, triangular, hexagonal, ehm };

struct LatticeInfo {
    LatticeKind kind;
    std::string name;
    int p0;
    int degree;
    // a1, a2 for square/triangular/ehm; b+, b- for hexagonal. Documentation only.
    std::array<std::array<double, 2>, 2> generators;
};

const LatticeInfo& lattice_info(LatticeKind kind);
std::string to_string(LatticeKind kind);
LatticeKind parse_lattice(std::string_view name);
const std::vector<LatticeKind>& all_lattices();

struct Periods {
    int p1 = 1;
    int p2 = 1;
    bool operator==(const Periods&) const = default;
};

int site_count(LatticeKind kind, Periods periods);
void check_periods(Periods periods);

struct FundamentalSite {
    int l1 = 0;
    int l2 = 0;
    int sublattice = 0;
    bool operator==(const FundamentalSite&) const = default;
};

int linear_index(LatticeKind kind, Periods periods, FundamentalSite site);
FundamentalSite site_at(LatticeKind kind, Periods periods, int index);

struct StencilEdge {
    int from_sublattice;
    int to_sublattice;
    std::array<int, 2> offset;
    double weight;
};

const std::vector<StencilEdge>& stencil(LatticeKind kind);

struct Neighbor {
    FundamentalSite site;
    std::array<int, 2> tau;
};

std::vector<FundamentalSite> fundamental_sites(LatticeKind kind, Periods periods);
std::vector<Neighbor> neighbor_list(LatticeKind kind, Periods periods, FundamentalSite site);

// Floor division, so that tau counts whole period cells for negative offsets too.
constexpr int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

}  // namespace lf
