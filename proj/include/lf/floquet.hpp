#pragma once

#include <vector>

#include "lf/eigen.hpp"
#include "lf/lattice.hpp"
#include "lf/potentials.hpp"

namespace lf {

struct FloquetPoint {
    double theta1 = 0.0;
    double theta2 = 0.0;
};

struct FloquetIndex {
    int l1 = 0;
    int l2 = 0;
    bool operator==(const FloquetIndex&) const = default;
    auto operator<=>(const FloquetIndex&) const = default;
};

// H_Q(theta) for the operator Delta + Q. Entry (u,v) sums exp(i<tau,theta>) over
// the neighbours of u that reduce to v; the diagonal gains Q(u).
HermitianMatrix build_floquet(LatticeKind kind, Periods periods, const PeriodicPotential& q,
                              FloquetPoint theta);

// Zero potential shortcut.
HermitianMatrix build_free_floquet(LatticeKind kind, Periods periods, FloquetPoint theta);

std::vector<double> sorted_eigs(LatticeKind kind, Periods periods, const PeriodicPotential& q,
                                FloquetPoint theta);

double dispersion_square(Periods periods, FloquetPoint theta, FloquetIndex l);
double dispersion_tri(Periods periods, FloquetPoint theta, FloquetIndex l);
double dispersion_sqn(Periods periods, FloquetPoint theta, FloquetIndex l);

// Sorted closed-form eigenvalues of the free operator on square, triangular or ehm.
std::vector<double> free_dispersion(LatticeKind kind, Periods periods, FloquetPoint theta);

// {+-sqrt(t+3)} over the triangular free eigenvalues t, ascending.
std::vector<double> hex_bands_from_tri(Periods periods, FloquetPoint theta);

}  // namespace lf
