#include "lf/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "lf/errors.hpp"

namespace lf {

namespace {

HermitianMatrix adjacency(LatticeKind kind, Periods periods, FloquetPoint theta) {
    const int n = site_count(kind, periods);
    HermitianMatrix h = HermitianMatrix::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        for (const auto& nb : neighbor_list(kind, periods, site_at(kind, periods, u))) {
            const int v = linear_index(kind, periods, nb.site);
            if (v < u) continue;
            const double phase = nb.tau[0] * theta.theta1 + nb.tau[1] * theta.theta2;
            h(u, v) += std::polar(1.0, phase);
        }
    }
    // The upper triangle is authoritative; the lower one is its exact conjugate.
    for (int u = 0; u < n; ++u) {
        h(u, u) = h(u, u).real();
        for (int v = u + 1; v < n; ++v) h(v, u) = std::conj(h(u, v));
    }
    return h;
}

double xcoord(double theta, int l, int p) { return (theta + 2.0 * std::numbers::pi * l) / p; }

}  // namespace

HermitianMatrix build_free_floquet(LatticeKind kind, Periods periods, FloquetPoint theta) {
    return adjacency(kind, periods, theta);
}

HermitianMatrix build_floquet(LatticeKind kind, Periods periods, const PeriodicPotential& q,
                              FloquetPoint theta) {
    if (q.kind != kind || !(q.periods == periods))
        throw Error(ErrorCode::mismatch,
                    "potential is defined for " + to_string(q.kind) + " with periods (" +
                        std::to_string(q.periods.p1) + "," + std::to_string(q.periods.p2) +
                        ") but the operator is " + to_string(kind) + " with periods (" +
                        std::to_string(periods.p1) + "," + std::to_string(periods.p2) + ")",
                    "potential");
    validate(q);
    HermitianMatrix h = adjacency(kind, periods, theta);
    for (int u = 0; u < static_cast<int>(q.values.size()); ++u) h(u, u) += q.values[u];
    return h;
}

std::vector<double> sorted_eigs(LatticeKind kind, Periods periods, const PeriodicPotential& q,
                                FloquetPoint theta) {
    return eigvalsh(build_floquet(kind, periods, q, theta));
}

double dispersion_square(Periods periods, FloquetPoint theta, FloquetIndex l) {
    const double x = xcoord(theta.theta1, l.l1, periods.p1);
    const double y = xcoord(theta.theta2, l.l2, periods.p2);
    return 2 * std::cos(x) + 2 * std::cos(y);
}

double dispersion_tri(Periods periods, FloquetPoint theta, FloquetIndex l) {
    const double x = xcoord(theta.theta1, l.l1, periods.p1);
    const double y = xcoord(theta.theta2, l.l2, periods.p2);
    return 2 * std::cos(x) + 2 * std::cos(y) + 2 * std::cos(x - y);
}

double dispersion_sqn(Periods periods, FloquetPoint theta, FloquetIndex l) {
    const double x = xcoord(theta.theta1, l.l1, periods.p1);
    const double y = xcoord(theta.theta2, l.l2, periods.p2);
    return 2 * std::cos(x) + 2 * std::cos(y) + 2 * std::cos(x - y) + 2 * std::cos(x + y);
}

std::vector<double> free_dispersion(LatticeKind kind, Periods periods, FloquetPoint theta) {
    std::vector<double> out;
    out.reserve(periods.p1 * periods.p2);
    for (int l2 = 0; l2 < periods.p2; ++l2) {
        for (int l1 = 0; l1 < periods.p1; ++l1) {
            const FloquetIndex l{l1, l2};
            switch (kind) {
                case LatticeKind::square: out.push_back(dispersion_square(periods, theta, l)); break;
                case LatticeKind::triangular: out.push_back(dispersion_tri(periods, theta, l)); break;
                case LatticeKind::ehm: out.push_back(dispersion_sqn(periods, theta, l)); break;
                case LatticeKind::hexagonal:
                    throw Error(ErrorCode::invalid_argument,
                                "hexagonal bands come from hex_bands_from_tri", "lattice");
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> hex_bands_from_tri(Periods periods, FloquetPoint theta) {
    std::vector<double> out;
    for (double t : free_dispersion(LatticeKind::triangular, periods, theta)) {
        const double r = std::sqrt(std::max(t + 3.0, 0.0));
        out.push_back(r);
        out.push_back(-r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lf
