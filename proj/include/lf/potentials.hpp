#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lf/lattice.hpp"

namespace lf {

struct PeriodicPotential {
    LatticeKind kind = LatticeKind::square;
    Periods periods;
    std::vector<double> values;  // linear-index order

    PeriodicPotential scaled(double lambda) const;
    double sup_norm() const;
    bool operator==(const PeriodicPotential&) const = default;
};

// Checks size and finiteness; throws Error naming the field.
void validate(const PeriodicPotential& q);

PeriodicPotential zero_potential(LatticeKind kind, Periods periods);

const std::vector<std::string>& builtin_names();
PeriodicPotential builtin(std::string_view name);

// Values i.i.d. uniform in [-sup_norm, sup_norm], reproducible from seed on any platform.
PeriodicPotential random_potential(LatticeKind kind, Periods periods, double sup_norm,
                                   std::uint64_t seed);

std::string to_json(const PeriodicPotential& q);
PeriodicPotential from_json(std::string_view text);
PeriodicPotential load(const std::string& path);
void save(const PeriodicPotential& q, const std::string& path);

// Parses "builtin:NAME", "file:PATH", "zero" or "random:SUP:SEED".
// Sources that do not carry their own geometry take kind and periods from the arguments.
PeriodicPotential resolve_potential(std::string_view source, LatticeKind kind, Periods periods);

}  // namespace lf
