#include "lf/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "lf/errors.hpp"

namespace lf {

using nlohmann::json;

PeriodicPotential PeriodicPotential::scaled(double lambda) const {
    PeriodicPotential out = *this;
    for (double& v : out.values) v *= lambda;
    return out;
}

double PeriodicPotential::sup_norm() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

void validate(const PeriodicPotential& q) {
    check_periods(q.periods);
    const int n = site_count(q.kind, q.periods);
    if (static_cast<int>(q.values.size()) != n)
        throw Error(ErrorCode::mismatch,
                    "expected " + std::to_string(n) + " values for " + to_string(q.kind) +
                        " with periods (" + std::to_string(q.periods.p1) + "," +
                        std::to_string(q.periods.p2) + "), got " +
                        std::to_string(q.values.size()),
                    "values");
    for (double v : q.values)
        if (!std::isfinite(v))
            throw Error(ErrorCode::invalid_argument, "potential values must be finite", "values");
}

PeriodicPotential zero_potential(LatticeKind kind, Periods periods) {
    return {kind, periods, std::vector<double>(site_count(kind, periods), 0.0)};
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"tri-2x2", "hex-1x1-Z", "hex-2x2", "ehm-3x3"};
    return names;
}

PeriodicPotential builtin(std::string_view name) {
    if (name == "tri-2x2") return {LatticeKind::triangular, {2, 2}, {1, 1, 1, -1}};
    if (name == "hex-1x1-Z") return {LatticeKind::hexagonal, {1, 1}, {1, -1}};
    if (name == "hex-2x2") return {LatticeKind::hexagonal, {2, 2}, {1, -1, 1, 2, -2, -1, 1, -1}};
    if (name == "ehm-3x3") {
        const double r = std::sqrt(4.0 - std::sqrt(15.0));
        return {LatticeKind::ehm,
                {3, 3},
                {-r - 1 / r + 2, -r, -r + 1 / r - 2, -1 / r, 0.0, 1 / r, r - 1 / r - 2, r,
                 r + 1 / r + 2}};
    }
    std::string valid;
    for (const auto& n : builtin_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw Error(ErrorCode::invalid_argument,
                "unknown builtin potential '" + std::string(name) + "' (valid: " + valid + ")",
                "potential");
}

PeriodicPotential random_potential(LatticeKind kind, Periods periods, double sup_norm,
                                   std::uint64_t seed) {
    if (!(sup_norm >= 0.0))
        throw Error(ErrorCode::invalid_argument, "sup_norm must be nonnegative", "sup_norm");
    std::mt19937_64 gen(seed);
    PeriodicPotential q = zero_potential(kind, periods);
    for (double& v : q.values) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        v = sup_norm * (2.0 * u - 1.0);
    }
    return q;
}

std::string to_json(const PeriodicPotential& q) {
    json j;
    j["lattice"] = to_string(q.kind);
    j["periods"] = {q.periods.p1, q.periods.p2};
    j["values"] = q.values;
    return j.dump(2) + "\n";
}

namespace {

template <class T>
T field(const json& j, const char* name) {
    if (!j.contains(name)) throw Error(ErrorCode::parse, std::string("missing field '") + name + "'", name);
    try {
        return j.at(name).get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorCode::parse, std::string("field '") + name + "' has the wrong type", name);
    }
}

}  // namespace

PeriodicPotential from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::parse, std::string("malformed potential file: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorCode::parse, "potential file must hold a JSON object");
    PeriodicPotential q;
    q.kind = parse_lattice(field<std::string>(j, "lattice"));
    const auto per = field<std::vector<int>>(j, "periods");
    if (per.size() != 2)
        throw Error(ErrorCode::parse, "field 'periods' must hold two integers", "periods");
    q.periods = {per[0], per[1]};
    q.values = field<std::vector<double>>(j, "values");
    validate(q);
    return q;
}

PeriodicPotential load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io, "cannot open potential file '" + path + "'", "path");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

void save(const PeriodicPotential& q, const std::string& path) {
    validate(q);
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io, "cannot write potential file '" + path + "'", "path");
    out << to_json(q);
}

PeriodicPotential resolve_potential(std::string_view source, LatticeKind kind, Periods periods) {
    if (source == "zero") return zero_potential(kind, periods);
    if (source.starts_with("builtin:")) return builtin(source.substr(8));
    if (source.starts_with("file:")) return load(std::string(source.substr(5)));
    if (source.starts_with("random:")) {
        const std::string rest(source.substr(7));
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorCode::invalid_argument, "random potential needs random:SUP:SEED",
                        "potential");
        try {
            std::size_t used = 0;
            const double sup = std::stod(rest.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("sup");
            const std::string seed_text = rest.substr(colon + 1);
            const unsigned long long seed = std::stoull(seed_text, &used);
            if (used != seed_text.size()) throw std::invalid_argument("seed");
            return random_potential(kind, periods, sup, seed);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::invalid_argument, "random potential needs random:SUP:SEED",
                        "potential");
        }
    }
    throw Error(ErrorCode::invalid_argument,
                "unknown potential source '" + std::string(source) +
                    "' (expected builtin:NAME, file:PATH, zero or random:SUP:SEED)",
                "potential");
}

}  // namespace lf
