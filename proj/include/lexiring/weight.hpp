#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexiring/core.hpp"
#include "lexiring/lattice.hpp"
#include "lexiring/rational.hpp"
#include "lexiring/ring.hpp"

namespace lexiring {

/// A weight w: R -> Q with w(0) = 0, extended to vectors coordinate-wise.
struct WeightFunction {
    RingPtr ring;
    std::string name;
    std::vector<Rational> values;

    [[nodiscard]] const Rational& operator()(Elem a) const { return values[a]; }
};

inline Rational vector_weight(const WeightFunction& w, std::span<const Elem> x) {
    Rational s(0);
    for (auto e : x) s += w.values[e];
    return s;
}

/// Checks the three defining conditions of the homogeneous weight: w(0) = 0, constant on
/// generators of the same principal ideal, and sum over every nonzero Ra equal to |Ra|.
inline std::optional<std::string> homogeneous_axiom_failure(const IdealLattice& lat, const std::vector<Rational>& w) {
    const FiniteRing& r = *lat.ring;
    if (w.size() != r.size()) return "weight table has wrong size";
    if (w[0] != Rational(0)) return "w(0) != 0";
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
            if (lat.ideal_of[a] == lat.ideal_of[b] && w[a] != w[b])
                return "w differs on generators " + r.name(static_cast<Elem>(a)) + ", " + r.name(static_cast<Elem>(b));
    for (std::size_t a = 1; a < r.size(); ++a) {
        const auto& ideal = lat.ideal_of_element(static_cast<Elem>(a));
        Rational s(0);
        for (auto x : ideal.members) s += w[x];
        if (s != Rational(static_cast<std::int64_t>(ideal.size())))
            return "sum over R" + r.name(static_cast<Elem>(a)) + " is " + to_string(s) + ", expected " +
                   std::to_string(ideal.size());
    }
    return std::nullopt;
}

/// True when w(u*a) = w(a) for every unit u, which makes w(x) >= d (and similar) left multiplicative.
inline bool constant_on_unit_orbits(const FiniteRing& r, const std::vector<Rational>& w) {
    for (std::size_t a = 0; a < r.size(); ++a)
        for (auto u : r.units())
            if (w[r.mul(u, static_cast<Elem>(a))] != w[a]) return false;
    return true;
}

/// Builds `hamming`, `lee` and `euclid` (zmod only), `unit`, `ranksum` (matrix rings only)
/// or `homog`.
///
/// The homogeneous weight is computed as w(x) = 1 - mu(0, Rx) / |gen(Rx)| with mu the
/// Moebius function of the principal left ideal poset, then checked against the axioms.
inline WeightFunction make_weight(const IdealLattice& lat, std::string_view kind) {
    const RingPtr& ring = lat.ring;
    const FiniteRing& r = *ring;
    WeightFunction w{ring, std::string(kind), std::vector<Rational>(r.size(), Rational(0))};
    const auto m = static_cast<std::int64_t>(r.size());
    if (kind == "hamming") {
        for (std::size_t a = 1; a < r.size(); ++a) w.values[a] = 1;
    } else if (kind == "lee" || kind == "euclid") {
        if (r.family() != RingFamily::zmod) throw SpecError(std::string(kind) + " weight requires a zmod ring");
        for (std::int64_t a = 0; a < m; ++a) {
            const auto l = std::min(a, m - a);
            w.values[static_cast<std::size_t>(a)] = kind == "lee" ? l : l * l;
        }
    } else if (kind == "unit") {
        for (auto u : r.units()) w.values[u] = 1;
    } else if (kind == "ranksum") {
        if (r.family() != RingFamily::mat) throw SpecError("ranksum weight requires a matrix ring");
        for (std::size_t a = 0; a < r.size(); ++a) w.values[a] = r.matrix_ranks()[a];
    } else if (kind == "homog") {
        if (!lat.is_plir) throw PreconditionError("homogeneous weight is only supported on principal left ideal rings");
        const auto mu = mobius_from_zero(lat);
        for (std::size_t a = 1; a < r.size(); ++a) {
            const auto i = lat.ideal_of[a];
            w.values[a] = Rational(1) - Rational(mu[i], static_cast<std::int64_t>(lat.ideals[i].generators.size()));
        }
        if (auto failure = homogeneous_axiom_failure(lat, w.values))
            throw InternalError("homogeneous weight axioms fail on " + r.spec() + ": " + *failure);
    } else {
        throw SpecError("unknown weight '" + std::string(kind) + "'");
    }
    return w;
}

}  // namespace lexiring
