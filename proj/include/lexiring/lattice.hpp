#pragma once

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexiring/core.hpp"
#include "lexiring/ring.hpp"

namespace lexiring {

using ElemSet = std::bitset<kMaxRingSize>;

inline std::vector<Elem> to_sorted(const ElemSet& s) {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < kMaxRingSize; ++i)
        if (s.test(i)) out.push_back(static_cast<Elem>(i));
    return out;
}

/// The left ideal R*x of one element.
inline ElemSet left_ideal_of(const FiniteRing& r, Elem x) {
    ElemSet s;
    for (std::size_t a = 0; a < r.size(); ++a) s.set(r.mul(static_cast<Elem>(a), x));
    return s;
}

/// The left unit orbit {u*x : u in R*}.
inline ElemSet unit_orbit(const FiniteRing& r, Elem x) {
    ElemSet s;
    for (auto u : r.units()) s.set(r.mul(u, x));
    return s;
}

struct PrincipalIdeal {
    Elem canonical_gen = 0;
    std::vector<Elem> members;     // R * canonical_gen, sorted
    std::vector<Elem> generators;  // R* * canonical_gen, sorted
    ElemSet member_set;

    [[nodiscard]] std::size_t size() const { return members.size(); }
    [[nodiscard]] bool contains(Elem x) const { return member_set.test(x); }
};

/// All principal left ideals of a ring, ordered by (cardinality, least generator),
/// so index 0 is the zero ideal and the last index is R itself.
struct IdealLattice {
    RingPtr ring;
    std::vector<PrincipalIdeal> ideals;
    /// below[i][j] is true when ideals[i] is a proper subset of ideals[j].
    std::vector<std::vector<bool>> below;
    /// Covering pairs (lower, upper) of the containment order.
    std::vector<std::pair<std::size_t, std::size_t>> hasse;
    /// One generator per nonzero ideal, in ideal order.
    std::vector<Elem> gamma;
    /// ideal_of[x] is the index of Rx.
    std::vector<std::size_t> ideal_of;
    bool is_plir = false;
    std::optional<std::vector<Elem>> non_principal_witness;

    [[nodiscard]] std::size_t size() const { return ideals.size(); }
    [[nodiscard]] std::size_t whole_ring() const { return ideals.size() - 1; }
    [[nodiscard]] bool strictly_below(std::size_t i, std::size_t j) const { return below[i][j]; }
    [[nodiscard]] const PrincipalIdeal& ideal_of_element(Elem x) const { return ideals[ideal_of[x]]; }
};

/// Computes principal left ideals, unit orbits, containment and the default generator
/// set (least element index per orbit), and decides whether the ring is a principal
/// left ideal ring.
///
/// Every left ideal is a finite sum of principal ones, so R is PLIR exactly when the
/// sum of any two principal left ideals is again principal. The check enumerates
/// those sums; `work_cap` bounds the total number of element pairs visited.
inline IdealLattice ideal_lattice(RingPtr ring, std::uint64_t work_cap = std::uint64_t{1} << 28) {
    const FiniteRing& r = *ring;
    const auto n = r.size();

    std::vector<ElemSet> ideal_sets;
    std::unordered_map<ElemSet, std::size_t> index_of;
    std::vector<std::size_t> raw_of(n);
    for (std::size_t x = 0; x < n; ++x) {
        auto s = left_ideal_of(r, static_cast<Elem>(x));
        auto [it, inserted] = index_of.emplace(s, ideal_sets.size());
        if (inserted) ideal_sets.push_back(s);
        raw_of[x] = it->second;
    }

    std::vector<PrincipalIdeal> raw(ideal_sets.size());
    std::vector<bool> seen(ideal_sets.size(), false);
    for (std::size_t x = 0; x < n; ++x) {
        auto idx = raw_of[x];
        if (seen[idx]) continue;  // x is the least element generating this ideal
        seen[idx] = true;
        auto& pi = raw[idx];
        pi.canonical_gen = static_cast<Elem>(x);
        pi.member_set = ideal_sets[idx];
        pi.members = to_sorted(pi.member_set);
        pi.generators = to_sorted(unit_orbit(r, static_cast<Elem>(x)));
    }

    std::vector<std::size_t> perm(raw.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return std::make_pair(raw[a].size(), raw[a].canonical_gen) < std::make_pair(raw[b].size(), raw[b].canonical_gen);
    });
    std::vector<std::size_t> new_index(raw.size());
    IdealLattice lat;
    lat.ring = ring;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        new_index[perm[i]] = i;
        lat.ideals.push_back(raw[perm[i]]);
    }
    lat.ideal_of.resize(n);
    for (std::size_t x = 0; x < n; ++x) lat.ideal_of[x] = new_index[raw_of[x]];

    const auto m = lat.ideals.size();
    lat.below.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && (lat.ideals[i].member_set & ~lat.ideals[j].member_set).none()) lat.below[i][j] = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (!lat.below[i][j]) continue;
            bool cover = true;
            for (std::size_t k = 0; k < m && cover; ++k) cover = !(lat.below[i][k] && lat.below[k][j]);
            if (cover) lat.hasse.emplace_back(i, j);
        }
    for (std::size_t i = 1; i < m; ++i) lat.gamma.push_back(lat.ideals[i].canonical_gen);

    std::unordered_map<ElemSet, std::size_t> sorted_index;
    for (std::size_t i = 0; i < m; ++i) sorted_index.emplace(lat.ideals[i].member_set, i);
    std::uint64_t work = 0;
    lat.is_plir = true;
    for (std::size_t i = 0; i < m && lat.is_plir; ++i)
        for (std::size_t j = i + 1; j < m && lat.is_plir; ++j) {
            work += lat.ideals[i].size() * lat.ideals[j].size();
            require_within_cap(work, work_cap, "left ideal enumeration");
            ElemSet sum;
            for (auto a : lat.ideals[i].members)
                for (auto b : lat.ideals[j].members) sum.set(r.add(a, b));
            if (!sorted_index.count(sum)) {
                lat.is_plir = false;
                lat.non_principal_witness = to_sorted(sum);
            }
        }
    return lat;
}

/// Validates an explicit generator set: exactly one generator of every nonzero
/// principal left ideal. Returned in the order given.
inline std::vector<Elem> validate_gamma(const IdealLattice& lat, std::vector<Elem> gamma) {
    std::vector<int> hits(lat.size(), 0);
    for (auto g : gamma) {
        if (g >= lat.ring->size()) throw SpecError("generator index out of range");
        ++hits[lat.ideal_of[g]];
    }
    if (hits[0] != 0) throw SpecError("generator set must not contain 0");
    for (std::size_t i = 1; i < lat.size(); ++i)
        if (hits[i] != 1)
            throw SpecError("generator set must contain exactly one generator of ideal R" +
                            lat.ring->name(lat.ideals[i].canonical_gen));
    return gamma;
}

/// A second valid generator set: the largest-index generator of each nonzero ideal.
inline std::vector<Elem> alternate_gamma(const IdealLattice& lat) {
    std::vector<Elem> g;
    for (std::size_t i = 1; i < lat.size(); ++i) g.push_back(lat.ideals[i].generators.back());
    return g;
}

/// mu(0, I) for every ideal I of the containment poset.
inline std::vector<std::int64_t> mobius_from_zero(const IdealLattice& lat) {
    std::vector<std::int64_t> mu(lat.size(), 0);
    mu[0] = 1;
    // Index order is a linear extension (proper containment implies smaller size).
    for (std::size_t i = 1; i < lat.size(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (lat.below[j][i]) s += mu[j];
        mu[i] = -s;
    }
    return mu;
}

struct UnitCombination {
    Elem t = 0;
    Elem u = 0;
};

/// Given Rp + Rq = Rd, finds t and a unit u with t*p + q = u*d. Scans t in index order
/// and returns the first hit; for each t the first unit in index order.
inline UnitCombination solve_unit_combination(const FiniteRing& r, Elem p, Elem q, Elem d) {
    ElemSet lhs;
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
            lhs.set(r.add(r.mul(static_cast<Elem>(a), p), r.mul(static_cast<Elem>(b), q)));
    if (lhs != left_ideal_of(r, d))
        throw PreconditionError("Rp + Rq != Rd for p=" + r.name(p) + ", q=" + r.name(q) + ", d=" + r.name(d));
    for (std::size_t ti = 0; ti < r.size(); ++ti) {
        const auto t = static_cast<Elem>(ti);
        const Elem v = r.add(r.mul(t, p), q);
        for (auto u : r.units())
            if (r.mul(u, d) == v) return {t, u};
    }
    throw InternalError("no unit linear combination exists; ring lacks stable range 1");
}

}  // namespace lexiring
