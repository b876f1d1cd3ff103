#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexiring/core.hpp"
#include "lexiring/lattice.hpp"
#include "lexiring/ring.hpp"

namespace lexiring {

/// A total order on the ideal poset compatible with containment, least ideal first.
struct LinearExtension {
    std::vector<std::size_t> sequence;

    friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
};

enum class Respectfulness { unchecked, verified_true, verified_false };

inline const char* to_string(Respectfulness r) {
    switch (r) {
        case Respectfulness::verified_true: return "verified-true";
        case Respectfulness::verified_false: return "verified-false";
        default: return "unchecked";
    }
}

/// A total order on ring elements. sequence[k] is the element of rank k.
struct RingOrder {
    std::vector<Elem> sequence;
    std::vector<std::size_t> rank;
    Respectfulness respectful = Respectfulness::unchecked;
    std::optional<std::pair<Elem, Elem>> violation_witness;
    std::string descriptor;

    static RingOrder from_sequence(const FiniteRing& r, std::vector<Elem> seq, std::string descriptor) {
        if (seq.size() != r.size()) throw SpecError("order must list every ring element exactly once");
        RingOrder o;
        o.rank.assign(r.size(), r.size());
        for (std::size_t k = 0; k < seq.size(); ++k) {
            if (seq[k] >= r.size() || o.rank[seq[k]] != r.size())
                throw SpecError("order must list every ring element exactly once");
            o.rank[seq[k]] = k;
        }
        o.sequence = std::move(seq);
        o.descriptor = std::move(descriptor);
        return o;
    }

    [[nodiscard]] bool less(Elem a, Elem b) const { return rank[a] < rank[b]; }
};

inline bool is_linear_extension(const IdealLattice& lat, const LinearExtension& ext) {
    if (ext.sequence.size() != lat.size()) return false;
    std::vector<std::size_t> pos(lat.size(), lat.size());
    for (std::size_t k = 0; k < ext.sequence.size(); ++k) {
        auto i = ext.sequence[k];
        if (i >= lat.size() || pos[i] != lat.size()) return false;
        pos[i] = k;
    }
    for (std::size_t i = 0; i < lat.size(); ++i)
        for (std::size_t j = 0; j < lat.size(); ++j)
            if (lat.below[i][j] && pos[i] > pos[j]) return false;
    return true;
}

/// Enumerates up to `limit` linear extensions by backtracking, trying available ideals
/// in index order at each step. The first result always exists and is the canonical
/// extension: smallest (cardinality, canonical generator) first.
inline std::vector<LinearExtension> linear_extensions(const IdealLattice& lat, std::size_t limit) {
    if (limit == 0) throw PreconditionError("limit must be at least 1");
    const auto m = lat.size();
    std::vector<LinearExtension> out;
    std::vector<std::size_t> current;
    std::vector<bool> placed(m, false);
    std::function<void()> rec = [&]() {
        if (out.size() >= limit) return;
        if (current.size() == m) {
            out.push_back({current});
            return;
        }
        for (std::size_t i = 0; i < m && out.size() < limit; ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (std::size_t j = 0; j < m && ready; ++j) ready = !(lat.below[j][i] && !placed[j]);
            if (!ready) continue;
            placed[i] = true;
            current.push_back(i);
            rec();
            current.pop_back();
            placed[i] = false;
        }
    };
    rec();
    return out;
}

inline LinearExtension canonical_extension(const IdealLattice& lat) { return linear_extensions(lat, 1).front(); }

/// Per-ideal order of its generator set, keyed by ideal index. Ideals not listed use
/// ascending element index.
using WithinOrbit = std::map<std::size_t, std::vector<Elem>>;

/// Builds the order x < y iff Ry <_L Rx, or Rx = Ry and x precedes y within the orbit.
/// The zero ideal is L-least, so 0 ends up last; `zero_min` moves it to the front,
/// which keeps the order respectful because respectfulness ignores 0.
inline RingOrder make_respectful(const IdealLattice& lat, const LinearExtension& ext, const WithinOrbit& within = {},
                                 bool zero_min = false) {
    if (!is_linear_extension(lat, ext)) throw PreconditionError("not a linear extension of the ideal poset");
    std::vector<Elem> seq;
    if (zero_min) seq.push_back(0);
    for (auto it = ext.sequence.rbegin(); it != ext.sequence.rend(); ++it) {
        if (*it == 0) continue;
        const auto& gens = lat.ideals[*it].generators;
        auto w = within.find(*it);
        if (w == within.end()) {
            seq.insert(seq.end(), gens.begin(), gens.end());
            continue;
        }
        auto sorted = w->second;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != gens)
            throw PreconditionError("within-orbit order does not cover the generators of ideal R" +
                                    lat.ring->name(lat.ideals[*it].canonical_gen));
        seq.insert(seq.end(), w->second.begin(), w->second.end());
    }
    if (!zero_min) seq.push_back(0);
    std::string desc = zero_min ? "respectful:auto,zero_min" : "respectful:auto";
    auto order = RingOrder::from_sequence(*lat.ring, std::move(seq), std::move(desc));
    order.respectful = Respectfulness::verified_true;
    return order;
}

struct RespectVerdict {
    bool respectful = false;
    std::optional<std::pair<Elem, Elem>> witness;  // (x, y) with Rx > Ry and no alpha
};

/// Exhaustive check: for all nonzero x, y with Rx strictly containing Ry there must be a
/// unit alpha with alpha*x < u*y for every unit u. The first failing pair in index
/// order is returned as witness.
inline RespectVerdict is_respectful(const IdealLattice& lat, const RingOrder& order) {
    const FiniteRing& r = *lat.ring;
    const auto n = r.size();
    std::vector<std::size_t> min_orbit_rank(n, n);
    for (std::size_t y = 0; y < n; ++y)
        for (auto u : r.units())
            min_orbit_rank[y] = std::min(min_orbit_rank[y], order.rank[r.mul(u, static_cast<Elem>(y))]);
    for (std::size_t x = 1; x < n; ++x)
        for (std::size_t y = 1; y < n; ++y) {
            if (!lat.below[lat.ideal_of[y]][lat.ideal_of[x]]) continue;
            bool ok = false;
            for (auto alpha : r.units())
                if (order.rank[r.mul(alpha, static_cast<Elem>(x))] < min_orbit_rank[y]) {
                    ok = true;
                    break;
                }
            if (!ok) return {false, std::make_pair(static_cast<Elem>(x), static_cast<Elem>(y))};
        }
    return {true, std::nullopt};
}

/// Runs is_respectful and records the verdict on the order.
inline RespectVerdict check_respectful(const IdealLattice& lat, RingOrder& order) {
    auto v = is_respectful(lat, order);
    order.respectful = v.respectful ? Respectfulness::verified_true : Respectfulness::verified_false;
    order.violation_witness = v.witness;
    return v;
}

/// The order respects L: Ry <_L Rx implies x < y for all nonzero x, y.
inline bool respects_extension(const IdealLattice& lat, const RingOrder& order, const LinearExtension& ext) {
    std::vector<std::size_t> pos(lat.size());
    for (std::size_t k = 0; k < ext.sequence.size(); ++k) pos[ext.sequence[k]] = k;
    const auto n = lat.ring->size();
    for (std::size_t x = 1; x < n; ++x)
        for (std::size_t y = 1; y < n; ++y)
            if (pos[lat.ideal_of[y]] < pos[lat.ideal_of[x]] && !(order.rank[x] < order.rank[y])) return false;
    return true;
}

/// Respectfulness with alpha fixed to 1: Rx strictly containing Ry implies x < u*y for all units u.
inline bool respects_with_identity_alpha(const IdealLattice& lat, const RingOrder& order) {
    const FiniteRing& r = *lat.ring;
    for (std::size_t x = 1; x < r.size(); ++x)
        for (std::size_t y = 1; y < r.size(); ++y) {
            if (!lat.below[lat.ideal_of[y]][lat.ideal_of[x]]) continue;
            for (auto u : r.units())
                if (order.rank[x] >= order.rank[r.mul(u, static_cast<Elem>(y))]) return false;
        }
    return true;
}

/// 0 < 1 < ... < m-1 on Z_m, verified respectful.
inline RingOrder natural_order(const IdealLattice& lat) {
    const FiniteRing& r = *lat.ring;
    if (r.family() != RingFamily::zmod) throw PreconditionError("natural order is defined for zmod rings only");
    std::vector<Elem> seq(r.size());
    for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = static_cast<Elem>(i);
    auto o = RingOrder::from_sequence(r, std::move(seq), "natural");
    if (!check_respectful(lat, o).respectful) throw InternalError("natural order on " + r.spec() + " not respectful");
    return o;
}

/// Orders of the form `explicit:e0<e1<...` are checked for respectfulness on construction.
inline RingOrder explicit_order(const IdealLattice& lat, const std::vector<Elem>& seq) {
    const FiniteRing& r = *lat.ring;
    std::string desc = "explicit:";
    for (std::size_t i = 0; i < seq.size(); ++i) desc += (i ? "<" : "") + r.name(seq[i]);
    auto o = RingOrder::from_sequence(r, seq, desc);
    check_respectful(lat, o);
    return o;
}

/// Parses `natural` | `respectful:auto` | `respectful:auto,zero_min` | `explicit:e0<e1<...<ek`.
inline RingOrder parse_order(const IdealLattice& lat, std::string_view desc) {
    desc = detail::trim(desc);
    if (desc == "natural") return natural_order(lat);
    if (desc == "respectful:auto") return make_respectful(lat, canonical_extension(lat));
    if (desc == "respectful:auto,zero_min") return make_respectful(lat, canonical_extension(lat), {}, true);
    constexpr std::string_view prefix = "explicit:";
    if (desc.substr(0, prefix.size()) == prefix) {
        std::vector<Elem> seq;
        auto rest = desc.substr(prefix.size());
        std::size_t start = 0;
        while (true) {
            auto lt = rest.find('<', start);
            auto tok = detail::trim(rest.substr(start, lt == std::string_view::npos ? std::string_view::npos : lt - start));
            seq.push_back(lat.ring->element(tok));
            if (lt == std::string_view::npos) break;
            start = lt + 1;
        }
        return explicit_order(lat, seq);
    }
    throw SpecError("unknown order descriptor '" + std::string(desc) + "'");
}

}  // namespace lexiring
