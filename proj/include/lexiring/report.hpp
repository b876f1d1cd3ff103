#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lexiring/code.hpp"
#include "lexiring/greedy.hpp"
#include "lexiring/lattice.hpp"
#include "lexiring/oracle.hpp"
#include "lexiring/order.hpp"
#include "lexiring/ring.hpp"

// JSON views of the main objects. Keys keep insertion order so output is byte-stable.

namespace lexiring {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json names_of(const FiniteRing& r, const std::vector<Elem>& elems) {
    Json a = Json::array();
    for (auto e : elems) a.push_back(r.name(e));
    return a;
}

inline Json vectors_of(const FiniteRing& r, const std::vector<Vector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(format_vector(r, v));
    return a;
}

}  // namespace detail

inline Json to_json(const IdealLattice& lat) {
    const FiniteRing& r = *lat.ring;
    Json j;
    j["spec"] = r.spec();
    j["size"] = r.size();
    j["commutative"] = r.is_commutative();
    j["elements"] = r.names();
    j["units"] = detail::names_of(r, r.units());
    Json ideals = Json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const auto& I = lat.ideals[i];
        Json o;
        o["index"] = i;
        o["generator"] = r.name(I.canonical_gen);
        o["size"] = I.size();
        o["members"] = detail::names_of(r, I.members);
        o["generators"] = detail::names_of(r, I.generators);
        ideals.push_back(std::move(o));
    }
    j["ideals"] = std::move(ideals);
    Json hasse = Json::array();
    for (const auto& [lo, hi] : lat.hasse) hasse.push_back(Json::array({lo, hi}));
    j["hasse"] = std::move(hasse);
    j["gamma"] = detail::names_of(r, lat.gamma);
    j["principal_left_ideal_ring"] = lat.is_plir;
    return j;
}

inline Json to_json(const IdealLattice& lat, const RingOrder& o) {
    const FiniteRing& r = *lat.ring;
    Json j;
    j["descriptor"] = o.descriptor;
    j["sequence"] = detail::names_of(r, o.sequence);
    j["respectful"] = to_string(o.respectful);
    if (o.violation_witness)
        j["witness"] = {{"x", r.name(o.violation_witness->first)}, {"y", r.name(o.violation_witness->second)}};
    j["respects_with_identity_alpha"] = respects_with_identity_alpha(lat, o);
    return j;
}

inline Json to_json(const TheoremReport& t) {
    Json j;
    j["theorem"] = t.theorem;
    j["inputs_digest"] = t.inputs_digest;
    j["verdict"] = to_string(t.verdict);
    j["witness"] = t.witness ? Json(*t.witness) : Json(nullptr);
    j["work"] = t.work;
    if (!t.note.empty()) j["note"] = t.note;
    return j;
}

inline Json to_json(const Provenance& p) {
    Json j;
    j["ring"] = p.ring;
    j["order"] = p.order;
    j["order_sequence"] = p.order_sequence;
    j["basis"] = p.basis;
    j["property"] = p.property;
    j["gamma"] = p.gamma;
    j["respectful"] = p.respectful;
    j["multiplicativity"] = p.multiplicativity;
    j["tag"] = p.tag;
    return j;
}

/// Lexicode report; the dual section is included for commutative rings.
inline Json to_json(const Lexicode& lc, const std::vector<TheoremReport>& oracles = {},
                    std::uint64_t cap = kDefaultCap) {
    const FiniteRing& r = *lc.code.ring();
    Json j;
    j["inputs"] = to_json(lc.provenance);
    Json sel = Json::array();
    for (const auto& s : lc.selected) sel.push_back({{"level", s.level}, {"vector", format_vector(r, s.vector)}});
    j["selected"] = std::move(sel);
    Json stages = Json::array();
    for (const auto& c : lc.stages) stages.push_back(c.cardinality());
    j["stage_cardinalities"] = std::move(stages);
    j["generators"] = detail::vectors_of(r, lc.code.generators());
    j["cardinality"] = lc.code.cardinality();
    const auto fv = is_free(lc.code);
    j["free"] = {{"free", fv.free}, {"rank", fv.rank}, {"basis", detail::vectors_of(r, fv.basis)}};
    if (r.is_commutative() && checked_power(r.size(), lc.code.n()) <= cap) {
        const auto dual = dual_code(lc.code, cap);
        j["dual"] = {{"cardinality", dual.cardinality()},
                     {"self_orthogonal", is_self_orthogonal(lc.code)},
                     {"self_dual", dual == lc.code}};
    }
    j["work"] = lc.work;
    if (!oracles.empty()) {
        Json o = Json::array();
        for (const auto& t : oracles) o.push_back(to_json(t));
        j["oracles"] = std::move(o);
    }
    return j;
}

}  // namespace lexiring
