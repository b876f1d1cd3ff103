#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lexiring/code.hpp"
#include "lexiring/core.hpp"
#include "lexiring/greedy.hpp"
#include "lexiring/lattice.hpp"
#include "lexiring/lexspace.hpp"
#include "lexiring/order.hpp"
#include "lexiring/property.hpp"
#include "lexiring/weight.hpp"

// Brute-force checks of the lexicode guarantees. Everything here enumerates R^n (or R,
// or C) directly and never reuses the shortcuts taken by run_lexicode.

namespace lexiring {

enum class Verdict { holds, violated, not_applicable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        default: return "not-applicable";
    }
}

struct TheoremReport {
    std::string theorem;
    std::string inputs_digest;
    Verdict verdict = Verdict::not_applicable;
    std::optional<std::string> witness;
    std::uint64_t work = 0;
    std::string note;

    [[nodiscard]] bool holds() const { return verdict == Verdict::holds; }
};

namespace detail {

/// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

inline std::string code_digest_input(const Code& c) {
    std::string s = c.ring()->spec() + "|" + std::to_string(c.n()) + "|";
    for (auto k : c.keys()) s += std::to_string(k) + ",";
    return s;
}

inline TheoremReport make_report(std::string theorem, const std::string& digest_input) {
    TheoremReport t;
    t.theorem = std::move(theorem);
    t.inputs_digest = fnv1a(digest_input);
    return t;
}

/// P[r*x + c] for every nonzero r and every c in C.
inline bool all_multiples_pass(const FiniteRing& r, const Code& c, const Property& p, std::span<const Elem> x,
                               std::uint64_t& work) {
    Vector rx(c.n()), s(c.n());
    for (std::size_t a = 1; a < r.size(); ++a) {
        scale_into(r, static_cast<Elem>(a), x, rx.span());
        for (std::size_t k = 0; k < c.cardinality(); ++k) {
            ++work;
            add_into(r, rx.span(), c.member(k), s.span());
            if (!p(s.span())) return false;
        }
    }
    return true;
}

inline bool gamma_multiples_pass(const FiniteRing& r, const Code& c, const Property& p, std::span<const Elem> x,
                                 const std::vector<Elem>& gamma, std::uint64_t& work) {
    Vector gx(c.n()), s(c.n());
    for (auto g : gamma) {
        scale_into(r, g, x, gx.span());
        for (std::size_t k = 0; k < c.cardinality(); ++k) {
            ++work;
            add_into(r, gx.span(), c.member(k), s.span());
            if (!p(s.span())) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Every nonzero member of every stage satisfies P.
inline TheoremReport check_property_holds(const Lexicode& lc, const Property& p) {
    auto t = detail::make_report("property-holds", detail::code_digest_input(lc.code) + p.descriptor());
    for (std::size_t i = 0; i < lc.stages.size(); ++i) {
        const Code& c = lc.stages[i];
        for (std::size_t k = 1; k < c.cardinality(); ++k) {
            ++t.work;
            if (!p(c.member(k))) {
                t.verdict = Verdict::violated;
                t.witness = "stage " + std::to_string(i) + ": " + format_vector(*c.ring(), c.member(k));
                return t;
            }
        }
    }
    t.verdict = Verdict::holds;
    return t;
}

/// Every x in level i with P[g*x + c] for all g in gamma and c in C_i lies in C_i.
/// Levels come from the basis coordinates of each vector of R^n in key order.
inline TheoremReport check_exhaustive(const Lexicode& lc, const LexSpace& space, const Property& p,
                                      std::uint64_t cap = kDefaultCap) {
    const FiniteRing& r = *space.ring();
    auto t = detail::make_report("exhaustive", detail::code_digest_input(lc.code) + p.descriptor() +
                                                   space.order().descriptor);
    if (lc.stages.size() != space.n() + 1) throw PreconditionError("lexicode lacks a full stage trace");
    const auto total = checked_power(r.size(), space.n());
    require_within_cap(total, cap, "|R|^n");
    for (std::uint64_t key = 1; key < total; ++key) {
        const auto x = unpack(key, r.size(), space.n());
        const auto i = space.level(x);
        const Code& ci = lc.stages[i];
        if (ci.contains(x)) continue;
        if (detail::gamma_multiples_pass(r, ci, p, x.span(), lc.gamma, t.work)) {
            t.verdict = Verdict::violated;
            t.witness = format_vector(r, x) + " at level " + std::to_string(i);
            return t;
        }
    }
    t.verdict = Verdict::holds;
    return t;
}

/// With P[0] true: no x outside C has P[r*x + c] for all nonzero r and all c in C,
/// i.e. C + Rx never satisfies P.
inline TheoremReport check_maximal(const Code& c, const Property& p, std::uint64_t cap = kDefaultCap) {
    const FiniteRing& r = *c.ring();
    auto t = detail::make_report("maximal", detail::code_digest_input(c) + p.descriptor());
    if (!p.at_zero()) {
        t.note = "P[0] is false";
        return t;
    }
    const auto total = checked_power(r.size(), c.n());
    require_within_cap(total, cap, "|R|^n");
    Vector x(c.n());
    for (std::uint64_t key = 0; key < total; ++key) {
        unpack_into(key, r.size(), x.span());
        if (c.contains(x)) continue;
        if (detail::all_multiples_pass(r, c, p, x.span(), t.work)) {
            t.verdict = Verdict::violated;
            t.witness = format_vector(r, x);
            return t;
        }
    }
    t.verdict = Verdict::holds;
    return t;
}

/// With P[0] false and C free: no x outside C keeps {basis, x} free (r*x in C only for
/// r = 0) while P[r*x + c] holds for all nonzero r and all c in C.
inline TheoremReport check_maximal_free(const Code& c, const Property& p, std::uint64_t cap = kDefaultCap) {
    const FiniteRing& r = *c.ring();
    auto t = detail::make_report("maximal-free", detail::code_digest_input(c) + p.descriptor());
    if (p.at_zero()) {
        t.note = "P[0] is true";
        return t;
    }
    if (!is_free(c).free) {
        t.note = "code is not free";
        return t;
    }
    const auto total = checked_power(r.size(), c.n());
    require_within_cap(total, cap, "|R|^n");
    Vector x(c.n()), rx(c.n());
    for (std::uint64_t key = 0; key < total; ++key) {
        unpack_into(key, r.size(), x.span());
        if (c.contains(x)) continue;
        bool independent = true;
        for (std::size_t a = 1; a < r.size() && independent; ++a) {
            scale_into(r, static_cast<Elem>(a), x.span(), rx.span());
            independent = !c.contains(rx);
        }
        if (!independent) continue;
        if (detail::all_multiples_pass(r, c, p, x.span(), t.work)) {
            t.verdict = Verdict::violated;
            t.witness = format_vector(r, x);
            return t;
        }
    }
    t.verdict = Verdict::holds;
    return t;
}

/// [for all g in gamma, c in C: P[g*x + c]]  <=>  [for all r != 0, c in C: P[r*x + c]].
/// Not applicable unless every nonzero member of C satisfies P.
inline TheoremReport check_gamma_sufficiency(const Code& c, const Property& p, const Vector& x,
                                             const std::vector<Elem>& gamma) {
    const FiniteRing& r = *c.ring();
    auto t = detail::make_report("gamma-sufficiency", detail::code_digest_input(c) + p.descriptor() + "|" +
                                                          format_vector(r, x));
    for (std::size_t k = 1; k < c.cardinality(); ++k)
        if (!p(c.member(k))) {
            t.note = "a nonzero codeword fails P";
            return t;
        }
    const bool lhs = detail::gamma_multiples_pass(r, c, p, x.span(), gamma, t.work);
    const bool rhs = detail::all_multiples_pass(r, c, p, x.span(), t.work);
    t.note = std::string("gamma side ") + (lhs ? "true" : "false") + ", all-scalars side " + (rhs ? "true" : "false");
    if (lhs == rhs) {
        t.verdict = Verdict::holds;
    } else {
        t.verdict = Verdict::violated;
        t.witness = format_vector(r, x);
    }
    return t;
}

/// Checks the homogeneous weight axioms directly (w(0) = 0, w(u*x) = w(x) for units u,
/// average 1 over every Rx) and compares w against an independent solution of those
/// constraints: one unknown per principal ideal, solved from the smallest ideal up.
inline TheoremReport check_homogeneous_unique(const IdealLattice& lat, const WeightFunction& w) {
    const FiniteRing& r = *lat.ring;
    std::string in = r.spec();
    for (const auto& v : w.values) in += "," + to_string(v);
    auto t = detail::make_report("homogeneous-unique", in);
    auto fail = [&](std::string why) {
        t.verdict = Verdict::violated;
        t.witness = std::move(why);
        return t;
    };
    if (w.values.size() != r.size()) return fail("table size");
    if (w.values[0] != Rational(0)) return fail("w(0) != 0");
    for (std::size_t x = 0; x < r.size(); ++x)
        for (auto u : r.units()) {
            ++t.work;
            if (w.values[r.mul(u, static_cast<Elem>(x))] != w.values[x])
                return fail("w(" + r.name(u) + "*" + r.name(static_cast<Elem>(x)) + ") != w(" +
                            r.name(static_cast<Elem>(x)) + ")");
        }
    for (std::size_t a = 1; a < r.size(); ++a) {
        ElemSet ra = left_ideal_of(r, static_cast<Elem>(a));
        Rational s(0);
        for (std::size_t x = 0; x < r.size(); ++x)
            if (ra.test(x)) s += w.values[x];
        if (s != Rational(static_cast<std::int64_t>(ra.count())))
            return fail("sum over R" + r.name(static_cast<Elem>(a)) + " = " + to_string(s));
    }

    // Rx is the disjoint union of the generator sets of the principal ideals it contains.
    std::vector<Rational> solved(lat.size(), Rational(0));
    std::vector<std::size_t> order(lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return lat.ideals[a].size() < lat.ideals[b].size(); });
    for (auto i : order) {
        if (i == 0) continue;
        const auto& ideal = lat.ideals[i];
        Rational rest(static_cast<std::int64_t>(ideal.size()));
        std::size_t own = 0;
        for (auto x : ideal.members) {
            const auto j = lat.ideal_of[x];
            if (j == i)
                ++own;
            else
                rest -= solved[j];
        }
        if (own == 0) throw InternalError("ideal without generators");
        solved[i] = rest / static_cast<std::int64_t>(own);
    }
    for (std::size_t x = 0; x < r.size(); ++x)
        if (solved[lat.ideal_of[x]] != w.values[x])
            return fail("w(" + r.name(static_cast<Elem>(x)) + ") = " + to_string(w.values[x]) +
                        ", constraints give " + to_string(solved[lat.ideal_of[x]]));
    t.verdict = Verdict::holds;
    return t;
}

/// With P[0] false: |C| = |R|^k for the k selected vectors, and the map from coefficient
/// tuples to their combinations is injective.
inline TheoremReport check_free_selected(const Lexicode& lc, const Property& p, std::uint64_t cap = kDefaultCap) {
    const FiniteRing& r = *lc.code.ring();
    auto t = detail::make_report("free-selected", detail::code_digest_input(lc.code) + p.descriptor());
    if (p.at_zero()) {
        t.note = "P[0] is true";
        return t;
    }
    const auto k = lc.selected.size();
    const auto tuples = checked_power(r.size(), k);
    require_within_cap(tuples, cap, "|R|^k");
    std::unordered_set<std::uint64_t> seen;
    Vector coeff(k), v(lc.code.n()), term(lc.code.n());
    for (std::uint64_t key = 0; key < tuples; ++key) {
        unpack_into(key, r.size(), coeff.span());
        std::fill(v.span().begin(), v.span().end(), Elem{0});
        for (std::size_t j = 0; j < k; ++j) {
            scale_into(r, coeff[j], lc.selected[j].vector.span(), term.span());
            add_into(r, v.span(), term.span(), v.span());
        }
        ++t.work;
        if (!seen.insert(pack(v.span(), r.size())).second) {
            t.verdict = Verdict::violated;
            t.witness = "selected vectors are dependent";
            return t;
        }
    }
    if (tuples != lc.code.cardinality()) {
        t.verdict = Verdict::violated;
        t.witness = "|C| = " + std::to_string(lc.code.cardinality()) + " but |R|^k = " + std::to_string(tuples);
        return t;
    }
    t.verdict = Verdict::holds;
    return t;
}

/// Two runs that differ only in gamma give the same member set.
inline TheoremReport check_gamma_invariance(const LexSpace& space, const IdealLattice& lat, const Property& p,
                                            const std::vector<Elem>& other_gamma, RunOptions opts = {}) {
    auto first = run_lexicode(space, lat, p, opts);
    opts.gamma = other_gamma;
    auto second = run_lexicode(space, lat, p, opts);
    auto t = detail::make_report("gamma-invariance", detail::code_digest_input(first.code) + p.descriptor());
    t.work = first.work + second.work;
    if (first.code == second.code) {
        t.verdict = Verdict::holds;
    } else {
        t.verdict = Verdict::violated;
        t.witness = "|C| = " + std::to_string(first.code.cardinality()) + " vs " +
                    std::to_string(second.code.cardinality());
    }
    return t;
}

/// |C| * |C-perp| = |R|^n for a self-orthogonal code over a commutative ring; C-perp is
/// found by scanning R^n against every member of C.
inline TheoremReport check_dual_cardinality(const Code& c, std::uint64_t cap = kDefaultCap) {
    const FiniteRing& r = *c.ring();
    auto t = detail::make_report("dual-cardinality", detail::code_digest_input(c));
    if (!r.is_commutative()) {
        t.note = "ring is not commutative";
        return t;
    }
    const auto total = checked_power(r.size(), c.n());
    require_within_cap(total, cap, "|R|^n");
    std::uint64_t dual = 0;
    Vector y(c.n());
    for (std::uint64_t key = 0; key < total; ++key) {
        unpack_into(key, r.size(), y.span());
        bool orth = true;
        for (std::size_t k = 0; k < c.cardinality() && orth; ++k) {
            ++t.work;
            orth = dot(r, y.span(), c.member(k)) == 0;
        }
        if (orth) ++dual;
    }
    t.note = "|C| = " + std::to_string(c.cardinality()) + ", |C-perp| = " + std::to_string(dual);
    if (c.cardinality() * dual == total) {
        t.verdict = Verdict::holds;
    } else {
        t.verdict = Verdict::violated;
        t.witness = t.note;
    }
    return t;
}

struct Embedding {
    RingOrder order;
    OrderedBasis basis;
    Lexicode lexicode;
    TheoremReport report;
};

/// Realises a free code C as a subcode of a lexicode: a respectful order with 0 first
/// and 1 next, a basis extending a free basis of C, and a run of the algorithm. Holds
/// when the first k selected vectors are the basis of C and C lies in the lexicode.
inline Embedding embed_as_lexicode(const IdealLattice& lat, const Code& c, const Property& p,
                                   std::uint64_t cap = kDefaultCap) {
    const RingPtr& ring = lat.ring;
    const FiniteRing& r = *ring;
    auto fv = is_free(c);
    if (!fv.free) throw PreconditionError("embedding requires a free code");
    for (std::size_t k = 1; k < c.cardinality(); ++k)
        if (!p(c.member(k))) throw PreconditionError("a nonzero codeword fails the property");

    WithinOrbit within;
    std::vector<Elem> units{r.one()};
    for (auto u : lat.ideals[lat.whole_ring()].generators)
        if (u != r.one()) units.push_back(u);
    within[lat.whole_ring()] = units;
    auto order = make_respectful(lat, canonical_extension(lat), within, true);

    auto basis = complete_to_basis(ring, c.n(), fv.basis, cap);
    LexSpace space(ring, order, basis);
    RunOptions opts;
    opts.cap = cap;
    auto lc = run_lexicode(space, lat, p, opts);

    auto t = detail::make_report("embed", detail::code_digest_input(c) + p.descriptor());
    t.work = lc.work;
    t.verdict = Verdict::holds;
    for (std::size_t i = 0; i < fv.rank; ++i) {
        if (i >= lc.selected.size() || lc.selected[i].level != i + 1 || lc.selected[i].vector != fv.basis[i]) {
            t.verdict = Verdict::violated;
            t.witness = "selected vector " + std::to_string(i + 1) + " differs from basis vector " +
                        format_vector(r, fv.basis[i]);
            break;
        }
    }
    if (t.holds() && !c.subset_of(lc.code)) {
        t.verdict = Verdict::violated;
        t.witness = "code is not contained in the lexicode";
    }
    return {std::move(order), std::move(basis), std::move(lc), std::move(t)};
}

}  // namespace lexiring
