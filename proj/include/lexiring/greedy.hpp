#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexiring/code.hpp"
#include "lexiring/core.hpp"
#include "lexiring/lattice.hpp"
#include "lexiring/lexspace.hpp"
#include "lexiring/order.hpp"
#include "lexiring/property.hpp"
#include "lexiring/vector.hpp"

namespace lexiring {

struct SelectedVector {
    std::size_t level = 0;
    Vector vector;
};

/// Everything needed to repeat a run.
struct Provenance {
    std::string ring;
    std::string order;
    std::vector<std::string> order_sequence;
    std::vector<std::string> basis;
    std::string property;
    std::vector<std::string> gamma;
    std::string respectful;
    std::string multiplicativity;
    bool guarantees = true;
    std::string tag;
};

struct Lexicode {
    Code code;
    std::vector<SelectedVector> selected;
    std::vector<Code> stages;  // C_0 .. C_n
    Provenance provenance;
    std::uint64_t work = 0;    // property evaluations
    std::vector<Elem> gamma;
};

struct RunOptions {
    bool allow_unrespectful = false;
    bool allow_nonmultiplicative = false;
    std::optional<std::vector<Elem>> gamma;
    std::uint64_t cap = kDefaultCap;
};

namespace detail {

/// Respectfulness gate. Unchecked orders are checked here.
inline Respectfulness order_gate(const IdealLattice& lat, const RingOrder& order, bool allow) {
    auto describe = [&](const std::optional<std::pair<Elem, Elem>>& w) {
        return w ? " (x=" + lat.ring->name(w->first) + ", y=" + lat.ring->name(w->second) + ")" : std::string();
    };
    auto status = order.respectful;
    std::string where = describe(order.violation_witness);
    if (status == Respectfulness::unchecked) {
        const auto v = is_respectful(lat, order);
        status = v.respectful ? Respectfulness::verified_true : Respectfulness::verified_false;
        where = describe(v.witness);
    }
    if (status == Respectfulness::verified_false && !allow) {
        const std::string msg = "order '" + order.descriptor + "' is not respectful" + where;
        throw GateError(msg + "; pass --allow-unrespectful to run anyway");
    }
    return status;
}

/// Multiplicativity gate. Unknown status is resolved by an exhaustive check.
inline Multiplicativity property_gate(const Property& p, bool allow, std::uint64_t cap) {
    auto status = p.multiplicativity();
    std::string detail;
    if (status == Multiplicativity::unknown) {
        Property copy = p;
        try {
            auto v = verify_left_multiplicative(copy, cap);
            status = copy.multiplicativity();
            if (v.witness)
                detail = " (u=" + p.ring()->name(v.witness->first) +
                         ", x=" + format_vector(*p.ring(), v.witness->second) + ")";
        } catch (const CapError& e) {
            if (!allow) throw GateError("cannot verify multiplicativity of '" + p.descriptor() + "': " + e.what());
            return status;
        }
    }
    if (status == Multiplicativity::refuted && !allow)
        throw GateError("property '" + p.descriptor() + "' is not left multiplicative" + detail +
                        "; pass --allow-nonmultiplicative to run anyway");
    return status;
}

}  // namespace detail

/// The greedy lexicode construction. For each level i the level set is scanned in
/// ascending order and the first x with P[g*x + c] for all g in gamma and all c in
/// C_{i-1} is selected; then C_i = R*x + C_{i-1}. Without a hit, C_i = C_{i-1}.
///
/// Throws GateError if the order is not respectful or P is not left multiplicative,
/// unless the matching override is set; such runs are tagged "no guarantees".
inline Lexicode run_lexicode(const LexSpace& space, const IdealLattice& lat, const Property& p,
                             const RunOptions& opts = {}) {
    const RingPtr& ring = space.ring();
    const FiniteRing& r = *ring;
    if (lat.ring.get() != ring.get() || p.ring().get() != ring.get())
        throw PreconditionError("space, lattice and property must share one ring");
    if (p.n() != space.n()) throw PreconditionError("property length differs from the space");
    if (!lat.is_plir) throw PreconditionError(r.spec() + " is not a principal left ideal ring");

    const auto respect = detail::order_gate(lat, space.order(), opts.allow_unrespectful);
    const auto mult = detail::property_gate(p, opts.allow_nonmultiplicative, opts.cap);
    const auto gamma = opts.gamma ? validate_gamma(lat, *opts.gamma) : lat.gamma;

    const auto n = space.n();
    std::vector<Code> stages{zero_code(ring, n)};
    std::vector<SelectedVector> selected;
    std::uint64_t work = 0;
    Vector gx(n), sum(n);

    for (std::size_t i = 1; i <= n; ++i) {
        const Code& prev = stages.back();
        std::optional<Vector> hit;
        for (const auto& x : space.level_set(i)) {
            bool ok = true;
            for (auto g : gamma) {
                scale_into(r, g, x.span(), gx.span());
                for (std::size_t k = 0; k < prev.cardinality(); ++k) {
                    ++work;
                    add_into(r, gx.span(), prev.member(k), sum.span());
                    if (!p(sum.span())) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok) {
                hit = x;
                break;
            }
        }
        if (hit) {
            selected.push_back({i, *hit});
            stages.push_back(extend_code(prev, *hit, opts.cap));
        } else {
            stages.push_back(prev);
        }
    }

    Provenance prov;
    prov.ring = r.spec();
    prov.order = space.order().descriptor;
    for (auto e : space.order().sequence) prov.order_sequence.push_back(r.name(e));
    for (const auto& b : space.basis().vectors) prov.basis.push_back(format_vector(r, b));
    prov.property = p.descriptor();
    for (auto g : gamma) prov.gamma.push_back(r.name(g));
    prov.respectful = to_string(respect);
    prov.multiplicativity = to_string(mult);
    prov.guarantees = respect == Respectfulness::verified_true &&
                      (mult == Multiplicativity::verified || mult == Multiplicativity::declared);
    prov.tag = prov.guarantees ? "guaranteed" : "no guarantees";

    Code final_code = stages.back();
    return Lexicode{std::move(final_code), std::move(selected), std::move(stages), std::move(prov), work, gamma};
}

}  // namespace lexiring
