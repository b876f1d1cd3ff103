#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexiring/code.hpp"
#include "lexiring/greedy.hpp"
#include "lexiring/lattice.hpp"
#include "lexiring/lexspace.hpp"
#include "lexiring/order.hpp"
#include "lexiring/property.hpp"
#include "lexiring/ring.hpp"

namespace lexiring {

/// Textual description of one run, as taken from the command line.
struct RunConfig {
    std::string ring;
    std::string order;  // empty: natural on zmod rings, respectful:auto,zero_min otherwise
    std::string basis = "standard";
    std::size_t n = 0;
    std::string property;
    std::vector<std::pair<std::string, std::string>> codes;  // name, generator list
    std::optional<std::string> gamma;                        // element names, comma separated
    bool allow_unrespectful = false;
    bool allow_nonmultiplicative = false;
    bool allow_noncommutative_selfdot = false;
    std::uint64_t cap = kDefaultCap;
};

/// The objects a RunConfig describes.
struct Session {
    RingPtr ring;
    IdealLattice lattice;
    LexSpace space;
    PropertyContext context;
    Property property;
    RunOptions options;

    [[nodiscard]] Lexicode run() const { return run_lexicode(space, lattice, property, options); }
};

inline std::string default_order(const FiniteRing& r) {
    return r.family() == RingFamily::zmod ? "natural" : "respectful:auto,zero_min";
}

inline std::vector<Elem> parse_element_list(const FiniteRing& r, std::string_view s) {
    std::vector<Elem> out;
    for (auto tok : detail::split_top_level(detail::trim(s), ',')) out.push_back(r.element(detail::trim(tok)));
    return out;
}

inline Session prepare(const RunConfig& cfg) {
    if (cfg.n == 0) throw SpecError("n must be at least 1");
    RingPtr ring = make_ring(cfg.ring);
    IdealLattice lat = ideal_lattice(ring);
    auto order = parse_order(lat, cfg.order.empty() ? default_order(*ring) : cfg.order);
    auto basis = parse_basis(ring, cfg.n, cfg.basis, cfg.cap);
    LexSpace space(ring, std::move(order), std::move(basis));

    PropertyContext ctx;
    ctx.allow_noncommutative_selfdot = cfg.allow_noncommutative_selfdot;
    for (const auto& [name, gens] : cfg.codes) {
        if (name.empty()) throw SpecError("code definition needs a name");
        ctx.codes.insert_or_assign(name, code_from_generators(ring, cfg.n, parse_vector_list(*ring, gens, cfg.n), cfg.cap));
    }
    auto prop = make_property(lat, cfg.n, cfg.property, ctx);

    RunOptions opts;
    opts.allow_unrespectful = cfg.allow_unrespectful;
    opts.allow_nonmultiplicative = cfg.allow_nonmultiplicative;
    opts.cap = cfg.cap;
    if (cfg.gamma) opts.gamma = validate_gamma(lat, parse_element_list(*ring, *cfg.gamma));
    return Session{ring, std::move(lat), std::move(space), std::move(ctx), std::move(prop), std::move(opts)};
}

}  // namespace lexiring
