// Command-line front end: ring and order inspection, lexicode runs, example registry.
//
// Exit codes: 0 success, 1 internal error, 2 configuration error, 3 gate failure
// (unrespectful order or non-multiplicative property without override), 4 oracle
// violation under --strict, 5 registry mismatch.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexiring.hpp"

namespace {

using namespace lexiring;

constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitGate = 3;
constexpr int kExitOracle = 4;
constexpr int kExitRegistry = 5;

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::vector<std::string> names(const FiniteRing& r, const std::vector<Elem>& es) {
    std::vector<std::string> out;
    for (auto e : es) out.push_back(r.name(e));
    return out;
}

void print_ring_table(const IdealLattice& lat) {
    const FiniteRing& r = *lat.ring;
    std::cout << "ring        " << r.spec() << "\n"
              << "size        " << r.size() << "\n"
              << "commutative " << (r.is_commutative() ? "yes" : "no") << "\n"
              << "units (" << r.units().size() << ")   " << join(names(r, r.units()), " ") << "\n"
              << "principal left ideal ring: " << (lat.is_plir ? "yes" : "no") << "\n"
              << "ideals (" << lat.size() << ")\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const auto& I = lat.ideals[i];
        std::cout << "  [" << i << "] R" << r.name(I.canonical_gen) << "  size " << I.size()
                  << "  generators {" << join(names(r, I.generators), ", ") << "}\n";
    }
    std::cout << "hasse      ";
    for (const auto& [lo, hi] : lat.hasse) std::cout << " " << lo << "<" << hi;
    std::cout << "\ngamma       " << join(names(r, lat.gamma), " ") << "\n";
}

void print_order_table(const IdealLattice& lat, const RingOrder& o) {
    const FiniteRing& r = *lat.ring;
    std::cout << "order       " << o.descriptor << "\n"
              << "sequence    " << join(names(r, o.sequence), " < ") << "\n"
              << "respectful  " << to_string(o.respectful);
    if (o.violation_witness)
        std::cout << "  (x=" << r.name(o.violation_witness->first) << ", y=" << r.name(o.violation_witness->second)
                  << ")";
    std::cout << "\nalpha = 1 suffices: " << (respects_with_identity_alpha(lat, o) ? "yes" : "no") << "\n";
}

void print_report_line(const TheoremReport& t) {
    std::cout << "  " << t.theorem << ": " << to_string(t.verdict);
    if (t.witness) std::cout << "  witness " << *t.witness;
    if (!t.note.empty()) std::cout << "  (" << t.note << ")";
    std::cout << "\n";
}

void print_lexicode_table(const Lexicode& lc, const std::vector<TheoremReport>& oracles, std::uint64_t cap) {
    const FiniteRing& r = *lc.code.ring();
    const auto& p = lc.provenance;
    std::cout << "ring        " << p.ring << "\n"
              << "order       " << p.order << "  [" << join(p.order_sequence, "<") << "]  " << p.respectful << "\n"
              << "basis       " << join(p.basis, ", ") << "\n"
              << "property    " << p.property << "  (multiplicativity " << p.multiplicativity << ")\n"
              << "gamma       " << join(p.gamma, ", ") << "\n"
              << "status      " << p.tag << "\n"
              << "selected\n";
    for (const auto& s : lc.selected) std::cout << "  level " << s.level << ": " << format_vector(r, s.vector) << "\n";
    std::cout << "stages     ";
    for (const auto& c : lc.stages) std::cout << " " << c.cardinality();
    std::cout << "\ncardinality " << lc.code.cardinality() << "\n";
    const auto fv = is_free(lc.code);
    std::cout << "free        " << (fv.free ? "yes, rank " + std::to_string(fv.rank) : std::string("no")) << "\n";
    if (r.is_commutative() && checked_power(r.size(), lc.code.n()) <= cap) {
        const auto dual = dual_code(lc.code, cap);
        std::cout << "dual        |C-perp| = " << dual.cardinality()
                  << (is_self_orthogonal(lc.code) ? ", self-orthogonal" : "") << (dual == lc.code ? ", self-dual" : "")
                  << "\n";
    }
    std::cout << "generators\n";
    for (const auto& g : lc.code.generators()) std::cout << "  " << format_vector(r, g) << "\n";
    if (!oracles.empty()) {
        std::cout << "oracles\n";
        for (const auto& t : oracles) print_report_line(t);
    }
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

std::vector<TheoremReport> run_oracles(const Session& s, const Lexicode& lc, const std::string& list) {
    const std::vector<std::string> known{"property-holds", "exhaustive",       "maximal",         "maximal-free",
                                         "free-selected",  "gamma-invariance", "dual-cardinality"};
    std::vector<std::string> wanted = list == "all" ? known : split_names(list);
    for (const auto& w : wanted)
        if (std::find(known.begin(), known.end(), w) == known.end())
            throw SpecError("unknown oracle '" + w + "' (known: " + join(known, ", ") + ", all)");
    const bool all = list == "all";
    const bool zero_true = s.property.at_zero();
    const auto cap = s.options.cap;
    std::vector<TheoremReport> out;
    for (const auto& w : wanted) {
        if (w == "property-holds") out.push_back(check_property_holds(lc, s.property));
        if (w == "exhaustive") out.push_back(check_exhaustive(lc, s.space, s.property, cap));
        if (w == "maximal" && (!all || zero_true)) out.push_back(check_maximal(lc.code, s.property, cap));
        if (w == "maximal-free" && (!all || !zero_true)) out.push_back(check_maximal_free(lc.code, s.property, cap));
        if (w == "free-selected" && (!all || !zero_true)) out.push_back(check_free_selected(lc, s.property, cap));
        if (w == "gamma-invariance")
            out.push_back(check_gamma_invariance(s.space, s.lattice, s.property, alternate_gamma(s.lattice), s.options));
        if (w == "dual-cardinality" && (!all || (s.ring->is_commutative() && is_self_orthogonal(lc.code))))
            out.push_back(check_dual_cardinality(lc.code, cap));
    }
    return out;
}

std::uint64_t default_cap() {
    if (const char* env = std::getenv("LEXIRING_CAP")) {
        try {
            return static_cast<std::uint64_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw SpecError(std::string("LEXIRING_CAP is not a number: ") + env);
        }
    }
    return kDefaultCap;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexicographic codes over finite principal left ideal rings"};
    app.require_subcommand(1);

    std::string format = "table";
    auto add_format = [&](CLI::App* sub, bool gen) {
        sub->add_option("--format", format, "Output format")
            ->check(gen ? CLI::IsMember({"table", "json", "gen"}) : CLI::IsMember({"table", "json"}));
    };

    std::string ring_spec;
    auto* ring_info = app.add_subcommand("ring-info", "Ring, ideal lattice and generator set");
    ring_info->add_option("ring", ring_spec, "zmod:m | gf:q | chain:q,e | mat:k,q")->required();
    add_format(ring_info, false);

    std::string order_spec;
    auto* order_info = app.add_subcommand("order-info", "A ring order and its respectfulness");
    order_info->add_option("--ring", ring_spec, "Ring descriptor")->required();
    order_info->add_option("--order", order_spec, "natural | respectful:auto[,zero_min] | explicit:e0<e1<...");
    add_format(order_info, false);

    RunConfig cfg;
    std::vector<std::string> code_defs;
    std::string gamma, oracles;
    bool strict = false;
    std::uint64_t cap = 0;
    auto* run = app.add_subcommand("run", "Run the greedy lexicode construction");
    run->add_option("--ring", cfg.ring, "Ring descriptor")->required();
    run->add_option("--order", cfg.order, "Ring order (default: natural on zmod, respectful:auto,zero_min otherwise)");
    run->add_option("--basis", cfg.basis, "standard | reverse | comma-separated vectors");
    run->add_option("--n", cfg.n, "Length")->required();
    run->add_option("--prop", cfg.property, "Property expression")->required();
    run->add_option("--code", code_defs, "Named code NAME=v1,v2,... for member: atoms");
    run->add_option("--gamma", gamma, "Generator set, one generator per nonzero ideal");
    run->add_option("--oracle", oracles, "Comma-separated oracle names or 'all'");
    run->add_flag("--strict", strict, "Exit 4 when an oracle reports a violation");
    run->add_flag("--allow-unrespectful", cfg.allow_unrespectful, "Run with an order that is not respectful");
    run->add_flag("--allow-nonmultiplicative", cfg.allow_nonmultiplicative,
                  "Run with a property that is not left multiplicative");
    run->add_flag("--allow-noncommutative-selfdot", cfg.allow_noncommutative_selfdot,
                  "Accept selfdot over a noncommutative ring");
    run->add_option("--cap", cap, "Enumeration cap (default LEXIRING_CAP or 2^24)");
    add_format(run, true);

    std::string example = "all";
    auto* reproduce_cmd = app.add_subcommand("reproduce", "Check the worked examples against their expected codes");
    reproduce_cmd->add_option("id", example, "Example id or 'all'");
    bool verbose = false;
    reproduce_cmd->add_flag("-v,--verbose", verbose, "Show every check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (*ring_info) {
            auto lat = ideal_lattice(make_ring(ring_spec));
            if (format == "json")
                std::cout << to_json(lat).dump(2) << "\n";
            else
                print_ring_table(lat);
            return 0;
        }
        if (*order_info) {
            auto ring = make_ring(ring_spec);
            auto lat = ideal_lattice(ring);
            auto order = parse_order(lat, order_spec.empty() ? default_order(*ring) : order_spec);
            if (order.respectful == Respectfulness::unchecked) check_respectful(lat, order);
            if (format == "json")
                std::cout << to_json(lat, order).dump(2) << "\n";
            else
                print_order_table(lat, order);
            return 0;
        }
        if (*run) {
            cfg.cap = cap ? cap : default_cap();
            for (const auto& def : code_defs) {
                const auto eq = def.find('=');
                if (eq == std::string::npos) throw SpecError("--code expects NAME=v1,v2,...");
                cfg.codes.emplace_back(def.substr(0, eq), def.substr(eq + 1));
            }
            if (!gamma.empty()) cfg.gamma = gamma;
            auto session = prepare(cfg);
            auto lc = session.run();
            std::vector<TheoremReport> reports;
            if (!oracles.empty()) reports = run_oracles(session, lc, oracles);
            if (format == "json") {
                std::cout << to_json(lc, reports, cfg.cap).dump(2) << "\n";
            } else if (format == "gen") {
                for (const auto& g : lc.code.generators()) std::cout << format_vector(*session.ring, g) << "\n";
            } else {
                print_lexicode_table(lc, reports, cfg.cap);
            }
            if (strict)
                for (const auto& t : reports)
                    if (t.verdict == Verdict::violated) return kExitOracle;
            return 0;
        }
        if (*reproduce_cmd) {
            std::vector<const RegistryEntry*> entries;
            if (example == "all") {
                for (const auto& e : registry()) entries.push_back(&e);
            } else if (const auto* e = find_entry(example)) {
                entries.push_back(e);
            } else {
                std::vector<std::string> ids;
                for (const auto& e : registry()) ids.push_back(e.id);
                throw SpecError("unknown example '" + example + "' (known: " + join(ids, " ") + ")");
            }
            std::size_t passed = 0;
            for (const auto* e : entries) {
                auto out = reproduce(*e);
                passed += out.pass ? 1 : 0;
                std::cout << (out.pass ? "pass  " : "FAIL  ") << out.id << "  " << out.title << "\n";
                for (const auto& line : out.lines)
                    if (verbose || !out.pass) std::cout << "        " << line << "\n";
            }
            std::cout << passed << "/" << entries.size() << " pass\n";
            return passed == entries.size() ? 0 : kExitRegistry;
        }
    } catch (const GateError& e) {
        std::cerr << "gate: " << e.what() << "\n";
        return kExitGate;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
