#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lexiring/code.hpp"
#include "lexiring/config.hpp"
#include "lexiring/greedy.hpp"
#include "lexiring/lattice.hpp"
#include "lexiring/lexspace.hpp"
#include "lexiring/oracle.hpp"
#include "lexiring/order.hpp"
#include "lexiring/property.hpp"
#include "lexiring/weight.hpp"

// Worked examples with their expected outcomes. Expected codes are compared as member
// sets, so a different but equivalent generator list still passes.

namespace lexiring {

struct RegistryOutcome {
    std::string id;
    std::string title;
    bool pass = true;
    std::vector<std::string> lines;  // one per check; failures carry a diff
};

struct RegistryEntry {
    std::string id;
    std::string title;
    std::function<void(RegistryOutcome&)> run;
};

namespace detail {

inline void expect(RegistryOutcome& out, bool ok, const std::string& what) {
    out.lines.push_back((ok ? "ok    " : "FAIL  ") + what);
    out.pass = out.pass && ok;
}

/// Member-set comparison with the first few differences listed on mismatch.
inline void expect_members(RegistryOutcome& out, const Code& got, const Code& want, const std::string& what) {
    if (got == want) {
        expect(out, true, what + " (" + std::to_string(got.cardinality()) + " members)");
        return;
    }
    std::vector<std::uint64_t> missing, extra;
    std::set_difference(want.keys().begin(), want.keys().end(), got.keys().begin(), got.keys().end(),
                        std::back_inserter(missing));
    std::set_difference(got.keys().begin(), got.keys().end(), want.keys().begin(), want.keys().end(),
                        std::back_inserter(extra));
    const FiniteRing& r = *want.ring();
    auto show = [&](const std::vector<std::uint64_t>& ks) {
        std::string s;
        for (std::size_t i = 0; i < ks.size() && i < 6; ++i)
            s += (i ? " " : "") + format_vector(r, unpack(ks[i], r.size(), want.n()));
        if (ks.size() > 6) s += " ...";
        return s;
    };
    std::string diff = what + ": |got| = " + std::to_string(got.cardinality()) +
                       ", |want| = " + std::to_string(want.cardinality());
    if (!missing.empty()) diff += "; missing " + show(missing);
    if (!extra.empty()) diff += "; extra " + show(extra);
    expect(out, false, diff);
}

inline RunConfig config(std::string ring, std::size_t n, std::string order, std::string basis, std::string prop) {
    RunConfig c;
    c.ring = std::move(ring);
    c.n = n;
    c.order = std::move(order);
    c.basis = std::move(basis);
    c.property = std::move(prop);
    return c;
}

inline Code span_of(const Session& s, std::string_view gens) {
    return code_from_generators(s.ring, s.space.n(), parse_vector_list(*s.ring, gens, s.space.n()));
}

inline std::string selected_string(const Lexicode& lc) {
    std::string s;
    for (const auto& v : lc.selected) s += (s.empty() ? "" : ",") + format_vector(*lc.code.ring(), v.vector);
    return s;
}

inline std::string stage_sizes(const Lexicode& lc) {
    std::string s;
    for (const auto& c : lc.stages) s += (s.empty() ? "" : ",") + std::to_string(c.cardinality());
    return s;
}

/// The 16-element order on M2(F2) with zero first, units next, then the three minimal
/// left ideals' generators.
inline std::string m2f2_order() {
    return "explicit:0<I<[[0,1],[1,0]]<[[0,1],[1,1]]<[[1,0],[1,1]]<[[1,1],[0,1]]<[[1,1],[1,0]]"
           "<[[1,1],[0,0]]<[[0,0],[1,1]]<[[1,1],[1,1]]<[[1,0],[0,0]]<[[0,0],[1,0]]<[[1,0],[1,0]]"
           "<[[0,1],[0,0]]<[[0,0],[0,1]]<[[0,1],[0,1]]";
}

inline void isotropic_z4(RegistryOutcome& out) {
    auto s = prepare(config("zmod:4", 4, "natural", "standard", "selfdot==0"));
    auto lc = s.run();
    expect(out, selected_string(lc) == "2000,0200,0020,1111", "selected " + selected_string(lc));
    expect_members(out, lc.code, span_of(s, "2000,0200,0020,1111"), "C = R{2000,0200,0020,1111}");
    expect(out, lc.code.cardinality() == 32, "|C| = 32");
    expect(out, !is_free(lc.code).free, "C is not free");
}

inline void isotropic_z4_unrespectful(RegistryOutcome& out) {
    auto cfg = config("zmod:4", 4, "explicit:0<2<1<3", "standard", "selfdot==0");
    cfg.allow_unrespectful = true;
    auto s = prepare(cfg);
    auto lc = s.run();
    expect(out, selected_string(lc) == "2000,0200,0020,0002", "selected " + selected_string(lc));
    expect(out, lc.code.cardinality() == 16, "|C| = 16");
    expect(out, lc.provenance.tag == "no guarantees", "run tagged '" + lc.provenance.tag + "'");
    auto full = prepare(config("zmod:4", 4, "natural", "standard", "selfdot==0")).run();
    expect(out, lc.code.subset_of(full.code) && lc.code.cardinality() < full.code.cardinality(),
           "strictly inside the natural-order lexicode");
    auto t = check_exhaustive(lc, s.space, s.property);
    expect(out, t.verdict == Verdict::violated && t.witness && t.witness->rfind("1111", 0) == 0,
           "exhaustiveness oracle: " + std::string(to_string(t.verdict)) + " witness " + t.witness.value_or("-"));
}

/// All 24 orders of Z4 in three families by where 0 and the units sit.
inline void lee_orderings_z4(RegistryOutcome& out) {
    auto base = prepare(config("zmod:4", 3, "natural", "reverse", "lee>=2"));
    const Code fam1 = span_of(base, "011,103"), fam2 = span_of(base, "011,102"), fam3 = span_of(base, "011,101");
    std::vector<Elem> seq{0, 1, 2, 3};
    int respectful = 0, counts[3] = {0, 0, 0};
    bool all_ok = true;
    do {
        auto o = explicit_order(base.lattice, seq);
        const bool expect_resp = o.rank[1] < o.rank[2] || o.rank[3] < o.rank[2];
        if ((o.respectful == Respectfulness::verified_true) != expect_resp) {
            expect(out, false, "respectfulness of " + o.descriptor);
            all_ok = false;
        }
        if (o.respectful != Respectfulness::verified_true) continue;
        ++respectful;
        LexSpace space(base.ring, o, base.space.basis());
        auto lc = run_lexicode(space, base.lattice, base.property);
        const bool unit_first_then_zero = base.ring->is_unit(seq[0]) && seq[1] == 0;
        const bool units_first = base.ring->is_unit(seq[0]) && base.ring->is_unit(seq[1]);
        const int fam = unit_first_then_zero ? 0 : units_first ? 1 : 2;
        ++counts[fam];
        const Code& want = fam == 0 ? fam1 : fam == 1 ? fam2 : fam3;
        if (!(lc.code == want) || lc.code.cardinality() != 16) {
            expect_members(out, lc.code, want, o.descriptor);
            all_ok = false;
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    expect(out, all_ok, "every respectful order lands in its family's code");
    expect(out, respectful == 16, "16 respectful orders (1<2 or 3<2)");
    expect(out, counts[0] == 4 && counts[1] == 4 && counts[2] == 8,
           "family sizes " + std::to_string(counts[0]) + "/" + std::to_string(counts[1]) + "/" +
               std::to_string(counts[2]) + " for Z4{011,103} / Z4{011,102} / Z4{011,101}");
}

inline void member_f7(RegistryOutcome& out) {
    for (int variant = 0; variant < 2; ++variant) {
        auto cfg = config("gf:7", 3, variant == 0 ? "explicit:0<1<2<3<4<5<6" : "explicit:0<1<4<3<2<5<6",
                          "113,331,100", "member:C,D");
        cfg.codes = {{"C", "100,010"}, {"D", "001"}};
        auto s = prepare(cfg);
        auto lc = s.run();
        const auto& C = s.context.codes.at("C");
        const auto& D = s.context.codes.at("D");
        const std::string tag = variant == 0 ? "order 0<1<2<3<4<5<6: " : "order 0<1<4<3<2<5<6: ";
        if (variant == 0) {
            expect(out, selected_string(lc) == "550,100", tag + "selected " + selected_string(lc));
            expect_members(out, lc.code, C, tag + "result is C");
        } else {
            expect(out, selected_string(lc) == "006", tag + "selected " + selected_string(lc));
            expect_members(out, lc.code, D, tag + "result is D");
        }
        expect(out, s.space.coords(parse_vector(*s.ring, "550")) == parse_vector(*s.ring, "210"),
               tag + "coords(550) = (2,1,0)");
    }
}

inline void isotropic_z4_zero_false(RegistryOutcome& out) {
    auto s = prepare(config("zmod:4", 4, "natural", "standard", "selfdot==0 zero:false"));
    auto lc = s.run();
    expect_members(out, lc.code, span_of(s, "1111"), "C = Z4{1111}");
    expect(out, is_free(lc.code).free, "C is free");
    auto full = prepare(config("zmod:4", 4, "natural", "standard", "selfdot==0")).run();
    expect(out, lc.code.subset_of(full.code), "subcode of the P[0]-true lexicode");
}

inline void lee6_z4(RegistryOutcome& out) {
    auto a = prepare(config("zmod:4", 3, "natural", "standard", "lee>=6"));
    auto la = a.run();
    expect(out, la.code.cardinality() == 1, "P[0] false: zero code");
    auto b = prepare(config("zmod:4", 3, "natural", "standard", "(lee>=6) zero:true"));
    auto lb = b.run();
    expect_members(out, lb.code, span_of(b, "222"), "P[0] true: {000, 222}");
    expect(out, !is_free(lb.code).free, "{000, 222} is not free");
}

inline void homogeneous_z10(RegistryOutcome& out) {
    auto a = prepare(config("zmod:10", 3, "natural", "001,010,100", "homog>=2 zero:false"));
    auto w = make_weight(a.lattice, "homog");
    const char* table[] = {"0", "3/4", "5/4", "3/4", "5/4", "2", "5/4", "3/4", "5/4", "3/4"};
    bool table_ok = true;
    for (int x = 0; x < 10; ++x) table_ok = table_ok && w.values[x] == parse_rational(table[x]);
    expect(out, table_ok, "homogeneous weight table on Z10");
    auto la = a.run();
    expect_members(out, la.code, span_of(a, "012"), "P[0] false: C = R{012}");
    expect(out, stage_sizes(la) == "1,1,10,10", "stage sizes " + stage_sizes(la));
    auto fv = is_free(la.code);
    expect(out, fv.free && fv.rank == 1, "C is free of rank 1");

    auto b = prepare(config("zmod:10", 3, "natural", "001,010,100", "homog>=2 zero:true"));
    auto lb = b.run();
    expect_members(out, lb.code, span_of(b, "005,021,201"), "P[0] true: C' = R{005,021,201}");
    expect(out, lb.code.cardinality() == 50 && !is_free(lb.code).free, "|C'| = 50, not free");
    expect(out, intersect(la.code, lb.code).cardinality() == 1, "C and C' meet in {0}");
    auto mg = minimal_generating_set(lb.code);
    expect(out, mg.size() == 2 && code_from_generators(b.ring, 3, mg) == lb.code,
           "minimal generating set of size 2");
    expect_members(out, span_of(b, "201,820"), lb.code, "{201,820} generates C'");
}

inline void field_dimension(RegistryOutcome& out) {
    for (std::string ring : {"gf:2", "gf:3", "gf:4", "gf:5", "gf:7"}) {
        for (int rev = 0; rev < 2; ++rev) {
            auto cfg = config(ring, 3, "", rev ? "reverse" : "standard", "member:C,D");
            auto f = make_ring(ring);
            auto e = [&](std::size_t i) { return format_vector(*f, unit_vector(3, i, f->one())); };
            cfg.codes = {{"C", e(0) + "," + e(1)}, {"D", e(2)}};
            auto s = prepare(cfg);
            auto lc = s.run();
            const auto& want = s.context.codes.at(rev ? "D" : "C");
            expect_members(out, lc.code, want, ring + (rev ? " reverse basis gives D" : " standard basis gives C"));
        }
    }
}

inline void chain_basis_z4(RegistryOutcome& out) {
    for (int rev = 0; rev < 2; ++rev) {
        auto cfg = config("zmod:4", 3, "natural", rev ? "reverse" : "standard", "member:C,D");
        cfg.codes = {{"C", "200,020"}, {"D", "001"}};
        auto s = prepare(cfg);
        auto lc = s.run();
        const auto& want = s.context.codes.at(rev ? "D" : "C");
        expect_members(out, lc.code, want, rev ? "reverse basis gives D" : "standard basis gives C");
        expect(out, is_free(lc.code).free == (rev == 1), rev ? "D is free" : "C is not free");
    }
}

inline void self_dual_field(RegistryOutcome& out, const std::string& ring, const std::string& gens,
                            const std::string& stages) {
    // ascending element order 0 < 1 < ... < p-1 on a prime field
    std::string order = "explicit:0";
    for (int e = 1; e < std::stoi(ring.substr(3)); ++e) order += "<" + std::to_string(e);
    auto s = prepare(config(ring, 4, order, "reverse", "selfdot==0"));
    auto lc = s.run();
    expect_members(out, lc.code, span_of(s, gens), ring + " lexicode");
    if (!stages.empty()) expect(out, stage_sizes(lc) == stages, "stage sizes " + stage_sizes(lc));
    expect(out, dual_code(lc.code) == lc.code, "self-dual");
    auto t = check_maximal(lc.code, s.property);
    expect(out, t.holds(), std::string("maximal: ") + to_string(t.verdict));
}

inline void self_dual_z9(RegistryOutcome& out) {
    auto a = prepare(config("zmod:9", 4, "natural", "reverse", "selfdot==0"));
    auto la = a.run();
    expect_members(out, la.code, span_of(a, "0003,0030,0300,3000"), "P[0] true: Z9{0003,0030,0300,3000}");
    expect(out, la.code.cardinality() == 81 && !is_free(la.code).free, "81 members, not free");
    expect(out, dual_code(la.code) == la.code, "self-dual");
    auto b = prepare(config("zmod:9", 4, "natural", "reverse", "selfdot==0 zero:false"));
    auto lb = b.run();
    expect_members(out, lb.code, span_of(b, "0114,1048"), "P[0] false: Z9{0114,1048}");
    expect(out, lb.code.cardinality() == 81 && is_free(lb.code).free, "81 members, free");
    expect(out, dual_code(lb.code) == lb.code, "self-dual");
}

inline void type2_z4(RegistryOutcome& out) {
    auto s = prepare(config("zmod:4", 5, "natural", "reverse", "euclid%8==0"));
    auto lc = s.run();
    expect_members(out, lc.code, span_of(s, "00022,00202,02002,20002"), "C = Z4{00022,00202,02002,20002}");
    expect(out, is_self_orthogonal(lc.code), "self-orthogonal");
    expect(out, lc.code.subset_of(span_of(s, "00002,00020,00200,02000,20000")), "inside the Type I self-dual code");
}

inline void unit_weight_z4(RegistryOutcome& out) {
    auto s = prepare(config("zmod:4", 4, "natural", "reverse", "unit<=2"));
    auto lc = s.run();
    expect_members(out, lc.code, span_of(s, "0001,0010,0200,2000"), "C = Z4{0001,0010,0200,2000}");
    expect(out, lc.code.cardinality() == 64, "|C| = 64");
}

inline void ranksum_m2f2(RegistryOutcome& out) {
    auto s = prepare(config("mat:2,2", 3, m2f2_order(), "reverse", "ranksum>=2"));
    expect(out, s.space.order().respectful == Respectfulness::verified_true, "the 16-matrix order is respectful");
    WithinOrbit within{{4, {9, 6, 7, 11, 13, 14}}, {3, {12, 3, 15}}, {2, {8, 2, 10}}, {1, {4, 1, 5}}};
    auto built = make_respectful(s.lattice, canonical_extension(s.lattice), within, true);
    expect(out, built.sequence == s.space.order().sequence, "same order from the ideal extension");
    auto lc = s.run();
    expect_members(out, lc.code, span_of(s, "0;I;I,I;0;I"), "C = R{(0,I,I),(I,0,I)}");
    auto fv = is_free(lc.code);
    expect(out, lc.code.cardinality() == 256 && fv.free && fv.rank == 2, "256 members, free of rank 2");
}

inline void natural_lex_z4(RegistryOutcome& out) {
    auto s = prepare(config("zmod:4", 3, "natural", "reverse", "true"));
    std::vector<std::uint64_t> keys{0};
    for (std::size_t i = 1; i <= 3; ++i)
        for (const auto& v : s.space.level_set(i)) keys.push_back(pack(v.span(), 4));
    bool ok = keys.size() == 64;
    for (std::size_t k = 0; ok && k < keys.size(); ++k) ok = keys[k] == k;
    expect(out, ok, "levels run 000 < 001 < ... < 333");
}

inline void level_sets_z4(RegistryOutcome& out) {
    auto s = prepare(config("zmod:4", 3, "explicit:1<3<2<0", "standard", "true"));
    auto list = [&](std::size_t i) {
        std::vector<std::string> v;
        for (const auto& x : s.space.level_set(i)) v.push_back(format_vector(*s.ring, x));
        return v;
    };
    auto l1 = list(1), l2 = list(2);
    expect(out, l1 == std::vector<std::string>{"100", "300", "200"}, "level 1 = 100 < 300 < 200");
    expect(out, l2.size() == 12, "level 2 has 12 vectors");
    expect(out, l2.size() >= 5 && std::vector<std::string>(l2.begin(), l2.begin() + 5) ==
                                      std::vector<std::string>{"110", "310", "210", "010", "130"},
           "level 2 begins 110 < 310 < 210 < 010 < 130");
    expect(out, l2.size() >= 4 && std::vector<std::string>(l2.end() - 4, l2.end()) ==
                                      std::vector<std::string>{"120", "320", "220", "020"},
           "level 2 ends 120 < 320 < 220 < 020");
}

inline void respectful_z12(RegistryOutcome& out) {
    auto ring = make_ring("zmod:12");
    auto lat = ideal_lattice(ring);
    expect(out, lat.size() == 6, "6 ideals");
    std::vector<std::string> orbits;
    for (std::size_t i = 1; i < lat.size(); ++i) {
        std::string o;
        for (auto g : lat.ideals[i].generators) o += (o.empty() ? "" : ",") + ring->name(g);
        orbits.push_back("{" + o + "}");
    }
    std::sort(orbits.begin(), orbits.end());
    expect(out, orbits == std::vector<std::string>{"{1,5,7,11}", "{2,10}", "{3,9}", "{4,8}", "{6}"},
           "orbits {1,5,7,11} {2,10} {3,9} {4,8} {6}");
    auto ext = canonical_extension(lat);
    std::string ext_s;
    for (auto i : ext.sequence) ext_s += "(" + ring->name(lat.ideals[i].canonical_gen) + ")";
    expect(out, ext_s == "(0)(6)(4)(3)(2)(1)", "extension " + ext_s);
    auto o = make_respectful(lat, ext);
    std::string seq;
    for (auto e : o.sequence) seq += (seq.empty() ? "" : "<") + ring->name(e);
    expect(out, seq == "1<5<7<11<2<10<3<9<4<8<6<0", "order " + seq);
    expect(out, is_respectful(lat, o).respectful && respects_extension(lat, o, ext), "respectful, respects L");
}

}  // namespace detail

inline const std::vector<RegistryEntry>& registry() {
    using namespace detail;
    static const std::vector<RegistryEntry> entries{
        {"5.1a", "Z4^4 selfdot==0, natural order", isotropic_z4},
        {"5.1b", "Z4^4 selfdot==0, order 0<2<1<3", isotropic_z4_unrespectful},
        {"5.3a", "Z4^3 lee>=2 under every respectful order", lee_orderings_z4},
        {"5.3b", "F7^3 membership in C or D, basis 113,331,100", member_f7},
        {"5.4", "Z4^4 selfdot==0 with P[0] false", isotropic_z4_zero_false},
        {"5.5", "Z4^3 lee>=6 with P[0] toggled", lee6_z4},
        {"5.6", "Z10^3 homogeneous weight >= 2", homogeneous_z10},
        {"5.7a", "field codes C, D under two bases", field_dimension},
        {"5.7b", "Z4^3 codes C, D under two bases", chain_basis_z4},
        {"5.8a", "F5^4 selfdot==0", [](RegistryOutcome& o) { self_dual_field(o, "gf:5", "0012,1200", "1,1,5,5,25"); }},
        {"5.8b", "F7^4 selfdot==0", [](RegistryOutcome& o) { self_dual_field(o, "gf:7", "0123,1035", ""); }},
        {"5.8c", "Z9^4 selfdot==0 with P[0] toggled", self_dual_z9},
        {"5.9", "Z4^5 euclid%8==0", type2_z4},
        {"5.10", "Z4^4 unit<=2", unit_weight_z4},
        {"5.11", "M2(F2)^3 ranksum>=2", ranksum_m2f2},
        {"3.9a", "Z4^3 natural lexicographic order", natural_lex_z4},
        {"3.9b", "Z4^3 level sets under 1<3<2<0", level_sets_z4},
        {"3.6a", "Z12 respectful order from its ideal extension", respectful_z12},
    };
    return entries;
}

/// Runs one entry; errors become a failing line.
inline RegistryOutcome reproduce(const RegistryEntry& e) {
    RegistryOutcome out{e.id, e.title, true, {}};
    try {
        e.run(out);
    } catch (const std::exception& ex) {
        detail::expect(out, false, std::string("error: ") + ex.what());
    }
    return out;
}

inline const RegistryEntry* find_entry(std::string_view id) {
    for (const auto& e : registry())
        if (e.id == id) return &e;
    return nullptr;
}

}  // namespace lexiring
