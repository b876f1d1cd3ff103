#include <gtest/gtest.h>

#include "support.hpp"

using namespace lexiring;
using namespace lexiring::testing;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

Property prop(const std::string& ring, std::size_t n, const std::string& expr, PropertyContext ctx = {}) {
    return make_property(ideal_lattice(make_ring(ring)), n, expr, ctx);
}

bool at(const Property& p, const std::string& v) { return p(parse_vector(*p.ring(), v, p.n())); }

/// Homogeneous weight by linear algebra over Q on orbit values: one unknown per nonzero
/// ideal, one equation per nonzero ideal (average 1 over it), solved by Gaussian elimination.
std::vector<Rational> homogeneous_by_elimination(const FiniteRing& r, const IdealLattice& lat) {
    const std::size_t k = lat.size() - 1;
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1, Rational(0)));
    for (std::size_t row = 0; row < k; ++row) {
        for (auto y : lat.ideals[row + 1].members)
            if (y != 0) m[row][lat.ideal_of[y] - 1] += Rational(1);
        m[row][k] = Rational(static_cast<std::int64_t>(lat.ideals[row + 1].size()));
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (m[p][c] == Rational(0)) ++p;
        std::swap(m[p], m[c]);
        for (std::size_t row = 0; row < k; ++row) {
            if (row == c || m[row][c] == Rational(0)) continue;
            const Rational f = m[row][c] / m[c][c];
            for (std::size_t j = c; j <= k; ++j) m[row][j] -= f * m[c][j];
        }
    }
    std::vector<Rational> w(r.size(), Rational(0));
    for (std::size_t a = 1; a < r.size(); ++a) {
        const auto i = lat.ideal_of[a] - 1;
        w[a] = m[i][k] / m[i][i];
    }
    return w;
}

}  // namespace

TEST(Weights, HomogeneousOnZ10MatchesTable) {
    auto lat = ideal_lattice(make_ring("zmod:10"));
    auto w = make_weight(lat, "homog");
    const std::vector<Rational> table{q(0),    q(3, 4), q(5, 4), q(3, 4), q(5, 4),
                                      q(2),    q(5, 4), q(3, 4), q(5, 4), q(3, 4)};
    EXPECT_EQ(w.values, table);
}

TEST(Weights, HomogeneousOnZ4IsLee) {
    auto lat = ideal_lattice(make_ring("zmod:4"));
    EXPECT_EQ(make_weight(lat, "homog").values, (std::vector<Rational>{q(0), q(1), q(2), q(1)}));
    EXPECT_EQ(make_weight(lat, "homog").values, make_weight(lat, "lee").values);
}

TEST(Weights, HomogeneousAgreesWithEliminationOnEveryRingUpTo64) {
    for (const char* spec : {"zmod:2", "zmod:4", "zmod:6", "zmod:8", "zmod:9", "zmod:10", "zmod:12", "zmod:30",
                             "zmod:36", "zmod:64", "gf:4", "gf:9", "gf:25", "gf:64", "chain:2,2", "chain:2,3",
                             "chain:3,2", "chain:4,3", "mat:2,2"}) {
        auto r = make_ring(spec);
        auto lat = ideal_lattice(r);
        auto w = make_weight(lat, "homog");
        EXPECT_EQ(w.values, homogeneous_by_elimination(*r, lat)) << spec;
        EXPECT_EQ(homogeneous_axiom_failure(lat, w.values), std::nullopt) << spec;
    }
}

TEST(Weights, SimpleWeights) {
    auto z6 = ideal_lattice(make_ring("zmod:6"));
    EXPECT_EQ(make_weight(z6, "lee")(4), q(2));
    auto m = ideal_lattice(make_ring("mat:2,2"));
    EXPECT_EQ(make_weight(m, "ranksum")(m.ring->element("[[1,1],[0,0]]")), q(1));
    EXPECT_EQ(make_weight(m, "ranksum")(m.ring->one()), q(2));
    EXPECT_THROW(make_weight(m, "lee"), SpecError);
    EXPECT_THROW(make_weight(z6, "ranksum"), SpecError);
    EXPECT_THROW(make_weight(z6, "taxicab"), SpecError);
}

TEST(Weights, VectorWeights) {
    auto z4 = ideal_lattice(make_ring("zmod:4"));
    auto e = make_weight(z4, "euclid");
    EXPECT_EQ(vector_weight(e, parse_vector(*z4.ring, "222").span()), q(12));
    EXPECT_EQ(vector_weight(e, parse_vector(*z4.ring, "00022").span()), q(8));
    auto z10 = ideal_lattice(make_ring("zmod:10"));
    auto h = make_weight(z10, "homog");
    EXPECT_EQ(vector_weight(h, parse_vector(*z10.ring, "012").span()), q(2));
    EXPECT_EQ(vector_weight(h, Vector(5).span()), q(0));
}

TEST(Weights, UnitInvarianceHoldsForOrbitConstantWeights) {
    for (const char* spec : {"zmod:10", "zmod:12", "chain:3,2", "mat:2,2", "gf:9"}) {
        auto r = make_ring(spec);
        auto lat = ideal_lattice(r);
        std::vector<std::string> kinds{"hamming", "homog", "unit"};
        if (r->family() == RingFamily::mat) kinds.push_back("ranksum");
        for (const auto& kind : kinds) {
            auto w = make_weight(lat, kind);
            for (std::size_t a = 0; a < r->size(); ++a)
                for (auto u : r->units()) EXPECT_EQ(w(r->mul(u, static_cast<Elem>(a))), w(static_cast<Elem>(a)));
            EXPECT_TRUE(constant_on_unit_orbits(*r, w.values));
        }
    }
    // Lee on Z5 is not constant on unit orbits: 1 and 2 are both units.
    auto z5 = ideal_lattice(make_ring("zmod:5"));
    EXPECT_FALSE(constant_on_unit_orbits(*z5.ring, make_weight(z5, "lee").values));
}

TEST(Properties, Atoms) {
    auto lee = prop("zmod:4", 3, "lee>=2");
    EXPECT_TRUE(at(lee, "011"));
    EXPECT_FALSE(at(lee, "001"));
    EXPECT_TRUE(at(prop("zmod:4", 4, "selfdot==0"), "1111"));
    EXPECT_TRUE(at(prop("zmod:4", 5, "euclid%8==0"), "00022"));
    auto p = prop("zmod:4", 3, "(lee>=6) zero:true");
    EXPECT_EQ(p.zero_policy(), ZeroPolicy::force_true);
    for (const auto& w : all_words(*p.ring(), 3)) {
        const auto s = format_vector(*p.ring(), Vector(w));
        EXPECT_EQ(at(p, s), s == "000" || s == "222") << s;
    }
    EXPECT_TRUE(at(prop("zmod:6", 2, "sumin:2"), "31"));
    EXPECT_FALSE(at(prop("zmod:6", 2, "sumin:2"), "30"));
    EXPECT_TRUE(at(prop("zmod:10", 3, "homog>=2"), "012"));
    EXPECT_FALSE(at(prop("zmod:10", 3, "homog>=9/4"), "012"));
    EXPECT_TRUE(at(prop("zmod:10", 3, "homog<=2"), "012"));
    EXPECT_TRUE(at(prop("zmod:10", 3, "hamming==2"), "012"));
    EXPECT_TRUE(at(prop("gf:3", 1, "eq:2"), "2"));
    EXPECT_FALSE(at(prop("gf:3", 1, "eq:2"), "1"));
}

TEST(Properties, ZeroTogglePreservesOffZeroValues) {
    auto base = prop("zmod:4", 3, "lee>=2");
    for (auto z : {ZeroPolicy::force_true, ZeroPolicy::force_false}) {
        auto t = base.with_zero_policy(z);
        EXPECT_EQ(t.at_zero(), z == ZeroPolicy::force_true);
        for (const auto& w : all_words(*base.ring(), 3)) {
            if (std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; })) continue;
            EXPECT_EQ(t(w), base(w));
        }
    }
}

TEST(Properties, CombinatorsEvaluatePointwise) {
    auto lat = ideal_lattice(make_ring("zmod:4"));
    auto a = make_property(lat, 2, "lee>=2");
    auto b = make_property(lat, 2, "sumin:2");
    auto both = make_property(lat, 2, "and(lee>=2,sumin:2)");
    auto either = make_property(lat, 2, "or(lee>=2,sumin:2)");
    for (const auto& w : all_words(*a.ring(), 2)) {
        EXPECT_EQ(both(w), a(w) && b(w));
        EXPECT_EQ(either(w), a(w) || b(w));
        EXPECT_EQ(and_(a, b)(w), both(w));
        EXPECT_EQ(or_(a, b)(w), either(w));
    }
}

TEST(Properties, MemberAtomUsesNamedCodes) {
    auto f7 = make_ring("gf:7");
    PropertyContext ctx;
    ctx.codes.emplace("C", code_from_generators(f7, 3, parse_vector_list(*f7, "100,010")));
    ctx.codes.emplace("D", code_from_generators(f7, 3, parse_vector_list(*f7, "001")));
    auto p = make_property(ideal_lattice(f7), 3, "member:C,D", ctx);
    EXPECT_TRUE(at(p, "340"));
    EXPECT_TRUE(at(p, "005"));
    EXPECT_FALSE(at(p, "101"));
    EXPECT_THROW(make_property(ideal_lattice(f7), 3, "member:E", ctx), SpecError);
}

TEST(Properties, GrammarErrors) {
    for (const char* bad : {"lee>>2", "and(lee>=2)", "bogus", "lee>=2 zero:maybe", "homog>=", "eq:12", "(lee>=2"})
        EXPECT_THROW(prop("zmod:4", 3, bad), SpecError) << bad;
    EXPECT_THROW(prop("mat:2,2", 2, "selfdot==0"), SpecError);
    auto lat = ideal_lattice(make_ring("zmod:4"));
    EXPECT_THROW(and_(make_property(lat, 2, "true"), make_property(lat, 3, "true")), PreconditionError);
}

TEST(Multiplicativity, HammingIsVerified) {
    for (const char* ring : {"zmod:4", "zmod:6", "mat:2,2", "chain:3,2"}) {
        auto p = prop(ring, 2, "hamming>=2");
        EXPECT_TRUE(verify_left_multiplicative(p).multiplicative) << ring;
        EXPECT_EQ(p.multiplicativity(), Multiplicativity::verified);
    }
}

TEST(Multiplicativity, SingletonPropertyOnZ3IsRefuted) {
    auto p = prop("zmod:3", 1, "eq:2");
    auto v = verify_left_multiplicative(p);
    EXPECT_FALSE(v.multiplicative);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->first, 2);
    EXPECT_EQ(format_vector(*p.ring(), v.witness->second), "2");
    EXPECT_EQ(p.multiplicativity(), Multiplicativity::refuted);
}

TEST(Multiplicativity, SelfdotOnMatricesIsRefutedUnderOverride) {
    PropertyContext ctx;
    ctx.allow_noncommutative_selfdot = true;
    auto p = prop("mat:2,2", 2, "selfdot==0", ctx);
    EXPECT_EQ(p.multiplicativity(), Multiplicativity::unknown);
    auto v = verify_left_multiplicative(p);
    EXPECT_FALSE(v.multiplicative);
    ASSERT_TRUE(v.witness);
    // Re-check the witness directly.
    const auto& r = *p.ring();
    const auto x = v.witness->second;
    EXPECT_NE(p(scale(r, v.witness->first, x)), p(x));
}

TEST(Multiplicativity, VerifierMatchesDirectScan) {
    for (const char* expr : {"lee>=2", "homog>=2", "euclid%8==0", "sumin:2", "and(lee>=2,hamming<=1)",
                             "or(eq:13,lee==4)"}) {
        auto p = prop("zmod:4", 2, expr);
        const auto& r = *p.ring();
        bool direct = true;
        for (const auto& w : all_words(r, 2))
            for (auto u : r.units()) {
                Word uw(w.size());
                for (std::size_t k = 0; k < w.size(); ++k) uw[k] = r.mul(u, w[k]);
                direct = direct && p(uw) == p(w);
            }
        EXPECT_EQ(verify_left_multiplicative(p).multiplicative, direct) << expr;
    }
}

TEST(Multiplicativity, CombinedStatus) {
    auto lat = ideal_lattice(make_ring("zmod:4"));
    auto a = make_property(lat, 2, "hamming>=1");
    auto b = make_property(lat, 2, "lee>=2");
    EXPECT_EQ(and_(a, b).multiplicativity(), Multiplicativity::declared);
    verify_left_multiplicative(a);
    verify_left_multiplicative(b);
    EXPECT_EQ(and_(a, b).multiplicativity(), Multiplicativity::verified);
    EXPECT_EQ(or_(a, make_property(lat, 2, "eq:11")).multiplicativity(), Multiplicativity::unknown);
    auto c = and_(a, b);
    EXPECT_TRUE(verify_left_multiplicative(c).multiplicative);
}
