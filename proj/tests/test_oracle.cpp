#include <gtest/gtest.h>

#include "support.hpp"

using namespace lexiring;
using namespace lexiring::testing;

namespace {

RunConfig config(std::string ring, std::size_t n, std::string order, std::string basis, std::string prop) {
    RunConfig c;
    c.ring = std::move(ring);
    c.n = n;
    c.order = std::move(order);
    c.basis = std::move(basis);
    c.property = std::move(prop);
    return c;
}

Code span(const Session& s, const std::string& gens) {
    return code_from_generators(s.ring, s.space.n(), parse_vector_list(*s.ring, gens, s.space.n()));
}

}  // namespace

TEST(Exhaustive, HoldsOnRespectfulRun) {
    auto s = prepare(config("zmod:4", 4, "natural", "standard", "selfdot==0"));
    auto lc = s.run();
    EXPECT_TRUE(check_exhaustive(lc, s.space, s.property).holds());
    EXPECT_TRUE(check_property_holds(lc, s.property).holds());
}

TEST(Exhaustive, ViolatedOnUnrespectfulRunWithWitness1111) {
    auto cfg = config("zmod:4", 4, "explicit:0<2<1<3", "standard", "selfdot==0");
    cfg.allow_unrespectful = true;
    auto s = prepare(cfg);
    auto lc = s.run();
    auto t = check_exhaustive(lc, s.space, s.property);
    EXPECT_EQ(t.verdict, Verdict::violated);
    ASSERT_TRUE(t.witness);
    EXPECT_EQ(*t.witness, "1111 at level 4");
    // Re-check the witness: every unit-scaled shift by C_4 is isotropic, yet 1111 is outside.
    const auto x = parse_vector(*s.ring, "1111");
    EXPECT_FALSE(lc.code.contains(x));
    for (auto g : lc.gamma)
        for (const auto& c : lc.code.members()) EXPECT_TRUE(s.property(add(*s.ring, scale(*s.ring, g, x), c)));
}

TEST(Exhaustive, HoldsOnZeroCode) {
    auto s = prepare(config("zmod:4", 3, "natural", "standard", "lee>=6 zero:false"));
    auto lc = s.run();
    EXPECT_EQ(lc.code.cardinality(), 1u);
    EXPECT_TRUE(check_exhaustive(lc, s.space, s.property).holds());
}

TEST(Maximal, SelfDualAndIsotropicCodes) {
    auto f5 = prepare(config("gf:5", 4, "explicit:0<1<2<3<4", "reverse", "selfdot==0"));
    EXPECT_TRUE(check_maximal(f5.run().code, f5.property).holds());
    auto z4 = prepare(config("zmod:4", 4, "natural", "standard", "selfdot==0"));
    EXPECT_TRUE(check_maximal(z4.run().code, z4.property).holds());
    auto all = prepare(config("zmod:6", 2, "natural", "standard", "true"));
    auto full = all.run();
    EXPECT_EQ(full.code.cardinality(), 36u);
    EXPECT_TRUE(check_maximal(full.code, all.property).holds());
}

TEST(Maximal, DetectsANonMaximalCode) {
    auto s = prepare(config("zmod:4", 4, "natural", "standard", "selfdot==0"));
    auto t = check_maximal(span(s, "2000"), s.property);
    EXPECT_EQ(t.verdict, Verdict::violated);
    EXPECT_TRUE(t.witness);
    EXPECT_EQ(check_maximal(span(s, "2000"), s.property.with_zero_policy(ZeroPolicy::force_false)).verdict,
              Verdict::not_applicable);
}

TEST(MaximalFree, Cases) {
    auto z10 = prepare(config("zmod:10", 3, "natural", "001,010,100", "homog>=2 zero:false"));
    EXPECT_TRUE(check_maximal_free(span(z10, "012"), z10.property).holds());
    auto z4 = prepare(config("zmod:4", 4, "natural", "standard", "selfdot==0 zero:false"));
    EXPECT_TRUE(check_maximal_free(span(z4, "1111"), z4.property).holds());
    auto none = prepare(config("zmod:4", 2, "natural", "standard", "false"));
    EXPECT_TRUE(check_maximal_free(zero_code(none.ring, 2), none.property).holds());
    // {1111} is not maximal for P[0] true, where other isotropic vectors join.
    EXPECT_EQ(check_maximal_free(span(z4, "1111"), z4.property.with_zero_policy(ZeroPolicy::force_true)).verdict,
              Verdict::not_applicable);
}

TEST(GammaSufficiency, Cases) {
    auto s = prepare(config("zmod:4", 4, "natural", "standard", "selfdot==0"));
    auto lc = s.run();
    auto t = check_gamma_sufficiency(lc.stages[3], s.property, parse_vector(*s.ring, "1111"), lc.gamma);
    EXPECT_TRUE(t.holds());
    EXPECT_EQ(t.note, "gamma side true, all-scalars side true");
    auto f = check_gamma_sufficiency(lc.stages[3], s.property, parse_vector(*s.ring, "1000"), lc.gamma);
    EXPECT_TRUE(f.holds());
    EXPECT_EQ(f.note, "gamma side false, all-scalars side false");
}

TEST(GammaSufficiency, FailsForTheNonMultiplicativeSingleton) {
    // P[x] iff x = 2 on Z3; gamma = {1}; C = {0}. With x = 2 the gamma side only sees 2,
    // which passes, while the scalar 2 gives 2*2 = 1, which fails.
    auto cfg = config("zmod:3", 1, "natural", "standard", "eq:2");
    auto s = prepare(cfg);
    auto t = check_gamma_sufficiency(zero_code(s.ring, 1), s.property, parse_vector(*s.ring, "2"), {1});
    EXPECT_EQ(t.verdict, Verdict::violated);
    // With x = 1 both sides are false, so the equivalence survives there.
    EXPECT_TRUE(check_gamma_sufficiency(zero_code(s.ring, 1), s.property, parse_vector(*s.ring, "1"), {1}).holds());
}

TEST(HomogeneousUnique, KnownRings) {
    for (const char* spec : {"zmod:10", "zmod:4", "zmod:12", "chain:3,2", "mat:2,2"}) {
        auto lat = ideal_lattice(make_ring(spec));
        EXPECT_TRUE(check_homogeneous_unique(lat, make_weight(lat, "homog")).holds()) << spec;
    }
    for (int qq : {2, 3, 4, 5, 7, 8, 9}) {
        auto lat = ideal_lattice(make_ring("gf:" + std::to_string(qq)));
        auto w = make_weight(lat, "homog");
        EXPECT_EQ(w(0), Rational(0));
        for (std::size_t a = 1; a < lat.ring->size(); ++a) EXPECT_EQ(w(static_cast<Elem>(a)), Rational(qq, qq - 1));
        EXPECT_TRUE(check_homogeneous_unique(lat, w).holds());
    }
    // Lee on Z6 is not homogeneous.
    auto z6 = ideal_lattice(make_ring("zmod:6"));
    EXPECT_EQ(check_homogeneous_unique(z6, make_weight(z6, "lee")).verdict, Verdict::violated);
}

TEST(FreeSelected, HoldsAndDetectsDependence) {
    auto s = prepare(config("zmod:10", 3, "natural", "001,010,100", "homog>=2 zero:false"));
    auto lc = s.run();
    EXPECT_TRUE(check_free_selected(lc, s.property).holds());
    auto bad = lc;
    bad.selected.push_back({3, parse_vector(*s.ring, "024")});
    EXPECT_EQ(check_free_selected(bad, s.property).verdict, Verdict::violated);
}

TEST(GammaInvariance, TwoGeneratorSets) {
    for (const char* ring : {"zmod:12", "chain:3,2", "zmod:9"}) {
        auto s = prepare(config(ring, 3, "", "standard", "hamming>=2"));
        EXPECT_TRUE(check_gamma_invariance(s.space, s.lattice, s.property, alternate_gamma(s.lattice)).holds())
            << ring;
    }
}

TEST(DualCardinality, SelfOrthogonalCodes) {
    auto s = prepare(config("zmod:4", 5, "natural", "reverse", "euclid%8==0"));
    EXPECT_TRUE(check_dual_cardinality(s.run().code).holds());
    auto z6 = prepare(config("zmod:6", 3, "natural", "standard", "true"));
    EXPECT_TRUE(check_dual_cardinality(span(z6, "123,030")).holds());
}

TEST(Embedding, FreeCodesBecomeLexicodeSubcodes) {
    auto z10 = prepare(config("zmod:10", 3, "natural", "standard", "homog>=2"));
    auto e = embed_as_lexicode(z10.lattice, span(z10, "012"), z10.property);
    EXPECT_TRUE(e.report.holds());
    EXPECT_EQ(format_vector(*z10.ring, e.lexicode.selected.front().vector), "012");
    EXPECT_TRUE(span(z10, "012").subset_of(e.lexicode.code));

    auto f7 = make_ring("gf:7");
    RunConfig cfg = config("gf:7", 3, "", "standard", "member:C,D");
    cfg.codes = {{"C", "100,010"}, {"D", "001"}};
    auto s = prepare(cfg);
    auto d = span(s, "001");
    auto e2 = embed_as_lexicode(s.lattice, d, s.property);
    EXPECT_TRUE(e2.report.holds());
    EXPECT_EQ(format_vector(*f7, e2.basis.vectors.front()), "001");
    EXPECT_TRUE(d.subset_of(e2.lexicode.code));

    auto z = embed_as_lexicode(z10.lattice, zero_code(z10.ring, 3), z10.property);
    EXPECT_TRUE(z.report.holds());
    EXPECT_THROW(embed_as_lexicode(z10.lattice, span(z10, "005"), z10.property), PreconditionError);
}

TEST(Reports, DigestsAreDeterministic) {
    auto s = prepare(config("zmod:4", 4, "natural", "standard", "selfdot==0"));
    auto a = check_exhaustive(s.run(), s.space, s.property);
    auto b = check_exhaustive(s.run(), s.space, s.property);
    EXPECT_EQ(a.inputs_digest, b.inputs_digest);
    EXPECT_EQ(a.inputs_digest.size(), 16u);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Registry, EveryExampleReproduces) {
    for (const auto& e : registry()) {
        auto out = reproduce(e);
        std::string detail;
        for (const auto& l : out.lines) detail += l + "\n";
        EXPECT_TRUE(out.pass) << e.id << "\n" << detail;
    }
    EXPECT_EQ(registry().size(), 18u);
}
