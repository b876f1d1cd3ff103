#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace lexiring;
using namespace lexiring::testing;

namespace {

const std::vector<std::string> kRings = {"zmod:2",  "zmod:4",    "zmod:6",    "zmod:9",  "zmod:10", "zmod:12",
                                         "gf:2",    "gf:4",      "gf:8",      "gf:9",    "gf:25",   "chain:2,2",
                                         "chain:3,2", "chain:2,3", "mat:2,2", "mat:2,3"};

std::vector<Elem> ints(std::initializer_list<int> xs) {
    std::vector<Elem> out;
    for (int x : xs) out.push_back(static_cast<Elem>(x));
    return out;
}

}  // namespace

TEST(Ring, AxiomsHoldOnEveryFamily) {
    for (const auto& spec : kRings) {
        auto r = make_ring(spec);
        EXPECT_EQ(verify_ring_axioms(*r), std::nullopt) << spec;
    }
}

TEST(Ring, ZmodMatchesIntegerArithmetic) {
    for (int m = 2; m <= 30; ++m) {
        auto r = make_ring("zmod:" + std::to_string(m));
        ASSERT_EQ(r->size(), static_cast<std::size_t>(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                ASSERT_EQ(r->add(static_cast<Elem>(a), static_cast<Elem>(b)), (a + b) % m);
                ASSERT_EQ(r->mul(static_cast<Elem>(a), static_cast<Elem>(b)), (a * b) % m);
            }
        std::size_t coprime = 0;
        for (int a = 1; a < m; ++a) coprime += std::gcd(a, m) == 1;
        EXPECT_EQ(r->units().size(), coprime) << m;
    }
}

TEST(Ring, UnitCountsMatchBruteForce) {
    for (const auto& spec : kRings) {
        auto r = make_ring(spec);
        EXPECT_EQ(r->units(), brute_units(*r)) << spec;
    }
}

TEST(Ring, FieldsHaveEveryNonzeroElementInvertible) {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
        auto r = make_ring("gf:" + std::to_string(q));
        EXPECT_EQ(r->size(), static_cast<std::size_t>(q));
        EXPECT_EQ(r->units().size(), static_cast<std::size_t>(q - 1)) << q;
        EXPECT_TRUE(r->is_commutative());
    }
    EXPECT_EQ(make_ring("gf:9")->units().size(), 8u);
}

TEST(Ring, TwoByTwoMatricesOverF2) {
    auto r = make_ring("mat:2,2");
    EXPECT_EQ(r->size(), 16u);
    EXPECT_FALSE(r->is_commutative());
    // Invertible matrices are those with nonzero determinant ad - bc over F2.
    std::size_t det_nonzero = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) det_nonzero += ((a * d + b * c) % 2) == 1;
    EXPECT_EQ(r->units().size(), det_nonzero);
    EXPECT_EQ(det_nonzero, 6u);
    EXPECT_EQ(r->matrix_ranks()[r->element("[[1,1],[0,0]]")], 1);
}

TEST(Ring, ChainRingUnitsAreOneAndOnePlusU) {
    auto r = make_ring("chain:2,2");
    EXPECT_EQ(r->units(), (std::vector<Elem>{r->element("1"), r->element("1+u")}));
    const Elem u = r->element("u");
    EXPECT_EQ(r->mul(u, u), 0);
}

TEST(Ring, RejectsMalformedDescriptors) {
    for (const char* bad : {"zmod", "zmod:1", "zmod:300", "gf:6", "gf:12", "chain:6,2", "mat:2", "poly:3", "zmod:x"})
        EXPECT_THROW(make_ring(bad), SpecError) << bad;
}

TEST(Lattice, Z12HasSixIdealsAndTheDiamond) {
    auto lat = ideal_lattice(make_ring("zmod:12"));
    ASSERT_EQ(lat.size(), 6u);
    std::vector<std::vector<Elem>> gens;
    for (const auto& I : lat.ideals) gens.push_back(I.generators);
    EXPECT_EQ(gens, (std::vector<std::vector<Elem>>{ints({0}), ints({6}), ints({4, 8}), ints({3, 9}), ints({2, 10}),
                                                    ints({1, 5, 7, 11})}));
    // Covering pairs: (0)<(6),(4); (6)<(3),(2); (4)<(2); (3),(2)<(1).
    EXPECT_EQ(lat.hasse, (std::vector<std::pair<std::size_t, std::size_t>>{
                             {0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}));
    EXPECT_TRUE(lat.is_plir);
}

TEST(Lattice, TwoByTwoMatricesHaveFiveLeftIdeals) {
    auto lat = ideal_lattice(make_ring("mat:2,2"));
    ASSERT_EQ(lat.size(), 5u);
    EXPECT_EQ(lat.ideals[0].size(), 1u);
    for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(lat.ideals[i].size(), 4u);
    EXPECT_EQ(lat.ideals[4].size(), 16u);
    EXPECT_TRUE(lat.is_plir);
}

TEST(Lattice, Z4IsAChainWithGeneratorSetOneAndTwo) {
    auto lat = ideal_lattice(make_ring("zmod:4"));
    ASSERT_EQ(lat.size(), 3u);
    EXPECT_TRUE(lat.below[0][1] && lat.below[1][2] && lat.below[0][2]);
    std::vector<Elem> g = lat.gamma;
    std::sort(g.begin(), g.end());
    EXPECT_EQ(g, ints({1, 2}));
}

TEST(Lattice, IdealsAreExactlyTheBruteForcePrincipalIdeals) {
    for (const auto& spec : kRings) {
        auto r = make_ring(spec);
        auto lat = ideal_lattice(r);
        std::set<std::set<Elem>> expected;
        for (std::size_t x = 0; x < r->size(); ++x) expected.insert(ideal(*r, static_cast<Elem>(x)));
        std::set<std::set<Elem>> got;
        for (const auto& I : lat.ideals) got.emplace(I.members.begin(), I.members.end());
        EXPECT_EQ(got, expected) << spec;
        for (std::size_t x = 0; x < r->size(); ++x) {
            const auto& I = lat.ideal_of_element(static_cast<Elem>(x));
            EXPECT_EQ(std::set<Elem>(I.members.begin(), I.members.end()), ideal(*r, static_cast<Elem>(x)));
        }
    }
}

TEST(Lattice, UnitOrbitsAreGeneratorSets) {
    for (const auto& spec : kRings) {
        auto r = make_ring(spec);
        auto lat = ideal_lattice(r);
        for (const auto& I : lat.ideals) {
            std::set<Elem> orbit;
            for (auto u : r->units()) orbit.insert(r->mul(u, I.canonical_gen));
            std::set<Elem> gens;
            for (std::size_t x = 0; x < r->size(); ++x)
                if (ideal(*r, static_cast<Elem>(x)) == std::set<Elem>(I.members.begin(), I.members.end()))
                    gens.insert(static_cast<Elem>(x));
            EXPECT_EQ(orbit, gens) << spec << " ideal R" << r->name(I.canonical_gen);
            EXPECT_EQ(std::vector<Elem>(gens.begin(), gens.end()), I.generators);
        }
    }
}

TEST(Lattice, ContainmentMatchesSetInclusion) {
    for (const auto& spec : kRings) {
        auto lat = ideal_lattice(make_ring(spec));
        for (std::size_t i = 0; i < lat.size(); ++i)
            for (std::size_t j = 0; j < lat.size(); ++j) {
                const auto& a = lat.ideals[i].members;
                const auto& b = lat.ideals[j].members;
                const bool proper = a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
                EXPECT_EQ(lat.below[i][j], proper) << spec << " " << i << "," << j;
            }
    }
}

TEST(Lattice, GammaHasOneGeneratorPerNonzeroIdeal) {
    for (const auto& spec : kRings) {
        auto lat = ideal_lattice(make_ring(spec));
        ASSERT_EQ(lat.gamma.size(), lat.size() - 1) << spec;
        for (std::size_t i = 1; i < lat.size(); ++i) EXPECT_EQ(lat.ideal_of[lat.gamma[i - 1]], i);
        auto alt = alternate_gamma(lat);
        EXPECT_EQ(validate_gamma(lat, alt).size(), alt.size());
    }
    auto lat = ideal_lattice(make_ring("zmod:4"));
    EXPECT_THROW(validate_gamma(lat, ints({1, 3})), SpecError);
    EXPECT_THROW(validate_gamma(lat, ints({2})), SpecError);
}

TEST(Lattice, MobiusOfZ12) {
    auto lat = ideal_lattice(make_ring("zmod:12"));
    // Ideal order (0),(6),(4),(3),(2),(1); the lattice is divisors of 12 reversed.
    EXPECT_EQ(mobius_from_zero(lat), (std::vector<std::int64_t>{1, -1, -1, 0, 1, 0}));
}

TEST(UnitCombination, SolvesTheStatedCases) {
    auto z4 = make_ring("zmod:4");
    auto a = solve_unit_combination(*z4, 2, 1, 1);
    EXPECT_EQ(a.t, 0);
    EXPECT_EQ(a.u, 1);
    auto z6 = make_ring("zmod:6");
    auto b = solve_unit_combination(*z6, 2, 3, 1);
    EXPECT_EQ(b.t, 1);
    EXPECT_EQ(b.u, 5);
    // Z4 with p=1, q=2: t=1 already gives 1+2 = 3, a unit; any valid (t,u) is accepted.
    auto c = solve_unit_combination(*z4, 1, 2, 1);
    EXPECT_TRUE(z4->is_unit(c.u));
    EXPECT_EQ(z4->add(z4->mul(c.t, 1), 2), z4->mul(c.u, 1));
}

TEST(UnitCombination, ExistsForEveryPairInTheTestRings) {
    for (const auto& spec : kRings) {
        auto r = make_ring(spec);
        if (r->size() > 32) continue;
        auto lat = ideal_lattice(r);
        for (std::size_t p = 0; p < r->size(); ++p)
            for (std::size_t q = 0; q < r->size(); ++q) {
                // Rp + Rq is principal in these rings; find d among the canonical generators.
                std::set<Elem> sum;
                for (auto x : ideal(*r, static_cast<Elem>(p)))
                    for (auto y : ideal(*r, static_cast<Elem>(q))) sum.insert(r->add(x, y));
                std::optional<Elem> d;
                for (const auto& I : lat.ideals)
                    if (std::set<Elem>(I.members.begin(), I.members.end()) == sum) d = I.canonical_gen;
                ASSERT_TRUE(d) << spec;
                auto s = solve_unit_combination(*r, static_cast<Elem>(p), static_cast<Elem>(q), *d);
                ASSERT_TRUE(r->is_unit(s.u));
                ASSERT_EQ(r->add(r->mul(s.t, static_cast<Elem>(p)), static_cast<Elem>(q)), r->mul(s.u, *d));
            }
    }
    auto z4 = make_ring("zmod:4");
    EXPECT_THROW(solve_unit_combination(*z4, 2, 2, 1), PreconditionError);
}
