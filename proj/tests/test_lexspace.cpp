#include <gtest/gtest.h>

#include "support.hpp"

using namespace lexiring;
using namespace lexiring::testing;

namespace {

LexSpace space(const std::string& ring, const std::string& order, const std::string& basis, std::size_t n) {
    auto r = make_ring(ring);
    auto lat = ideal_lattice(r);
    return LexSpace(r, parse_order(lat, order), parse_basis(r, n, basis));
}

std::vector<std::string> stream(const LexSpace& s, std::size_t i) {
    std::vector<std::string> out;
    for (const auto& v : s.level_set(i)) out.push_back(format_vector(*s.ring(), v));
    return out;
}

}  // namespace

TEST(Vectors, PackRoundTripsAndFormats) {
    auto r = make_ring("zmod:10");
    for (std::uint64_t k = 0; k < 1000; ++k) EXPECT_EQ(pack(unpack(k, 10, 3).span(), 10), k);
    EXPECT_EQ(format_vector(*r, parse_vector(*r, "012")), "012");
    auto m = make_ring("mat:2,2");
    auto v = parse_vector(*m, "0;I;I");
    EXPECT_EQ(v.size(), 3u);
    EXPECT_EQ(v[1], m->one());
    EXPECT_THROW(parse_vector(*r, "01", 3), SpecError);
}

TEST(Basis, StandardAndF7ExampleAreValid) {
    EXPECT_NO_THROW(standard_basis(make_ring("zmod:4"), 3));
    auto f7 = make_ring("gf:7");
    auto b = parse_basis(f7, 3, "113,331,100");
    EXPECT_EQ(names_of(*f7, b.vectors), (std::vector<std::string>{"113", "331", "100"}));
    // Independent check: the closure of the three vectors is all of F7^3.
    EXPECT_EQ(closure(*f7, 3, words(*f7, {"113", "331", "100"})).size(), 343u);
}

TEST(Basis, DependentFamilyIsRejected) {
    auto z4 = make_ring("zmod:4");
    EXPECT_THROW(parse_basis(z4, 3, "100,200,001"), PreconditionError);
    EXPECT_LT(closure(*z4, 3, words(*z4, {"100", "200", "001"})).size(), 64u);
}

TEST(Basis, CoordinatesRecombine) {
    auto f7 = make_ring("gf:7");
    auto b = parse_basis(f7, 3, "113,331,100");
    EXPECT_EQ(format_vector(*f7, b.coords(parse_vector(*f7, "550"))), "210");
    for (const auto& w : all_words(*f7, 3)) {
        Vector x(w.size());
        std::copy(w.begin(), w.end(), x.span().begin());
        const auto c = b.coords(x);
        EXPECT_EQ(b.combine(c.span()), x);
    }
}

TEST(Basis, CompletionOfAllOnesInZ4) {
    auto z4 = make_ring("zmod:4");
    auto b = complete_to_basis(z4, 4, {parse_vector(*z4, "1111")});
    ASSERT_EQ(b.vectors.size(), 4u);
    EXPECT_EQ(format_vector(*z4, b.vectors[0]), "1111");
    std::vector<Word> ws;
    for (const auto& v : b.vectors) ws.emplace_back(v.begin(), v.end());
    EXPECT_EQ(closure(*z4, 4, ws).size(), 256u);
}

TEST(Basis, CompletionKeepsACompleteBasis) {
    auto r = make_ring("chain:2,2");
    auto std3 = standard_basis(r, 3);
    EXPECT_EQ(complete_to_basis(r, 3, std3.vectors).vectors, std3.vectors);
}

TEST(Basis, TorsionVectorCannotStartABasis) {
    auto z4 = make_ring("zmod:4");
    EXPECT_THROW(complete_to_basis(z4, 3, {parse_vector(*z4, "200")}), PreconditionError);
}

TEST(LevelSets, Z4UnderOneThreeTwoZero) {
    auto s = space("zmod:4", "explicit:1<3<2<0", "standard", 3);
    EXPECT_EQ(stream(s, 1), (std::vector<std::string>{"100", "300", "200"}));
    auto l2 = stream(s, 2);
    ASSERT_EQ(l2.size(), 12u);
    EXPECT_EQ(std::vector<std::string>(l2.end() - 4, l2.end()),
              (std::vector<std::string>{"120", "320", "220", "020"}));
}

TEST(LevelSets, FirstLevelIsNonzeroMultiplesOfFirstBasisVector) {
    for (const char* ring : {"zmod:6", "gf:4", "chain:3,2", "mat:2,2"}) {
        auto s = space(ring, "respectful:auto,zero_min", "reverse", 2);
        const auto& r = *s.ring();
        std::set<std::string> expected;
        for (std::size_t a = 1; a < r.size(); ++a)
            expected.insert(format_vector(r, scale(r, static_cast<Elem>(a), s.basis().vectors[0])));
        auto got = stream(s, 1);
        EXPECT_EQ(got.size(), r.size() - 1) << ring;
        EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expected) << ring;
    }
}

// Concatenated level streams, preceded by 0, enumerate R^n once in strictly ascending order,
// and the comparator is a strict total order on R^n.
class SpaceOrder : public ::testing::TestWithParam<std::tuple<std::string, std::string, std::string, std::size_t>> {};

TEST_P(SpaceOrder, StreamsAndComparatorAgree) {
    const auto& [ring, order, basis, n] = GetParam();
    auto s = space(ring, order, basis, n);
    const auto& r = *s.ring();
    std::vector<Vector> seq{Vector(n)};
    for (std::size_t i = 1; i <= n; ++i)
        for (const auto& v : s.level_set(i)) {
            EXPECT_EQ(s.level(v), i);
            seq.push_back(v);
        }
    const auto total = checked_power(r.size(), n);
    ASSERT_EQ(seq.size(), total);
    std::set<std::uint64_t> keys;
    for (const auto& v : seq) keys.insert(pack(v.span(), r.size()));
    EXPECT_EQ(keys.size(), total);
    for (std::size_t k = 1; k < seq.size(); ++k) ASSERT_TRUE(s.compare(seq[k - 1], seq[k]) < 0) << k;

    // Totality and antisymmetry over all pairs; transitivity follows from agreement with
    // the stream positions, which is checked pairwise.
    std::vector<std::size_t> pos(total);
    for (std::size_t k = 0; k < seq.size(); ++k) pos[pack(seq[k].span(), r.size())] = k;
    for (std::uint64_t a = 0; a < total; ++a)
        for (std::uint64_t b = 0; b < total; ++b) {
            const auto c = s.compare(unpack(a, r.size(), n), unpack(b, r.size(), n));
            ASSERT_EQ(c == 0, a == b);
            ASSERT_EQ(c < 0, pos[a] < pos[b]);
        }
}

INSTANTIATE_TEST_SUITE_P(
    Spaces, SpaceOrder,
    ::testing::Values(std::make_tuple("zmod:4", "natural", "standard", 3),
                      std::make_tuple("zmod:4", "explicit:1<3<2<0", "standard", 3),
                      std::make_tuple("zmod:6", "natural", "reverse", 3),
                      std::make_tuple("gf:7", "explicit:0<1<2<3<4<5<6", "113,331,100", 3),
                      std::make_tuple("gf:7", "explicit:0<1<4<3<2<5<6", "113,331,100", 3),
                      std::make_tuple("chain:2,2", "respectful:auto,zero_min", "standard", 4),
                      std::make_tuple("gf:4", "respectful:auto", "reverse", 3),
                      std::make_tuple("mat:2,2", "respectful:auto,zero_min", "reverse", 2),
                      std::make_tuple("zmod:9", "natural", "standard", 2)));
