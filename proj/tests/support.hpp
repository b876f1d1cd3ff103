#pragma once

// Independent brute-force helpers for tests. They only use ring tables and plain loops,
// never the library's span, lattice or code machinery.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lexiring.hpp"

namespace lexiring::testing {

using Word = std::vector<Elem>;

inline Word word(const FiniteRing& r, const std::string& s) {
    const auto v = parse_vector(r, s);
    return Word(v.begin(), v.end());
}

inline std::vector<Word> words(const FiniteRing& r, const std::vector<std::string>& ss) {
    std::vector<Word> out;
    for (const auto& s : ss) out.push_back(word(r, s));
    return out;
}

/// Left R-span of a family, by fixed-point closure under addition and scalar multiples.
inline std::set<Word> closure(const FiniteRing& r, std::size_t n, const std::vector<Word>& gens) {
    std::set<Word> c{Word(n, 0)};
    std::vector<Word> frontier{Word(n, 0)};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& x : frontier)
            for (const auto& g : gens)
                for (std::size_t a = 0; a < r.size(); ++a) {
                    Word y(n);
                    for (std::size_t k = 0; k < n; ++k) y[k] = r.add(x[k], r.mul(static_cast<Elem>(a), g[k]));
                    if (c.insert(y).second) next.push_back(y);
                }
        frontier = std::move(next);
    }
    return c;
}

inline std::set<Word> member_set(const Code& c) {
    std::set<Word> s;
    for (std::size_t i = 0; i < c.cardinality(); ++i) {
        auto m = c.member(i);
        s.emplace(m.begin(), m.end());
    }
    return s;
}

/// All of R^n in odometer order, first coordinate fastest.
inline std::vector<Word> all_words(const FiniteRing& r, std::size_t n) {
    std::vector<Word> out;
    Word x(n, 0);
    while (true) {
        out.push_back(x);
        std::size_t k = 0;
        while (k < n && ++x[k] == r.size()) x[k++] = 0;
        if (k == n) break;
    }
    return out;
}

inline Elem plain_dot(const FiniteRing& r, const Word& x, const Word& y) {
    Elem s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) s = r.add(s, r.mul(x[k], y[k]));
    return s;
}

/// Left ideal Rx by direct multiplication.
inline std::set<Elem> ideal(const FiniteRing& r, Elem x) {
    std::set<Elem> s;
    for (std::size_t a = 0; a < r.size(); ++a) s.insert(r.mul(static_cast<Elem>(a), x));
    return s;
}

/// Units found by searching for a two-sided inverse in the multiplication table.
inline std::vector<Elem> brute_units(const FiniteRing& r) {
    std::vector<Elem> out;
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
            if (r.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == r.one() &&
                r.mul(static_cast<Elem>(b), static_cast<Elem>(a)) == r.one()) {
                out.push_back(static_cast<Elem>(a));
                break;
            }
    return out;
}

inline std::vector<std::string> names_of(const FiniteRing& r, const std::vector<Vector>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(format_vector(r, v));
    return out;
}

}  // namespace lexiring::testing
