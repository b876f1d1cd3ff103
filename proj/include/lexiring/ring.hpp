#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexiring/core.hpp"
#include "lexiring/rational.hpp"

namespace lexiring {

enum class RingFamily { zmod, gf, chain, mat, custom };

/// A finite ring stored as dense Cayley tables over element indices 0..size-1.
///
/// Index 0 is the additive identity. Units, inverses and negation are precomputed,
/// so every arithmetic operation is a single table lookup. Instances are immutable
/// and are shared through RingPtr.
class FiniteRing {
public:
    /// Builds a ring from raw tables (row-major, size*size entries each) and validates
    /// the identities it needs: 0 is additive identity, a two-sided multiplicative
    /// identity exists, names are unique. Full ring-axiom checks live in verify_ring_axioms.
    static FiniteRing from_tables(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul,
                                  std::vector<std::string> names, std::string spec,
                                  RingFamily family = RingFamily::custom) {
        if (size < 1 || size > kMaxRingSize) throw SpecError("ring size must be in 1..256");
        if (add.size() != size * size || mul.size() != size * size)
            throw SpecError("ring tables must have size*size entries");
        if (names.size() != size) throw SpecError("one display name per element required");

        FiniteRing r;
        r.size_ = size;
        r.add_ = std::move(add);
        r.mul_ = std::move(mul);
        r.names_ = std::move(names);
        r.spec_ = std::move(spec);
        r.family_ = family;

        for (std::size_t a = 0; a < size; ++a) {
            if (r.add_[a] != a || r.add_[a * size] != a)
                throw SpecError("element 0 is not the additive identity");
            for (std::size_t b = 0; b < size; ++b)
                if (r.add_[a * size + b] >= size || r.mul_[a * size + b] >= size)
                    throw SpecError("table entry out of range");
        }

        std::optional<Elem> one;
        for (std::size_t e = 0; e < size && !one; ++e) {
            bool ok = true;
            for (std::size_t a = 0; a < size && ok; ++a)
                ok = r.mul_[e * size + a] == a && r.mul_[a * size + e] == a;
            if (ok) one = static_cast<Elem>(e);
        }
        if (!one) throw SpecError("ring has no multiplicative identity");
        r.one_ = *one;

        r.neg_.assign(size, 0);
        for (std::size_t a = 0; a < size; ++a) {
            bool found = false;
            for (std::size_t b = 0; b < size && !found; ++b)
                if (r.add_[a * size + b] == 0) {
                    r.neg_[a] = static_cast<Elem>(b);
                    found = true;
                }
            if (!found) throw SpecError("element without additive inverse");
        }

        r.inverse_.assign(size, std::nullopt);
        r.is_unit_.assign(size, false);
        for (std::size_t u = 0; u < size; ++u)
            for (std::size_t v = 0; v < size; ++v)
                if (r.mul_[u * size + v] == r.one_ && r.mul_[v * size + u] == r.one_) {
                    r.inverse_[u] = static_cast<Elem>(v);
                    r.is_unit_[u] = true;
                    r.units_.push_back(static_cast<Elem>(u));
                    break;
                }

        r.commutative_ = true;
        for (std::size_t a = 0; a < size && r.commutative_; ++a)
            for (std::size_t b = a + 1; b < size && r.commutative_; ++b)
                r.commutative_ = r.mul_[a * size + b] == r.mul_[b * size + a];

        r.compact_names_ = true;
        for (std::size_t a = 0; a < size; ++a) {
            if (!r.by_name_.emplace(r.names_[a], static_cast<Elem>(a)).second)
                throw SpecError("duplicate element name '" + r.names_[a] + "'");
            r.compact_names_ = r.compact_names_ && r.names_[a].size() == 1;
        }
        return r;
    }

    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] Elem zero() const { return 0; }
    [[nodiscard]] Elem one() const { return one_; }

    [[nodiscard]] Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
    [[nodiscard]] Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
    [[nodiscard]] Elem neg(Elem a) const { return neg_[a]; }
    [[nodiscard]] Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }

    [[nodiscard]] bool is_unit(Elem a) const { return is_unit_[a]; }
    [[nodiscard]] const std::vector<Elem>& units() const { return units_; }
    [[nodiscard]] std::optional<Elem> inverse(Elem a) const { return inverse_[a]; }

    [[nodiscard]] bool is_commutative() const { return commutative_; }
    [[nodiscard]] RingFamily family() const { return family_; }
    [[nodiscard]] const std::string& spec() const { return spec_; }

    [[nodiscard]] const std::string& name(Elem a) const { return names_[a]; }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

    /// True when every element name is a single character, so vectors print as digit strings.
    [[nodiscard]] bool compact_names() const { return compact_names_; }

    /// Looks up an element by display name (or alias, see add_alias).
    [[nodiscard]] Elem element(std::string_view name) const {
        auto it = by_name_.find(std::string(name));
        if (it != by_name_.end()) return it->second;
        auto al = aliases_.find(std::string(name));
        if (al != aliases_.end()) return al->second;
        throw SpecError("unknown element '" + std::string(name) + "' in ring " + spec_);
    }

    [[nodiscard]] bool has_element(std::string_view name) const {
        return by_name_.count(std::string(name)) > 0 || aliases_.count(std::string(name)) > 0;
    }

    void add_alias(std::string alias, Elem a) {
        if (!by_name_.count(alias)) aliases_.emplace(std::move(alias), a);
    }

    /// Integer parameters of the construction: zmod {m}, gf {p,k}, chain {q,e}, mat {k,q}.
    [[nodiscard]] const std::vector<int>& params() const { return params_; }
    void set_params(std::vector<int> p) { params_ = std::move(p); }

    /// Matrix rank for mat:k,q elements, filled by the constructor.
    [[nodiscard]] const std::vector<int>& matrix_ranks() const { return ranks_; }
    void set_matrix_ranks(std::vector<int> r) { ranks_ = std::move(r); }

private:
    FiniteRing() = default;

    std::size_t size_ = 0;
    Elem one_ = 0;
    std::vector<Elem> add_, mul_, neg_;
    std::vector<std::optional<Elem>> inverse_;
    std::vector<bool> is_unit_;
    std::vector<Elem> units_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, Elem> by_name_, aliases_;
    std::string spec_;
    RingFamily family_ = RingFamily::custom;
    bool commutative_ = true;
    bool compact_names_ = true;
    std::vector<int> params_;
    std::vector<int> ranks_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

namespace detail {

/// Prime-power factorisation q = p^k, or nullopt when q is not a prime power.
inline std::optional<std::pair<int, int>> prime_power(int q) {
    if (q < 2) return std::nullopt;
    int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, k);
}

/// GF(p^k) with elements encoded as base-p coefficient strings, digit i = coefficient of a^i.
struct FieldTables {
    int p = 0, k = 0, q = 0;
    std::vector<int> modulus;  // low coefficients c_0..c_{k-1} of the monic modulus
    std::vector<Elem> add, mul;
    std::vector<std::string> names;
};

inline std::vector<int> digits(int value, int base, int count) {
    std::vector<int> d(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        d[static_cast<std::size_t>(i)] = value % base;
        value /= base;
    }
    return d;
}

inline int undigits(const std::vector<int>& d, int base) {
    int v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * base + *it;
    return v;
}

inline std::string poly_name(const std::vector<int>& coeffs, const std::string& var,
                             const std::vector<std::string>& coeff_names, bool descending) {
    std::vector<std::string> terms;
    auto term = [&](std::size_t deg) {
        const int c = coeffs[deg];
        if (c == 0) return;
        std::string cn = coeff_names[static_cast<std::size_t>(c)];
        if (cn.find('+') != std::string::npos) cn = "(" + cn + ")";
        if (deg == 0) {
            terms.push_back(cn);
            return;
        }
        std::string mon = deg == 1 ? var : var + "^" + std::to_string(deg);
        terms.push_back(c == 1 ? mon : cn + mon);
    };
    if (descending)
        for (std::size_t d = coeffs.size(); d-- > 0;) term(d);
    else
        for (std::size_t d = 0; d < coeffs.size(); ++d) term(d);
    if (terms.empty()) return "0";
    std::string s = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) s += "+" + terms[i];
    return s;
}

inline FieldTables build_field(int q) {
    auto pk = prime_power(q);
    if (!pk) throw SpecError("field order " + std::to_string(q) + " is not a prime power");
    FieldTables f;
    f.p = pk->first;
    f.k = pk->second;
    f.q = q;
    const auto n = static_cast<std::size_t>(q);
    f.add.resize(n * n);
    f.mul.resize(n * n);

    std::vector<std::vector<int>> dig(n);
    for (int a = 0; a < q; ++a) dig[static_cast<std::size_t>(a)] = digits(a, f.p, f.k);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            std::vector<int> s(static_cast<std::size_t>(f.k));
            for (int i = 0; i < f.k; ++i)
                s[static_cast<std::size_t>(i)] =
                    (dig[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] +
                     dig[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)]) % f.p;
            f.add[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] =
                static_cast<Elem>(undigits(s, f.p));
        }

    auto multiply = [&](const std::vector<int>& low, int a, int b) {
        const int k = f.k;
        std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    (prod[static_cast<std::size_t>(i + j)] +
                     dig[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
                         dig[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)]) % f.p;
        // x^k = -(c_0 + c_1 x + ... + c_{k-1} x^{k-1})
        for (int d = 2 * k - 2; d >= k; --d) {
            const int t = prod[static_cast<std::size_t>(d)];
            if (t == 0) continue;
            prod[static_cast<std::size_t>(d)] = 0;
            for (int i = 0; i < k; ++i) {
                auto& slot = prod[static_cast<std::size_t>(d - k + i)];
                slot = ((slot - t * low[static_cast<std::size_t>(i)]) % f.p + f.p) % f.p;
            }
        }
        prod.resize(static_cast<std::size_t>(k));
        return undigits(prod, f.p);
    };

    // Least monic modulus (by encoded low coefficients) whose quotient is a field.
    bool found = false;
    for (int cand = 0; cand < q && !found; ++cand) {
        auto low = digits(cand, f.p, f.k);
        if (f.k == 1 && cand != 0) break;
        std::vector<Elem> mt(n * n);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                mt[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] =
                    static_cast<Elem>(multiply(low, a, b));
        bool field = true;
        for (int a = 1; a < q && field; ++a) {
            bool inv = false;
            for (int b = 1; b < q && !inv; ++b)
                inv = mt[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] == 1;
            field = inv;
        }
        if (field) {
            f.modulus = low;
            f.mul = std::move(mt);
            found = true;
        }
    }
    if (!found) throw InternalError("no irreducible polynomial found for GF(" + std::to_string(q) + ")");

    std::vector<std::string> digit_names;
    for (int c = 0; c < f.p; ++c) digit_names.push_back(std::to_string(c));
    for (int a = 0; a < q; ++a)
        f.names.push_back(f.k == 1 ? std::to_string(a)
                                   : poly_name(dig[static_cast<std::size_t>(a)], "a", digit_names, true));
    return f;
}

inline std::vector<int> parse_int_list(std::string_view s, std::string_view context) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        auto tok = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        auto v = parse_int(tok, context);
        if (v < 0 || v > 1'000'000) throw SpecError("parameter out of range in '" + std::string(context) + "'");
        out.push_back(static_cast<int>(v));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline int field_rank(std::vector<std::vector<int>> m, const FieldTables& f) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    const auto q = static_cast<std::size_t>(f.q);
    auto fmul = [&](int a, int b) { return f.mul[static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)]; };
    auto fadd = [&](int a, int b) { return f.add[static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)]; };
    auto fneg = [&](int a) {
        for (int b = 0; b < f.q; ++b)
            if (fadd(a, b) == 0) return b;
        return 0;
    };
    auto finv = [&](int a) {
        for (int b = 1; b < f.q; ++b)
            if (fmul(a, b) == 1) return b;
        return 0;
    };
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        const int inv = finv(m[row][col]);
        for (auto& x : m[row]) x = fmul(x, inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const int factor = fneg(m[r][col]);
            for (std::size_t c = 0; c < cols; ++c) m[r][c] = fadd(m[r][c], fmul(factor, m[row][c]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline FiniteRing make_zmod(int m, std::string spec) {
    if (m < 2 || m > static_cast<int>(kMaxRingSize)) throw SpecError("zmod modulus must be in 2..256");
    const auto n = static_cast<std::size_t>(m);
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<Elem>((a + b) % n);
            mul[a * n + b] = static_cast<Elem>((a * b) % n);
        }
    }
    auto r = FiniteRing::from_tables(n, std::move(add), std::move(mul), std::move(names), std::move(spec),
                                     RingFamily::zmod);
    r.set_params({m});
    return r;
}

inline FiniteRing make_gf(int q, std::string spec) {
    if (q > 128) throw CapError("gf order " + std::to_string(q) + " exceeds cap 128");
    auto f = build_field(q);
    auto r = FiniteRing::from_tables(static_cast<std::size_t>(q), f.add, f.mul, f.names, std::move(spec),
                                     RingFamily::gf);
    r.set_params({f.p, f.k});
    return r;
}

inline FiniteRing make_chain(int q, int e, std::string spec) {
    if (e < 1) throw SpecError("chain length must be at least 1");
    if (checked_power(static_cast<std::uint64_t>(q), static_cast<std::size_t>(e)) > kMaxRingSize)
        throw CapError("chain ring size q^e exceeds 256");
    auto f = build_field(q);
    int size = 1;
    for (int i = 0; i < e; ++i) size *= q;
    const auto n = static_cast<std::size_t>(size);
    const auto fq = static_cast<std::size_t>(q);
    std::vector<std::vector<int>> dig(n);
    for (int a = 0; a < size; ++a) dig[static_cast<std::size_t>(a)] = digits(a, q, e);
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<int> s(static_cast<std::size_t>(e)), p(static_cast<std::size_t>(e), 0);
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] = f.add[static_cast<std::size_t>(dig[a][i]) * fq + static_cast<std::size_t>(dig[b][i])];
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = 0; i + j < s.size(); ++j) {
                    const int t = f.mul[static_cast<std::size_t>(dig[a][i]) * fq + static_cast<std::size_t>(dig[b][j])];
                    p[i + j] = f.add[static_cast<std::size_t>(p[i + j]) * fq + static_cast<std::size_t>(t)];
                }
            add[a * n + b] = static_cast<Elem>(undigits(s, q));
            mul[a * n + b] = static_cast<Elem>(undigits(p, q));
        }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) names.push_back(poly_name(dig[a], "u", f.names, false));
    auto r = FiniteRing::from_tables(n, std::move(add), std::move(mul), std::move(names), std::move(spec),
                                     RingFamily::chain);
    r.set_params({q, e});
    return r;
}

inline FiniteRing make_mat(int k, int q, std::string spec) {
    if (k < 1) throw SpecError("matrix dimension must be at least 1");
    if (checked_power(static_cast<std::uint64_t>(q), static_cast<std::size_t>(k * k)) > kMaxRingSize)
        throw CapError("matrix ring size q^(k^2) exceeds 256");
    auto f = build_field(q);
    const int cells = k * k;
    int size = 1;
    for (int i = 0; i < cells; ++i) size *= q;
    const auto n = static_cast<std::size_t>(size);
    const auto fq = static_cast<std::size_t>(q);
    const auto kk = static_cast<std::size_t>(k);

    // Row-major, entry (0,0) is the most significant base-q digit.
    auto decode = [&](int a) {
        auto d = digits(a, q, cells);
        std::reverse(d.begin(), d.end());
        std::vector<std::vector<int>> m(kk, std::vector<int>(kk));
        for (std::size_t r = 0; r < kk; ++r)
            for (std::size_t c = 0; c < kk; ++c) m[r][c] = d[r * kk + c];
        return m;
    };
    auto encode = [&](const std::vector<std::vector<int>>& m) {
        int v = 0;
        for (std::size_t r = 0; r < kk; ++r)
            for (std::size_t c = 0; c < kk; ++c) v = v * q + m[r][c];
        return v;
    };
    std::vector<std::vector<std::vector<int>>> mats;
    for (int a = 0; a < size; ++a) mats.push_back(decode(a));

    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<std::vector<int>> s(kk, std::vector<int>(kk)), p(kk, std::vector<int>(kk, 0));
            for (std::size_t r = 0; r < kk; ++r)
                for (std::size_t c = 0; c < kk; ++c) {
                    s[r][c] = f.add[static_cast<std::size_t>(mats[a][r][c]) * fq + static_cast<std::size_t>(mats[b][r][c])];
                    for (std::size_t t = 0; t < kk; ++t) {
                        const int prod = f.mul[static_cast<std::size_t>(mats[a][r][t]) * fq +
                                               static_cast<std::size_t>(mats[b][t][c])];
                        p[r][c] = f.add[static_cast<std::size_t>(p[r][c]) * fq + static_cast<std::size_t>(prod)];
                    }
                }
            add[a * n + b] = static_cast<Elem>(encode(s));
            mul[a * n + b] = static_cast<Elem>(encode(p));
        }

    std::vector<std::string> names;
    std::vector<int> ranks;
    for (const auto& m : mats) {
        std::string s = "[";
        for (std::size_t r = 0; r < kk; ++r) {
            s += r ? ",[" : "[";
            for (std::size_t c = 0; c < kk; ++c) s += (c ? "," : "") + f.names[static_cast<std::size_t>(m[r][c])];
            s += "]";
        }
        names.push_back(s + "]");
        ranks.push_back(field_rank(m, f));
    }
    auto r = FiniteRing::from_tables(n, std::move(add), std::move(mul), std::move(names), std::move(spec),
                                     RingFamily::mat);
    r.set_params({k, q});
    r.set_matrix_ranks(std::move(ranks));
    r.add_alias("0", r.zero());
    r.add_alias("I", r.one());
    return r;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace detail

/// Parses a ring descriptor: `zmod:<m>` | `gf:<q>` | `chain:<q>,<e>` | `mat:<k>,<q>`.
///
/// gf:q uses the least monic irreducible modulus in coefficient-encoding order
/// (x^2+x+1 for GF(4), x^3+x+1 for GF(8), x^2+1 for GF(9), ...). Field elements are
/// base-p coefficient strings, chain elements base-q strings in powers of u, and
/// matrices row-major base-q digit strings with entry (0,0) most significant.
inline RingPtr make_ring(std::string_view spec) {
    spec = detail::trim(spec);
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw SpecError("ring descriptor '" + std::string(spec) + "' lacks ':'");
    const auto kind = spec.substr(0, colon);
    const auto args = detail::parse_int_list(spec.substr(colon + 1), spec);
    std::string canonical(spec);
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw SpecError("ring descriptor '" + canonical + "' expects " + std::to_string(count) + " parameter(s)");
    };
    if (kind == "zmod") {
        need(1);
        return std::make_shared<const FiniteRing>(detail::make_zmod(args[0], canonical));
    }
    if (kind == "gf") {
        need(1);
        return std::make_shared<const FiniteRing>(detail::make_gf(args[0], canonical));
    }
    if (kind == "chain") {
        need(2);
        return std::make_shared<const FiniteRing>(detail::make_chain(args[0], args[1], canonical));
    }
    if (kind == "mat") {
        need(2);
        return std::make_shared<const FiniteRing>(detail::make_mat(args[0], args[1], canonical));
    }
    throw SpecError("unknown ring family '" + std::string(kind) + "'");
}

/// Checks the ring axioms on the tables. Exhaustive over all triples when |R| <= 64,
/// otherwise over `random_triples` uniformly drawn triples. Returns a description of
/// the first failure, or nullopt.
inline std::optional<std::string> verify_ring_axioms(const FiniteRing& r, std::uint64_t random_triples = 100000,
                                                     std::uint32_t seed = 12345) {
    const auto n = r.size();
    auto name = [&](Elem a) { return r.name(a); };
    for (std::size_t ai = 0; ai < n; ++ai) {
        const auto a = static_cast<Elem>(ai);
        if (r.add(a, 0) != a) return "0 is not additive identity for " + name(a);
        if (r.add(a, r.neg(a)) != 0) return "missing additive inverse for " + name(a);
        if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) return "1 is not identity for " + name(a);
        for (std::size_t bi = 0; bi < n; ++bi)
            if (r.add(a, static_cast<Elem>(bi)) != r.add(static_cast<Elem>(bi), a))
                return "addition not commutative at " + name(a) + "," + name(static_cast<Elem>(bi));
    }
    auto check = [&](Elem a, Elem b, Elem c) -> std::optional<std::string> {
        const std::string where = " at " + name(a) + "," + name(b) + "," + name(c);
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "addition not associative" + where;
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplication not associative" + where;
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "left distributivity fails" + where;
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return "right distributivity fails" + where;
        return std::nullopt;
    };
    if (n <= 64) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (auto f = check(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c))) return f;
        return std::nullopt;
    }
    std::mt19937 gen(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t t = 0; t < random_triples; ++t)
        if (auto f = check(static_cast<Elem>(pick(gen)), static_cast<Elem>(pick(gen)), static_cast<Elem>(pick(gen))))
            return f;
    return std::nullopt;
}

}  // namespace lexiring
