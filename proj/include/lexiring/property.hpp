#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexiring/code.hpp"
#include "lexiring/core.hpp"
#include "lexiring/lattice.hpp"
#include "lexiring/rational.hpp"
#include "lexiring/ring.hpp"
#include "lexiring/vector.hpp"
#include "lexiring/weight.hpp"

namespace lexiring {

/// Whether P[u*x] = P[x] holds for all units u.
///   verified  exhaustive check passed
///   refuted   exhaustive check found a counterexample
///   declared  known to hold for this kind of predicate, not checked
///   unknown   nothing is known; a run must verify first
enum class Multiplicativity { verified, refuted, declared, unknown };

inline const char* to_string(Multiplicativity m) {
    switch (m) {
        case Multiplicativity::verified: return "verified";
        case Multiplicativity::refuted: return "refuted";
        case Multiplicativity::declared: return "declared";
        default: return "unknown";
    }
}

enum class ZeroPolicy { asis, force_true, force_false };

/// A predicate on R^n. The zero policy overrides the predicate at the zero vector only.
class Property {
public:
    using Predicate = std::function<bool(std::span<const Elem>)>;

    Property(RingPtr ring, std::size_t n, Predicate pred, Multiplicativity mult, std::string descriptor,
             ZeroPolicy zero = ZeroPolicy::asis)
        : ring_(std::move(ring)), n_(n), pred_(std::move(pred)), mult_(mult), descriptor_(std::move(descriptor)),
          zero_(zero) {}

    [[nodiscard]] bool operator()(std::span<const Elem> x) const {
        if (zero_ != ZeroPolicy::asis && is_zero(x)) return zero_ == ZeroPolicy::force_true;
        return pred_(x);
    }
    [[nodiscard]] bool operator()(const Vector& x) const { return (*this)(x.span()); }

    [[nodiscard]] bool at_zero() const { return (*this)(Vector(n_)); }

    [[nodiscard]] const RingPtr& ring() const { return ring_; }
    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] Multiplicativity multiplicativity() const { return mult_; }
    void set_multiplicativity(Multiplicativity m) { mult_ = m; }
    [[nodiscard]] const std::string& descriptor() const { return descriptor_; }
    [[nodiscard]] ZeroPolicy zero_policy() const { return zero_; }

    /// Same predicate with P[0] replaced. Multiplicativity is unaffected since u*x = 0
    /// only for x = 0.
    [[nodiscard]] Property with_zero_policy(ZeroPolicy z) const {
        Property p = *this;
        p.zero_ = z;
        p.descriptor_ = descriptor_for(z);
        return p;
    }

    /// The predicate with the zero policy applied, as a plain callable.
    [[nodiscard]] Predicate predicate() const {
        return [self = *this](std::span<const Elem> x) { return self(x); };
    }

private:
    [[nodiscard]] std::string descriptor_for(ZeroPolicy z) const {
        std::string base = descriptor_;
        for (std::string_view suffix : {" zero:true", " zero:false", " zero:asis"})
            if (base.size() > suffix.size() && std::string_view(base).substr(base.size() - suffix.size()) == suffix) {
                base.resize(base.size() - suffix.size());
                if (base.front() == '(' && base.back() == ')') base = base.substr(1, base.size() - 2);
                break;
            }
        switch (z) {
            case ZeroPolicy::force_true: return "(" + base + ") zero:true";
            case ZeroPolicy::force_false: return "(" + base + ") zero:false";
            default: return base;
        }
    }

    RingPtr ring_;
    std::size_t n_;
    Predicate pred_;
    Multiplicativity mult_;
    std::string descriptor_;
    ZeroPolicy zero_;
};

namespace detail {

inline Multiplicativity combine_status(Multiplicativity a, Multiplicativity b) {
    using M = Multiplicativity;
    if (a == M::verified && b == M::verified) return M::verified;
    auto known = [](M m) { return m == M::verified || m == M::declared; };
    return known(a) && known(b) ? M::declared : M::unknown;
}

inline void require_same_space(const Property& a, const Property& b) {
    if (a.ring().get() != b.ring().get() || a.n() != b.n())
        throw PreconditionError("properties live on different spaces");
}

}  // namespace detail

inline Property and_(const Property& a, const Property& b) {
    detail::require_same_space(a, b);
    return Property(
        a.ring(), a.n(), [a, b](std::span<const Elem> x) { return a(x) && b(x); },
        detail::combine_status(a.multiplicativity(), b.multiplicativity()),
        "and(" + a.descriptor() + "," + b.descriptor() + ")");
}

inline Property or_(const Property& a, const Property& b) {
    detail::require_same_space(a, b);
    return Property(
        a.ring(), a.n(), [a, b](std::span<const Elem> x) { return a(x) || b(x); },
        detail::combine_status(a.multiplicativity(), b.multiplicativity()),
        "or(" + a.descriptor() + "," + b.descriptor() + ")");
}

/// Named codes for `member:` atoms and the override for selfdot on noncommutative rings.
struct PropertyContext {
    std::map<std::string, Code> codes;
    bool allow_noncommutative_selfdot = false;
};

namespace detail {

/// Weight values scaled by the lcm of their denominators, so vector weights are
/// integer sums.
struct ScaledWeight {
    std::vector<std::int64_t> values;
    std::int64_t scale = 1;

    explicit ScaledWeight(const WeightFunction& w) {
        for (const auto& v : w.values) scale = std::lcm(scale, v.denominator());
        for (const auto& v : w.values) values.push_back(v.numerator() * (scale / v.denominator()));
    }

    [[nodiscard]] std::int64_t sum(std::span<const Elem> x) const {
        std::int64_t s = 0;
        for (auto e : x) s += values[e];
        return s;
    }
};

inline bool is_weight_name(std::string_view s) {
    for (std::string_view w : {"hamming", "lee", "euclid", "unit", "ranksum", "homog"})
        if (s == w) return true;
    return false;
}

class PropertyParser {
public:
    PropertyParser(const IdealLattice& lat, std::size_t n, std::string_view text, const PropertyContext& ctx)
        : lat_(lat), n_(n), text_(text), ctx_(ctx) {}

    Property parse() {
        auto p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw SpecError("property '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool consume(std::string_view s) {
        skip_ws();
        if (text_.substr(pos_, s.size()) != s) return false;
        pos_ += s.size();
        return true;
    }

    void expect(std::string_view s) {
        if (!consume(s)) fail("expected '" + std::string(s) + "'");
    }

    bool at_zero_suffix() {
        auto save = pos_;
        skip_ws();
        bool yes = text_.substr(pos_, 5) == "zero:";
        pos_ = save;
        return yes;
    }

    Property expr() {
        auto p = term();
        if (at_zero_suffix()) {
            expect("zero:");
            if (consume("true")) return p.with_zero_policy(ZeroPolicy::force_true);
            if (consume("false")) return p.with_zero_policy(ZeroPolicy::force_false);
            if (consume("asis")) return p;
            fail("expected true, false or asis after zero:");
        }
        return p;
    }

    Property term() {
        if (consume("and(") || consume("or(")) {
            const bool is_and = text_[pos_ - 2] == 'd';
            auto a = expr();
            expect(",");
            auto b = expr();
            expect(")");
            return is_and ? and_(a, b) : or_(a, b);
        }
        if (consume("(")) {
            auto p = expr();
            expect(")");
            return p;
        }
        return atom();
    }

    /// Reads up to the next top-level ',' or ')', or a `zero:` suffix; spaces are dropped.
    std::string atom_text() {
        skip_ws();
        std::string out;
        int depth = 0;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (depth == 0 && (c == ',' || c == ')')) break;
            if (depth == 0 && c == ' ' && at_zero_suffix()) break;
            if (c == '[') ++depth;
            if (c == ']') --depth;
            if (c != ' ' && c != '\t') out += c;
            ++pos_;
        }
        if (out.empty()) fail("expected an atom");
        return out;
    }

    Property atom() {
        const auto start = pos_;
        auto a = atom_text();
        const RingPtr& ring = lat_.ring;
        const FiniteRing& r = *ring;
        using M = Multiplicativity;

        if (a == "true" || a == "false") {
            const bool v = a == "true";
            return Property(ring, n_, [v](std::span<const Elem>) { return v; }, M::declared, a);
        }
        if (a == "zero" || a == "nonzero") {
            const bool want = a == "zero";
            return Property(ring, n_, [want](std::span<const Elem> x) { return is_zero(x) == want; }, M::declared, a);
        }
        if (a == "selfdot==0") {
            if (!r.is_commutative() && !ctx_.allow_noncommutative_selfdot)
                fail("selfdot is not multiplicative over a noncommutative ring");
            const M m = r.is_commutative() ? M::declared : M::unknown;
            return Property(ring, n_, [ring](std::span<const Elem> x) { return dot(*ring, x, x) == 0; }, m, a);
        }
        if (a.rfind("sumin:", 0) == 0) {
            const Elem g = element_or_fail(a.substr(6));
            const ElemSet ideal = left_ideal_of(r, g);
            return Property(
                ring, n_,
                [ring, ideal](std::span<const Elem> x) {
                    Elem s = 0;
                    for (auto e : x) s = ring->add(s, e);
                    return ideal.test(s);
                },
                M::declared, a);
        }
        if (a.rfind("member:", 0) == 0) return member_atom(a.substr(7));
        if (a.rfind("eq:", 0) == 0) {
            Vector target;
            try {
                target = parse_vector(r, a.substr(3), n_);
            } catch (const Error& e) {
                pos_ = start;
                fail(e.what());
            }
            return Property(
                ring, n_,
                [target](std::span<const Elem> x) { return std::equal(x.begin(), x.end(), target.begin()); },
                M::unknown, a);
        }
        return weight_atom(a, start);
    }

    Elem element_or_fail(std::string_view name) const {
        if (!lat_.ring->has_element(name)) fail("unknown ring element '" + std::string(name) + "'");
        return lat_.ring->element(name);
    }

    Property member_atom(std::string names) {
        // Further comma-separated names belong to this atom as long as they name codes.
        while (pos_ < text_.size() && text_[pos_] == ',') {
            auto save = pos_;
            ++pos_;
            auto next_start = pos_;
            while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' && text_[pos_] != ' ') ++pos_;
            auto candidate = std::string(text_.substr(next_start, pos_ - next_start));
            if (ctx_.codes.count(candidate) == 0) {
                pos_ = save;
                break;
            }
            names += "," + candidate;
        }
        std::vector<const Code*> codes;
        for (auto name : split_top_level(names, ',')) {
            auto it = ctx_.codes.find(std::string(name));
            if (it == ctx_.codes.end()) fail("undefined code '" + std::string(name) + "'");
            if (it->second.ring().get() != lat_.ring.get() && it->second.ring()->spec() != lat_.ring->spec())
                fail("code '" + std::string(name) + "' is over a different ring");
            if (it->second.n() != n_) fail("code '" + std::string(name) + "' has a different length");
            codes.push_back(&it->second);
        }
        std::vector<Code> held;
        for (auto* c : codes) held.push_back(*c);
        return Property(
            lat_.ring, n_,
            [held = std::move(held)](std::span<const Elem> x) {
                for (const auto& c : held)
                    if (c.contains(x)) return true;
                return false;
            },
            Multiplicativity::declared, "member:" + names);
    }

    Property weight_atom(const std::string& a, std::size_t start) {
        std::size_t k = 0;
        while (k < a.size() && a[k] >= 'a' && a[k] <= 'z') ++k;
        const std::string wname = a.substr(0, k);
        if (!is_weight_name(wname)) {
            pos_ = start;
            fail("unknown atom '" + a + "'");
        }
        WeightFunction w;
        try {
            w = make_weight(lat_, wname);
        } catch (const SpecError& e) {
            pos_ = start;
            fail(e.what());
        }
        const auto m = constant_on_unit_orbits(*lat_.ring, w.values) ? Multiplicativity::declared
                                                                       : Multiplicativity::unknown;
        auto scaled = std::make_shared<ScaledWeight>(w);
        const std::string_view rest = std::string_view(a).substr(k);
        try {
            if (!rest.empty() && rest[0] == '%') {
                const auto eq = rest.find("==");
                if (eq == std::string_view::npos) throw SpecError("expected ==");
                const auto modulus = parse_int(rest.substr(1, eq - 1), "modulus");
                auto residue = parse_int(rest.substr(eq + 2), "residue");
                if (modulus <= 0) throw SpecError("modulus must be positive");
                residue = ((residue % modulus) + modulus) % modulus;
                return Property(
                    lat_.ring, n_,
                    [scaled, modulus, residue](std::span<const Elem> x) {
                        const auto s = scaled->sum(x);
                        if (s % scaled->scale != 0) return false;
                        return ((s / scaled->scale) % modulus + modulus) % modulus == residue;
                    },
                    m, a);
            }
            for (std::string_view op : {">=", "<=", "=="}) {
                if (rest.substr(0, 2) != op) continue;
                const Rational t = parse_rational(rest.substr(2));
                // sum/scale  op  num/den   <=>   sum*den  op  num*scale
                const auto num = t.numerator() * scaled->scale;
                const auto den = t.denominator();
                const char kind = op[0];
                return Property(
                    lat_.ring, n_,
                    [scaled, num, den, kind](std::span<const Elem> x) {
                        const auto lhs = scaled->sum(x) * den;
                        return kind == '>' ? lhs >= num : kind == '<' ? lhs <= num : lhs == num;
                    },
                    m, a);
            }
        } catch (const SpecError& e) {
            pos_ = start;
            fail(e.what());
        }
        pos_ = start;
        fail("expected >=, <=, == or %k==r after weight name");
    }

    const IdealLattice& lat_;
    std::size_t n_;
    std::string_view text_;
    const PropertyContext& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a property expression over R^n.
///
///   expr  := term [zero:true|false|asis]
///   term  := and(expr,expr) | or(expr,expr) | (expr) | atom
///   atom  := <weight><cmp><rational> | <weight>%k==r | selfdot==0 | sumin:<element>
///          | member:<code>[,<code>...] | eq:<vector> | zero | nonzero | true | false
///
/// Weights are hamming, lee, euclid, unit, ranksum and homog; cmp is >=, <= or ==.
inline Property make_property(const IdealLattice& lat, std::size_t n, std::string_view expr,
                              const PropertyContext& ctx = {}) {
    return detail::PropertyParser(lat, n, expr, ctx).parse();
}

struct MultiplicativityVerdict {
    bool multiplicative = false;
    std::optional<std::pair<Elem, Vector>> witness;  // (u, x) with P[u*x] != P[x]
    std::uint64_t work = 0;
};

/// Exhaustive check of P[u*x] = P[x]. Scans x in key order with P[x] true and tries every
/// unit u != 1; a mismatch starting from a false P[x] is found from the other side,
/// since y = u*x gives x = u^-1 * y. Updates the property's status.
inline MultiplicativityVerdict verify_left_multiplicative(Property& p, std::uint64_t cap = kDefaultCap) {
    const FiniteRing& r = *p.ring();
    const auto total = checked_power(r.size(), p.n());
    require_within_cap(total, cap, "|R|^n");
    require_within_cap(total * r.units().size(), cap, "multiplicativity check |R*|*|R|^n");
    MultiplicativityVerdict v;
    Vector x(p.n()), ux(p.n());
    for (std::uint64_t key = 0; key < total; ++key) {
        unpack_into(key, r.size(), x.span());
        ++v.work;
        if (!p(x)) continue;
        for (auto u : r.units()) {
            if (u == r.one()) continue;
            ++v.work;
            scale_into(r, u, x.span(), ux.span());
            if (!p(ux)) {
                v.witness = std::make_pair(u, x);
                p.set_multiplicativity(Multiplicativity::refuted);
                return v;
            }
        }
    }
    v.multiplicative = true;
    p.set_multiplicativity(Multiplicativity::verified);
    return v;
}

}  // namespace lexiring
