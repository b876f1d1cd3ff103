#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lexiring/core.hpp"
#include "lexiring/ring.hpp"
#include "lexiring/vector.hpp"

namespace lexiring {

/// Span of a growing family, stored sparsely so it works for any ambient size.
class SparseSpan {
public:
    SparseSpan(const FiniteRing& r, std::size_t n, std::uint64_t cap = kDefaultCap) : r_(&r), n_(n), cap_(cap) {
        keys_.push_back(0);
        in_.insert(0);
    }

    [[nodiscard]] bool contains(std::span<const Elem> x) const { return in_.count(pack(x, r_->size())) > 0; }
    [[nodiscard]] bool contains_key(std::uint64_t k) const { return in_.count(k) > 0; }
    [[nodiscard]] std::size_t size() const { return keys_.size(); }
    [[nodiscard]] const std::vector<std::uint64_t>& keys() const { return keys_; }

    /// No nonzero multiple of x lies in the span, i.e. the family stays free when x is added.
    [[nodiscard]] bool independent(std::span<const Elem> x) const {
        Vector rx(n_);
        for (std::size_t s = 1; s < r_->size(); ++s) {
            scale_into(*r_, static_cast<Elem>(s), x, rx.span());
            if (contains(rx.span())) return false;
        }
        return true;
    }

    /// span := span + Rx
    void extend(std::span<const Elem> x) {
        const auto q = r_->size();
        std::vector<Vector> multiples;
        for (std::size_t s = 0; s < q; ++s) multiples.push_back(Vector(n_));
        for (std::size_t s = 0; s < q; ++s) scale_into(*r_, static_cast<Elem>(s), x, multiples[s].span());
        std::sort(multiples.begin(), multiples.end());
        multiples.erase(std::unique(multiples.begin(), multiples.end()), multiples.end());
        Vector base(n_), sum(n_);
        const auto old = keys_.size();
        require_within_cap(static_cast<std::uint64_t>(old) * multiples.size(), cap_, "code closure");
        for (std::size_t i = 0; i < old; ++i) {
            unpack_into(keys_[i], q, base.span());
            for (const auto& m : multiples) {
                if (m.is_zero()) continue;
                add_into(*r_, base.span(), m.span(), sum.span());
                const auto k = pack(sum.span(), q);
                if (in_.insert(k).second) keys_.push_back(k);
            }
        }
    }

private:
    const FiniteRing* r_;
    std::size_t n_;
    std::uint64_t cap_;
    std::vector<std::uint64_t> keys_;
    std::unordered_set<std::uint64_t> in_;
};

/// A left submodule of R^n with its full member list.
///
/// Members are kept sorted by pack() key (lexicographic on standard coordinates) and
/// also stored as one flat coordinate array so scans avoid per-vector allocation.
class Code {
public:
    Code(RingPtr ring, std::size_t n, std::vector<Vector> generators, std::vector<std::uint64_t> keys)
        : ring_(std::move(ring)), n_(n), generators_(std::move(generators)), keys_(std::move(keys)) {
        std::sort(keys_.begin(), keys_.end());
        flat_.resize(keys_.size() * n_);
        for (std::size_t i = 0; i < keys_.size(); ++i)
            unpack_into(keys_[i], ring_->size(), std::span<Elem>(flat_.data() + i * n_, n_));
    }

    [[nodiscard]] const RingPtr& ring() const { return ring_; }
    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] const std::vector<Vector>& generators() const { return generators_; }
    [[nodiscard]] std::size_t cardinality() const { return keys_.size(); }
    [[nodiscard]] const std::vector<std::uint64_t>& keys() const { return keys_; }

    [[nodiscard]] std::span<const Elem> member(std::size_t i) const { return {flat_.data() + i * n_, n_}; }
    [[nodiscard]] std::vector<Vector> members() const {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < keys_.size(); ++i) out.emplace_back(member(i));
        return out;
    }

    [[nodiscard]] bool contains(std::span<const Elem> x) const {
        return std::binary_search(keys_.begin(), keys_.end(), pack(x, ring_->size()));
    }
    [[nodiscard]] bool contains(const Vector& x) const { return contains(x.span()); }

    [[nodiscard]] bool subset_of(const Code& other) const {
        return std::includes(other.keys_.begin(), other.keys_.end(), keys_.begin(), keys_.end());
    }

    /// Member-set equality; generator lists may differ.
    friend bool operator==(const Code& a, const Code& b) { return a.n_ == b.n_ && a.keys_ == b.keys_; }

private:
    RingPtr ring_;
    std::size_t n_;
    std::vector<Vector> generators_;
    std::vector<std::uint64_t> keys_;
    std::vector<Elem> flat_;
};

/// R{v_1, ..., v_k}
inline Code code_from_generators(RingPtr ring, std::size_t n, std::vector<Vector> gens,
                                 std::uint64_t cap = kDefaultCap) {
    for (const auto& g : gens)
        if (g.size() != n) throw PreconditionError("generator of wrong length");
    SparseSpan span(*ring, n, cap);
    for (const auto& g : gens) span.extend(g.span());
    return Code(ring, n, std::move(gens), span.keys());
}

inline Code zero_code(RingPtr ring, std::size_t n) { return Code(ring, n, {}, {0}); }

/// R*a + C
inline Code extend_code(const Code& c, const Vector& a, std::uint64_t cap = kDefaultCap) {
    SparseSpan span(*c.ring(), c.n(), cap);
    for (const auto& g : c.generators()) span.extend(g.span());
    span.extend(a.span());
    auto gens = c.generators();
    gens.push_back(a);
    return Code(c.ring(), c.n(), std::move(gens), span.keys());
}

inline Code intersect(const Code& a, const Code& b) {
    std::vector<std::uint64_t> keys;
    std::set_intersection(a.keys().begin(), a.keys().end(), b.keys().begin(), b.keys().end(), std::back_inserter(keys));
    SparseSpan span(*a.ring(), a.n());
    std::vector<Vector> gens;
    for (auto k : keys) {
        if (span.contains_key(k)) continue;
        gens.push_back(unpack(k, a.ring()->size(), a.n()));
        span.extend(gens.back().span());
    }
    return Code(a.ring(), a.n(), std::move(gens), std::move(keys));
}

/// A code from an explicit member set, with a greedy generating set.
inline Code code_from_members(RingPtr ring, std::size_t n, std::vector<std::uint64_t> keys) {
    std::sort(keys.begin(), keys.end());
    SparseSpan span(*ring, n);
    std::vector<Vector> gens;
    for (auto k : keys) {
        if (span.contains_key(k)) continue;
        gens.push_back(unpack(k, ring->size(), n));
        span.extend(gens.back().span());
    }
    if (span.size() != keys.size()) throw PreconditionError("member set is not a submodule");
    return Code(ring, n, std::move(gens), std::move(keys));
}

struct FreeVerdict {
    bool free = false;
    std::size_t rank = 0;
    std::vector<Vector> basis;
};

namespace detail {

inline std::optional<std::size_t> exact_log(std::uint64_t value, std::size_t base) {
    std::size_t k = 0;
    std::uint64_t p = 1;
    while (p < value) {
        p *= base;
        ++k;
    }
    if (p != value) return std::nullopt;
    return k;
}

}  // namespace detail

/// Decides whether C is free. A free code of rank k has |C| = |R|^k; a basis is then
/// built greedily from the members in key order, adding each member that keeps the
/// family free. Over the supported ring families a free submodule of a free code is a
/// direct summand with free complement, so the greedy pass never needs to backtrack.
inline FreeVerdict is_free(const Code& c) {
    const FiniteRing& r = *c.ring();
    auto k = detail::exact_log(c.cardinality(), r.size());
    if (!k) return {};
    if (*k == 0) return {true, 0, {}};
    SparseSpan span(r, c.n());
    std::vector<Vector> chosen;
    for (std::size_t i = 1; i < c.cardinality() && chosen.size() < *k; ++i) {
        auto x = c.member(i);
        if (span.contains(x) || !span.independent(x)) continue;
        span.extend(x);
        chosen.emplace_back(x);
    }
    if (chosen.size() == *k && span.size() == c.cardinality()) return {true, *k, std::move(chosen)};
    return {};
}

/// C-perp = { y : y . g = 0 for every generator g }, commutative rings only.
inline Code dual_code(const Code& c, std::uint64_t cap = kDefaultCap) {
    const FiniteRing& r = *c.ring();
    if (!r.is_commutative()) throw PreconditionError("dual code requires a commutative ring");
    const auto total = checked_power(r.size(), c.n());
    require_within_cap(total, cap, "|R|^n");
    std::vector<std::uint64_t> keys;
    Vector y(c.n());
    for (std::uint64_t key = 0; key < total; ++key) {
        unpack_into(key, r.size(), y.span());
        bool ok = true;
        for (const auto& g : c.generators())
            if (dot(r, y.span(), g.span()) != 0) {
                ok = false;
                break;
            }
        if (ok) keys.push_back(key);
    }
    return code_from_members(c.ring(), c.n(), std::move(keys));
}

/// x . y = 0 for all codewords; checked on generator pairs, which suffices by bilinearity.
inline bool is_self_orthogonal(const Code& c) {
    const FiniteRing& r = *c.ring();
    if (!r.is_commutative()) throw PreconditionError("self-orthogonality requires a commutative ring");
    const auto& g = c.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j)
            if (dot(r, g[i].span(), g[j].span()) != 0) return false;
    return true;
}

/// Smallest generating subset of the members, searched by size and, within a size, in
/// lexicographic order of the sorted member tuple.
inline std::vector<Vector> minimal_generating_set(const Code& c, std::uint64_t work_cap = std::uint64_t{1} << 32) {
    if (c.cardinality() == 1) return {};
    const FiniteRing& r = *c.ring();
    const auto m = c.cardinality();
    std::uint64_t work = 0;
    for (std::size_t size = 1;; ++size) {
        // |R{g_1..g_k}| <= |R|^k
        if (checked_power(r.size(), size) < m) continue;
        std::vector<std::size_t> idx(size);
        std::function<bool(std::size_t, std::size_t, const SparseSpan&)> rec =
            [&](std::size_t depth, std::size_t from, const SparseSpan& span) {
                if (depth == size) return span.size() == m;
                for (std::size_t i = from; i + (size - depth) <= m; ++i) {
                    auto x = c.member(i);
                    if (span.contains(x)) continue;
                    work += span.size() * r.size();
                    require_within_cap(work, work_cap, "minimal generating set search");
                    SparseSpan next = span;
                    next.extend(x);
                    idx[depth] = i;
                    if (rec(depth + 1, i + 1, next)) return true;
                }
                return false;
            };
        SparseSpan start(r, c.n());
        if (rec(0, 1, start)) {
            std::vector<Vector> out;
            for (auto i : idx) out.emplace_back(c.member(i));
            return out;
        }
    }
}

}  // namespace lexiring
