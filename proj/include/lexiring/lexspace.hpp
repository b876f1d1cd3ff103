#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexiring/core.hpp"
#include "lexiring/order.hpp"
#include "lexiring/ring.hpp"
#include "lexiring/vector.hpp"

namespace lexiring {

/// An ordered basis b_1..b_n of R^n with a dense inverse of the coordinate map.
struct OrderedBasis {
    RingPtr ring;
    std::size_t n = 0;
    std::vector<Vector> vectors;
    /// coord_of[pack(x)] = pack(coefficient tuple of x).
    std::vector<std::uint32_t> coord_of;

    /// sum_j coeffs[j] * b_j
    [[nodiscard]] Vector combine(std::span<const Elem> coeffs) const {
        Vector out(n);
        combine_into(coeffs, out.span());
        return out;
    }

    void combine_into(std::span<const Elem> coeffs, std::span<Elem> out) const {
        const FiniteRing& r = *ring;
        std::fill(out.begin(), out.end(), Elem{0});
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0) continue;
            for (std::size_t t = 0; t < n; ++t) out[t] = r.add(out[t], r.mul(coeffs[j], vectors[j][t]));
        }
    }

    /// Coefficient tuple (x_1..x_n) with sum x_j b_j = x.
    [[nodiscard]] Vector coords(std::span<const Elem> x) const {
        return unpack(coord_of[pack(x, ring->size())], ring->size(), n);
    }
    [[nodiscard]] Vector coords(const Vector& x) const { return coords(x.span()); }
};

namespace detail {

inline void check_space_cap(const FiniteRing& r, std::size_t n, std::uint64_t cap) {
    const auto total = checked_power(r.size(), n);
    require_within_cap(total, std::min<std::uint64_t>(cap, std::uint64_t{1} << 32), "|R|^n");
}

}  // namespace detail

/// Validates that `vectors` is an ordered basis of R^n by enumerating every coefficient
/// tuple and checking that the representation map is injective (hence bijective).
inline OrderedBasis make_basis(RingPtr ring, std::size_t n, std::vector<Vector> vectors,
                               std::uint64_t cap = kDefaultCap) {
    const FiniteRing& r = *ring;
    if (n == 0) throw PreconditionError("length must be positive");
    if (vectors.size() != n) throw PreconditionError("a basis of R^n needs exactly n vectors");
    for (const auto& v : vectors)
        if (v.size() != n) throw PreconditionError("basis vector of wrong length");
    detail::check_space_cap(r, n, cap);
    const auto total = checked_power(r.size(), n);

    OrderedBasis b;
    b.ring = ring;
    b.n = n;
    b.vectors = std::move(vectors);
    constexpr auto unset = UINT32_MAX;
    b.coord_of.assign(total, unset);
    Vector coeffs(n), image(n);
    for (std::uint64_t key = 0; key < total; ++key) {
        unpack_into(key, r.size(), coeffs.span());
        b.combine_into(coeffs.span(), image.span());
        auto& slot = b.coord_of[pack(image.span(), r.size())];
        if (slot != unset) throw PreconditionError("vectors do not form a basis: representation map is not injective");
        slot = static_cast<std::uint32_t>(key);
    }
    return b;
}

inline Vector unit_vector(std::size_t n, std::size_t i, Elem one) {
    Vector v(n);
    v[i] = one;
    return v;
}

inline OrderedBasis standard_basis(RingPtr ring, std::size_t n, std::uint64_t cap = kDefaultCap) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(unit_vector(n, i, ring->one()));
    return make_basis(ring, n, std::move(vs), cap);
}

/// e_n, ..., e_1
inline OrderedBasis reverse_basis(RingPtr ring, std::size_t n, std::uint64_t cap = kDefaultCap) {
    std::vector<Vector> vs;
    for (std::size_t i = n; i-- > 0;) vs.push_back(unit_vector(n, i, ring->one()));
    return make_basis(ring, n, std::move(vs), cap);
}

/// `standard` | `reverse` | comma-separated vector literals.
inline OrderedBasis parse_basis(RingPtr ring, std::size_t n, std::string_view desc, std::uint64_t cap = kDefaultCap) {
    desc = detail::trim(desc);
    if (desc == "standard") return standard_basis(ring, n, cap);
    if (desc == "reverse") return reverse_basis(ring, n, cap);
    return make_basis(ring, n, parse_vector_list(*ring, desc, n), cap);
}

/// Dense membership set over R^n used for spans during basis completion and freeness tests.
class SpanSet {
public:
    SpanSet(const FiniteRing& r, std::size_t n) : r_(&r), n_(n), in_(checked_power(r.size(), n), false) {
        in_[0] = true;
        keys_.push_back(0);
    }

    [[nodiscard]] bool contains(std::span<const Elem> x) const { return in_[pack(x, r_->size())]; }
    [[nodiscard]] std::size_t size() const { return keys_.size(); }
    [[nodiscard]] const std::vector<std::uint64_t>& keys() const { return keys_; }

    /// x is free over the current span: r*x is outside the span for every nonzero r.
    [[nodiscard]] bool independent(std::span<const Elem> x) const {
        Vector rx(n_);
        for (std::size_t s = 1; s < r_->size(); ++s) {
            scale_into(*r_, static_cast<Elem>(s), x, rx.span());
            if (contains(rx.span())) return false;
        }
        return true;
    }

    void extend(std::span<const Elem> x) {
        const auto q = r_->size();
        std::vector<Vector> multiples;
        for (std::size_t s = 0; s < q; ++s) {
            Vector rx(n_);
            scale_into(*r_, static_cast<Elem>(s), x, rx.span());
            multiples.push_back(std::move(rx));
        }
        Vector base(n_), sum(n_);
        const auto old = keys_.size();
        for (std::size_t i = 0; i < old; ++i) {
            unpack_into(keys_[i], q, base.span());
            for (const auto& m : multiples) {
                add_into(*r_, base.span(), m.span(), sum.span());
                const auto k = pack(sum.span(), q);
                if (!in_[k]) {
                    in_[k] = true;
                    keys_.push_back(k);
                }
            }
        }
    }

private:
    const FiniteRing* r_;
    std::size_t n_;
    std::vector<bool> in_;
    std::vector<std::uint64_t> keys_;
};

/// The family is free: sum r_i v_i = 0 forces all r_i = 0.
inline bool is_free_family(const FiniteRing& r, std::size_t n, const std::vector<Vector>& family,
                           std::uint64_t cap = kDefaultCap) {
    detail::check_space_cap(r, n, cap);
    SpanSet span(r, n);
    for (const auto& v : family) {
        if (!span.independent(v.span())) return false;
        span.extend(v.span());
    }
    return true;
}

/// Extends a free family to an ordered basis of R^n, scanning candidates in
/// lexicographic order of standard coordinates and keeping each that stays free.
inline OrderedBasis complete_to_basis(RingPtr ring, std::size_t n, const std::vector<Vector>& partial,
                                      std::uint64_t cap = kDefaultCap) {
    const FiniteRing& r = *ring;
    detail::check_space_cap(r, n, cap);
    for (const auto& v : partial)
        if (v.size() != n) throw PreconditionError("vector of wrong length");
    if (partial.size() > n || !is_free_family(r, n, partial, cap))
        throw PreconditionError("partial family is not free");
    SpanSet span(r, n);
    std::vector<Vector> basis = partial;
    for (const auto& v : partial) span.extend(v.span());
    const auto total = checked_power(r.size(), n);
    Vector cand(n);
    for (std::uint64_t key = 1; key < total && basis.size() < n; ++key) {
        unpack_into(key, r.size(), cand.span());
        if (span.contains(cand.span()) || !span.independent(cand.span())) continue;
        span.extend(cand.span());
        basis.push_back(cand);
    }
    if (basis.size() != n || span.size() != total)
        throw InternalError("basis completion failed; ring is not a principal left ideal ring?");
    return make_basis(ring, n, std::move(basis), cap);
}

class LexSpace;

/// Streams the level set V_i \ V_{i-1} in ascending order without materialising R^n.
/// Coefficient x_i runs over nonzero elements in ring order (outermost), x_{i-1}..x_1
/// over all of R in ring order, with x_1 innermost.
class LevelRange {
public:
    class iterator {
    public:
        using value_type = Vector;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        const Vector& operator*() const { return current_; }
        const Vector* operator->() const { return &current_; }
        iterator& operator++() {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class LevelRange;
        iterator(const OrderedBasis* basis, const RingOrder* order, std::size_t level)
            : basis_(basis), order_(order), level_(level), pos_(basis->n, 0), coeffs_(basis->n) {
            for (auto e : order_->sequence)
                if (e != 0) nonzero_.push_back(e);
            done_ = nonzero_.empty() || level_ == 0;
            if (!done_) refresh();
        }

        void refresh() {
            for (std::size_t j = 0; j + 1 < level_; ++j) coeffs_[j] = order_->sequence[pos_[j]];
            coeffs_[level_ - 1] = nonzero_[pos_[level_ - 1]];
            current_ = basis_->combine(coeffs_.span());
        }

        void advance() {
            const auto q = order_->sequence.size();
            for (std::size_t j = 0; j + 1 < level_; ++j) {
                if (++pos_[j] < q) {
                    refresh();
                    return;
                }
                pos_[j] = 0;
            }
            if (++pos_[level_ - 1] < nonzero_.size()) {
                refresh();
                return;
            }
            done_ = true;
        }

        const OrderedBasis* basis_ = nullptr;
        const RingOrder* order_ = nullptr;
        std::size_t level_ = 0;
        std::vector<std::size_t> pos_;
        std::vector<Elem> nonzero_;
        Vector coeffs_;
        Vector current_;
        bool done_ = true;
    };

    LevelRange(const OrderedBasis& basis, const RingOrder& order, std::size_t level)
        : basis_(&basis), order_(&order), level_(level) {}

    [[nodiscard]] iterator begin() const { return iterator(basis_, order_, level_); }
    [[nodiscard]] std::default_sentinel_t end() const { return {}; }

private:
    const OrderedBasis* basis_;
    const RingOrder* order_;
    std::size_t level_;
};

/// R^n ordered lexicographically from a ring order and an ordered basis.
class LexSpace {
public:
    LexSpace(RingPtr ring, RingOrder order, OrderedBasis basis)
        : ring_(std::move(ring)), order_(std::move(order)), basis_(std::move(basis)) {
        if (order_.sequence.size() != ring_->size()) throw PreconditionError("order does not match ring");
        if (basis_.ring.get() != ring_.get()) throw PreconditionError("basis is over a different ring");
    }

    [[nodiscard]] const RingPtr& ring() const { return ring_; }
    [[nodiscard]] const RingOrder& order() const { return order_; }
    [[nodiscard]] const OrderedBasis& basis() const { return basis_; }
    [[nodiscard]] std::size_t n() const { return basis_.n; }

    [[nodiscard]] Vector coords(const Vector& x) const { return basis_.coords(x); }

    /// max{ j : x_j != 0 } in basis coordinates, 0 for the zero vector.
    [[nodiscard]] std::size_t level(const Vector& x) const { return level_of_coords(coords(x)); }

    static std::size_t level_of_coords(const Vector& c) {
        for (std::size_t j = c.size(); j-- > 0;)
            if (c[j] != 0) return j + 1;
        return 0;
    }

    [[nodiscard]] std::strong_ordering compare(const Vector& x, const Vector& y) const {
        const auto cx = coords(x), cy = coords(y);
        const auto lx = level_of_coords(cx), ly = level_of_coords(cy);
        if (lx != ly) return lx <=> ly;
        for (std::size_t j = lx; j-- > 0;)
            if (cx[j] != cy[j]) return order_.rank[cx[j]] <=> order_.rank[cy[j]];
        return std::strong_ordering::equal;
    }

    [[nodiscard]] LevelRange level_set(std::size_t i) const {
        if (i < 1 || i > n()) throw PreconditionError("level out of range");
        return LevelRange(basis_, order_, i);
    }

private:
    RingPtr ring_;
    RingOrder order_;
    OrderedBasis basis_;
};

}  // namespace lexiring
