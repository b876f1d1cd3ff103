#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexiring/core.hpp"
#include "lexiring/ring.hpp"

namespace lexiring {

/// An element of R^n in standard coordinates. Ordering is lexicographic on element
/// indices, which is also the order of pack() keys.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : e_(n, 0) {}
    explicit Vector(std::vector<Elem> e) : e_(std::move(e)) {}
    explicit Vector(std::span<const Elem> e) : e_(e.begin(), e.end()) {}

    [[nodiscard]] std::size_t size() const { return e_.size(); }
    Elem& operator[](std::size_t i) { return e_[i]; }
    Elem operator[](std::size_t i) const { return e_[i]; }
    [[nodiscard]] auto begin() const { return e_.begin(); }
    [[nodiscard]] auto end() const { return e_.end(); }
    [[nodiscard]] std::span<const Elem> span() const { return e_; }
    [[nodiscard]] std::span<Elem> span() { return e_; }
    [[nodiscard]] bool is_zero() const {
        for (auto x : e_)
            if (x != 0) return false;
        return true;
    }

    friend auto operator<=>(const Vector&, const Vector&) = default;
    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<Elem> e_;
};

inline bool is_zero(std::span<const Elem> x) {
    for (auto e : x)
        if (e != 0) return false;
    return true;
}

inline void add_into(const FiniteRing& r, std::span<const Elem> x, std::span<const Elem> y, std::span<Elem> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = r.add(x[i], y[i]);
}

inline void scale_into(const FiniteRing& r, Elem s, std::span<const Elem> x, std::span<Elem> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = r.mul(s, x[i]);
}

inline Vector add(const FiniteRing& r, const Vector& x, const Vector& y) {
    Vector out(x.size());
    add_into(r, x.span(), y.span(), out.span());
    return out;
}

inline Vector scale(const FiniteRing& r, Elem s, const Vector& x) {
    Vector out(x.size());
    scale_into(r, s, x.span(), out.span());
    return out;
}

/// Standard dot product sum x_i * y_i.
inline Elem dot(const FiniteRing& r, std::span<const Elem> x, std::span<const Elem> y) {
    Elem s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = r.add(s, r.mul(x[i], y[i]));
    return s;
}

/// Base-|R| key with the first coordinate most significant.
inline std::uint64_t pack(std::span<const Elem> x, std::size_t q) {
    std::uint64_t k = 0;
    for (auto e : x) k = k * q + e;
    return k;
}

inline void unpack_into(std::uint64_t key, std::size_t q, std::span<Elem> out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Elem>(key % q);
        key /= q;
    }
}

inline Vector unpack(std::uint64_t key, std::size_t q, std::size_t n) {
    Vector v(n);
    unpack_into(key, q, v.span());
    return v;
}

/// Digit string for rings with single-character names, `;`-separated names otherwise.
inline std::string format_vector(const FiniteRing& r, std::span<const Elem> x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i && !r.compact_names()) s += ';';
        s += r.name(x[i]);
    }
    return s;
}

inline std::string format_vector(const FiniteRing& r, const Vector& x) { return format_vector(r, x.span()); }

namespace detail {

/// Splits on `sep` outside square brackets.
inline std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '[') ++depth;
        if (s[i] == ']') --depth;
        if (s[i] == sep && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

}  // namespace detail

/// Parses a vector literal. `n` = 0 accepts any length.
inline Vector parse_vector(const FiniteRing& r, std::string_view s, std::size_t n = 0) {
    s = detail::trim(s);
    std::vector<Elem> e;
    if (s.find(';') != std::string_view::npos || !r.compact_names()) {
        for (auto tok : detail::split_top_level(s, ';')) e.push_back(r.element(detail::trim(tok)));
    } else {
        for (char c : s) e.push_back(r.element(std::string_view(&c, 1)));
    }
    if (n != 0 && e.size() != n)
        throw SpecError("vector '" + std::string(s) + "' has length " + std::to_string(e.size()) + ", expected " +
                        std::to_string(n));
    return Vector(std::move(e));
}

/// Comma-separated list of vector literals (commas inside matrix names are skipped).
inline std::vector<Vector> parse_vector_list(const FiniteRing& r, std::string_view s, std::size_t n = 0) {
    std::vector<Vector> out;
    s = detail::trim(s);
    if (s.empty()) return out;
    for (auto tok : detail::split_top_level(s, ',')) out.push_back(parse_vector(r, tok, n));
    return out;
}

}  // namespace lexiring
