#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lexiring {

/// Index of a ring element. Rings are capped at 256 elements, index 0 is always zero.
using Elem = std::uint8_t;

inline constexpr std::size_t kMaxRingSize = 256;

/// Default bound on |R|^n and on the size of any enumerated set.
inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed descriptor or input (ring spec, property expression, vector literal, ...).
class SpecError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured work or size cap.
class CapError : public Error {
public:
    using Error::Error;
};

/// An operation was called with inputs violating its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Respectfulness / multiplicativity gate failed and no override was given.
class GateError : public Error {
public:
    using Error::Error;
};

/// A search that cannot fail over a principal left ideal ring did fail.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Saturating |R|^n; returns UINT64_MAX on overflow.
inline std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

inline void require_within_cap(std::uint64_t amount, std::uint64_t cap, const std::string& what) {
    if (amount > cap)
        throw CapError(what + ": " + std::to_string(amount) + " exceeds cap " + std::to_string(cap));
}

}  // namespace lexiring
