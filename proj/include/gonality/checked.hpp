#pragma once

#include <cstdint>
#include <stdexcept>

namespace gonality {

/*
 * All divisor arithmetic in this library is exact by contract.  Inputs large
 * enough to wrap int64 are a caller bug, so the helpers below throw instead
 * of silently wrapping.
 */

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in exact arithmetic (add)");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in exact arithmetic (sub)");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in exact arithmetic (mul)");
    return r;
}

} // namespace gonality
