#pragma once

#include <cstdint>
#include <stdexcept>

namespace chipfire {

using Chips = std::int64_t;

// Chip arithmetic never wraps: every sum and product on chip counts or
// firing counts goes through these helpers.
inline Chips checked_add(Chips a, Chips b)
{
    Chips out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("chip count overflow");
    return out;
}

inline Chips checked_sub(Chips a, Chips b)
{
    Chips out;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("chip count overflow");
    return out;
}

inline Chips checked_mul(Chips a, Chips b)
{
    Chips out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("chip count overflow");
    return out;
}

} // namespace chipfire
