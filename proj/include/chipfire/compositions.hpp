#pragma once

#include <chipfire/checked.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace chipfire {

// Visits every nonnegative vector of length n summing to `total`, in
// lexicographically ascending order (entry 0 varies slowest). When `caps`
// is non-empty entry i never exceeds caps[i]. `visit` receives a span over
// a scratch buffer and returns false to stop; the function returns false
// iff it was stopped.
template <class Visit>
bool for_each_composition(std::size_t n, Chips total, Visit&& visit, std::span<const Chips> caps = {})
{
    if (n == 0 || total < 0)
        return true;
    std::vector<Chips> buf(n, 0);
    std::vector<Chips> cap_suffix(n + 1, 0); // sum of caps over [i, n)
    const bool capped = !caps.empty();
    if (capped)
        for (std::size_t i = n; i-- > 0;)
            cap_suffix[i] = checked_add(cap_suffix[i + 1], caps[i]);

    auto recurse = [&](auto&& self, std::size_t i, Chips remaining) -> bool {
        if (i + 1 == n) {
            if (capped && remaining > caps[i])
                return true;
            buf[i] = remaining;
            return visit(std::span<const Chips>(buf));
        }
        Chips hi = remaining;
        Chips lo = 0;
        if (capped) {
            hi = std::min(hi, caps[i]);
            lo = std::max<Chips>(0, remaining - cap_suffix[i + 1]);
        }
        for (Chips c = lo; c <= hi; ++c) {
            buf[i] = c;
            if (!self(self, i + 1, remaining - c))
                return false;
        }
        buf[i] = 0;
        return true;
    };
    return recurse(recurse, 0, total);
}

} // namespace chipfire
