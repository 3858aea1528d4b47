#include <chipfire/parking.hpp>

#include <chipfire/detail/kernel.hpp>
#include <chipfire/generators.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace chipfire {

namespace {

void require_n(std::size_t n)
{
    if (n < 2 || n > kMaxParkingN)
        throw std::out_of_range("parking enumeration supports 2 <= n <= 8");
}

// Calls visit on every tuple in {lo..hi}^len, last entry varying fastest.
template <class Visit>
void for_each_box_tuple(std::size_t len, int lo, int hi, Visit&& visit)
{
    ParkingTuple t(len, lo);
    while (true) {
        visit(t);
        std::size_t i = len;
        while (i > 0 && t[i - 1] == hi)
            t[--i] = lo;
        if (i == 0)
            return;
        ++t[i - 1];
    }
}

} // namespace

bool parking_coordinate_bound_holds(std::size_t n)
{
    require_n(n);
    Multigraph g = generators::complete(n);
    detail::Kernel k(g);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Chips> chips(n, 0);
        chips[i] = static_cast<Chips>(n - 1);
        chips[n - 1] = -1;
        if (!k.winnable(chips))
            return false;
    }
    return true;
}

std::vector<ParkingTuple> unwinnable_placements(std::size_t n)
{
    require_n(n);
    if (!parking_coordinate_bound_holds(n))
        throw std::logic_error("coordinate bound fails; enumeration would be incomplete");
    Multigraph g = generators::complete(n);
    detail::Kernel k(g);
    std::vector<ParkingTuple> out;
    std::vector<Chips> chips(n, 0);
    chips[n - 1] = -1;
    for_each_box_tuple(n - 1, 0, static_cast<int>(n) - 2, [&](const ParkingTuple& t) {
        std::copy(t.begin(), t.end(), chips.begin());
        if (!k.winnable(chips))
            out.push_back(t);
    });
    sort_in_display_order(out);
    return out;
}

bool is_parking_function(const ParkingTuple& t)
{
    ParkingTuple b = t;
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] < 1 || b[i] > static_cast<int>(i) + 1)
            return false;
    return true;
}

std::vector<ParkingTuple> parking_functions(std::size_t length)
{
    std::vector<ParkingTuple> out;
    if (length == 0)
        return {ParkingTuple{}};
    for_each_box_tuple(length, 1, static_cast<int>(length), [&](const ParkingTuple& t) {
        if (is_parking_function(t))
            out.push_back(t);
    });
    sort_in_display_order(out);
    return out;
}

void sort_in_display_order(std::vector<ParkingTuple>& tuples)
{
    auto key = [](const ParkingTuple& t) {
        int total = std::accumulate(t.begin(), t.end(), 0);
        ParkingTuple values = t;
        std::sort(values.begin(), values.end(), std::greater<>());
        std::vector<std::size_t> positions(t.size());
        std::iota(positions.begin(), positions.end(), 0);
        std::stable_sort(positions.begin(), positions.end(),
                         [&](std::size_t a, std::size_t b) { return t[a] > t[b]; });
        return std::make_tuple(total, values, positions);
    };
    std::stable_sort(tuples.begin(), tuples.end(),
                     [&](const ParkingTuple& a, const ParkingTuple& b) { return key(a) < key(b); });
}

BijectionReport verify_bijection(std::size_t n)
{
    BijectionReport out;
    out.shifted = unwinnable_placements(n);
    for (ParkingTuple& t : out.shifted)
        for (int& x : t)
            ++x;
    out.parking = parking_functions(n - 1);
    out.holds = out.shifted == out.parking; // both in display order
    return out;
}

} // namespace chipfire
