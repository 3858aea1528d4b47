#pragma once

// Unwinnable placements on K_n with one chip of debt on the last vertex,
// and their correspondence with parking functions.

#include <cstddef>
#include <vector>

namespace chipfire {

using ParkingTuple = std::vector<int>;

inline constexpr std::size_t kMaxParkingN = 8;

// For each i < n-1, checks that (n-1) chips on vertex i against the debt is
// winnable. Any tuple with an entry >= n-1 dominates one of these, so the
// enumeration below may stop every coordinate at n-2 once this holds.
bool parking_coordinate_bound_holds(std::size_t n);

// All (c_0, ..., c_{n-2}) >= 0 with (c, -1) unwinnable on K_n, in the
// order used in print. Requires 2 <= n <= 8 (std::out_of_range otherwise);
// throws std::logic_error if the coordinate bound check fails.
std::vector<ParkingTuple> unwinnable_placements(std::size_t n);

// Sorted b satisfies b_i <= i (1-based).
bool is_parking_function(const ParkingTuple& t);

// Tuples in {1..length}^length passing is_parking_function.
std::vector<ParkingTuple> parking_functions(std::size_t length);

// Total first, then the multiset of entries, then where the largest entries sit.
void sort_in_display_order(std::vector<ParkingTuple>& tuples);

struct BijectionReport {
    bool holds = false;
    std::vector<ParkingTuple> shifted;  // unwinnable placements plus one
    std::vector<ParkingTuple> parking;  // independent enumeration
};

BijectionReport verify_bijection(std::size_t n);

} // namespace chipfire
