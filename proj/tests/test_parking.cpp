#include "oracles.hpp"

#include <chipfire/dhar.hpp>
#include <chipfire/generators.hpp>
#include <chipfire/parking.hpp>

#include <doctest.h>

#include <set>

using namespace chipfire;
namespace gen = chipfire::generators;

namespace {

// Cars arrive in order, each takes the first free spot at or after its
// preference; everyone parks iff the tuple is a parking function.
bool cars_all_park(const ParkingTuple& t)
{
    std::vector<char> taken(t.size() + 1, 0);
    for (int pref : t) {
        if (pref < 1)
            return false;
        std::size_t s = static_cast<std::size_t>(pref);
        while (s <= t.size() && taken[s])
            ++s;
        if (s > t.size())
            return false;
        taken[s] = 1;
    }
    return true;
}

std::size_t power(std::size_t b, std::size_t e)
{
    std::size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

void for_each_tuple(std::size_t len, int lo, int hi, const std::function<void(const ParkingTuple&)>& f)
{
    ParkingTuple t(len, lo);
    while (true) {
        f(t);
        std::size_t i = 0;
        while (i < len && t[i] == hi)
            t[i++] = lo;
        if (i == len)
            return;
        ++t[i];
    }
}

} // namespace

TEST_CASE("n = 4 reproduces the printed list in order")
{
    std::vector<ParkingTuple> expected{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1},
                                       {0, 1, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {2, 1, 0}, {2, 0, 1},
                                       {1, 2, 0}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}};
    CHECK(unwinnable_placements(4) == expected);

    BijectionReport r = verify_bijection(4);
    CHECK(r.holds);
    CHECK(r.parking.size() == 16);
    std::vector<ParkingTuple> shifted{{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {2, 2, 1}, {2, 1, 2},
                                      {1, 2, 2}, {3, 1, 1}, {1, 3, 1}, {1, 1, 3}, {3, 2, 1}, {3, 1, 2},
                                      {2, 3, 1}, {1, 3, 2}, {2, 1, 3}, {1, 2, 3}};
    CHECK(r.shifted == shifted);
    CHECK(r.parking == shifted);
}

TEST_CASE("small cases and errors")
{
    CHECK(unwinnable_placements(2) == std::vector<ParkingTuple>{{0}});
    CHECK(verify_bijection(2).holds);
    CHECK(verify_bijection(2).parking == std::vector<ParkingTuple>{{1}});
    CHECK(unwinnable_placements(3) == std::vector<ParkingTuple>{{0, 0}, {1, 0}, {0, 1}});
    CHECK_THROWS_AS(unwinnable_placements(1), std::out_of_range);
    CHECK_THROWS_AS(unwinnable_placements(9), std::out_of_range);
    CHECK_THROWS_AS(verify_bijection(0), std::out_of_range);
}

TEST_CASE("is_parking_function")
{
    CHECK(is_parking_function({3, 2, 1}));
    CHECK(is_parking_function({1, 1, 1}));
    CHECK_FALSE(is_parking_function({2, 2, 2}));
    CHECK_FALSE(is_parking_function({0, 1}));
    CHECK(is_parking_function({1}));
    CHECK(is_parking_function({}));
    // exhaustive against the car-parking oracle
    for (std::size_t len = 1; len <= 5; ++len)
        for_each_tuple(len, 0, static_cast<int>(len) + 1,
                       [&](const ParkingTuple& t) { CHECK(is_parking_function(t) == cars_all_park(t)); });
}

TEST_CASE("bijection for n = 2..7 with independent counts")
{
    for (std::size_t n = 2; n <= 7; ++n) {
        CAPTURE(n);
        CHECK(parking_coordinate_bound_holds(n));
        BijectionReport r = verify_bijection(n);
        CHECK(r.holds);
        // (m+1)^(m-1) parking functions of length m
        CHECK(r.parking.size() == power(n, n - 2));
        CHECK(parking_functions(n - 1).size() == power(n, n - 2));
    }
    CHECK(verify_bijection(5).parking.size() == 125);
}

TEST_CASE("every listed placement is unwinnable and nothing is missed")
{
    for (std::size_t n = 2; n <= 5; ++n) {
        CAPTURE(n);
        Multigraph k = gen::complete(n);
        GraphPtr kp = share(gen::complete(n));
        std::vector<ParkingTuple> listed = unwinnable_placements(n);
        std::set<ParkingTuple> set(listed.begin(), listed.end());
        CHECK(set.size() == listed.size());
        // a wider box than the enumeration uses, decided by the oracle
        for_each_tuple(n - 1, 0, static_cast<int>(n), [&](const ParkingTuple& t) {
            std::vector<Chips> c(t.begin(), t.end());
            c.push_back(-1);
            bool unwinnable = !oracle::winnable(k, c);
            CHECK(unwinnable == (set.count(t) == 1));
            if (unwinnable)
                CHECK_FALSE(dollar_game_winnable(Divisor(kp, c)));
        });
    }
}

TEST_CASE("display order")
{
    std::vector<ParkingTuple> t{{0, 1, 2}, {0, 0, 0}, {2, 1, 0}, {1, 1, 0}, {0, 0, 2}, {1, 0, 0}};
    sort_in_display_order(t);
    CHECK(t == std::vector<ParkingTuple>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 0, 2}, {2, 1, 0}, {0, 1, 2}});
}
