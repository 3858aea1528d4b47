#pragma once

// Exact gonality search, higher gonalities, winning-divisor enumeration and
// the upper/lower bound calculators the search is seeded with.

#include <chipfire/certificates.hpp>
#include <chipfire/divisor.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace chipfire {

// Unset fields mean no limit.
struct SearchBudget {
    std::optional<std::chrono::milliseconds> wall_time;
    std::optional<std::uint64_t> max_candidates;
};

struct BoundEntry {
    std::int64_t value;
    std::string technique; // lower: min_degree | bramble | scramble
                           // upper: independence | product | genus_plus_one | witness_divisor
    std::optional<Divisor> witness; // upper bounds that come with a divisor
};

struct BoundsReport {
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;

    std::optional<BoundEntry> best_lower() const;
    std::optional<BoundEntry> best_upper() const;
};

// Extra certificates a caller already has. Every one is verified before use.
struct BoundsInputs {
    std::vector<Scramble> scrambles;
    std::vector<Bramble> brambles;
    std::vector<Divisor> witnesses;
    std::optional<std::pair<GraphPtr, GraphPtr>> factors; // g is factors.first □ factors.second
};

struct BoundsOptions {
    // Uniform scrambles with k = 1..max_uniform_k are scored while the egg
    // count stays within max_eggs.
    std::size_t max_uniform_k = 8;
    std::size_t max_eggs = 800;
};

BoundsReport bounds_report(const GraphPtr& g, const BoundsInputs& inputs = {},
                           const BoundsOptions& options = {});

struct GonalityOptions {
    SearchBudget budget;
    // Test every effective placement instead of one q-reduced form per class,
    // ladder from degree 1.
    bool raw_algorithm = false;
    // Start the degree ladder at the best lower bound from bounds_report.
    bool use_lower_bounds = true;
    BoundsInputs inputs;
    BoundsOptions bounds;
};

struct GonalityResult {
    bool exact = false;
    int rank = 1;
    std::int64_t gonality = 0; // meaningful when exact
    std::optional<Divisor> winning_divisor;
    // gonality - 1, refuted either by exhausting its candidates or by a
    // lower-bound certificate (named in `refutation`).
    std::optional<std::int64_t> refutation_degree;
    std::string refutation; // "exhaustive" or a lower-bound technique
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::string lower_technique;
    std::string upper_technique;
    std::uint64_t candidates_tested = 0;
    BoundsReport bounds;
};

// Minimal degree of a divisor of rank >= 1. On budget exhaustion the result
// is a bracket [lower, upper] with exact == false.
GonalityResult gonality(const GraphPtr& g, const GonalityOptions& options = {});

// Minimal degree of a divisor of rank >= r.
GonalityResult higher_gonality(const GraphPtr& g, int r, const GonalityOptions& options = {});

// Effective divisors of degree n with rank >= 1, every raw placement,
// lexicographic order. visit returns false to stop.
void for_each_winning_divisor(const GraphPtr& g, std::int64_t n,
                              const std::function<bool(const Divisor&)>& visit);
std::vector<Divisor> enumerate_winning_divisors(const GraphPtr& g, std::int64_t n);

// One chip off a maximum independent set. Simple graphs only.
BoundEntry upper_bound_independence(const GraphPtr& g);

// min(|V(g)| gon(h), |V(h)| gon(g)) with the winning divisor of the smaller
// factor bound copied onto every fibre of cartesian_product(g, h).
BoundEntry upper_bound_product(const GraphPtr& g, const GraphPtr& h, const GonalityOptions& options = {});

BoundEntry upper_bound_genus(const GraphPtr& g);

// 2 gon <= g + 3; an open question, reported and never enforced.
bool within_conjectured_bound(std::int64_t gonality, std::int64_t genus);

} // namespace chipfire
