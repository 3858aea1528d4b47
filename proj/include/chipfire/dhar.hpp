#pragma once

// Dhar's burning algorithm and everything decided with it: q-reduction,
// Dollar Game winnability, divisor rank and the Riemann-Roch check.

#include <chipfire/divisor.hpp>

#include <vector>

namespace chipfire {

struct BurnOutcome {
    VertexSet burned;   // always contains q
    VertexSet unburned; // the set fired next when nonempty
};

// Fire starts at q; a vertex burns once its burning edges outnumber its
// chips. d must be debt-free away from q (std::invalid_argument otherwise).
BurnOutcome burn(const Divisor& d, Vertex q);

struct FiringStep {
    VertexSet set;
    Chips times;
};

struct Reduction {
    Divisor reduced;
    FiringScript script;           // reduced = apply_script(d, script)
    std::vector<FiringStep> steps; // debt-clearing firings first, then burn rounds
};

// The unique divisor equivalent to d that is debt-free off q and survives
// a burn from q.
Reduction q_reduce_traced(const Divisor& d, Vertex q);
Divisor q_reduce(const Divisor& d, Vertex q);
bool is_q_reduced(const Divisor& d, Vertex q);

bool dollar_game_winnable(const Divisor& d);

struct RankResult {
    int rank;
    // Effective divisor of degree rank + 1 with d - witness unwinnable.
    Divisor witness;
};

RankResult rank(const Divisor& d);

// True iff rank(d) >= r; cheaper than rank() because it stops at r.
bool has_rank_at_least(const Divisor& d, int r);

struct RiemannRochCheck {
    int rank;            // r(D)
    int complement_rank; // r(K - D)
    Chips degree;
    std::int64_t genus;
    bool holds;          // r(D) - r(K - D) == deg(D) + 1 - g
};

RiemannRochCheck verify_riemann_roch(const Divisor& d);

} // namespace chipfire
