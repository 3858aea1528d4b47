#pragma once

// Allocation-free firing primitives on raw chip vectors. The public
// Divisor/Dhar API and the gonality search both run on top of this.

#include <chipfire/graph.hpp>

#include <span>
#include <utility>
#include <vector>

namespace chipfire::detail {

struct FiringTrace {
    std::vector<std::pair<VertexSet, Chips>> steps; // (set, times fired)
    std::vector<Chips> script;                     // accumulated per-vertex fire counts
};

class Kernel {
public:
    explicit Kernel(const Multigraph& g);

    const Multigraph& graph() const noexcept { return g_; }

    // Burns from q; chips[q] is ignored. Returns the number of burned
    // vertices; flags are available through burned(). Afterwards heat()[v]
    // holds the number of burning edges at every unburned v.
    std::size_t burn(std::span<const Chips> chips, Vertex q);
    const std::vector<char>& burned() const noexcept { return burned_; }
    const std::vector<Chips>& heat() const noexcept { return heat_; }

    // Fires every vertex with in_set[v] != 0, `times` times.
    void fire(std::vector<Chips>& chips, const std::vector<char>& in_set, Chips times,
              FiringTrace* trace = nullptr) const;

    // Moves all debt onto q by firing distance balls around q, farthest
    // layer first. Requires a connected graph.
    void clear_debt_off(std::vector<Chips>& chips, Vertex q, FiringTrace* trace = nullptr);

    // Full q-reduction.
    void reduce(std::vector<Chips>& chips, Vertex q, FiringTrace* trace = nullptr);

    // chips must be debt-free off q. Runs burn / fire-unburned rounds and
    // reports whether q gets out of debt before the whole graph burns.
    bool clears_debt_at(std::vector<Chips>& chips, Vertex q, FiringTrace* trace = nullptr);

    bool winnable(std::span<const Chips> chips);
    bool is_reduced(std::span<const Chips> chips, Vertex q);

    // chips must be effective: true iff -1 anywhere can be cleared.
    bool rank_at_least_one(std::span<const Chips> chips);

    // As above but reports the first vertex whose debt cannot be cleared.
    Vertex first_unwinnable_debt(std::span<const Chips> chips);

private:
    void fire_unburned(std::vector<Chips>& chips, FiringTrace* trace);
    const std::vector<int>& distances_from(Vertex q);

    const Multigraph& g_;
    std::size_t n_;
    std::vector<char> burned_;
    std::vector<Chips> heat_;
    std::vector<Vertex> queue_;
    std::vector<char> set_;
    std::vector<Chips> scratch_;
    std::vector<int> dist_;
    Vertex dist_root_ = -1;
};

} // namespace chipfire::detail
