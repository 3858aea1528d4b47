#pragma once

// Lower-bound certificates for gonality (scrambles, brambles), tree-cut
// decompositions bounding scramble number from above, and exhaustive
// outdegree verifiers. All searches use 64-bit vertex masks, so graphs
// are limited to 64 vertices.

#include <chipfire/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chipfire {

// Eggs are nonempty, induce connected subgraphs and are pairwise distinct;
// the constructor throws std::invalid_argument otherwise.
class Scramble {
public:
    Scramble(GraphPtr graph, std::vector<VertexSet> eggs);

    // Every connected k-vertex set is an egg.
    static Scramble uniform(GraphPtr graph, std::size_t k);

    const Multigraph& graph() const noexcept { return *graph_; }
    const GraphPtr& graph_ptr() const noexcept { return graph_; }
    const std::vector<VertexSet>& eggs() const noexcept { return eggs_; }
    const std::vector<VertexMask>& masks() const noexcept { return masks_; }

private:
    GraphPtr graph_;
    std::vector<VertexSet> eggs_;
    std::vector<VertexMask> masks_;
};

struct HittingResult {
    std::int64_t size;
    VertexSet hitting_set; // one optimal hitting set
};

struct EggCutResult {
    std::optional<std::int64_t> value;          // nullopt: no two eggs are disjoint
    std::optional<std::pair<std::size_t, std::size_t>> eggs; // a minimising pair
};

struct ScrambleOrder {
    HittingResult hitting;
    EggCutResult egg_cut;
    std::int64_t order; // min(hitting, egg cut); the egg cut may be infinite
};

HittingResult hitting_number(const Scramble& s);
EggCutResult egg_cut_number(const Scramble& s);
ScrambleOrder scramble_order(const Scramble& s);

// Exact minimum hitting set over arbitrary vertex masks.
HittingResult minimum_hitting_set(const Multigraph& g, const std::vector<VertexMask>& sets);

class Bramble {
public:
    // Only range and emptiness are checked here; validate_bramble() checks
    // connectivity and touching.
    Bramble(GraphPtr graph, std::vector<VertexSet> sets);

    const Multigraph& graph() const noexcept { return *graph_; }
    const GraphPtr& graph_ptr() const noexcept { return graph_; }
    const std::vector<VertexSet>& sets() const noexcept { return sets_; }

private:
    GraphPtr graph_;
    std::vector<VertexSet> sets_;
};

struct BrambleValidation {
    bool valid = true;
    std::string reason;
    std::optional<std::size_t> offending_set;
    std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
};

BrambleValidation validate_bramble(const Bramble& b);
HittingResult bramble_order(const Bramble& b);

struct TreeCutDecomposition {
    std::size_t node_count = 1;
    std::vector<std::pair<std::size_t, std::size_t>> links;
    std::vector<std::size_t> placement; // graph vertex -> tree node
};

// Throws std::invalid_argument when the tree is not a tree or the
// placement does not cover the graph.
void validate_treecut(const TreeCutDecomposition& t, const Multigraph& g);

struct TreeCutWidth {
    std::int64_t width;
    std::vector<std::int64_t> link_load; // edges routed through each link
    std::vector<std::int64_t> node_load; // vertices plus tunnelling edges
};

TreeCutWidth treecut_width(const TreeCutDecomposition& t, const Multigraph& g);

struct OutdegreeCheck {
    bool holds = true;
    std::optional<VertexSet> counterexample;
    std::int64_t counterexample_outdegree = 0;
    std::int64_t min_outdegree = 0;
    std::uint64_t subsets_checked = 0;
};

// Checks outdeg(H) >= claimed_min for every connected induced H with
// min_size <= |V(H)| <= max_size; the first violation (smallest size
// first) is returned as counterexample.
OutdegreeCheck verify_outdegree_bounds(const Multigraph& g, std::size_t min_size, std::size_t max_size,
                                       std::int64_t claimed_min);

} // namespace chipfire
