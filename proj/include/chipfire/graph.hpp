#pragma once

// Undirected loopless multigraphs and the structural utilities the
// chip-firing engine and the bound certificates are built on.

#include <chipfire/checked.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace chipfire {

using Vertex = std::int32_t;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

// Bit i set <=> vertex i present. Only usable on graphs with <= 64 vertices.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxMaskVertices = 64;

struct Edge {
    Vertex u;
    Vertex v;
    std::int64_t count = 1;
};

class Multigraph {
public:
    struct Neighbor {
        Vertex vertex;
        std::int64_t count;
    };

    // Repeated pairs accumulate multiplicity. Throws std::invalid_argument
    // on loops, nonpositive counts or n == 0, std::out_of_range on bad endpoints.
    Multigraph(std::size_t vertex_count, std::span<const Edge> edges,
               std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return n_; }
    std::int64_t edge_count() const noexcept { return edge_count_; }

    std::int64_t multiplicity(Vertex u, Vertex v) const;
    std::int64_t valence(Vertex v) const;
    std::span<const Neighbor> neighbors(Vertex v) const;

    // One entry per adjacent pair (u < v) carrying its multiplicity.
    std::vector<Edge> edges() const;

    bool is_simple() const noexcept { return simple_; }
    bool contains(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < n_; }

    const std::vector<std::string>& labels() const noexcept { return labels_; }

    // Structural equality: same vertex count and multiplicities. Labels are ignored.
    bool operator==(const Multigraph& other) const noexcept
    {
        return n_ == other.n_ && mult_ == other.mult_;
    }

private:
    void check_vertex(Vertex v) const;

    std::size_t n_;
    std::vector<std::int64_t> mult_; // n*n, row major
    std::vector<std::int64_t> valence_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::int64_t edge_count_ = 0;
    bool simple_ = true;
    std::vector<std::string> labels_;
};

using GraphPtr = std::shared_ptr<const Multigraph>;

inline GraphPtr share(Multigraph g) { return std::make_shared<const Multigraph>(std::move(g)); }

// --- vertex set helpers -----------------------------------------------------

VertexSet normalized(VertexSet s);
VertexSet complement(const Multigraph& g, const VertexSet& s);
VertexMask to_mask(const VertexSet& s);
VertexSet from_mask(VertexMask m);
void require_mask_capacity(const Multigraph& g);

// --- structural operations --------------------------------------------------

std::int64_t min_degree(const Multigraph& g);

// |E| - |V| + 1 counting multiplicities. Throws on disconnected input.
std::int64_t genus(const Multigraph& g);

bool is_connected(const Multigraph& g);
bool induces_connected(const Multigraph& g, const VertexSet& s);

// Vertices of the result are the members of `s` in ascending order.
Multigraph induced_subgraph(const Multigraph& g, const VertexSet& s);

// Edges (with multiplicity) having exactly one endpoint in `s`.
// `s` must be a nonempty proper subset.
std::int64_t outdegree(const Multigraph& g, const VertexSet& s);

// Fewest edges whose removal disconnects every vertex of `a` from every
// vertex of `b`. When `cap` is given the search stops as soon as the cut is
// known to be >= cap and returns cap.
std::int64_t min_edge_cut(const Multigraph& g, const VertexSet& a, const VertexSet& b,
                          std::int64_t cap = -1);

// Multiplicity >= 1 counts as adjacency. Requires <= 64 vertices.
VertexSet maximum_independent_set(const Multigraph& g);
std::int64_t independence_number(const Multigraph& g);

// Every k-vertex set inducing a connected subgraph, each exactly once, in
// grow-from-minimum-vertex order. Requires <= 64 vertices.
void for_each_connected_subset(const Multigraph& g, std::size_t k,
                               const std::function<void(VertexMask)>& visit);
std::vector<VertexSet> connected_subsets(const Multigraph& g, std::size_t k);

std::string to_dot(const Multigraph& g);

} // namespace chipfire
