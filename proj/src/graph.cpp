#include <chipfire/graph.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace chipfire {

Multigraph::Multigraph(std::size_t vertex_count, std::span<const Edge> edges,
                       std::vector<std::string> labels)
    : n_(vertex_count), mult_(vertex_count * vertex_count, 0), valence_(vertex_count, 0),
      adjacency_(vertex_count), labels_(std::move(labels))
{
    if (n_ == 0)
        throw std::invalid_argument("a graph needs at least one vertex");
    if (!labels_.empty() && labels_.size() != n_)
        throw std::invalid_argument("label count does not match vertex count");

    for (const Edge& e : edges) {
        check_vertex(e.u);
        check_vertex(e.v);
        if (e.u == e.v)
            throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
        if (e.count <= 0)
            throw std::invalid_argument("edge multiplicity must be positive");
        mult_[e.u * n_ + e.v] = checked_add(mult_[e.u * n_ + e.v], e.count);
        mult_[e.v * n_ + e.u] = checked_add(mult_[e.v * n_ + e.u], e.count);
        valence_[e.u] = checked_add(valence_[e.u], e.count);
        valence_[e.v] = checked_add(valence_[e.v], e.count);
        edge_count_ = checked_add(edge_count_, e.count);
    }
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = 0; v < n_; ++v)
            if (std::int64_t m = mult_[u * n_ + v]; m > 0) {
                adjacency_[u].push_back({static_cast<Vertex>(v), m});
                if (m > 1)
                    simple_ = false;
            }
}

void Multigraph::check_vertex(Vertex v) const
{
    if (!contains(v))
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

std::int64_t Multigraph::multiplicity(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return mult_[u * n_ + v];
}

std::int64_t Multigraph::valence(Vertex v) const
{
    check_vertex(v);
    return valence_[v];
}

std::span<const Multigraph::Neighbor> Multigraph::neighbors(Vertex v) const
{
    check_vertex(v);
    return adjacency_[v];
}

std::vector<Edge> Multigraph::edges() const
{
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (const Neighbor& nb : adjacency_[u])
            if (static_cast<std::size_t>(nb.vertex) > u)
                out.push_back({static_cast<Vertex>(u), nb.vertex, nb.count});
    return out;
}

// --- vertex sets ------------------------------------------------------------

VertexSet normalized(VertexSet s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

VertexSet complement(const Multigraph& g, const VertexSet& s)
{
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) {
        if (!g.contains(v))
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    VertexSet out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!in[v])
            out.push_back(static_cast<Vertex>(v));
    return out;
}

VertexMask to_mask(const VertexSet& s)
{
    VertexMask m = 0;
    for (Vertex v : s) {
        if (v < 0 || static_cast<std::size_t>(v) >= kMaxMaskVertices)
            throw std::out_of_range("vertex does not fit in a 64-bit mask");
        m |= VertexMask{1} << v;
    }
    return m;
}

VertexSet from_mask(VertexMask m)
{
    VertexSet out;
    while (m) {
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

void require_mask_capacity(const Multigraph& g)
{
    if (g.vertex_count() > kMaxMaskVertices)
        throw std::invalid_argument("operation supports at most 64 vertices");
}

namespace {

std::vector<char> membership(const Multigraph& g, const VertexSet& s)
{
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) {
        if (!g.contains(v))
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    return in;
}

std::vector<VertexMask> adjacency_masks(const Multigraph& g)
{
    require_mask_capacity(g);
    std::vector<VertexMask> adj(g.vertex_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (const auto& nb : g.neighbors(static_cast<Vertex>(v)))
            adj[v] |= VertexMask{1} << nb.vertex;
    return adj;
}

} // namespace

// --- structure --------------------------------------------------------------

std::int64_t min_degree(const Multigraph& g)
{
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        best = std::min(best, g.valence(static_cast<Vertex>(v)));
    return best;
}

std::int64_t genus(const Multigraph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("genus is defined for connected graphs");
    return g.edge_count() - static_cast<std::int64_t>(g.vertex_count()) + 1;
}

bool induces_connected(const Multigraph& g, const VertexSet& s)
{
    if (s.empty())
        return false;
    std::vector<char> in = membership(g, s);
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<Vertex> stack{s.front()};
    seen[s.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const auto& nb : g.neighbors(v))
            if (in[nb.vertex] && !seen[nb.vertex]) {
                seen[nb.vertex] = 1;
                ++reached;
                stack.push_back(nb.vertex);
            }
    }
    return reached == normalized(s).size();
}

bool is_connected(const Multigraph& g)
{
    VertexSet all(g.vertex_count());
    for (std::size_t v = 0; v < all.size(); ++v)
        all[v] = static_cast<Vertex>(v);
    return induces_connected(g, all);
}

Multigraph induced_subgraph(const Multigraph& g, const VertexSet& s)
{
    VertexSet verts = normalized(s);
    if (verts.empty())
        throw std::invalid_argument("induced subgraph of the empty set");
    std::vector<Vertex> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (!g.contains(verts[i]))
            throw std::out_of_range("vertex " + std::to_string(verts[i]) + " out of range");
        index[verts[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (Vertex u : verts) {
        for (const auto& nb : g.neighbors(u))
            if (nb.vertex > u && index[nb.vertex] >= 0)
                edges.push_back({index[u], index[nb.vertex], nb.count});
        if (!g.labels().empty())
            labels.push_back(g.labels()[u]);
    }
    return Multigraph(verts.size(), edges, std::move(labels));
}

std::int64_t outdegree(const Multigraph& g, const VertexSet& s)
{
    VertexSet verts = normalized(s);
    if (verts.empty() || verts.size() >= g.vertex_count())
        throw std::invalid_argument("outdegree needs a nonempty proper subset");
    std::vector<char> in = membership(g, verts);
    std::int64_t out = 0;
    for (Vertex v : verts)
        for (const auto& nb : g.neighbors(v))
            if (!in[nb.vertex])
                out = checked_add(out, nb.count);
    return out;
}

std::int64_t min_edge_cut(const Multigraph& g, const VertexSet& a, const VertexSet& b,
                          std::int64_t cap)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("min_edge_cut needs two nonempty sets");
    std::vector<char> in_a = membership(g, a);
    std::vector<char> in_b = membership(g, b);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (in_a[v] && in_b[v])
            throw std::invalid_argument("min_edge_cut sets overlap");

    // Contract a into a source and b into a sink, then augment along
    // shortest residual paths.
    const std::size_t n = g.vertex_count();
    const std::size_t source = n, sink = n + 1, size = n + 2;
    constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> residual(size * size, 0);
    auto at = [&](std::size_t u, std::size_t v) -> std::int64_t& { return residual[u * size + v]; };
    auto node = [&](Vertex v) -> std::size_t {
        if (in_a[v])
            return source;
        if (in_b[v])
            return sink;
        return static_cast<std::size_t>(v);
    };
    for (const Edge& e : g.edges()) {
        std::size_t u = node(e.u), v = node(e.v);
        if (u == v)
            continue;
        at(u, v) += e.count;
        at(v, u) += e.count;
    }

    std::int64_t flow = 0;
    std::vector<std::int64_t> parent(size);
    while (cap < 0 || flow < cap) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[source] = static_cast<std::int64_t>(source);
        std::queue<std::size_t> frontier;
        frontier.push(source);
        while (!frontier.empty() && parent[sink] < 0) {
            std::size_t u = frontier.front();
            frontier.pop();
            for (std::size_t v = 0; v < size; ++v)
                if (parent[v] < 0 && at(u, v) > 0) {
                    parent[v] = static_cast<std::int64_t>(u);
                    frontier.push(v);
                }
        }
        if (parent[sink] < 0)
            break;
        std::int64_t bottleneck = kInfinite;
        for (std::size_t v = sink; v != source; v = static_cast<std::size_t>(parent[v]))
            bottleneck = std::min(bottleneck, at(static_cast<std::size_t>(parent[v]), v));
        for (std::size_t v = sink; v != source; v = static_cast<std::size_t>(parent[v])) {
            at(static_cast<std::size_t>(parent[v]), v) -= bottleneck;
            at(v, static_cast<std::size_t>(parent[v])) += bottleneck;
        }
        flow += bottleneck;
    }
    return cap >= 0 ? std::min(flow, cap) : flow;
}

namespace {

struct IndependentSearch {
    const std::vector<VertexMask>& adj;
    VertexMask best = 0;
    int best_size = 0;

    void run(VertexMask candidates, VertexMask chosen, int size)
    {
        if (candidates == 0) {
            if (size > best_size) {
                best_size = size;
                best = chosen;
            }
            return;
        }
        if (size + std::popcount(candidates) <= best_size)
            return;
        // Branch on the candidate with the most candidate neighbours; an
        // isolated candidate is always taken.
        Vertex pivot = -1;
        int pivot_degree = -1;
        for (VertexMask rest = candidates; rest; rest &= rest - 1) {
            Vertex v = static_cast<Vertex>(std::countr_zero(rest));
            int d = std::popcount(adj[v] & candidates);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        VertexMask bit = VertexMask{1} << pivot;
        if (pivot_degree == 0) {
            // every remaining candidate is isolated
            run(0, chosen | candidates, size + std::popcount(candidates));
            return;
        }
        run(candidates & ~adj[pivot] & ~bit, chosen | bit, size + 1);
        run(candidates & ~bit, chosen, size);
    }
};

} // namespace

VertexSet maximum_independent_set(const Multigraph& g)
{
    std::vector<VertexMask> adj = adjacency_masks(g);
    VertexMask all = g.vertex_count() == 64 ? ~VertexMask{0} : (VertexMask{1} << g.vertex_count()) - 1;
    IndependentSearch search{adj};
    search.run(all, 0, 0);
    return from_mask(search.best);
}

std::int64_t independence_number(const Multigraph& g)
{
    return static_cast<std::int64_t>(maximum_independent_set(g).size());
}

void for_each_connected_subset(const Multigraph& g, std::size_t k,
                               const std::function<void(VertexMask)>& visit)
{
    if (k == 0 || k > g.vertex_count())
        throw std::invalid_argument("subset size out of range");
    std::vector<VertexMask> adj = adjacency_masks(g);

    // Each set is produced once, from its minimum vertex, by only extending
    // with vertices that are exclusive neighbours of the newest member.
    std::function<void(VertexMask, VertexMask, VertexMask, VertexMask)> extend =
        [&](VertexMask sub, VertexMask ext, VertexMask closed, VertexMask above) {
            if (static_cast<std::size_t>(std::popcount(sub)) == k) {
                visit(sub);
                return;
            }
            while (ext) {
                Vertex w = static_cast<Vertex>(std::countr_zero(ext));
                ext &= ext - 1;
                VertexMask next_ext = ext | (adj[w] & ~closed & above);
                extend(sub | (VertexMask{1} << w), next_ext, closed | adj[w], above);
            }
        };

    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        VertexMask bit = VertexMask{1} << v;
        VertexMask above = (v + 1 >= 64) ? 0 : ~((VertexMask{1} << (v + 1)) - 1);
        extend(bit, adj[v] & above, adj[v] | bit, above);
    }
}

std::vector<VertexSet> connected_subsets(const Multigraph& g, std::size_t k)
{
    std::vector<VertexSet> out;
    for_each_connected_subset(g, k, [&](VertexMask m) { out.push_back(from_mask(m)); });
    return out;
}

std::string to_dot(const Multigraph& g)
{
    std::ostringstream os;
    os << "graph G {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        if (!g.labels().empty())
            os << " [label=\"" << g.labels()[v] << "\"]";
        os << ";\n";
    }
    for (const Edge& e : g.edges())
        for (std::int64_t i = 0; i < e.count; ++i)
            os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace chipfire
