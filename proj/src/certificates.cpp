#include <chipfire/certificates.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>

namespace chipfire {

namespace {

void check_sets_in_range(const Multigraph& g, const std::vector<VertexSet>& sets)
{
    for (const VertexSet& s : sets) {
        if (s.empty())
            throw std::invalid_argument("certificate sets must be nonempty");
        for (Vertex v : s)
            if (!g.contains(v))
                throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
}

std::int64_t mask_outdegree(const Multigraph& g, VertexMask s)
{
    std::int64_t out = 0;
    for (VertexMask rest = s; rest; rest &= rest - 1) {
        Vertex v = static_cast<Vertex>(std::countr_zero(rest));
        for (const auto& nb : g.neighbors(v))
            if (!((s >> nb.vertex) & 1))
                out += nb.count;
    }
    return out;
}

// Unit-capacity-per-edge max flow between two vertex sets, reused across
// many egg pairs. Each undirected edge is a pair of opposed arcs.
class PairCutter {
public:
    explicit PairCutter(const Multigraph& g) : n_(g.vertex_count()), first_(n_ + 1, 0)
    {
        std::vector<std::vector<std::pair<Vertex, std::int64_t>>> adj(n_);
        for (const Edge& e : g.edges()) {
            adj[e.u].push_back({e.v, e.count});
            adj[e.v].push_back({e.u, e.count});
        }
        for (std::size_t v = 0; v < n_; ++v)
            first_[v + 1] = first_[v] + adj[v].size();
        head_.resize(first_[n_]);
        base_.resize(first_[n_]);
        twin_.resize(first_[n_]);
        for (std::size_t v = 0; v < n_; ++v)
            for (std::size_t i = 0; i < adj[v].size(); ++i) {
                head_[first_[v] + i] = adj[v][i].first;
                base_[first_[v] + i] = adj[v][i].second;
            }
        for (std::size_t v = 0; v < n_; ++v)
            for (std::size_t a = first_[v]; a < first_[v + 1]; ++a) {
                Vertex w = head_[a];
                for (std::size_t b = first_[w]; b < first_[w + 1]; ++b)
                    if (head_[b] == static_cast<Vertex>(v))
                        twin_[a] = b;
            }
        residual_.resize(base_.size());
        via_.resize(n_);
        queue_.resize(n_);
    }

    // Min cut between disjoint a and b, or `cap` once the flow reaches it.
    std::int64_t cut(VertexMask a, VertexMask b, std::int64_t cap)
    {
        std::copy(base_.begin(), base_.end(), residual_.begin());
        std::int64_t flow = 0;
        while (flow < cap) {
            std::fill(via_.begin(), via_.end(), kUnseen);
            std::size_t head = 0, tail = 0;
            for (VertexMask rest = a; rest; rest &= rest - 1) {
                Vertex v = static_cast<Vertex>(std::countr_zero(rest));
                via_[v] = kSource;
                queue_[tail++] = v;
            }
            Vertex reached = -1;
            while (head < tail && reached < 0) {
                Vertex u = queue_[head++];
                for (std::size_t arc = first_[u]; arc < first_[u + 1]; ++arc) {
                    Vertex w = head_[arc];
                    if (residual_[arc] <= 0 || via_[w] != kUnseen)
                        continue;
                    via_[w] = arc;
                    if ((b >> w) & 1) {
                        reached = w;
                        break;
                    }
                    queue_[tail++] = w;
                }
            }
            if (reached < 0)
                break;
            std::int64_t push = cap - flow;
            for (Vertex v = reached; via_[v] != kSource; v = head_[twin_[via_[v]]])
                push = std::min(push, residual_[via_[v]]);
            for (Vertex v = reached; via_[v] != kSource; v = head_[twin_[via_[v]]]) {
                residual_[via_[v]] -= push;
                residual_[twin_[via_[v]]] += push;
            }
            flow += push;
        }
        return std::min(flow, cap);
    }

private:
    static constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
    static constexpr std::size_t kSource = kUnseen - 1;

    std::size_t n_;
    std::vector<std::size_t> first_;
    std::vector<Vertex> head_;
    std::vector<std::int64_t> base_;
    std::vector<std::size_t> twin_;
    std::vector<std::int64_t> residual_;
    std::vector<std::size_t> via_;
    std::vector<Vertex> queue_;
};

} // namespace

// --- scrambles --------------------------------------------------------------

Scramble::Scramble(GraphPtr graph, std::vector<VertexSet> eggs) : graph_(std::move(graph))
{
    require_mask_capacity(*graph_);
    check_sets_in_range(*graph_, eggs);
    std::set<VertexMask> seen;
    for (VertexSet& egg : eggs) {
        egg = normalized(std::move(egg));
        if (!induces_connected(*graph_, egg))
            throw std::invalid_argument("egg does not induce a connected subgraph");
        VertexMask m = to_mask(egg);
        if (!seen.insert(m).second)
            throw std::invalid_argument("duplicate egg");
        masks_.push_back(m);
    }
    eggs_ = std::move(eggs);
}

Scramble Scramble::uniform(GraphPtr graph, std::size_t k)
{
    std::vector<VertexSet> eggs = connected_subsets(*graph, k);
    return Scramble(std::move(graph), std::move(eggs));
}

namespace {

struct HittingSearch {
    const std::vector<VertexMask>& sets;
    VertexMask found = 0;

    // Greedy packing of pairwise disjoint unhit sets: each needs its own vertex.
    int disjoint_unhit(VertexMask chosen, int limit) const
    {
        VertexMask used = 0;
        int count = 0;
        for (VertexMask s : sets)
            if (!(s & chosen) && !(s & used)) {
                used |= s;
                if (++count > limit)
                    break;
            }
        return count;
    }

    bool run(VertexMask chosen, int budget)
    {
        // Branch on the smallest unhit set; a one-vertex set forces its vertex.
        VertexMask pick = 0;
        int pick_size = std::numeric_limits<int>::max();
        for (VertexMask s : sets)
            if (!(s & chosen)) {
                int size = std::popcount(s);
                if (size < pick_size) {
                    pick = s;
                    pick_size = size;
                    if (size == 1)
                        break;
                }
            }
        if (pick == 0) {
            found = chosen;
            return true;
        }
        if (budget == 0 || disjoint_unhit(chosen, budget) > budget)
            return false;
        for (VertexMask rest = pick; rest; rest &= rest - 1)
            if (run(chosen | (rest & -rest), budget - 1))
                return true;
        return false;
    }
};

} // namespace

HittingResult minimum_hitting_set(const Multigraph& g, const std::vector<VertexMask>& sets)
{
    require_mask_capacity(g);
    if (sets.empty())
        return {0, {}};
    for (VertexMask s : sets)
        if (s == 0)
            throw std::invalid_argument("cannot hit an empty set");

    HittingSearch search{sets};
    int lower = search.disjoint_unhit(0, std::numeric_limits<int>::max());

    // Greedy hitting set as the ceiling of the deepening loop.
    VertexMask greedy = 0;
    while (true) {
        std::vector<int> hits(g.vertex_count(), 0);
        bool any = false;
        for (VertexMask s : sets)
            if (!(s & greedy)) {
                any = true;
                for (VertexMask rest = s; rest; rest &= rest - 1)
                    ++hits[std::countr_zero(rest)];
            }
        if (!any)
            break;
        auto best = std::max_element(hits.begin(), hits.end()) - hits.begin();
        greedy |= VertexMask{1} << best;
    }
    const int upper = std::popcount(greedy);

    for (int budget = lower; budget < upper; ++budget)
        if (search.run(0, budget))
            return {std::popcount(search.found), from_mask(search.found)};
    return {upper, from_mask(greedy)};
}

HittingResult hitting_number(const Scramble& s)
{
    return minimum_hitting_set(s.graph(), s.masks());
}

EggCutResult egg_cut_number(const Scramble& s)
{
    const Multigraph& g = s.graph();
    const auto& masks = s.masks();
    EggCutResult out;

    // Deleting every edge leaving an egg separates it from any disjoint egg.
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = 0; j < masks.size(); ++j)
            if (i != j && !(masks[i] & masks[j])) {
                std::int64_t d = mask_outdegree(g, masks[i]);
                if (d < best) {
                    best = d;
                    out.eggs = std::pair{std::min(i, j), std::max(i, j)};
                }
                break;
            }
    if (!out.eggs)
        return out;

    PairCutter cutter(g);
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j) {
            if (masks[i] & masks[j])
                continue;
            std::int64_t c = cutter.cut(masks[i], masks[j], best);
            if (c < best) {
                best = c;
                out.eggs = std::pair{i, j};
            }
        }
    out.value = best;
    return out;
}

ScrambleOrder scramble_order(const Scramble& s)
{
    ScrambleOrder out{hitting_number(s), egg_cut_number(s), 0};
    out.order = out.egg_cut.value ? std::min(out.hitting.size, *out.egg_cut.value) : out.hitting.size;
    return out;
}

// --- brambles ---------------------------------------------------------------

Bramble::Bramble(GraphPtr graph, std::vector<VertexSet> sets) : graph_(std::move(graph))
{
    require_mask_capacity(*graph_);
    check_sets_in_range(*graph_, sets);
    for (VertexSet& s : sets)
        s = normalized(std::move(s));
    sets_ = std::move(sets);
}

BrambleValidation validate_bramble(const Bramble& b)
{
    const Multigraph& g = b.graph();
    std::vector<VertexMask> masks, closed;
    for (std::size_t i = 0; i < b.sets().size(); ++i) {
        const VertexSet& s = b.sets()[i];
        if (!induces_connected(g, s))
            return {false, "set does not induce a connected subgraph", i, std::nullopt};
        VertexMask m = to_mask(s), nbhd = m;
        for (Vertex v : s)
            for (const auto& nb : g.neighbors(v))
                nbhd |= VertexMask{1} << nb.vertex;
        for (std::size_t j = 0; j < masks.size(); ++j)
            if (masks[j] == m)
                return {false, "duplicate set", i, std::pair{j, i}};
        masks.push_back(m);
        closed.push_back(nbhd);
    }
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if (!(closed[i] & masks[j]))
                return {false, "sets do not touch", std::nullopt, std::pair{i, j}};
    return {};
}

HittingResult bramble_order(const Bramble& b)
{
    std::vector<VertexMask> masks;
    for (const VertexSet& s : b.sets())
        masks.push_back(to_mask(s));
    return minimum_hitting_set(b.graph(), masks);
}

// --- tree-cut decompositions --------------------------------------------------

void validate_treecut(const TreeCutDecomposition& t, const Multigraph& g)
{
    if (t.node_count == 0)
        throw std::invalid_argument("tree needs at least one node");
    if (t.links.size() + 1 != t.node_count)
        throw std::invalid_argument("a tree on k nodes has k-1 links");
    std::vector<std::vector<std::size_t>> adj(t.node_count);
    for (auto [a, b] : t.links) {
        if (a >= t.node_count || b >= t.node_count || a == b)
            throw std::invalid_argument("bad link");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(t.node_count, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != t.node_count)
        throw std::invalid_argument("tree is not connected");
    if (t.placement.size() != g.vertex_count())
        throw std::invalid_argument("placement must cover every graph vertex");
    for (std::size_t node : t.placement)
        if (node >= t.node_count)
            throw std::invalid_argument("vertex placed in a missing node");
}

TreeCutWidth treecut_width(const TreeCutDecomposition& t, const Multigraph& g)
{
    validate_treecut(t, g);
    const std::size_t k = t.node_count;

    // Root at node 0; each non-root node owns the link to its parent.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(k); // (node, link)
    for (std::size_t l = 0; l < t.links.size(); ++l) {
        adj[t.links[l].first].push_back({t.links[l].second, l});
        adj[t.links[l].second].push_back({t.links[l].first, l});
    }
    std::vector<std::size_t> parent(k, 0), up_link(k, 0), depth(k, 0);
    std::vector<char> seen(k, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (auto [w, l] : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = u;
                up_link[w] = l;
                depth[w] = depth[u] + 1;
                stack.push_back(w);
            }
    }

    TreeCutWidth out{0, std::vector<std::int64_t>(t.links.size(), 0), std::vector<std::int64_t>(k, 0)};
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        ++out.node_load[t.placement[v]];
    std::vector<std::size_t> path;
    for (const Edge& e : g.edges()) {
        std::size_t a = t.placement[e.u], b = t.placement[e.v];
        const std::size_t from = a, to = b;
        path.clear();
        while (a != b) {
            std::size_t& deeper = depth[a] >= depth[b] ? a : b;
            out.link_load[up_link[deeper]] += e.count;
            deeper = parent[deeper];
            path.push_back(deeper);
        }
        std::sort(path.begin(), path.end());
        path.erase(std::unique(path.begin(), path.end()), path.end());
        for (std::size_t node : path)
            if (node != from && node != to)
                out.node_load[node] += e.count; // tunnels through this node
    }
    for (std::int64_t x : out.link_load)
        out.width = std::max(out.width, x);
    for (std::int64_t x : out.node_load)
        out.width = std::max(out.width, x);
    return out;
}

// --- outdegree lemmas ---------------------------------------------------------

OutdegreeCheck verify_outdegree_bounds(const Multigraph& g, std::size_t min_size, std::size_t max_size,
                                       std::int64_t claimed_min)
{
    require_mask_capacity(g);
    if (min_size == 0 || min_size > max_size || max_size >= g.vertex_count())
        throw std::invalid_argument("subgraph sizes must satisfy 1 <= min <= max < |V|");
    OutdegreeCheck out;
    out.min_outdegree = std::numeric_limits<std::int64_t>::max();
    for (std::size_t size = min_size; size <= max_size; ++size)
        for_each_connected_subset(g, size, [&](VertexMask m) {
            ++out.subsets_checked;
            std::int64_t d = mask_outdegree(g, m);
            out.min_outdegree = std::min(out.min_outdegree, d);
            if (d < claimed_min && out.holds) {
                out.holds = false;
                out.counterexample = from_mask(m);
                out.counterexample_outdegree = d;
            }
        });
    return out;
}

} // namespace chipfire
