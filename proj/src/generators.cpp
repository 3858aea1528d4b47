#include <chipfire/generators.hpp>

#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace chipfire::generators {

namespace {

using Pair = std::pair<int, int>;

template <std::size_t V, std::size_t E>
constexpr bool is_regular(const std::array<Pair, E>& edges, int degree)
{
    std::array<int, V> valence{};
    for (const auto& [u, v] : edges) {
        if (u == v || u < 0 || v < 0 || u >= static_cast<int>(V) || v >= static_cast<int>(V))
            return false;
        ++valence[u];
        ++valence[v];
    }
    for (int d : valence)
        if (d != degree)
            return false;
    return true;
}

template <std::size_t E>
constexpr bool has_duplicates(const std::array<Pair, E>& edges)
{
    for (std::size_t i = 0; i < E; ++i)
        for (std::size_t j = i + 1; j < E; ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if ((a == c && b == d) || (a == d && b == c))
                return true;
        }
    return false;
}

constexpr std::array<Pair, 6> kTetrahedron{{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}}};

constexpr std::array<Pair, 12> kOctahedron{{
    {0, 1}, {1, 2}, {2, 0},             // outer triangle
    {3, 4}, {4, 5}, {5, 3},             // inner triangle
    {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4},
}};

constexpr std::array<Pair, 12> kCube{{
    {0, 1}, {1, 2}, {2, 3}, {3, 0},
    {4, 5}, {5, 6}, {6, 7}, {7, 4},
    {0, 4}, {1, 5}, {2, 6}, {3, 7},
}};

constexpr std::array<Pair, 30> make_dodecahedron()
{
    std::array<Pair, 30> e{};
    std::size_t k = 0;
    for (int i = 0; i < 5; ++i) {
        e[k++] = {i, (i + 1) % 5};              // outer pentagon
        e[k++] = {i, 5 + 2 * i};                // outer to middle ring
        e[k++] = {6 + 2 * i, 15 + i};           // middle ring to inner
        e[k++] = {15 + i, 15 + (i + 1) % 5};    // inner pentagon
    }
    for (int j = 0; j < 10; ++j)
        e[k++] = {5 + j, 5 + (j + 1) % 10};     // middle 10-cycle
    return e;
}
constexpr std::array<Pair, 30> kDodecahedron = make_dodecahedron();

constexpr std::array<Pair, 30> make_icosahedron()
{
    std::array<Pair, 30> e{};
    std::size_t k = 0;
    for (int i = 0; i < 3; ++i) {
        e[k++] = {i, (i + 1) % 3};              // outer triangle
        e[k++] = {9 + i, 9 + (i + 1) % 3};      // inner triangle
        for (int off = -1; off <= 1; ++off)
            e[k++] = {i, 3 + (2 * i + off + 6) % 6};
        for (int off = 0; off <= 2; ++off)
            e[k++] = {9 + i, 3 + (2 * i + off) % 6};
    }
    for (int j = 0; j < 6; ++j)
        e[k++] = {3 + j, 3 + (j + 1) % 6};      // middle hexagon
    return e;
}
constexpr std::array<Pair, 30> kIcosahedron = make_icosahedron();

// |V|, |E| and regularity are checked here; genus (|E| - |V| + 1 with
// connectivity) is checked by the unit tests.
static_assert(is_regular<4>(kTetrahedron, 3) && !has_duplicates(kTetrahedron));
static_assert(is_regular<6>(kOctahedron, 4) && !has_duplicates(kOctahedron));
static_assert(is_regular<8>(kCube, 3) && !has_duplicates(kCube));
static_assert(is_regular<20>(kDodecahedron, 3) && !has_duplicates(kDodecahedron));
static_assert(is_regular<12>(kIcosahedron, 5) && !has_duplicates(kIcosahedron));

template <std::size_t E>
Multigraph from_pairs(std::size_t n, const std::array<Pair, E>& pairs)
{
    std::vector<Edge> edges;
    edges.reserve(E);
    for (const auto& [u, v] : pairs)
        edges.push_back({u, v, 1});
    return Multigraph(n, edges);
}

void require_positive(std::size_t n, const char* what)
{
    if (n == 0)
        throw std::invalid_argument(std::string(what) + " must be positive");
}

} // namespace

Multigraph complete(std::size_t n)
{
    require_positive(n, "vertex count");
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), 1});
    return Multigraph(n, edges);
}

Multigraph complete_multipartite(const std::vector<std::size_t>& parts)
{
    if (parts.empty())
        throw std::invalid_argument("complete multipartite graph needs at least one part");
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        require_positive(parts[p], "part size");
        part_of.insert(part_of.end(), parts[p], p);
    }
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < part_of.size(); ++u)
        for (std::size_t v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v])
                edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), 1});
    return Multigraph(part_of.size(), edges);
}

Multigraph cycle(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v)
        edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n), 1});
    return Multigraph(n, edges);
}

Multigraph path(std::size_t n)
{
    require_positive(n, "vertex count");
    std::vector<Edge> edges;
    for (std::size_t v = 0; v + 1 < n; ++v)
        edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + 1), 1});
    return Multigraph(n, edges);
}

Multigraph star(std::size_t n)
{
    require_positive(n, "vertex count");
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v)
        edges.push_back({0, static_cast<Vertex>(v), 1});
    return Multigraph(n, edges);
}

Multigraph hypercube(std::size_t d)
{
    require_positive(d, "dimension");
    if (d > 20)
        throw std::invalid_argument("hypercube dimension too large");
    const std::size_t n = std::size_t{1} << d;
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t bit = 0; bit < d; ++bit) {
            std::size_t w = v ^ (std::size_t{1} << bit);
            if (w > v)
                edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(w), 1});
        }
    return Multigraph(n, edges);
}

Multigraph cartesian_product(const Multigraph& g, const Multigraph& h)
{
    const std::size_t m = g.vertex_count(), n = h.vertex_count();
    auto id = [n](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * n + j); };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i)
        for (const Edge& e : h.edges())
            edges.push_back({id(i, e.u), id(i, e.v), e.count});
    for (std::size_t j = 0; j < n; ++j)
        for (const Edge& e : g.edges())
            edges.push_back({id(e.u, j), id(e.v, j), e.count});
    return Multigraph(m * n, edges);
}

Multigraph tetrahedron() { return from_pairs(4, kTetrahedron); }
Multigraph octahedron() { return from_pairs(6, kOctahedron); }
Multigraph cube() { return from_pairs(8, kCube); }
Multigraph dodecahedron() { return from_pairs(20, kDodecahedron); }
Multigraph icosahedron() { return from_pairs(12, kIcosahedron); }

Multigraph by_name(const std::string& family, std::size_t size, const std::vector<std::size_t>& parts)
{
    if (family == "tetrahedron")
        return tetrahedron();
    if (family == "octahedron")
        return octahedron();
    if (family == "cube")
        return cube();
    if (family == "dodecahedron")
        return dodecahedron();
    if (family == "icosahedron")
        return icosahedron();
    if (family == "complete")
        return complete(size);
    if (family == "cycle")
        return cycle(size);
    if (family == "path")
        return path(size);
    if (family == "star")
        return star(size);
    if (family == "hypercube")
        return hypercube(size);
    if (family == "multipartite")
        return complete_multipartite(parts);
    throw std::invalid_argument("unknown graph family '" + family + "'");
}

} // namespace chipfire::generators
