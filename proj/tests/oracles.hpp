#pragma once

// Slow, independent reference implementations used only by the tests. None
// of these call into the search or burning code they are checked against.

#include <chipfire/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using chipfire::Chips;
using chipfire::Edge;
using chipfire::Multigraph;
using chipfire::Vertex;

inline std::int64_t crossing(const Multigraph& g, std::uint64_t s)
{
    std::int64_t out = 0;
    for (const Edge& e : g.edges())
        if (((s >> e.u) & 1) != ((s >> e.v) & 1))
            out += e.count;
    return out;
}

// Min over vertex sets S with a <= S and S disjoint from b of the edges leaving S.
inline std::int64_t min_cut(const Multigraph& g, std::uint64_t a, std::uint64_t b)
{
    const std::size_t n = g.vertex_count();
    std::int64_t best = INT64_MAX;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        if ((s & a) == a && !(s & b))
            best = std::min(best, crossing(g, s));
    return best;
}

inline bool connected_mask(const Multigraph& g, std::uint64_t s)
{
    if (!s)
        return false;
    std::uint64_t seen = s & -s, grow = seen;
    while (grow) {
        std::uint64_t next = 0;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if ((grow >> v) & 1)
                for (const auto& nb : g.neighbors(static_cast<Vertex>(v)))
                    next |= std::uint64_t{1} << nb.vertex;
        next &= s & ~seen;
        seen |= next;
        grow = next;
    }
    return seen == s;
}

inline std::vector<std::uint64_t> connected_subsets(const Multigraph& g, std::size_t k)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.vertex_count()); ++s)
        if (static_cast<std::size_t>(__builtin_popcountll(s)) == k && connected_mask(g, s))
            out.push_back(s);
    return out;
}

inline std::int64_t independence_number(const Multigraph& g)
{
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.vertex_count()); ++s) {
        bool ok = true;
        for (const Edge& e : g.edges())
            ok = ok && !(((s >> e.u) & 1) && ((s >> e.v) & 1));
        if (ok)
            best = std::max(best, __builtin_popcountll(s));
    }
    return best;
}

inline std::int64_t hitting_number(std::size_t n, const std::vector<std::uint64_t>& sets)
{
    int best = static_cast<int>(n);
    for (std::uint64_t h = 0; h < (std::uint64_t{1} << n); ++h)
        if (__builtin_popcountll(h) < best &&
            std::all_of(sets.begin(), sets.end(), [&](std::uint64_t s) { return (s & h) != 0; }))
            best = __builtin_popcountll(h);
    return best;
}

// Min over disjoint egg pairs of the brute-force cut; nullopt when no pair is disjoint.
inline std::optional<std::int64_t> egg_cut(const Multigraph& g, const std::vector<std::uint64_t>& eggs)
{
    std::optional<std::int64_t> best;
    for (std::size_t i = 0; i < eggs.size(); ++i)
        for (std::size_t j = i + 1; j < eggs.size(); ++j)
            if (!(eggs[i] & eggs[j])) {
                std::int64_t c = min_cut(g, eggs[i], eggs[j]);
                if (!best || c < *best)
                    best = c;
            }
    return best;
}

// Exact rational arithmetic, enough for Laplacians of tiny graphs.
struct Fraction {
    __int128 num = 0, den = 1;

    static __int128 gcd(__int128 a, __int128 b)
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    Fraction(__int128 n = 0, __int128 d = 1) : num(n), den(d)
    {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    friend Fraction operator-(Fraction a, Fraction b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Fraction operator*(Fraction a, Fraction b) { return {a.num * b.num, a.den * b.den}; }
    friend Fraction operator/(Fraction a, Fraction b) { return {a.num * b.den, a.den * b.num}; }
    bool zero() const { return num == 0; }
};

// a ~ b iff a - b = L f for an integer vector f. With f(0) = 0 the reduced
// Laplacian is invertible, so the solution is unique and only integrality
// needs checking.
inline bool equivalent(const Multigraph& g, const std::vector<Chips>& a, const std::vector<Chips>& b)
{
    const std::size_t n = g.vertex_count();
    if (std::accumulate(a.begin(), a.end(), Chips{0}) != std::accumulate(b.begin(), b.end(), Chips{0}))
        return false;
    if (n == 1)
        return true;
    const std::size_t m = n - 1;
    // Firing f changes v by -(L f)(v), so solve L f = b - a on vertices 1..n-1.
    std::vector<std::vector<Fraction>> aug(m, std::vector<Fraction>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        Vertex v = static_cast<Vertex>(i + 1);
        for (std::size_t j = 0; j < m; ++j) {
            Vertex w = static_cast<Vertex>(j + 1);
            aug[i][j] = v == w ? Fraction(g.valence(v)) : Fraction(-g.multiplicity(v, w));
        }
        aug[i][m] = Fraction(a[i + 1] - b[i + 1]);
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = c;
        while (aug[p][c].zero())
            ++p;
        std::swap(aug[p], aug[c]);
        for (std::size_t r = 0; r < m; ++r)
            if (r != c && !aug[r][c].zero()) {
                Fraction k = aug[r][c] / aug[c][c];
                for (std::size_t j = c; j <= m; ++j)
                    aug[r][j] = aug[r][j] - k * aug[c][j];
            }
    }
    for (std::size_t i = 0; i < m; ++i)
        if ((aug[i][m] / aug[i][i]).den != 1)
            return false;
    return true;
}

inline void compositions(std::size_t n, Chips total, const std::function<void(const std::vector<Chips>&)>& f)
{
    std::vector<Chips> c(n, 0);
    std::function<void(std::size_t, Chips)> rec = [&](std::size_t i, Chips left) {
        if (i + 1 == n) {
            c[i] = left;
            f(c);
            return;
        }
        for (Chips x = 0; x <= left; ++x) {
            c[i] = x;
            rec(i + 1, left - x);
        }
    };
    if (n > 0 && total >= 0)
        rec(0, total);
}

inline bool winnable(const Multigraph& g, const std::vector<Chips>& d)
{
    Chips deg = std::accumulate(d.begin(), d.end(), Chips{0});
    if (deg < 0)
        return false;
    bool found = false;
    compositions(g.vertex_count(), deg, [&](const std::vector<Chips>& e) {
        found = found || equivalent(g, d, e);
    });
    return found;
}

inline int rank(const Multigraph& g, const std::vector<Chips>& d)
{
    for (int r = 0;; ++r) {
        bool all = true;
        compositions(g.vertex_count(), r, [&](const std::vector<Chips>& e) {
            if (!all)
                return;
            std::vector<Chips> x = d;
            for (std::size_t v = 0; v < x.size(); ++v)
                x[v] -= e[v];
            all = winnable(g, x);
        });
        if (!all)
            return r - 1;
    }
}

inline std::int64_t gonality(const Multigraph& g)
{
    for (Chips deg = 1;; ++deg) {
        bool found = false;
        compositions(g.vertex_count(), deg, [&](const std::vector<Chips>& d) {
            found = found || rank(g, d) >= 1;
        });
        if (found)
            return deg;
    }
}

// Burns from q picking a random burnable vertex at every step.
inline std::vector<char> random_order_burn(const Multigraph& g, const std::vector<Chips>& d, Vertex q,
                                           std::mt19937_64& rng)
{
    const std::size_t n = g.vertex_count();
    std::vector<char> burned(n, 0);
    burned[q] = 1;
    while (true) {
        std::vector<Vertex> ready;
        for (std::size_t v = 0; v < n; ++v) {
            if (burned[v])
                continue;
            Chips fire = 0;
            for (const auto& nb : g.neighbors(static_cast<Vertex>(v)))
                if (burned[nb.vertex])
                    fire += nb.count;
            if (fire > d[v])
                ready.push_back(static_cast<Vertex>(v));
        }
        if (ready.empty())
            return burned;
        burned[ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)]] = 1;
    }
}

// Structural isomorphism by trying every permutation; n <= 9.
inline bool isomorphic(const Multigraph& a, const Multigraph& b)
{
    const std::size_t n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u)
            for (std::size_t v = u + 1; v < n && ok; ++v)
                ok = a.multiplicity(static_cast<Vertex>(u), static_cast<Vertex>(v)) ==
                     b.multiplicity(p[u], p[v]);
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Uniform labelled tree via a Pruefer sequence.
inline Multigraph random_tree(std::size_t n, std::mt19937_64& rng)
{
    std::vector<Edge> edges;
    if (n == 2)
        edges.push_back({0, 1, 1});
    if (n > 2) {
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
        std::vector<Vertex> seq(n - 2);
        for (Vertex& x : seq)
            x = pick(rng);
        std::vector<int> degree(n, 1);
        for (Vertex x : seq)
            ++degree[x];
        for (Vertex x : seq)
            for (std::size_t leaf = 0; leaf < n; ++leaf)
                if (degree[leaf] == 1) {
                    edges.push_back({static_cast<Vertex>(leaf), x, 1});
                    --degree[leaf];
                    --degree[x];
                    break;
                }
        std::vector<Vertex> last;
        for (std::size_t v = 0; v < n; ++v)
            if (degree[v] == 1)
                last.push_back(static_cast<Vertex>(v));
        edges.push_back({last[0], last[1], 1});
    }
    return Multigraph(n, edges);
}

// Random tree plus `extra` random edges; multi-edges allowed unless simple.
inline Multigraph random_connected(std::size_t n, std::size_t extra, bool simple, std::mt19937_64& rng)
{
    Multigraph t = random_tree(n, rng);
    std::vector<Edge> edges = t.edges();
    if (n < 2)
        return t;
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::size_t tries = 0;
    for (std::size_t added = 0; added < extra && tries < 1000; ++tries) {
        Vertex u = pick(rng), v = pick(rng);
        if (u == v)
            continue;
        bool present = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
            return (e.u == u && e.v == v) || (e.u == v && e.v == u);
        });
        if (simple && present)
            continue;
        edges.push_back({u, v, 1});
        ++added;
    }
    return Multigraph(n, edges);
}

} // namespace oracle

namespace oracle {

// Every edge (multi-edges expanded) as its own deletable unit. Only for
// graphs with a handful of edges.
inline std::vector<std::pair<Vertex, Vertex>> edge_units(const Multigraph& g)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Edge& e : g.edges())
        for (std::int64_t i = 0; i < e.count; ++i)
            out.push_back({e.u, e.v});
    return out;
}

inline std::uint64_t component_of(const Multigraph& g, const std::vector<std::pair<Vertex, Vertex>>& kept,
                                  Vertex start)
{
    std::uint64_t seen = std::uint64_t{1} << start;
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [u, v] : kept) {
            bool in_u = (seen >> u) & 1, in_v = (seen >> v) & 1;
            if (in_u != in_v) {
                seen |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
                grew = true;
            }
        }
    }
    (void)g;
    return seen;
}

// Fewest deleted edges leaving no path from a to b.
inline std::int64_t min_cut_by_deletion(const Multigraph& g, std::uint64_t a, std::uint64_t b)
{
    auto units = edge_units(g);
    int best = static_cast<int>(units.size());
    for (std::uint64_t del = 0; del < (std::uint64_t{1} << units.size()); ++del) {
        if (__builtin_popcountll(del) >= best)
            continue;
        std::vector<std::pair<Vertex, Vertex>> kept;
        for (std::size_t i = 0; i < units.size(); ++i)
            if (!((del >> i) & 1))
                kept.push_back(units[i]);
        bool separated = true;
        for (std::size_t v = 0; v < g.vertex_count() && separated; ++v)
            if ((a >> v) & 1)
                separated = !(component_of(g, kept, static_cast<Vertex>(v)) & b);
        if (separated)
            best = __builtin_popcountll(del);
    }
    return best;
}

// The literal definition: delete edges so that the graph falls into
// exactly two pieces, each containing a whole egg.
inline std::optional<std::int64_t> egg_cut_by_deletion(const Multigraph& g, const std::vector<std::uint64_t>& eggs)
{
    auto units = edge_units(g);
    std::optional<std::int64_t> best;
    const std::uint64_t all = (std::uint64_t{1} << g.vertex_count()) - 1;
    for (std::uint64_t del = 0; del < (std::uint64_t{1} << units.size()); ++del) {
        if (best && __builtin_popcountll(del) >= *best)
            continue;
        std::vector<std::pair<Vertex, Vertex>> kept;
        for (std::size_t i = 0; i < units.size(); ++i)
            if (!((del >> i) & 1))
                kept.push_back(units[i]);
        std::uint64_t first = component_of(g, kept, 0);
        if (first == all)
            continue;
        std::uint64_t rest = all & ~first;
        if (component_of(g, kept, static_cast<Vertex>(__builtin_ctzll(rest))) != rest)
            continue; // more than two pieces
        bool egg_a = false, egg_b = false;
        for (std::uint64_t e : eggs) {
            egg_a = egg_a || (e & first) == e;
            egg_b = egg_b || (e & rest) == e;
        }
        if (egg_a && egg_b)
            best = __builtin_popcountll(del);
    }
    return best;
}

} // namespace oracle
