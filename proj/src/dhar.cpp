#include <chipfire/dhar.hpp>

#include <chipfire/compositions.hpp>
#include <chipfire/detail/kernel.hpp>

#include <stdexcept>

namespace chipfire {

namespace {

void require_vertex(const Multigraph& g, Vertex q)
{
    if (!g.contains(q))
        throw std::out_of_range("vertex " + std::to_string(q) + " out of range");
}

} // namespace

BurnOutcome burn(const Divisor& d, Vertex q)
{
    const Multigraph& g = d.graph();
    require_vertex(g, q);
    for (std::size_t v = 0; v < d.size(); ++v)
        if (static_cast<Vertex>(v) != q && d[static_cast<Vertex>(v)] < 0)
            throw std::invalid_argument("burning needs all debt on q; vertex " + std::to_string(v) +
                                        " is in debt");
    detail::Kernel k(g);
    k.burn(d.chips(), q);
    BurnOutcome out;
    for (std::size_t v = 0; v < d.size(); ++v)
        (k.burned()[v] ? out.burned : out.unburned).push_back(static_cast<Vertex>(v));
    return out;
}

Reduction q_reduce_traced(const Divisor& d, Vertex q)
{
    const Multigraph& g = d.graph();
    require_vertex(g, q);
    detail::Kernel k(g);
    detail::FiringTrace trace;
    std::vector<Chips> chips = d.values();
    k.reduce(chips, q, &trace);
    if (trace.script.empty())
        trace.script.assign(g.vertex_count(), 0);
    Reduction out{Divisor(d.graph_ptr(), std::move(chips)), FiringScript(std::move(trace.script)), {}};
    for (auto& [set, times] : trace.steps)
        out.steps.push_back({std::move(set), times});
    return out;
}

Divisor q_reduce(const Divisor& d, Vertex q)
{
    require_vertex(d.graph(), q);
    detail::Kernel k(d.graph());
    std::vector<Chips> chips = d.values();
    k.reduce(chips, q);
    return Divisor(d.graph_ptr(), std::move(chips));
}

bool is_q_reduced(const Divisor& d, Vertex q)
{
    require_vertex(d.graph(), q);
    return detail::Kernel(d.graph()).is_reduced(d.chips(), q);
}

bool dollar_game_winnable(const Divisor& d)
{
    return detail::Kernel(d.graph()).winnable(d.chips());
}

namespace {

// First effective E of degree r (lexicographic order) with d - E unwinnable.
std::optional<std::vector<Chips>> failing_debt(detail::Kernel& k, const Divisor& d, Chips r)
{
    std::optional<std::vector<Chips>> found;
    std::vector<Chips> diff(d.size());
    for_each_composition(d.size(), r, [&](std::span<const Chips> e) {
        for (std::size_t v = 0; v < diff.size(); ++v)
            diff[v] = checked_sub(d.values()[v], e[v]);
        if (!k.winnable(diff)) {
            found.emplace(e.begin(), e.end());
            return false;
        }
        return true;
    });
    return found;
}

} // namespace

RankResult rank(const Divisor& d)
{
    detail::Kernel k(d.graph());
    // rank <= deg(d), so degree deg(d) + 1 always fails and the loop ends.
    for (Chips r = 0;; ++r) {
        if (auto e = failing_debt(k, d, r))
            return {static_cast<int>(r - 1), Divisor(d.graph_ptr(), std::move(*e))};
    }
}

bool has_rank_at_least(const Divisor& d, int r)
{
    if (r < 0)
        return true;
    if (d.degree() < r)
        return false;
    detail::Kernel k(d.graph());
    if (r == 1 && d.is_effective())
        return k.rank_at_least_one(d.chips());
    // Winnability only improves with more chips, so degree r alone decides.
    return !failing_debt(k, d, r);
}

RiemannRochCheck verify_riemann_roch(const Divisor& d)
{
    const std::int64_t g = genus(d.graph());
    Divisor complement = canonical_divisor(d.graph_ptr()) - d;
    RiemannRochCheck out{rank(d).rank, rank(complement).rank, d.degree(), g, false};
    out.holds = out.rank - out.complement_rank == out.degree + 1 - g;
    return out;
}

} // namespace chipfire
