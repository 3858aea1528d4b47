#include <chipfire/divisor.hpp>

#include <chipfire/compositions.hpp>
#include <chipfire/detail/kernel.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chipfire {

Divisor::Divisor(GraphPtr graph, std::vector<Chips> chips) : graph_(std::move(graph)), chips_(std::move(chips))
{
    if (!graph_)
        throw std::invalid_argument("divisor without a graph");
    if (chips_.size() != graph_->vertex_count())
        throw std::invalid_argument("divisor length " + std::to_string(chips_.size()) +
                                    " does not match vertex count " +
                                    std::to_string(graph_->vertex_count()));
}

Divisor Divisor::zero(GraphPtr graph)
{
    std::size_t n = graph->vertex_count();
    return Divisor(std::move(graph), std::vector<Chips>(n, 0));
}

Divisor Divisor::unit(GraphPtr graph, Vertex v, Chips amount)
{
    if (!graph->contains(v))
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    Divisor d = zero(std::move(graph));
    d.chips_[v] = amount;
    return d;
}

Chips Divisor::degree() const
{
    Chips total = 0;
    for (Chips c : chips_)
        total = checked_add(total, c);
    return total;
}

bool Divisor::is_effective() const noexcept
{
    return std::all_of(chips_.begin(), chips_.end(), [](Chips c) { return c >= 0; });
}

Divisor Divisor::operator+(const Divisor& other) const
{
    require_same_graph(*this, other);
    std::vector<Chips> out(chips_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = checked_add(chips_[i], other.chips_[i]);
    return Divisor(graph_, std::move(out));
}

Divisor Divisor::operator-(const Divisor& other) const
{
    require_same_graph(*this, other);
    std::vector<Chips> out(chips_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = checked_sub(chips_[i], other.chips_[i]);
    return Divisor(graph_, std::move(out));
}

Divisor Divisor::with_added(Vertex v, Chips amount) const
{
    if (!graph_->contains(v))
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    std::vector<Chips> out = chips_;
    out[v] = checked_add(out[v], amount);
    return Divisor(graph_, std::move(out));
}

bool Divisor::operator==(const Divisor& other) const
{
    return chips_ == other.chips_ && same_graph(*graph_, *other.graph_);
}

std::string Divisor::pretty() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (std::size_t v = 0; v < chips_.size(); ++v) {
        if (chips_[v] == 0)
            continue;
        if (!first)
            os << ", ";
        os << v << ':' << chips_[v];
        first = false;
    }
    os << '}';
    return os.str();
}

bool same_graph(const Multigraph& a, const Multigraph& b) noexcept
{
    return &a == &b || a == b;
}

void require_same_graph(const Divisor& a, const Divisor& b)
{
    if (!same_graph(a.graph(), b.graph()))
        throw std::invalid_argument("divisors live on different graphs");
}

FiringScript::FiringScript(std::vector<Chips> counts) : fire_count(std::move(counts))
{
    for (Chips c : fire_count)
        if (c < 0)
            throw std::invalid_argument("firing scripts hold nonnegative counts");
}

FiringScript FiringScript::indicator(std::size_t n, const VertexSet& s)
{
    std::vector<Chips> counts(n, 0);
    for (Vertex v : s) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        counts[v] = 1;
    }
    return FiringScript(std::move(counts));
}

Divisor fire_vertex(const Divisor& d, Vertex v)
{
    const Multigraph& g = d.graph();
    std::vector<Chips> chips = d.values();
    if (!g.contains(v))
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    for (const auto& nb : g.neighbors(v)) {
        chips[v] = checked_sub(chips[v], nb.count);
        chips[nb.vertex] = checked_add(chips[nb.vertex], nb.count);
    }
    return Divisor(d.graph_ptr(), std::move(chips));
}

Divisor fire_set(const Divisor& d, const VertexSet& s)
{
    const Multigraph& g = d.graph();
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) {
        if (!g.contains(v))
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    std::vector<Chips> chips = d.values();
    detail::Kernel(g).fire(chips, in, 1);
    return Divisor(d.graph_ptr(), std::move(chips));
}

Divisor apply_script(const Divisor& d, const FiringScript& f)
{
    const Multigraph& g = d.graph();
    if (f.fire_count.size() != g.vertex_count())
        throw std::invalid_argument("firing script length does not match the graph");
    std::vector<Chips> chips = d.values();
    for (std::size_t v = 0; v < chips.size(); ++v) {
        chips[v] = checked_sub(chips[v], checked_mul(f.fire_count[v], g.valence(static_cast<Vertex>(v))));
        for (const auto& nb : g.neighbors(static_cast<Vertex>(v)))
            chips[v] = checked_add(chips[v], checked_mul(f.fire_count[nb.vertex], nb.count));
    }
    return Divisor(d.graph_ptr(), std::move(chips));
}

namespace {

std::vector<Chips> reduced_at_zero(detail::Kernel& k, std::span<const Chips> chips)
{
    std::vector<Chips> work(chips.begin(), chips.end());
    k.reduce(work, 0);
    return work;
}

} // namespace

bool is_equivalent(const Divisor& a, const Divisor& b)
{
    require_same_graph(a, b);
    if (a.degree() != b.degree())
        return false;
    detail::Kernel k(a.graph());
    return reduced_at_zero(k, a.chips()) == reduced_at_zero(k, b.chips());
}

Divisor canonical_divisor(const GraphPtr& g)
{
    std::vector<Chips> chips(g->vertex_count());
    for (std::size_t v = 0; v < chips.size(); ++v)
        chips[v] = g->valence(static_cast<Vertex>(v)) - 2;
    return Divisor(g, std::move(chips));
}

namespace {

constexpr std::size_t kMaxSetFiringVertices = 24;

std::vector<std::vector<Chips>> linear_system_by_compositions(const Divisor& d)
{
    const Multigraph& g = d.graph();
    detail::Kernel k(g);
    const std::vector<Chips> target = reduced_at_zero(k, d.chips());
    std::vector<std::vector<Chips>> out;
    std::vector<Chips> work;
    for_each_composition(g.vertex_count(), d.degree(), [&](std::span<const Chips> c) {
        work.assign(c.begin(), c.end());
        k.reduce(work, 0);
        if (work == target)
            out.emplace_back(c.begin(), c.end());
        return true;
    });
    return out;
}

// Breadth-first closure under legal set-firings. Any two effective
// divisors in one class are joined by a chain of nested set-firings that
// never create debt, and a legal firing of a disconnected set splits into
// legal firings of its components, so connected sets suffice.
template <class Stop>
std::vector<std::vector<Chips>> legal_closure(const Divisor& d, Stop&& stop)
{
    const Multigraph& g = d.graph();
    if (g.vertex_count() > kMaxSetFiringVertices)
        throw std::invalid_argument("set-firing closure supports at most 24 vertices");
    detail::Kernel k(g);
    std::vector<Chips> start = reduced_at_zero(k, d.chips());
    if (start[0] < 0)
        return {};

    const std::size_t n = g.vertex_count();
    std::vector<VertexMask> candidates;
    for (std::size_t size = 1; size < n; ++size)
        for_each_connected_subset(g, size, [&](VertexMask m) { candidates.push_back(m); });

    std::set<std::vector<Chips>> seen{start};
    std::deque<std::vector<Chips>> frontier{start};
    std::vector<std::vector<Chips>> order{start};
    if (stop(start))
        return order;
    std::vector<Chips> next(n);
    while (!frontier.empty()) {
        std::vector<Chips> cur = std::move(frontier.front());
        frontier.pop_front();
        for (VertexMask s : candidates) {
            bool legal = true;
            for (VertexMask rest = s; rest && legal; rest &= rest - 1) {
                Vertex v = static_cast<Vertex>(std::countr_zero(rest));
                Chips out = 0;
                for (const auto& nb : g.neighbors(v))
                    if (!((s >> nb.vertex) & 1))
                        out += nb.count;
                legal = cur[v] >= out;
            }
            if (!legal)
                continue;
            next = cur;
            for (VertexMask rest = s; rest; rest &= rest - 1) {
                Vertex v = static_cast<Vertex>(std::countr_zero(rest));
                for (const auto& nb : g.neighbors(v))
                    if (!((s >> nb.vertex) & 1)) {
                        next[v] -= nb.count;
                        next[nb.vertex] += nb.count;
                    }
            }
            if (seen.insert(next).second) {
                order.push_back(next);
                if (stop(next))
                    return order;
                frontier.push_back(next);
            }
        }
    }
    return order;
}

} // namespace

std::vector<Divisor> linear_system(const Divisor& d, LinearSystemMethod method)
{
    if (d.degree() < 0)
        return {};
    if (method == LinearSystemMethod::automatic)
        method = d.graph().vertex_count() <= 16 ? LinearSystemMethod::legal_set_firing
                                               : LinearSystemMethod::composition_filter;
    std::vector<std::vector<Chips>> members =
        method == LinearSystemMethod::legal_set_firing
            ? legal_closure(d, [](const std::vector<Chips>&) { return false; })
            : linear_system_by_compositions(d);
    std::sort(members.begin(), members.end());
    std::vector<Divisor> out;
    out.reserve(members.size());
    for (auto& m : members)
        out.emplace_back(d.graph_ptr(), std::move(m));
    return out;
}

namespace {

bool spread_chips(const Multigraph& g, std::span<const Chips> chips)
{
    for (std::size_t v = 0; v < chips.size(); ++v) {
        Chips cap = g.valence(static_cast<Vertex>(v)) - 1;
        if (chips[v] < 0 || chips[v] > cap)
            return false;
        if (chips[v] == cap)
            for (const auto& nb : g.neighbors(static_cast<Vertex>(v)))
                if (chips[nb.vertex] == g.valence(nb.vertex) - 1)
                    return false;
    }
    return true;
}

} // namespace

bool is_spread(const Divisor& d)
{
    return spread_chips(d.graph(), d.chips());
}

std::optional<Divisor> find_spread_representative(const Divisor& d)
{
    const Multigraph& g = d.graph();
    if (!d.is_effective())
        throw std::invalid_argument("spread representatives need an effective divisor");
    if (d.degree() > g.edge_count() - static_cast<Chips>(g.vertex_count()))
        throw std::invalid_argument("degree exceeds |E| - |V|");
    if (is_spread(d))
        return d;
    std::vector<std::vector<Chips>> visited =
        legal_closure(d, [&](const std::vector<Chips>& c) { return spread_chips(g, c); });
    if (!visited.empty() && spread_chips(g, visited.back()))
        return Divisor(d.graph_ptr(), visited.back());
    return std::nullopt;
}

} // namespace chipfire
