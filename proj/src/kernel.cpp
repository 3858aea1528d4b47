#include <chipfire/detail/kernel.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace chipfire::detail {

Kernel::Kernel(const Multigraph& g)
    : g_(g), n_(g.vertex_count()), burned_(n_), heat_(n_), queue_(n_), set_(n_), scratch_(n_)
{
}

std::size_t Kernel::burn(std::span<const Chips> chips, Vertex q)
{
    std::fill(burned_.begin(), burned_.end(), 0);
    std::fill(heat_.begin(), heat_.end(), 0);
    std::size_t head = 0, tail = 0;
    burned_[q] = 1;
    queue_[tail++] = q;
    while (head < tail) {
        Vertex u = queue_[head++];
        for (const auto& nb : g_.neighbors(u)) {
            if (burned_[nb.vertex])
                continue;
            heat_[nb.vertex] += nb.count;
            if (heat_[nb.vertex] > chips[nb.vertex]) {
                burned_[nb.vertex] = 1;
                queue_[tail++] = nb.vertex;
            }
        }
    }
    return tail;
}

void Kernel::fire(std::vector<Chips>& chips, const std::vector<char>& in_set, Chips times,
                  FiringTrace* trace) const
{
    if (times == 0)
        return;
    for (std::size_t v = 0; v < n_; ++v) {
        if (!in_set[v])
            continue;
        for (const auto& nb : g_.neighbors(static_cast<Vertex>(v))) {
            if (in_set[nb.vertex])
                continue;
            Chips moved = checked_mul(nb.count, times);
            chips[v] = checked_sub(chips[v], moved);
            chips[nb.vertex] = checked_add(chips[nb.vertex], moved);
        }
    }
    if (trace) {
        VertexSet s;
        if (trace->script.empty())
            trace->script.assign(n_, 0);
        for (std::size_t v = 0; v < n_; ++v)
            if (in_set[v]) {
                s.push_back(static_cast<Vertex>(v));
                trace->script[v] = checked_add(trace->script[v], times);
            }
        trace->steps.emplace_back(std::move(s), times);
    }
}

const std::vector<int>& Kernel::distances_from(Vertex q)
{
    if (dist_root_ == q)
        return dist_;
    dist_.assign(n_, -1);
    std::size_t head = 0, tail = 0;
    dist_[q] = 0;
    queue_[tail++] = q;
    while (head < tail) {
        Vertex u = queue_[head++];
        for (const auto& nb : g_.neighbors(u))
            if (dist_[nb.vertex] < 0) {
                dist_[nb.vertex] = dist_[u] + 1;
                queue_[tail++] = nb.vertex;
            }
    }
    if (tail != n_)
        throw std::invalid_argument("chip-firing requires a connected graph");
    dist_root_ = q;
    return dist_;
}

void Kernel::clear_debt_off(std::vector<Chips>& chips, Vertex q, FiringTrace* trace)
{
    const std::vector<int>& dist = distances_from(q);
    const int depth = *std::max_element(dist.begin(), dist.end());
    for (int layer = depth; layer >= 1; --layer) {
        // Firing the ball of radius layer-1 feeds layer `layer` and leaves
        // every farther layer untouched.
        Chips times = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (dist[v] != layer || chips[v] >= 0)
                continue;
            Chips inflow = 0;
            for (const auto& nb : g_.neighbors(static_cast<Vertex>(v)))
                if (dist[nb.vertex] == layer - 1)
                    inflow += nb.count;
            Chips debt = -chips[v];
            times = std::max(times, (debt + inflow - 1) / inflow);
        }
        if (times == 0)
            continue;
        for (std::size_t v = 0; v < n_; ++v)
            set_[v] = dist[v] < layer;
        fire(chips, set_, times, trace);
    }
}

void Kernel::fire_unburned(std::vector<Chips>& chips, FiringTrace* trace)
{
    // Fire the unburned set as many times in a row as stays debt-free;
    // every unburned vertex loses exactly its burning-edge count per firing.
    Chips times = std::numeric_limits<Chips>::max();
    for (std::size_t v = 0; v < n_; ++v) {
        set_[v] = !burned_[v];
        if (set_[v] && heat_[v] > 0)
            times = std::min(times, chips[v] / heat_[v]);
    }
    fire(chips, set_, times, trace);
}

void Kernel::reduce(std::vector<Chips>& chips, Vertex q, FiringTrace* trace)
{
    clear_debt_off(chips, q, trace);
    while (burn(chips, q) != n_)
        fire_unburned(chips, trace);
}

bool Kernel::clears_debt_at(std::vector<Chips>& chips, Vertex q, FiringTrace* trace)
{
    while (chips[q] < 0) {
        if (burn(chips, q) == n_)
            return false;
        fire_unburned(chips, trace);
    }
    return true;
}

bool Kernel::winnable(std::span<const Chips> chips)
{
    Chips degree = 0;
    bool effective = true;
    for (Chips c : chips) {
        degree = checked_add(degree, c);
        effective = effective && c >= 0;
    }
    if (degree < 0)
        return false;
    if (effective)
        return true;
    scratch_.assign(chips.begin(), chips.end());
    clear_debt_off(scratch_, 0);
    return clears_debt_at(scratch_, 0);
}

bool Kernel::is_reduced(std::span<const Chips> chips, Vertex q)
{
    for (std::size_t v = 0; v < n_; ++v)
        if (static_cast<Vertex>(v) != q && chips[v] < 0)
            return false;
    return burn(chips, q) == n_;
}

Vertex Kernel::first_unwinnable_debt(std::span<const Chips> chips)
{
    for (std::size_t v = 0; v < n_; ++v) {
        if (chips[v] > 0)
            continue;
        scratch_.assign(chips.begin(), chips.end());
        scratch_[v] -= 1;
        if (!clears_debt_at(scratch_, static_cast<Vertex>(v)))
            return static_cast<Vertex>(v);
    }
    return -1;
}

bool Kernel::rank_at_least_one(std::span<const Chips> chips)
{
    return first_unwinnable_debt(chips) < 0;
}

} // namespace chipfire::detail
