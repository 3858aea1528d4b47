#pragma once

// Divisors (integer chip placements) and the firing calculus.

#include <chipfire/graph.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chipfire {

class Divisor {
public:
    // chips.size() must equal the vertex count of `graph`.
    Divisor(GraphPtr graph, std::vector<Chips> chips);

    static Divisor zero(GraphPtr graph);
    static Divisor unit(GraphPtr graph, Vertex v, Chips amount = 1);

    const Multigraph& graph() const noexcept { return *graph_; }
    const GraphPtr& graph_ptr() const noexcept { return graph_; }

    std::span<const Chips> chips() const noexcept { return chips_; }
    const std::vector<Chips>& values() const noexcept { return chips_; }
    Chips operator[](Vertex v) const { return chips_.at(static_cast<std::size_t>(v)); }
    std::size_t size() const noexcept { return chips_.size(); }

    Chips degree() const;
    bool is_effective() const noexcept;

    // Same graph required; otherwise std::invalid_argument.
    Divisor operator+(const Divisor& other) const;
    Divisor operator-(const Divisor& other) const;
    Divisor with_added(Vertex v, Chips amount) const;

    // Equal graphs and equal chip vectors.
    bool operator==(const Divisor& other) const;

    // Nonzero entries only, e.g. "{0:3, 5:1}"; "{}" for the zero divisor.
    std::string pretty() const;

private:
    GraphPtr graph_;
    std::vector<Chips> chips_;
};

// Pointer identity or structural equality.
bool same_graph(const Multigraph& a, const Multigraph& b) noexcept;
void require_same_graph(const Divisor& a, const Divisor& b);

// Net number of times each vertex fires. Entries are nonnegative.
struct FiringScript {
    std::vector<Chips> fire_count;

    explicit FiringScript(std::vector<Chips> counts);
    static FiringScript indicator(std::size_t n, const VertexSet& s);
};

Divisor fire_vertex(const Divisor& d, Vertex v);

// Same as firing every vertex of s once, in any order. Empty set is the identity.
Divisor fire_set(const Divisor& d, const VertexSet& s);

// result(v) = d(v) - f(v) val(v) + sum_u f(u) mult(u, v)
Divisor apply_script(const Divisor& d, const FiringScript& f);

// Compares q-reduced forms at vertex 0. Throws if the graphs differ.
bool is_equivalent(const Divisor& a, const Divisor& b);

// val(v) - 2 chips on every vertex.
Divisor canonical_divisor(const GraphPtr& g);

enum class LinearSystemMethod {
    automatic,
    // Closure of d's q-reduced form under set-firings that keep every
    // vertex out of debt. Requires <= 24 vertices.
    legal_set_firing,
    // Every effective divisor of the right degree, filtered by q-reduced form.
    composition_filter,
};

// All effective divisors equivalent to d, each once, sorted lexicographically.
std::vector<Divisor> linear_system(const Divisor& d,
                                   LinearSystemMethod method = LinearSystemMethod::automatic);

// An equivalent effective divisor with at most val(v)-1 chips on each v and
// no adjacent pair both at that maximum. Requires d effective and
// deg(d) <= |E| - |V| (std::invalid_argument otherwise). std::nullopt
// means the existence guarantee failed and indicates a defect.
std::optional<Divisor> find_spread_representative(const Divisor& d);

bool is_spread(const Divisor& d);

} // namespace chipfire
