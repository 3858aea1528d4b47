#include <chipfire/gonality.hpp>

#include <chipfire/compositions.hpp>
#include <chipfire/detail/kernel.hpp>
#include <chipfire/dhar.hpp>
#include <chipfire/generators.hpp>

#include <algorithm>
#include <stdexcept>

namespace chipfire {

std::optional<BoundEntry> BoundsReport::best_lower() const
{
    auto it = std::max_element(lower.begin(), lower.end(),
                               [](const BoundEntry& a, const BoundEntry& b) { return a.value < b.value; });
    return it == lower.end() ? std::nullopt : std::optional<BoundEntry>(*it);
}

std::optional<BoundEntry> BoundsReport::best_upper() const
{
    auto it = std::min_element(upper.begin(), upper.end(),
                               [](const BoundEntry& a, const BoundEntry& b) { return a.value < b.value; });
    return it == upper.end() ? std::nullopt : std::optional<BoundEntry>(*it);
}

namespace {

void require_connected(const Multigraph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("gonality is defined for connected graphs");
}

class Deadline {
public:
    explicit Deadline(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

    bool exhausted(std::uint64_t tested) const
    {
        if (budget_.max_candidates && tested >= *budget_.max_candidates)
            return true;
        // The clock is cheap but not free; sample it.
        if (budget_.wall_time && (tested & 0xff) == 0)
            return std::chrono::steady_clock::now() - start_ >= *budget_.wall_time;
        return false;
    }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
};

bool rank_at_least(detail::Kernel& k, std::span<const Chips> chips, int r, std::vector<Chips>& diff)
{
    if (r <= 0)
        return r < 0 || k.winnable(chips);
    if (r == 1)
        return k.rank_at_least_one(chips);
    diff.resize(chips.size());
    return for_each_composition(chips.size(), r, [&](std::span<const Chips> e) {
        for (std::size_t v = 0; v < chips.size(); ++v)
            diff[v] = chips[v] - e[v];
        return k.winnable(diff);
    });
}

BoundEntry scramble_entry(const Scramble& s)
{
    return {scramble_order(s).order, "scramble", std::nullopt};
}

} // namespace

BoundEntry upper_bound_independence(const GraphPtr& g)
{
    if (!g->is_simple())
        throw std::invalid_argument("the independence bound needs a simple graph");
    VertexSet independent = maximum_independent_set(*g);
    std::vector<Chips> chips(g->vertex_count(), 1);
    for (Vertex v : independent)
        chips[v] = 0;
    // A lone vertex is its own maximum independent set, but still needs a chip.
    if (independent.size() == g->vertex_count())
        chips[independent.back()] = 1, independent.pop_back();
    return {static_cast<std::int64_t>(g->vertex_count() - independent.size()), "independence",
            Divisor(g, std::move(chips))};
}

BoundEntry upper_bound_genus(const GraphPtr& g)
{
    // Degree g+1 forces rank >= 1, wherever the chips sit.
    const std::int64_t value = genus(*g) + 1;
    return {value, "genus_plus_one", Divisor::unit(g, 0, value)};
}

BoundEntry upper_bound_product(const GraphPtr& g, const GraphPtr& h, const GonalityOptions& options)
{
    GonalityResult gg = gonality(g, options), gh = gonality(h, options);
    if (!gg.exact || !gh.exact)
        throw std::runtime_error("factor gonality search ran out of budget");
    GraphPtr product = share(generators::cartesian_product(*g, *h));
    const std::size_t ng = g->vertex_count(), nh = h->vertex_count();
    std::vector<Chips> chips(ng * nh, 0);
    std::int64_t value;
    if (static_cast<std::int64_t>(ng) * gh.gonality <= static_cast<std::int64_t>(nh) * gg.gonality) {
        value = static_cast<std::int64_t>(ng) * gh.gonality;
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < nh; ++j)
                chips[i * nh + j] = (*gh.winning_divisor)[static_cast<Vertex>(j)];
    } else {
        value = static_cast<std::int64_t>(nh) * gg.gonality;
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < nh; ++j)
                chips[i * nh + j] = (*gg.winning_divisor)[static_cast<Vertex>(i)];
    }
    return {value, "product", Divisor(product, std::move(chips))};
}

bool within_conjectured_bound(std::int64_t gonality, std::int64_t genus)
{
    return 2 * gonality <= genus + 3;
}

BoundsReport bounds_report(const GraphPtr& gp, const BoundsInputs& inputs, const BoundsOptions& options)
{
    const Multigraph& g = *gp;
    require_connected(g);
    BoundsReport out;

    // delta <= tw <= gon fails for multigraphs (two vertices joined by m edges).
    if (g.is_simple() && g.vertex_count() > 1)
        out.lower.push_back({min_degree(g), "min_degree", std::nullopt});

    if (g.vertex_count() <= kMaxMaskVertices) {
        std::optional<BoundEntry> best;
        for (std::size_t k = 1; k <= options.max_uniform_k && k <= g.vertex_count(); ++k) {
            std::vector<VertexSet> eggs = connected_subsets(g, k);
            if (eggs.size() > options.max_eggs)
                break;
            BoundEntry e = scramble_entry(Scramble(gp, std::move(eggs)));
            if (!best || e.value > best->value)
                best = e;
        }
        if (best)
            out.lower.push_back(*best);
    }
    for (const Scramble& s : inputs.scrambles) {
        if (!same_graph(s.graph(), g))
            throw std::invalid_argument("scramble belongs to a different graph");
        out.lower.push_back(scramble_entry(s));
    }
    for (const Bramble& b : inputs.brambles) {
        if (!same_graph(b.graph(), g))
            throw std::invalid_argument("bramble belongs to a different graph");
        BrambleValidation check = validate_bramble(b);
        if (!check.valid)
            throw std::invalid_argument("invalid bramble: " + check.reason);
        // Treewidth is the largest bramble order minus one.
        out.lower.push_back({bramble_order(b).size - 1, "bramble", std::nullopt});
    }

    if (g.is_simple() && g.vertex_count() <= kMaxMaskVertices)
        out.upper.push_back(upper_bound_independence(gp));
    out.upper.push_back(upper_bound_genus(gp));
    if (inputs.factors) {
        auto [a, b] = *inputs.factors;
        if (!same_graph(generators::cartesian_product(*a, *b), g))
            throw std::invalid_argument("graph is not the product of the given factors");
        BoundEntry e = upper_bound_product(a, b);
        e.witness = Divisor(gp, e.witness->values());
        out.upper.push_back(std::move(e));
    }
    for (const Divisor& d : inputs.witnesses) {
        if (!same_graph(d.graph(), g))
            throw std::invalid_argument("witness divisor belongs to a different graph");
        if (!d.is_effective() || !has_rank_at_least(d, 1))
            throw std::invalid_argument("witness divisor " + d.pretty() + " does not have rank >= 1");
        out.upper.push_back({d.degree(), "witness_divisor", d});
    }
    return out;
}

namespace {

GonalityResult search(const GraphPtr& gp, int r, const GonalityOptions& options)
{
    const Multigraph& g = *gp;
    require_connected(g);
    if (r < 1)
        throw std::invalid_argument("rank must be at least 1");
    const std::size_t n = g.vertex_count();

    GonalityResult out;
    out.rank = r;
    BoundsOptions bounds_options = options.bounds;
    if (options.raw_algorithm || !options.use_lower_bounds)
        bounds_options.max_uniform_k = 0;
    out.bounds = bounds_report(gp, options.inputs, bounds_options);

    // A rank-r divisor also has rank 1, so every gonality lower bound applies.
    std::int64_t start = r;
    std::string start_technique = "degree";
    if (options.use_lower_bounds && !options.raw_algorithm)
        if (auto lb = out.bounds.best_lower(); lb && lb->value > start) {
            start = lb->value;
            start_technique = lb->technique;
        }
    if (r == 1) {
        auto ub = out.bounds.best_upper();
        out.upper = ub->value;
        out.upper_technique = ub->technique;
    } else {
        out.upper = genus(g) + r; // r(D) >= deg(D) - g
        out.upper_technique = "riemann_roch";
    }
    out.lower = start;
    out.lower_technique = start_technique;

    detail::Kernel k(g);
    const Deadline deadline(options.budget);
    std::vector<Chips> caps(n), diff;
    bool out_of_budget = false;

    for (std::int64_t degree = start;; ++degree) {
        std::optional<std::vector<Chips>> winner;
        if (options.raw_algorithm) {
            caps.clear();
        } else {
            // q-reduced forms keep at most val(v) - 1 chips off q.
            caps.resize(n);
            caps[0] = degree;
            for (std::size_t v = 1; v < n; ++v)
                caps[v] = g.valence(static_cast<Vertex>(v)) - 1;
        }
        for_each_composition(
            n, degree,
            [&](std::span<const Chips> c) {
                if (!options.raw_algorithm && !k.is_reduced(c, 0))
                    return true;
                if (deadline.exhausted(out.candidates_tested)) {
                    out_of_budget = true;
                    return false;
                }
                ++out.candidates_tested;
                if (rank_at_least(k, c, r, diff)) {
                    winner.emplace(c.begin(), c.end());
                    return false;
                }
                return true;
            },
            caps);

        if (out_of_budget) {
            out.exact = false;
            out.lower = degree;
            out.lower_technique = degree == start ? start_technique : "exhaustive";
            return out;
        }
        if (!winner)
            continue;

        Divisor witness(gp, std::move(*winner));
        if (rank(witness).rank < r)
            throw std::logic_error("search produced " + witness.pretty() + " but rank() disagrees");
        out.exact = true;
        out.gonality = out.lower = out.upper = degree;
        out.lower_technique = degree == start ? start_technique : "exhaustive";
        out.upper_technique = "witness_divisor";
        out.winning_divisor = std::move(witness);
        out.refutation_degree = degree - 1;
        out.refutation = degree == start ? start_technique : "exhaustive";
        return out;
    }
}

} // namespace

GonalityResult gonality(const GraphPtr& g, const GonalityOptions& options)
{
    return search(g, 1, options);
}

GonalityResult higher_gonality(const GraphPtr& g, int r, const GonalityOptions& options)
{
    return search(g, r, options);
}

void for_each_winning_divisor(const GraphPtr& g, std::int64_t n,
                              const std::function<bool(const Divisor&)>& visit)
{
    detail::Kernel k(*g);
    for_each_composition(g->vertex_count(), n, [&](std::span<const Chips> c) {
        if (!k.rank_at_least_one(c))
            return true;
        return visit(Divisor(g, std::vector<Chips>(c.begin(), c.end())));
    });
}

std::vector<Divisor> enumerate_winning_divisors(const GraphPtr& g, std::int64_t n)
{
    std::vector<Divisor> out;
    for_each_winning_divisor(g, n, [&](const Divisor& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

} // namespace chipfire
