#include <chipfire/certificates.hpp>
#include <chipfire/dhar.hpp>
#include <chipfire/generators.hpp>
#include <chipfire/gonality.hpp>
#include <chipfire/parking.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace chipfire;

namespace {

// Python-side graph handle; the pointer is shared with every divisor built on it.
struct Graph {
    GraphPtr ptr;
};

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs)
{
    std::vector<Edge> edges;
    for (auto [u, v] : pairs)
        edges.push_back({u, v, 1});
    return {share(Multigraph(n, edges))};
}

Divisor divisor(const Graph& g, const std::vector<Chips>& chips)
{
    return Divisor(g.ptr, chips);
}

py::dict bound_dict(const BoundEntry& e)
{
    py::dict d;
    d["value"] = e.value;
    d["technique"] = e.technique;
    d["witness"] = e.witness ? py::cast(e.witness->values()) : py::none();
    return d;
}

py::dict gonality_dict(const GonalityResult& r)
{
    py::dict d;
    d["exact"] = r.exact;
    d["rank"] = r.rank;
    d["gonality"] = r.exact ? py::cast(r.gonality) : py::none();
    d["winning_divisor"] = r.winning_divisor ? py::cast(r.winning_divisor->values()) : py::none();
    d["lower"] = r.lower;
    d["upper"] = r.upper;
    d["lower_technique"] = r.lower_technique;
    d["upper_technique"] = r.upper_technique;
    d["refutation"] = r.refutation;
    d["candidates_tested"] = r.candidates_tested;
    return d;
}

GonalityOptions options(std::optional<double> seconds, std::optional<std::uint64_t> max_candidates, bool raw)
{
    GonalityOptions o;
    if (seconds)
        o.budget.wall_time = std::chrono::milliseconds(static_cast<std::int64_t>(*seconds * 1000));
    o.budget.max_candidates = max_candidates;
    o.raw_algorithm = raw;
    return o;
}

py::dict order_dict(const ScrambleOrder& o)
{
    py::dict d;
    d["hitting_number"] = o.hitting.size;
    d["hitting_set"] = o.hitting.hitting_set;
    d["egg_cut_number"] = o.egg_cut.value ? py::cast(*o.egg_cut.value) : py::none();
    d["order"] = o.order;
    return d;
}

} // namespace

PYBIND11_MODULE(chipfire, m)
{
    m.doc() = "Chip-firing on multigraphs: divisors, Dhar's burning algorithm, gonality and its certificates.";

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("vertices"), py::arg("edges"),
             "Repeated pairs give parallel edges.")
        .def_static(
            "family",
            [](const std::string& name, std::size_t n, const std::vector<std::size_t>& parts) {
                return Graph{share(generators::by_name(name, n, parts))};
            },
            py::arg("name"), py::arg("n") = 0, py::arg("parts") = std::vector<std::size_t>{})
        .def_property_readonly("vertex_count", [](const Graph& g) { return g.ptr->vertex_count(); })
        .def_property_readonly("edge_count", [](const Graph& g) { return g.ptr->edge_count(); })
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::tuple<Vertex, Vertex, std::int64_t>> out;
                                   for (const Edge& e : g.ptr->edges())
                                       out.emplace_back(e.u, e.v, e.count);
                                   return out;
                               })
        .def("valence", [](const Graph& g, Vertex v) { return g.ptr->valence(v); })
        .def("genus", [](const Graph& g) { return genus(*g.ptr); })
        .def("min_degree", [](const Graph& g) { return min_degree(*g.ptr); })
        .def("independence_number", [](const Graph& g) { return independence_number(*g.ptr); })
        .def("outdegree", [](const Graph& g, const VertexSet& s) { return outdegree(*g.ptr, s); })
        .def("to_dot", [](const Graph& g) { return to_dot(*g.ptr); })
        .def("__repr__", [](const Graph& g) {
            return "<Graph |V|=" + std::to_string(g.ptr->vertex_count()) +
                   " |E|=" + std::to_string(g.ptr->edge_count()) + ">";
        });

    m.def("fire_set", [](const Graph& g, const std::vector<Chips>& chips, const VertexSet& s) {
        return fire_set(divisor(g, chips), s).values();
    });
    m.def("is_equivalent", [](const Graph& g, const std::vector<Chips>& a, const std::vector<Chips>& b) {
        return is_equivalent(divisor(g, a), divisor(g, b));
    });
    m.def(
        "burn",
        [](const Graph& g, const std::vector<Chips>& chips, Vertex q) {
            BurnOutcome b = burn(divisor(g, chips), q);
            return std::make_pair(b.burned, b.unburned);
        },
        py::arg("graph"), py::arg("chips"), py::arg("q"), "Returns (burned, unburned).");
    m.def(
        "q_reduce", [](const Graph& g, const std::vector<Chips>& chips, Vertex q) {
            return q_reduce(divisor(g, chips), q).values();
        },
        py::arg("graph"), py::arg("chips"), py::arg("q") = 0);
    m.def("is_winnable", [](const Graph& g, const std::vector<Chips>& chips) {
        return dollar_game_winnable(divisor(g, chips));
    });
    m.def("rank", [](const Graph& g, const std::vector<Chips>& chips) { return rank(divisor(g, chips)).rank; });
    m.def("canonical_divisor", [](const Graph& g) { return canonical_divisor(g.ptr).values(); });
    m.def("spread_representative", [](const Graph& g, const std::vector<Chips>& chips) {
        auto s = find_spread_representative(divisor(g, chips));
        return s ? py::cast(s->values()) : py::none();
    });

    m.def(
        "gonality",
        [](const Graph& g, std::optional<double> seconds, std::optional<std::uint64_t> max_candidates, bool raw) {
            GonalityOptions o = options(seconds, max_candidates, raw);
            std::optional<GonalityResult> r;
            {
                py::gil_scoped_release release;
                r = gonality(g.ptr, o);
            }
            return gonality_dict(*r);
        },
        py::arg("graph"), py::arg("seconds") = py::none(), py::arg("max_candidates") = py::none(),
        py::arg("raw_algorithm") = false);
    m.def(
        "higher_gonality",
        [](const Graph& g, int r, std::optional<double> seconds) {
            GonalityOptions o = options(seconds, std::nullopt, false);
            std::optional<GonalityResult> res;
            {
                py::gil_scoped_release release;
                res = higher_gonality(g.ptr, r, o);
            }
            return gonality_dict(*res);
        },
        py::arg("graph"), py::arg("r"), py::arg("seconds") = py::none());
    m.def("winning_divisors", [](const Graph& g, std::int64_t n) {
        std::vector<std::vector<Chips>> out;
        for (const Divisor& d : enumerate_winning_divisors(g.ptr, n))
            out.push_back(d.values());
        return out;
    });
    m.def("bounds", [](const Graph& g) {
        BoundsReport b = bounds_report(g.ptr);
        py::list lower, upper;
        for (const BoundEntry& e : b.lower)
            lower.append(bound_dict(e));
        for (const BoundEntry& e : b.upper)
            upper.append(bound_dict(e));
        py::dict d;
        d["lower"] = lower;
        d["upper"] = upper;
        return d;
    });

    m.def("scramble_order", [](const Graph& g, const std::vector<VertexSet>& eggs) {
        return order_dict(scramble_order(Scramble(g.ptr, eggs)));
    });
    m.def("uniform_scramble_order", [](const Graph& g, std::size_t k) {
        return order_dict(scramble_order(Scramble::uniform(g.ptr, k)));
    });
    m.def("bramble_order", [](const Graph& g, const std::vector<VertexSet>& sets) {
        Bramble b(g.ptr, sets);
        BrambleValidation v = validate_bramble(b);
        if (!v.valid)
            throw std::invalid_argument("not a bramble: " + v.reason);
        return bramble_order(b).size;
    });
    m.def(
        "treecut_width",
        [](const Graph& g, std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& links,
           const std::vector<std::size_t>& placement) {
            return treecut_width(TreeCutDecomposition{nodes, links, placement}, *g.ptr).width;
        },
        py::arg("graph"), py::arg("nodes"), py::arg("links"), py::arg("placement"));
    m.def(
        "verify_outdegree_bounds",
        [](const Graph& g, std::size_t lo, std::size_t hi, std::int64_t bound) {
            OutdegreeCheck c = verify_outdegree_bounds(*g.ptr, lo, hi, bound);
            return std::make_pair(c.holds, c.counterexample);
        },
        "Returns (holds, counterexample or None).");

    m.def("unwinnable_placements", &unwinnable_placements);
    m.def("parking_functions", &parking_functions);
    m.def("is_parking_function", &is_parking_function);
    m.def("verify_parking_bijection", [](std::size_t n) { return verify_bijection(n).holds; });
}
