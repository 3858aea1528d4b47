#include <chipfire/json_io.hpp>

#include <fstream>
#include <iostream>

namespace chipfire::io {

namespace {

std::int64_t integer(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw JsonFormatError(std::string(what) + " must be an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw JsonFormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

const json& array_field(const json& j, const char* key)
{
    const json& a = field(j, key);
    if (!a.is_array())
        throw JsonFormatError(std::string("\"") + key + "\" must be an array");
    return a;
}

std::vector<VertexSet> vertex_sets(const json& a, const Multigraph& g)
{
    std::vector<VertexSet> out;
    for (const json& s : a)
        out.push_back(vertex_set_from_json(s, g));
    return out;
}

} // namespace

json read_json(const std::string& path)
{
    try {
        if (path == "-")
            return json::parse(std::cin);
        std::ifstream in(path);
        if (!in)
            throw JsonFormatError("cannot open " + path);
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw JsonFormatError(path + ": " + e.what());
    }
}

Multigraph graph_from_json(const json& j)
{
    std::int64_t n = integer(field(j, "vertices"), "\"vertices\"");
    if (n <= 0)
        throw JsonFormatError("\"vertices\" must be positive");
    std::vector<Edge> edges;
    for (const json& e : array_field(j, "edges")) {
        if (!e.is_array() || e.size() != 2)
            throw JsonFormatError("each edge must be a pair [u, v], got " + e.dump());
        std::int64_t u = integer(e[0], "edge endpoint"), v = integer(e[1], "edge endpoint");
        if (u == v)
            throw JsonFormatError("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw JsonFormatError("edge " + e.dump() + " out of range");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), 1});
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
        labels = j.at("labels").get<std::vector<std::string>>();
    try {
        return Multigraph(static_cast<std::size_t>(n), edges, std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(e.what());
    }
}

json graph_to_json(const Multigraph& g)
{
    json edges = json::array();
    for (const Edge& e : g.edges())
        for (std::int64_t i = 0; i < e.count; ++i)
            edges.push_back({e.u, e.v});
    json out{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
    if (!g.labels().empty())
        out["labels"] = g.labels();
    return out;
}

Divisor divisor_from_json(const json& j, const GraphPtr& g)
{
    std::vector<Chips> chips;
    for (const json& c : array_field(j, "chips"))
        chips.push_back(integer(c, "chip count"));
    if (chips.size() != g->vertex_count())
        throw JsonFormatError("divisor has " + std::to_string(chips.size()) + " entries but the graph has " +
                              std::to_string(g->vertex_count()) + " vertices");
    return Divisor(g, std::move(chips));
}

json divisor_to_json(const Divisor& d)
{
    return {{"chips", d.values()}, {"degree", d.degree()}, {"pretty", d.pretty()}};
}

VertexSet vertex_set_from_json(const json& j, const Multigraph& g)
{
    if (!j.is_array())
        throw JsonFormatError("vertex set must be an array, got " + j.dump());
    VertexSet out;
    for (const json& v : j) {
        std::int64_t x = integer(v, "vertex");
        if (!g.contains(static_cast<Vertex>(x)) || x != static_cast<Vertex>(x))
            throw JsonFormatError("vertex " + std::to_string(x) + " out of range");
        out.push_back(static_cast<Vertex>(x));
    }
    return normalized(std::move(out));
}

Certificate certificate_from_json(const json& j, const GraphPtr& g)
{
    const json& type = field(j, "type");
    if (!type.is_string())
        throw JsonFormatError("\"type\" must be a string");
    const std::string t = type.get<std::string>();
    try {
        if (t == "scramble") {
            if (j.contains("uniform"))
                return Scramble::uniform(g, static_cast<std::size_t>(integer(j.at("uniform"), "\"uniform\"")));
            return Scramble(g, vertex_sets(array_field(j, "eggs"), *g));
        }
        if (t == "bramble")
            return Bramble(g, vertex_sets(array_field(j, "sets"), *g));
        if (t == "treecut") {
            TreeCutDecomposition d;
            d.node_count = static_cast<std::size_t>(integer(field(j, "nodes"), "\"nodes\""));
            for (const json& l : array_field(j, "links")) {
                if (!l.is_array() || l.size() != 2)
                    throw JsonFormatError("each link must be a pair");
                d.links.push_back({static_cast<std::size_t>(integer(l[0], "link end")),
                                   static_cast<std::size_t>(integer(l[1], "link end"))});
            }
            for (const json& p : array_field(j, "placement"))
                d.placement.push_back(static_cast<std::size_t>(integer(p, "placement")));
            validate_treecut(d, *g);
            return d;
        }
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(e.what());
    }
    throw JsonFormatError("unknown certificate type \"" + t + "\"");
}

json treecut_to_json(const TreeCutDecomposition& t)
{
    json links = json::array();
    for (auto [a, b] : t.links)
        links.push_back({a, b});
    return {{"type", "treecut"}, {"nodes", t.node_count}, {"links", links}, {"placement", t.placement}};
}

json burn_to_json(const BurnOutcome& b)
{
    return {{"burned", b.burned}, {"unburned", b.unburned}};
}

json reduction_to_json(const Reduction& r)
{
    json steps = json::array();
    for (const FiringStep& s : r.steps)
        steps.push_back({{"set", s.set}, {"times", s.times}});
    return {{"reduced", divisor_to_json(r.reduced)}, {"script", r.script.fire_count}, {"steps", steps}};
}

json bounds_to_json(const BoundsReport& b)
{
    auto entries = [](const std::vector<BoundEntry>& v) {
        json out = json::array();
        for (const BoundEntry& e : v) {
            json x{{"value", e.value}, {"technique", e.technique}};
            if (e.witness)
                x["witness"] = e.witness->values();
            out.push_back(std::move(x));
        }
        return out;
    };
    return {{"lower", entries(b.lower)}, {"upper", entries(b.upper)}};
}

json gonality_to_json(const GonalityResult& r)
{
    json out{{"exact", r.exact},
             {"rank", r.rank},
             {"lower", r.lower},
             {"upper", r.upper},
             {"lower_technique", r.lower_technique},
             {"upper_technique", r.upper_technique},
             {"candidates_tested", r.candidates_tested},
             {"bounds", bounds_to_json(r.bounds)}};
    out["gonality"] = r.exact ? json(r.gonality) : json(nullptr);
    out["winning_divisor"] = r.winning_divisor ? divisor_to_json(*r.winning_divisor) : json(nullptr);
    if (r.refutation_degree)
        out["refutation"] = {{"degree", *r.refutation_degree}, {"by", r.refutation}};
    return out;
}

} // namespace chipfire::io
