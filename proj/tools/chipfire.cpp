// Command-line front end. Every subcommand prints one JSON document.
// Exit status: 0 success, 1 domain error, 2 usage error.

#include <chipfire/dhar.hpp>
#include <chipfire/generators.hpp>
#include <chipfire/gonality.hpp>
#include <chipfire/json_io.hpp>
#include <chipfire/parking.hpp>
#include <chipfire/service.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace chipfire;
using io::json;

namespace {

struct Inputs {
    std::string graph;
    std::string divisor;
    std::string certificate;
};

GraphPtr load_graph(const std::string& path)
{
    return share(io::graph_from_json(io::read_json(path)));
}

void emit(const json& j)
{
    std::cout << j.dump(2) << '\n';
}

json tuples_json(const std::vector<ParkingTuple>& ts)
{
    json out = json::array();
    for (const ParkingTuple& t : ts)
        out.push_back(t);
    return out;
}

std::string tuples_text(const std::vector<ParkingTuple>& ts)
{
    std::string out;
    for (const ParkingTuple& t : ts) {
        out += out.empty() ? "(" : ", (";
        for (std::size_t i = 0; i < t.size(); ++i)
            out += (i ? "," : "") + std::to_string(t[i]);
        out += ")";
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chip-firing engine and gonality laboratory"};
    app.require_subcommand(1);

    Inputs in;
    int q = 0;

    // gonality
    auto* gon = app.add_subcommand("gonality", "exact gonality (or r-th gonality) of a graph");
    double budget_seconds = 0;
    std::uint64_t max_nodes = 0;
    bool raw = false;
    int rank_r = 1;
    gon->add_option("graph", in.graph, "graph JSON file, - for stdin")->required();
    gon->add_option("--budget", budget_seconds, "wall-clock limit in seconds");
    gon->add_option("--max-nodes", max_nodes, "limit on candidate divisors tested");
    gon->add_flag("--raw-algorithm", raw, "test every placement instead of q-reduced forms");
    gon->add_option("--rank", rank_r, "compute the r-th gonality")->check(CLI::PositiveNumber);

    auto* rk = app.add_subcommand("rank", "rank of a divisor and the Riemann-Roch check");
    rk->add_option("graph", in.graph)->required();
    rk->add_option("divisor", in.divisor)->required();

    auto* dh = app.add_subcommand("dhar", "burn from q");
    dh->add_option("graph", in.graph)->required();
    dh->add_option("divisor", in.divisor)->required();
    dh->add_option("--q", q, "burn source");

    auto* rd = app.add_subcommand("reduce", "q-reduced form with the firing script");
    rd->add_option("graph", in.graph)->required();
    rd->add_option("divisor", in.divisor)->required();
    rd->add_option("--q", q, "reduction vertex");

    auto* wn = app.add_subcommand("winnable", "Dollar Game verdict");
    wn->add_option("graph", in.graph)->required();
    wn->add_option("divisor", in.divisor)->required();

    auto* ce = app.add_subcommand("certify", "order or width of a certificate and the bound it gives");
    ce->add_option("graph", in.graph)->required();
    ce->add_option("certificate", in.certificate)->required();

    auto* pk = app.add_subcommand("parking", "unwinnable placements on K_n and parking functions");
    std::size_t parking_n = 4;
    pk->add_option("--n", parking_n, "complete graph size")->check(CLI::Range(2, 8));

    auto* gen = app.add_subcommand("generate", "emit a graph from a named family");
    std::string family;
    std::size_t gen_n = 0, gen_d = 0;
    std::vector<std::size_t> parts;
    bool dot = false;
    gen->add_option("--family", family, "tetrahedron, octahedron, cube, dodecahedron, icosahedron, complete, "
                                        "cycle, path, star, hypercube, multipartite")
        ->required();
    gen->add_option("--n", gen_n, "vertex count for sized families");
    gen->add_option("--d", gen_d, "hypercube dimension");
    gen->add_option("--parts", parts, "part sizes for multipartite");
    gen->add_flag("--dot", dot, "emit Graphviz DOT instead of JSON");

    auto* srv = app.add_subcommand("serve", "HTTP game API");
    service::ServeOptions serve_opts;
    std::string static_dir, log_dir;
    srv->add_option("--port", serve_opts.port, "listen port");
    srv->add_option("--host", serve_opts.host, "listen address");
    srv->add_option("--static", static_dir, "directory served at /");
    srv->add_option("--log-dir", log_dir, "write a JSON log per session here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gon) {
            GonalityOptions opts;
            if (budget_seconds > 0)
                opts.budget.wall_time = std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1000));
            if (max_nodes > 0)
                opts.budget.max_candidates = max_nodes;
            opts.raw_algorithm = raw;
            GraphPtr g = load_graph(in.graph);
            GonalityResult r = higher_gonality(g, rank_r, opts);
            json out = io::gonality_to_json(r);
            if (r.exact && rank_r == 1)
                out["conjectured_bound"] = {{"statement", "2 gon <= genus + 3"},
                                            {"holds", within_conjectured_bound(r.gonality, genus(*g))},
                                            {"asserted", false}};
            emit(out);
        } else if (*rk) {
            GraphPtr g = load_graph(in.graph);
            Divisor d = io::divisor_from_json(io::read_json(in.divisor), g);
            RankResult r = rank(d);
            RiemannRochCheck rr = verify_riemann_roch(d);
            emit({{"rank", r.rank},
                  {"witness", io::divisor_to_json(r.witness)},
                  {"riemann_roch",
                   {{"rank", rr.rank},
                    {"canonical_minus_rank", rr.complement_rank},
                    {"degree", rr.degree},
                    {"genus", rr.genus},
                    {"holds", rr.holds}}}});
        } else if (*dh) {
            GraphPtr g = load_graph(in.graph);
            Divisor d = io::divisor_from_json(io::read_json(in.divisor), g);
            json out = io::burn_to_json(burn(d, q));
            out["q"] = q;
            out["reduced"] = is_q_reduced(d, q);
            emit(out);
        } else if (*rd) {
            GraphPtr g = load_graph(in.graph);
            Divisor d = io::divisor_from_json(io::read_json(in.divisor), g);
            json out = io::reduction_to_json(q_reduce_traced(d, q));
            out["q"] = q;
            emit(out);
        } else if (*wn) {
            GraphPtr g = load_graph(in.graph);
            Divisor d = io::divisor_from_json(io::read_json(in.divisor), g);
            json out{{"winnable", dollar_game_winnable(d)}, {"degree", d.degree()}};
            if (out["winnable"].get<bool>() && !d.is_effective())
                out["reduced_at_0"] = io::divisor_to_json(q_reduce(d, 0));
            emit(out);
        } else if (*ce) {
            GraphPtr g = load_graph(in.graph);
            io::Certificate c = io::certificate_from_json(io::read_json(in.certificate), g);
            json out;
            if (auto* s = std::get_if<Scramble>(&c)) {
                ScrambleOrder o = scramble_order(*s);
                out = {{"type", "scramble"},
                       {"eggs", s->eggs().size()},
                       {"hitting_number", o.hitting.size},
                       {"hitting_set", o.hitting.hitting_set},
                       {"egg_cut_number", o.egg_cut.value ? json(*o.egg_cut.value) : json("infinite")},
                       {"order", o.order},
                       {"bound", {{"gonality_at_least", o.order}, {"via", "scramble number"}}}};
            } else if (auto* b = std::get_if<Bramble>(&c)) {
                BrambleValidation v = validate_bramble(*b);
                out = {{"type", "bramble"}, {"valid", v.valid}};
                if (!v.valid) {
                    out["reason"] = v.reason;
                    emit(out);
                    return 1;
                }
                HittingResult h = bramble_order(*b);
                out["order"] = h.size;
                out["hitting_set"] = h.hitting_set;
                out["bound"] = {{"treewidth_at_least", h.size - 1},
                                {"gonality_at_least", h.size - 1},
                                {"via", "treewidth"}};
            } else {
                const auto& t = std::get<TreeCutDecomposition>(c);
                TreeCutWidth w = treecut_width(t, *g);
                out = {{"type", "treecut"},
                       {"width", w.width},
                       {"link_load", w.link_load},
                       {"node_load", w.node_load},
                       {"bound", {{"scramble_number_at_most", w.width}, {"via", "screewidth"}}}};
            }
            emit(out);
        } else if (*pk) {
            BijectionReport r = verify_bijection(parking_n);
            std::vector<ParkingTuple> unwinnable = unwinnable_placements(parking_n);
            emit({{"n", parking_n},
                  {"coordinate_bound_checked", true},
                  {"unwinnable", tuples_json(unwinnable)},
                  {"shifted", tuples_json(r.shifted)},
                  {"parking_functions", tuples_json(r.parking)},
                  {"count", r.parking.size()},
                  {"bijection_holds", r.holds},
                  {"text", {{"unwinnable", tuples_text(unwinnable)}, {"shifted", tuples_text(r.shifted)}}}});
        } else if (*gen) {
            Multigraph g = generators::by_name(family, family == "hypercube" ? gen_d : gen_n, parts);
            if (dot)
                std::cout << to_dot(g);
            else
                emit(io::graph_to_json(g));
        } else if (*srv) {
            if (!static_dir.empty())
                serve_opts.static_dir = static_dir;
            if (!log_dir.empty())
                serve_opts.log_dir = log_dir;
            return service::serve(serve_opts) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        emit({{"error", e.what()}});
        return 1;
    }
    return 0;
}
