#include <chipfire/service.hpp>

#include <chipfire/generators.hpp>

#include <iostream>

namespace chipfire::service {

using io::json;

namespace {

void reply(httplib::Response& res, int status, const json& body)
{
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

json session_view(const std::string& id, const game::Session& s, bool thinking)
{
    json out = s.to_json();
    out["id"] = id;
    out["adversary_thinking"] = thinking;
    return out;
}

GraphPtr graph_from_request(const json& body)
{
    if (body.contains("graph"))
        return share(io::graph_from_json(body.at("graph")));
    if (!body.contains("family"))
        throw io::JsonFormatError("give either \"graph\" or \"family\"");
    std::vector<std::size_t> parts;
    if (body.contains("parts"))
        parts = body.at("parts").get<std::vector<std::size_t>>();
    std::size_t size = body.value("n", std::size_t{0});
    try {
        return share(generators::by_name(body.at("family").get<std::string>(), size, parts));
    } catch (const std::invalid_argument& e) {
        throw io::JsonFormatError(e.what());
    }
}

// Runs a handler and maps library exceptions onto HTTP statuses.
template <class F>
void guarded(httplib::Response& res, F&& f)
{
    try {
        f();
    } catch (const game::PhaseError& e) {
        reply(res, 409, {{"error", e.what()}, {"phase", game::to_string(e.phase)}});
    } catch (const json::exception& e) {
        reply(res, 400, {{"error", std::string("bad request: ") + e.what()}});
    } catch (const io::JsonFormatError& e) {
        reply(res, 400, {{"error", e.what()}});
    } catch (const std::invalid_argument& e) {
        reply(res, 400, {{"error", e.what()}});
    } catch (const std::out_of_range& e) {
        reply(res, 400, {{"error", e.what()}});
    } catch (const std::exception& e) {
        reply(res, 500, {{"error", e.what()}});
    }
}

json parse_body(const httplib::Request& req)
{
    if (req.body.empty())
        return json::object();
    return json::parse(req.body);
}

// Session routes share the shape: lock, act, answer with the new state.
template <class F>
void on_session(game::SessionStore& store, const httplib::Request& req, httplib::Response& res, F&& act)
{
    guarded(res, [&] {
        const std::string id = req.path_params.at("id");
        json body = parse_body(req);
        json extra;
        bool found = store.with_session(
            id, [&](game::Session& s) { extra = act(s, body); },
            [&](const game::Session& s, bool thinking) {
                json view = session_view(id, s, thinking);
                if (!extra.is_null())
                    view.update(extra);
                reply(res, 200, view);
            });
        if (!found)
            reply(res, 404, {{"error", "no session " + id}});
    });
}

} // namespace

void register_routes(httplib::Server& server, game::SessionStore& store)
{
    server.Get("/api/v1/families", [](const httplib::Request&, httplib::Response& res) {
        reply(res, 200,
              json{{"families",
                    {"tetrahedron", "octahedron", "cube", "dodecahedron", "icosahedron", "complete", "cycle",
                     "path", "star", "hypercube", "multipartite"}}});
    });

    server.Post("/api/v1/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            json body = parse_body(req);
            GraphPtr g = graph_from_request(body);
            const std::string kind = body.value("kind", std::string("gonality"));
            std::optional<game::Session> s;
            if (kind == "gonality") {
                const std::string adv = body.value("adversary", std::string("engine"));
                if (adv != "engine" && adv != "player")
                    throw io::JsonFormatError("adversary must be \"engine\" or \"player\"");
                if (!body.contains("budget") || !body.at("budget").is_number_integer())
                    throw io::JsonFormatError("gonality sessions need an integer \"budget\"");
                s = game::Session::gonality_game(g, body.at("budget").get<Chips>(),
                                                 adv == "engine" ? game::Adversary::engine
                                                                 : game::Adversary::player);
            } else if (kind == "dollar") {
                s = game::Session::dollar_game(io::divisor_from_json(body.at("divisor"), g));
            } else {
                throw io::JsonFormatError("kind must be \"gonality\" or \"dollar\"");
            }
            std::string id = store.create(std::move(*s));
            store.with_session(
                id, [](game::Session&) {},
                [&](const game::Session& live, bool thinking) { reply(res, 201, session_view(id, live, thinking)); });
        });
    });

    server.Get("/api/v1/sessions/:id", [&store](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res, [](game::Session&, const json&) { return json(); });
    });

    server.Post("/api/v1/sessions/:id/place", [&store](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res, [](game::Session& s, const json& body) {
            s.place(io::divisor_from_json(body, s.graph()).values());
            return json();
        });
    });

    server.Post("/api/v1/sessions/:id/debt", [&store](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res, [](game::Session& s, const json& body) {
            if (s.adversary() == game::Adversary::engine)
                throw game::PhaseError("the engine places the debt in this session", s.phase());
            const json& v = body.at("vertex");
            if (!v.is_number_integer())
                throw io::JsonFormatError("\"vertex\" must be an integer");
            s.place_debt(v.get<Vertex>());
            return json();
        });
    });

    server.Post("/api/v1/sessions/:id/fire", [&store](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res, [](game::Session& s, const json& body) {
            VertexSet set;
            if (body.contains("set"))
                set = io::vertex_set_from_json(body.at("set"), *s.graph());
            else if (body.contains("vertex"))
                set = io::vertex_set_from_json(json::array({body.at("vertex")}), *s.graph());
            else
                throw io::JsonFormatError("give \"vertex\" or \"set\"");
            s.fire(set);
            return json();
        });
    });

    server.Get("/api/v1/sessions/:id/hint", [&store](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res, [](game::Session& s, const json&) {
            game::Hint h = s.hint();
            json hint{{"set", h.set}, {"reason", h.reason}};
            if (h.burn)
                hint["burn"] = io::burn_to_json(*h.burn);
            return json{{"hint", hint}};
        });
    });

    server.Post("/api/v1/sessions/:id/resign", [&store](const httplib::Request& req, httplib::Response& res) {
        on_session(store, req, res, [](game::Session& s, const json&) {
            s.resign();
            return json();
        });
    });

    server.Delete("/api/v1/sessions/:id", [&store](const httplib::Request& req, httplib::Response& res) {
        const std::string id = req.path_params.at("id");
        if (store.erase(id))
            reply(res, 200, {{"deleted", id}});
        else
            reply(res, 404, {{"error", "no session " + id}});
    });
}

bool serve(const ServeOptions& options)
{
    game::SessionStore store(options.log_dir ? std::optional<std::filesystem::path>(*options.log_dir)
                                             : std::nullopt);
    httplib::Server server;
    register_routes(server, store);
    if (options.static_dir && !server.set_mount_point("/", *options.static_dir)) {
        std::cerr << "static directory " << *options.static_dir << " not found\n";
        return false;
    }
    std::cerr << "listening on http://" << options.host << ':' << options.port << '\n';
    return server.listen(options.host, options.port);
}

} // namespace chipfire::service
