#pragma once

// HTTP+JSON game API under /api/v1.
//
//   POST   /api/v1/sessions              {"kind": "gonality", "family": "tetrahedron", "budget": 3}
//                                        {"kind": "dollar", "graph": {...}, "divisor": {"chips": [...]}}
//   GET    /api/v1/sessions/{id}
//   POST   /api/v1/sessions/{id}/place   {"chips": [...]}
//   POST   /api/v1/sessions/{id}/debt    {"vertex": v}          player adversary only
//   POST   /api/v1/sessions/{id}/fire    {"vertex": v} | {"set": [...]}
//   GET    /api/v1/sessions/{id}/hint
//   POST   /api/v1/sessions/{id}/resign
//   DELETE /api/v1/sessions/{id}
//   GET    /api/v1/families
//
// Errors carry {"error": message}; out-of-phase calls answer 409 with the
// current phase, unknown sessions 404, malformed payloads 400.

#include <chipfire/game.hpp>

#include <httplib.h>

#include <optional>
#include <string>

namespace chipfire::service {

void register_routes(httplib::Server& server, game::SessionStore& store);

struct ServeOptions {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::optional<std::string> static_dir;
    std::optional<std::string> log_dir;
};

// Blocks until the server stops. Returns false if it could not bind.
bool serve(const ServeOptions& options);

} // namespace chipfire::service
