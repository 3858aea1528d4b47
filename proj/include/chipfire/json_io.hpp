#pragma once

// JSON formats shared by the CLI and the HTTP service.
//
//   graph       {"vertices": n, "edges": [[u, v], ...]}   repeated pairs = multiplicity
//   divisor     {"chips": [c0, c1, ...]}
//   scramble    {"type": "scramble", "eggs": [[...], ...]}  or  {"type": "scramble", "uniform": k}
//   bramble     {"type": "bramble", "sets": [[...], ...]}
//   treecut     {"type": "treecut", "nodes": k, "links": [[a, b], ...], "placement": [node of v0, ...]}
//
// Loaders throw JsonFormatError on anything malformed.

#include <chipfire/certificates.hpp>
#include <chipfire/dhar.hpp>
#include <chipfire/divisor.hpp>
#include <chipfire/gonality.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

namespace chipfire::io {

using json = nlohmann::json;

struct JsonFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "-" reads standard input.
json read_json(const std::string& path);

Multigraph graph_from_json(const json& j);
json graph_to_json(const Multigraph& g);

Divisor divisor_from_json(const json& j, const GraphPtr& g);
json divisor_to_json(const Divisor& d);

VertexSet vertex_set_from_json(const json& j, const Multigraph& g);

using Certificate = std::variant<Scramble, Bramble, TreeCutDecomposition>;
Certificate certificate_from_json(const json& j, const GraphPtr& g);
json treecut_to_json(const TreeCutDecomposition& t);

json burn_to_json(const BurnOutcome& b);
json reduction_to_json(const Reduction& r);
json bounds_to_json(const BoundsReport& b);
json gonality_to_json(const GonalityResult& r);

} // namespace chipfire::io
