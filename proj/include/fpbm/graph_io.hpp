#pragma once

#include <json.hpp>

#include <filesystem>
#include <span>
#include <string>

#include "fpbm/flow_solver.hpp"
#include "fpbm/feasibility.hpp"
#include "fpbm/multigraph.hpp"

namespace fpbm {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings ("3/2", "-4"); JSON integers are accepted on
/// input, JSON floats are rejected.
Rational rational_from_json(const Json& value);
Json rational_to_json(const Rational& value);

/// {"vertices": [...], "edges": [{"id", "ends": [u, w]}], "b": {...}}
GraphSpec graph_spec_from_json(const Json& doc);
BuiltGraph graph_from_json(const Json& doc);
/// Writes every b entry in vertex order, so parse and write are mutually inverse.
Json graph_to_json(const MultiGraph& g, const BVector& b);

/// Accepts {"point": {...}} or a flat {edge id: value} object; edges not named are zero.
EdgeVector edge_vector_from_json(const MultiGraph& g, const Json& doc);
Json edge_vector_to_json(const MultiGraph& g, std::span<const Rational> x);

/// Accepts {"demand": {...}} or a flat {vertex id: value} object.
DemandVector demand_from_json(const MultiGraph& g, const Json& doc);

Json vertex_list_to_json(const MultiGraph& g, std::span<const std::size_t> vertices);
Json edge_list_to_json(const MultiGraph& g, const EdgeSet& edges);
Json partition_to_json(const MultiGraph& g, const TriPartition& p);

/// Throws ValidationError on unreadable or malformed files.
Json read_json_file(const std::filesystem::path& path);

}  // namespace fpbm
