#include "fpbm/graph_io.hpp"

#include <fstream>

#include "fpbm/error.hpp"

namespace fpbm {

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(value.dump());
  throw ValidationError("expected a rational string, got " + value.dump());
}

Json rational_to_json(const Rational& value) { return to_string(value); }

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::string require_string(const Json& value, const char* what) {
  if (!value.is_string()) throw ValidationError(std::string(what) + " must be a string");
  return value.get<std::string>();
}

// A document is either {key: {...}} or the bare map itself.
const Json& unwrap(const Json& doc, const char* key) {
  if (!doc.is_object()) throw ValidationError("expected a JSON object");
  if (doc.contains(key) && doc.at(key).is_object()) return doc.at(key);
  return doc;
}

}  // namespace

GraphSpec graph_spec_from_json(const Json& doc) {
  GraphSpec spec;
  const Json& vertices = require(doc, "vertices");
  if (!vertices.is_array()) throw ValidationError("'vertices' must be an array");
  for (const auto& v : vertices) spec.vertices.push_back(require_string(v, "vertex id"));

  if (doc.contains("edges")) {
    const Json& edges = doc.at("edges");
    if (!edges.is_array()) throw ValidationError("'edges' must be an array");
    for (const auto& e : edges) {
      const Json& ends = require(e, "ends");
      if (!ends.is_array() || ends.size() != 2)
        throw ValidationError("edge 'ends' must list exactly two vertex ids");
      spec.edges.push_back({require_string(require(e, "id"), "edge id"),
                            require_string(ends[0], "endpoint"), require_string(ends[1], "endpoint")});
    }
  }

  if (doc.contains("b")) {
    const Json& b = doc.at("b");
    if (!b.is_object()) throw ValidationError("'b' must be an object");
    for (const auto& [id, value] : b.items()) spec.b[id] = rational_from_json(value);
  }
  return spec;
}

BuiltGraph graph_from_json(const Json& doc) { return build_graph(graph_spec_from_json(doc)); }

Json graph_to_json(const MultiGraph& g, const BVector& b) {
  Json doc;
  doc["vertices"] = g.vertex_ids();
  doc["edges"] = Json::array();
  for (const Edge& e : g.edges())
    doc["edges"].push_back({{"id", e.id}, {"ends", {g.vertex_id(e.u), g.vertex_id(e.w)}}});
  doc["b"] = Json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) doc["b"][g.vertex_id(v)] = rational_to_json(b[v]);
  return doc;
}

EdgeVector edge_vector_from_json(const MultiGraph& g, const Json& doc) {
  const Json& map = unwrap(doc, "point");
  EdgeVector x(g.edge_count());
  for (const auto& [id, value] : map.items()) x[g.edge_index(id)] = rational_from_json(value);
  return x;
}

Json edge_vector_to_json(const MultiGraph& g, std::span<const Rational> x) {
  Json doc = Json::object();
  for (std::size_t e = 0; e < g.edge_count(); ++e) doc[g.edge(e).id] = rational_to_json(x[e]);
  return doc;
}

DemandVector demand_from_json(const MultiGraph& g, const Json& doc) {
  const Json& map = unwrap(doc, "demand");
  DemandVector a(g.vertex_count());
  for (const auto& [id, value] : map.items()) a[g.vertex_index(id)] = rational_from_json(value);
  return a;
}

Json vertex_list_to_json(const MultiGraph& g, std::span<const std::size_t> vertices) {
  Json doc = Json::array();
  for (std::size_t v : vertices) doc.push_back(g.vertex_id(v));
  return doc;
}

Json edge_list_to_json(const MultiGraph& g, const EdgeSet& edges) {
  Json doc = Json::array();
  for (std::size_t e : edges.members()) doc.push_back(g.edge(e).id);
  return doc;
}

Json partition_to_json(const MultiGraph& g, const TriPartition& p) {
  return {{"V1", vertex_list_to_json(g, p.v1)},
          {"V2", vertex_list_to_json(g, p.v2)},
          {"V3", vertex_list_to_json(g, p.v3)}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

}  // namespace fpbm
