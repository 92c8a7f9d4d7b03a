#include "fpbm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "fpbm/error.hpp"
#include "fpbm/face_lattice.hpp"
#include "fpbm/feasibility.hpp"
#include "fpbm/flow_solver.hpp"
#include "fpbm/graph_io.hpp"
#include "fpbm/graph_structure.hpp"
#include "fpbm/oracle.hpp"
#include "fpbm/polytope.hpp"

namespace fpbm {

namespace {

struct Options {
  std::string graph;
  std::vector<std::string> points;
  std::string demand;
  bool dot = false;
  bool pretty = false;
  bool oracle = false;
  std::size_t max_vertices = 16;
  std::size_t max_edges = 20;

  Limits limits() const { return {max_vertices, max_edges}; }
};

enum class Status { Ok, Infeasible };

struct Outcome {
  Status status = Status::Ok;
  Json doc;            ///< payload, without the status field
  std::string text;    ///< raw output instead of JSON (DOT)
};

Json with_status(Status status, const Json& payload) {
  Json doc;
  doc["status"] = status == Status::Ok ? "ok" : "infeasible";
  for (const auto& [key, value] : payload.items()) doc[key] = value;
  return doc;
}

void print_pretty(std::ostream& out, const Json& doc) {
  for (const auto& [key, value] : doc.items())
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

Json vertex_points_to_json(const MultiGraph& g, std::span<const VertexPoint> vertices) {
  Json list = Json::array();
  for (const auto& v : vertices)
    list.push_back({{"point", edge_vector_to_json(g, v.coords)}, {"support", edge_list_to_json(g, v.support)}});
  return list;
}

std::vector<VertexPoint> as_vertex_points(const std::vector<EdgeVector>& points) {
  std::vector<VertexPoint> out;
  for (const auto& x : points) out.push_back({x, support(x)});
  return out;
}

// Point documents: a single point, or a vertices listing with one point per row.
std::vector<EdgeVector> load_points(const MultiGraph& g, const std::string& path) {
  const Json doc = read_json_file(path);
  if (doc.is_object() && doc.contains("vertices") && doc.at("vertices").is_array()) {
    std::vector<EdgeVector> points;
    for (const auto& row : doc.at("vertices")) points.push_back(edge_vector_from_json(g, row));
    return points;
  }
  return {edge_vector_from_json(g, doc)};
}

Outcome cmd_check_nonempty(const BuiltGraph& in, const Options& opt) {
  const auto cert = check_nonempty(in.graph, in.b, opt.limits());
  if (const auto* f = std::get_if<Feasible>(&cert))
    return {Status::Ok, {{"feasible", true}, {"point", edge_vector_to_json(in.graph, f->point)}}, {}};
  const auto& p = std::get<InfeasiblePartition>(cert);
  return {Status::Infeasible,
          {{"feasible", false},
           {"partition", partition_to_json(in.graph, p.partition)},
           {"sum_V1", rational_to_json(p.sum_v1)},
           {"sum_V3", rational_to_json(p.sum_v3)}},
          {}};
}

Outcome cmd_strictly_positive(const BuiltGraph& in, const Options& opt) {
  const auto cert = check_strictly_positive(in.graph, in.b, opt.limits());
  if (const auto* p = std::get_if<Positive>(&cert))
    return {Status::Ok, {{"positive", true}, {"point", edge_vector_to_json(in.graph, p->point)}}, {}};
  const auto& blk = std::get<Blocking>(cert);
  return {Status::Infeasible,
          {{"positive", false},
           {"kind", std::string(to_string(blk.kind))},
           {"partition", partition_to_json(in.graph, blk.partition)},
           {"sum_V1", rational_to_json(blk.sum_v1)},
           {"sum_V3", rational_to_json(blk.sum_v3)}},
          {}};
}

Outcome cmd_dimension(const BuiltGraph& in, const Options& opt) {
  if (opt.oracle) {
    const auto vertices = oracle_vertices(in.graph, in.b, opt.max_edges);
    return {Status::Ok, {{"dimension", oracle_dimension(vertices)}, {"nonempty", !vertices.empty()}}, {}};
  }
  const auto s = summarize(in.graph, in.b, opt.limits());
  return {Status::Ok,
          {{"dimension", s.dimension},
           {"nonempty", s.nonempty},
           {"graph", edge_list_to_json(in.graph, s.graph)},
           {"bipartite_components", s.bipartite_count}},
          {}};
}

Outcome cmd_vertices(const BuiltGraph& in, const Options& opt) {
  const auto vertices = opt.oracle ? as_vertex_points(oracle_vertices(in.graph, in.b, opt.max_edges))
                                   : enumerate_vertices(in.graph, in.b, opt.limits());
  return {Status::Ok, {{"count", vertices.size()}, {"vertices", vertex_points_to_json(in.graph, vertices)}}, {}};
}

Outcome cmd_is_vertex(const BuiltGraph& in, const Options& opt) {
  if (opt.points.size() != 1) throw ValidationError("is-vertex needs exactly one --point file");
  const auto points = load_points(in.graph, opt.points.front());
  Json results = Json::array();
  bool all = true;
  for (const auto& x : points) {
    VertexTest test = vertex_test(in.graph, in.b, x);
    bool vertex = test == VertexTest::Vertex;
    if (opt.oracle && (test == VertexTest::Vertex || test == VertexTest::NotVertex)) {
      vertex = oracle_is_vertex(in.graph, in.b, x);
      test = vertex ? VertexTest::Vertex : VertexTest::NotVertex;
    }
    all = all && vertex;
    results.push_back({{"is_vertex", vertex}, {"reason", std::string(to_string(test))}});
  }
  const Status status = all ? Status::Ok : Status::Infeasible;
  if (results.size() == 1) return {status, results.front(), {}};
  return {status, {{"all_vertices", all}, {"results", results}}, {}};
}

Outcome cmd_is_edge(const BuiltGraph& in, const Options& opt) {
  if (opt.points.size() != 2) throw ValidationError("is-edge needs exactly two --point files");
  const auto u = load_points(in.graph, opt.points[0]);
  const auto w = load_points(in.graph, opt.points[1]);
  if (u.size() != 1 || w.size() != 1) throw ValidationError("is-edge point files must hold one point each");
  const bool adjacent = is_edge_pair(in.graph, in.b, u.front(), w.front());
  return {adjacent ? Status::Ok : Status::Infeasible, {{"adjacent", adjacent}}, {}};
}

Outcome cmd_face_graphs(const BuiltGraph& in, const Options& opt) {
  Json graphs = Json::array();
  const auto all = enumerate_face_graphs(in.graph, in.b, opt.limits());
  for (const auto& h : all) graphs.push_back(edge_list_to_json(in.graph, h));
  return {Status::Ok, {{"count", all.size()}, {"face_graphs", graphs}}, {}};
}

FaceLattice oracle_lattice(const BuiltGraph& in, const Options& opt) {
  const auto report = oracle_face_lattice(in.graph, in.b, opt.max_edges);
  FaceLattice lattice;
  lattice.vertices = as_vertex_points(report.vertices);
  for (const auto& f : report.faces) lattice.faces.push_back({f.support, f.dimension, f.vertices});
  const std::size_t k = lattice.faces.size();
  const auto below = [&](std::size_t i, std::size_t j) {
    const auto& a = lattice.faces[i].vertex_ids;
    const auto& c = lattice.faces[j].vertex_ids;
    return i != j && std::includes(c.begin(), c.end(), a.begin(), a.end());
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (!below(i, j)) continue;
      bool direct = true;
      for (std::size_t m = 0; m < k && direct; ++m)
        if (below(i, m) && below(m, j)) direct = false;
      if (direct) lattice.covers.emplace_back(i, j);
    }
  lattice.top = k - 1;
  return lattice;
}

// P(G, 0) = {0}: the lattice is the empty face below the single point.
FaceLattice zero_b_lattice(const MultiGraph& g) {
  FaceLattice lattice;
  const EdgeVector zero(g.edge_count());
  lattice.vertices.push_back({zero, EdgeSet(g.edge_count())});
  lattice.faces.push_back({EdgeSet(g.edge_count()), -1, {}});
  lattice.faces.push_back({EdgeSet(g.edge_count()), 0, {0}});
  lattice.covers.emplace_back(0, 1);
  lattice.top = 1;
  return lattice;
}

Outcome cmd_face_lattice(const BuiltGraph& in, const Options& opt) {
  const bool zero_b = in.b.is_zero();
  const FaceLattice lattice = zero_b       ? zero_b_lattice(in.graph)
                              : opt.oracle ? oracle_lattice(in, opt)
                                           : build_face_lattice(in.graph, in.b, opt.limits());
  if (opt.dot) return {Status::Ok, {}, to_dot(in.graph, lattice)};
  Json faces = Json::array();
  for (const auto& f : lattice.faces)
    faces.push_back({{"edges", edge_list_to_json(in.graph, f.graph)}, {"dim", f.dimension}, {"vertex_ids", f.vertex_ids}});
  Json covers = Json::array();
  for (const auto& [i, j] : lattice.covers) covers.push_back({i, j});
  Json doc{{"faces", faces}, {"covers", covers}, {"vertices", vertex_points_to_json(in.graph, lattice.vertices)}};
  if (zero_b) doc["special_case"] = "zero-b";
  return {Status::Ok, doc, {}};
}

Outcome cmd_kernel_basis(const BuiltGraph& in, const Options&) {
  Json basis = Json::array();
  const auto vectors = kernel_basis(in.graph);
  for (const auto& k : vectors) basis.push_back(edge_vector_to_json(in.graph, k));
  return {Status::Ok, {{"nullity", vectors.size()}, {"basis", basis}}, {}};
}

Outcome cmd_solve_flow(const BuiltGraph& in, const Options& opt) {
  const DemandVector a = opt.demand.empty()
                             ? DemandVector(in.b.values().begin(), in.b.values().end())
                             : demand_from_json(in.graph, read_json_file(opt.demand));
  const auto result = solve_flow(in.graph, a);
  if (const auto* x = std::get_if<EdgeVector>(&result))
    return {Status::Ok, {{"point", edge_vector_to_json(in.graph, *x)}}, {}};
  const auto& v = std::get<BalanceViolation>(result);
  return {Status::Infeasible,
          {{"violation",
            {{"U", vertex_list_to_json(in.graph, v.part_u)},
             {"W", vertex_list_to_json(in.graph, v.part_w)},
             {"sum_U", rational_to_json(v.sum_u)},
             {"sum_W", rational_to_json(v.sum_w)}}}},
          {}};
}

Outcome cmd_reduce(const BuiltGraph& in, const Options&) {
  const auto r = reduce_multi_edges(in.graph);
  Json map = Json::object();
  for (std::size_t e = 0; e < in.graph.edge_count(); ++e)
    map[in.graph.edge(e).id] = r.graph.edge(r.edge_map[e]).id;
  return {Status::Ok, {{"graph", graph_to_json(r.graph, BVector(r.graph, RationalVector(in.b.values().begin(), in.b.values().end())))}, {"edge_map", map}}, {}};
}

Outcome cmd_double(const BuiltGraph& in, const Options&) {
  const auto d = bipartite_double(in.graph, in.b);
  return {Status::Ok, {{"graph", graph_to_json(d.graph, d.b)}}, {}};
}

bool same_points(const std::vector<VertexPoint>& a, const std::vector<EdgeVector>& b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(),
                                            [](const VertexPoint& v, const EdgeVector& x) { return v.coords == x; });
}

Outcome cmd_oracle_audit(const BuiltGraph& in, const Options& opt) {
  const auto& g = in.graph;
  const auto vertices = enumerate_vertices(g, in.b, opt.limits());
  const auto oracle = oracle_vertices(g, in.b, opt.max_edges);
  Json checks;
  checks["vertices"] = same_points(vertices, oracle);
  checks["dimension"] = summarize(g, vertices).dimension == oracle_dimension(oracle);
  bool vertex_tests = true;
  for (const auto& v : vertices) vertex_tests = vertex_tests && oracle_is_vertex(g, in.b, v.coords);
  checks["vertex_tests"] = vertex_tests;
  const bool nonempty = std::holds_alternative<Feasible>(check_nonempty(g, in.b, opt.limits()));
  checks["nonempty"] = nonempty == !oracle.empty();
  if (!in.b.is_zero() && checks["vertices"].get<bool>()) {
    const auto report = oracle_face_lattice(g, in.b, opt.max_edges);
    bool adjacency = true;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        adjacency = adjacency && is_edge_pair(g, in.b, vertices[i].coords, vertices[j].coords) == report.adjacency[i][j];
    checks["adjacency"] = adjacency;
    const auto faces = enumerate_face_graphs(g, in.b, opt.limits());
    bool same_faces = faces.size() == report.faces.size();
    for (std::size_t i = 0; same_faces && i < faces.size(); ++i) same_faces = faces[i] == report.faces[i].support;
    checks["faces"] = same_faces;
  }
  bool agree = true;
  for (const auto& [name, ok] : checks.items()) agree = agree && ok.get<bool>();
  return {agree ? Status::Ok : Status::Infeasible,
          {{"agree", agree}, {"vertex_count", vertices.size()}, {"checks", checks}},
          {}};
}

using Handler = std::function<Outcome(const BuiltGraph&, const Options&)>;

struct Command {
  const char* name;
  const char* help;
  Handler run;
  bool uses_points = false;
  bool uses_demand = false;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> list{
      {"check-nonempty", "Decide whether P(G,b) is nonempty, with a certificate", cmd_check_nonempty},
      {"strictly-positive", "Decide whether P(G,b) has a strictly positive point", cmd_strictly_positive},
      {"dimension", "Dimension and graph of P(G,b)", cmd_dimension},
      {"vertices", "Enumerate the vertices of P(G,b)", cmd_vertices},
      {"is-vertex", "Test whether a point is a vertex", cmd_is_vertex, true},
      {"is-edge", "Test whether two vertices span an edge", cmd_is_edge, true},
      {"face-graphs", "List the graphs of all faces", cmd_face_graphs},
      {"face-lattice", "Face lattice as JSON or DOT", cmd_face_lattice},
      {"kernel-basis", "Integral basis of the incidence kernel", cmd_kernel_basis},
      {"solve-flow", "Solve I_G x = a for a demand vector (default a = b)", cmd_solve_flow, false, true},
      {"reduce", "Collapse parallel edges and repeated loops", cmd_reduce},
      {"double", "Bipartite double graph with doubled b", cmd_double},
      {"oracle-audit", "Compare every main result with the brute-force oracle", cmd_oracle_audit},
  };
  return list;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyze fractional perfect b-matching polytopes of multigraphs"};
  app.require_subcommand(1);
  Options opt;
  std::map<CLI::App*, const Command*> by_app;
  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("graph", opt.graph, "Graph file (JSON)")->required();
    sub->add_flag("--pretty", opt.pretty, "Human-readable summary instead of JSON");
    sub->add_flag("--oracle", opt.oracle, "Answer with the brute-force oracle where supported");
    sub->add_option("--max-vertices", opt.max_vertices, "Vertex cap")->capture_default_str();
    sub->add_option("--max-edges", opt.max_edges, "Edge cap")->capture_default_str();
    if (cmd.uses_points) sub->add_option("--point", opt.points, "Point file (JSON); repeatable");
    if (cmd.uses_demand) sub->add_option("--demand", opt.demand, "Demand file (JSON)");
    if (std::string_view(cmd.name) == "face-lattice") sub->add_flag("--dot", opt.dot, "Emit DOT instead of JSON");
    by_app[sub] = &cmd;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    out << Json{{"status", "error"}, {"error", e.what()}}.dump(2) << '\n';
    return 2;
  }

  const Command* cmd = by_app.at(app.get_subcommands().front());
  static const std::set<std::string> oracle_aware{"dimension", "vertices", "is-vertex", "face-lattice"};
  const auto fail = [&](int code, const std::string& message) {
    err << cmd->name << ": " << message << '\n';
    out << Json{{"status", "error"}, {"error", message}}.dump(2) << '\n';
    return code;
  };
  try {
    if (opt.oracle && !oracle_aware.contains(cmd->name))
      throw ValidationError(std::string("--oracle is not supported by ") + cmd->name);
    const BuiltGraph in = graph_from_json(read_json_file(opt.graph));
    check_vertex_cap(in.graph.vertex_count(), opt.limits());
    check_edge_cap(in.graph.edge_count(), opt.limits());
    const Outcome result = cmd->run(in, opt);
    if (!result.text.empty()) {
      out << result.text;
    } else {
      const Json doc = with_status(result.status, result.doc);
      if (opt.pretty)
        print_pretty(out, doc);
      else
        out << doc.dump(2) << '\n';
    }
    return result.status == Status::Ok ? 0 : 1;
  } catch (const InternalError& e) {
    return fail(3, e.what());
  } catch (const Error& e) {
    return fail(2, e.what());
  } catch (const Json::exception& e) {
    return fail(2, e.what());
  } catch (const std::exception& e) {
    return fail(2, e.what());
  }
}

}  // namespace fpbm
