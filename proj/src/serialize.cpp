#include "twist/serialize.hpp"

#include <fstream>
#include <sstream>

#include "twist/error.hpp"

namespace twist {

namespace {

using nlohmann::json;

json edge_to_json(const Edge& e) { return json::array({e.lo, e.hi}); }

Edge edge_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "an edge must be a two-element integer array");
  }
  return make_edge(j[0].get<int>(), j[1].get<int>());
}

json edges_to_json(const EdgeSet& s) {
  json out = json::array();
  for (const Edge& e : s) out.push_back(edge_to_json(e));
  return out;
}

std::vector<Edge> edges_from_json(const json& j, const char* what) {
  if (!j.is_array()) {
    throw Error(ErrorCode::ParseError, std::string(what) + " must be an array of edges");
  }
  std::vector<Edge> out;
  out.reserve(j.size());
  for (const json& item : j) out.push_back(edge_from_json(item));
  return out;
}

json move_to_json(const ExchangeMove& m) {
  return json{{"remove", edge_to_json(m.removed)}, {"add", edge_to_json(m.added)}};
}

ExchangeMove move_from_json(const json& j) {
  if (!j.is_object() || !j.contains("remove") || !j.contains("add")) {
    throw Error(ErrorCode::ParseError, "a move must be an object with \"remove\" and \"add\"");
  }
  return ExchangeMove{edge_from_json(j["remove"]), edge_from_json(j["add"])};
}

int ambient_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "expected an object with an integer \"n\"");
  }
  return j["n"].get<int>();
}

}  // namespace

json edge_set_to_json(const EdgeSet& s) {
  return json{{"n", s.n()}, {"edges", edges_to_json(s)}};
}

EdgeSet edge_set_from_json(const json& j) {
  const int n = ambient_from_json(j);
  if (!j.contains("edges")) {
    throw Error(ErrorCode::ParseError, "edge set is missing \"edges\"");
  }
  return EdgeSet(n, edges_from_json(j["edges"], "\"edges\""));
}

json flip_graph_to_json(const FlipGraph& fg) {
  json nodes = json::array();
  for (const MaxPlaneSubgraph& node : fg.nodes()) nodes.push_back(edge_set_to_json(node.edges()));
  json links = json::array();
  for (const FlipLink& link : fg.links())
    links.push_back(json::array({link.a, link.b, move_to_json(link.move)}));
  return json{{"n", fg.n()},
              {"constraint", edges_to_json(fg.constraint())},
              {"nodes", std::move(nodes)},
              {"links", std::move(links)}};
}

json matching_graph_to_json(const MatchingGraph& mg) {
  json nodes = json::array();
  for (const PlanePerfectMatching& node : mg.nodes()) nodes.push_back(edge_set_to_json(node.edges()));
  json links = json::array();
  for (const MatchingLink& link : mg.links()) links.push_back(json::array({link.a, link.b}));
  return json{{"n", mg.n()},
              {"constraint", nullptr},
              {"nodes", std::move(nodes)},
              {"links", std::move(links)}};
}

json flip_path_to_json(const FlipPath& p) {
  json nodes = json::array();
  for (const MaxPlaneSubgraph& node : p.nodes) nodes.push_back(edge_set_to_json(node.edges()));
  json moves = json::array();
  for (const ExchangeMove& m : p.moves) moves.push_back(move_to_json(m));
  return json{{"n", p.n},
              {"constraint", edges_to_json(p.constraint)},
              {"nodes", std::move(nodes)},
              {"moves", std::move(moves)},
              {"constructive", p.constructive}};
}

FlipPath flip_path_from_json(const json& j) {
  FlipPath path;
  path.n = ambient_from_json(j);
  if (!j.contains("constraint") || !j.contains("nodes") || !j.contains("moves") ||
      !j.contains("constructive") || !j["constructive"].is_boolean()) {
    throw Error(ErrorCode::ParseError,
                "a flip path needs \"constraint\", \"nodes\", \"moves\" and \"constructive\"");
  }
  path.constraint = EdgeSet(path.n, edges_from_json(j["constraint"], "\"constraint\""));
  if (!j["nodes"].is_array()) {
    throw Error(ErrorCode::ParseError, "\"nodes\" must be an array of edge sets");
  }
  for (const json& node : j["nodes"]) {
    EdgeSet edges = edge_set_from_json(node);
    if (edges.n() != path.n) {
      throw Error(ErrorCode::MismatchedAmbient, "path node ambient differs from path ambient");
    }
    path.nodes.emplace_back(std::move(edges));
  }
  if (!j["moves"].is_array()) {
    throw Error(ErrorCode::ParseError, "\"moves\" must be an array of moves");
  }
  for (const json& m : j["moves"]) path.moves.push_back(move_from_json(m));
  path.constructive = j["constructive"].get<bool>();
  validate_flip_path(path);
  return path;
}

std::string flip_graph_to_dot(const FlipGraph& fg) {
  std::ostringstream out;
  out << "graph flip_graph {\n";
  out << "  node [shape=box];\n";
  for (int i = 0; i < fg.node_count(); ++i) {
    out << "  " << i << " [label=\"" << fg.node(i).key() << "\"];\n";
  }
  for (const FlipLink& link : fg.links()) {
    out << "  " << link.a << " -- " << link.b << " [label=\"-" << edge_label(link.move.removed)
        << "/+" << edge_label(link.move.added) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string matching_graph_to_dot(const MatchingGraph& mg) {
  std::ostringstream out;
  out << "graph matching_graph {\n";
  out << "  node [shape=box];\n";
  for (int i = 0; i < mg.node_count(); ++i) {
    out << "  " << i << " [label=\"" << mg.node(i).key() << "\"];\n";
  }
  for (const MatchingLink& link : mg.links()) {
    out << "  " << link.a << " -- " << link.b << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string edge_set_listing_to_dot(const std::vector<EdgeSet>& sets, int n,
                                    const std::string& name_prefix) {
  std::ostringstream out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out << "graph " << name_prefix << i << " {\n";
    for (int v = 1; v <= n; ++v) out << "  " << v << ";\n";
    for (const Edge& e : sets[i]) out << "  " << e.lo << " -- " << e.hi << ";\n";
    out << "}\n";
  }
  return out.str();
}

EdgeSet load_edge_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return edge_set_from_json(j);
}

}  // namespace twist
