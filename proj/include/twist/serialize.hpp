#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "twist/constructive.hpp"
#include "twist/flip_graph.hpp"
#include "twist/matching.hpp"

namespace twist {

// Shared wire format. EdgeSet: {"n": <int>, "edges": [[lo, hi], ...]} with
// 1-based indices and sorted edges. Graphs and paths embed that form.
nlohmann::json edge_set_to_json(const EdgeSet& s);
EdgeSet edge_set_from_json(const nlohmann::json& j);

// {"n", "constraint": [[lo,hi],...], "nodes": [EdgeSet...],
//  "links": [[a, b, {"remove": [i,j], "add": [s,t]}], ...]}
nlohmann::json flip_graph_to_json(const FlipGraph& fg);

// Same shape with "constraint": null; matching adjacency has no exchange
// witness, so links are bare [a, b] pairs.
nlohmann::json matching_graph_to_json(const MatchingGraph& mg);

// {"n", "constraint", "nodes", "moves": [{"remove": [i,j], "add": [s,t]}...],
//  "constructive": bool}
nlohmann::json flip_path_to_json(const FlipPath& p);

// Rebuilds and fully revalidates a path from its serialized form alone.
FlipPath flip_path_from_json(const nlohmann::json& j);

// DOT with nodes labeled by their edge-list key; flip links labeled
// "-g/+h", matching links unlabeled.
std::string flip_graph_to_dot(const FlipGraph& fg);
std::string matching_graph_to_dot(const MatchingGraph& mg);

// One `graph` block per edge set, drawing vertices 1..n and the member
// edges. Valid multi-graph DOT, handy for eyeballing an enumeration.
std::string edge_set_listing_to_dot(const std::vector<EdgeSet>& sets, int n,
                                    const std::string& name_prefix);

// Reads a JSON file holding one EdgeSet. Throws ParseError on malformed
// content or unreadable files.
EdgeSet load_edge_set_file(const std::string& path);

}  // namespace twist
