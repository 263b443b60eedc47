#include "twist/flip_graph.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "twist/error.hpp"

namespace twist {

ExchangeMove reversed(const ExchangeMove& m) noexcept { return ExchangeMove{m.added, m.removed}; }

EdgeSet apply_move(const EdgeSet& s, const ExchangeMove& m) {
  if (!s.contains(m.removed)) {
    throw Error(ErrorCode::InvalidPath,
                "move removes " + edge_label(m.removed) + " which is absent from " + s.key());
  }
  if (s.contains(m.added)) {
    throw Error(ErrorCode::InvalidPath,
                "move adds " + edge_label(m.added) + " which is already in " + s.key());
  }
  return s.without(m.removed).with(m.added);
}

FlipGraph::FlipGraph(int n, EdgeSet constraint, std::vector<MaxPlaneSubgraph> nodes,
                     std::vector<FlipLink> links)
    : n_(n), constraint_(std::move(constraint)), nodes_(std::move(nodes)), links_(std::move(links)) {
  if (constraint_.n() != n_) {
    throw Error(ErrorCode::MismatchedAmbient, "constraint ambient differs from graph ambient");
  }
  for (const MaxPlaneSubgraph& node : nodes_) {
    if (node.n() != n_) {
      throw Error(ErrorCode::MismatchedAmbient, "node " + node.key() + " has wrong ambient");
    }
    if (!node.edges().contains_all(constraint_)) {
      throw Error(ErrorCode::InvalidGraph,
                  "node " + node.key() + " does not contain the constraint " + constraint_.key());
    }
  }
  if (!std::is_sorted(nodes_.begin(), nodes_.end()) ||
      std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw Error(ErrorCode::InvalidGraph, "nodes must be sorted and duplicate-free");
  }
  adjacency_.assign(nodes_.size(), {});
  for (const FlipLink& link : links_) {
    if (link.a < 0 || link.b <= link.a || link.b >= static_cast<int>(nodes_.size())) {
      throw Error(ErrorCode::InvalidGraph, "link endpoints out of range");
    }
    const EdgeSet applied = apply_move(nodes_[static_cast<std::size_t>(link.a)].edges(), link.move);
    if (applied != nodes_[static_cast<std::size_t>(link.b)].edges()) {
      throw Error(ErrorCode::InvalidGraph,
                  "link witness does not transform node " + std::to_string(link.a) +
                      " into node " + std::to_string(link.b));
    }
    adjacency_[static_cast<std::size_t>(link.a)].push_back(link.b);
    adjacency_[static_cast<std::size_t>(link.b)].push_back(link.a);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

std::optional<int> FlipGraph::index_of(const MaxPlaneSubgraph& g) const noexcept {
  auto pos = std::lower_bound(nodes_.begin(), nodes_.end(), g);
  if (pos == nodes_.end() || *pos != g) return std::nullopt;
  return static_cast<int>(pos - nodes_.begin());
}

std::vector<std::pair<ExchangeMove, MaxPlaneSubgraph>> exchange_neighbors(
    const MaxPlaneSubgraph& g) {
  std::vector<std::pair<ExchangeMove, MaxPlaneSubgraph>> out;
  const std::vector<Edge> universe = all_edges(g.n());
  for (const Edge& removed : g.edges()) {
    const EdgeSet reduced = g.edges().without(removed);
    for (const Edge& added : universe) {
      if (g.contains(added)) continue;
      bool blocked = false;
      for (const Edge& member : reduced) {
        if (crosses(added, member)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      EdgeSet candidate = reduced.with(added);
      if (!is_maximal_plane(candidate)) continue;
      out.emplace_back(ExchangeMove{removed, added}, MaxPlaneSubgraph(std::move(candidate)));
    }
  }
  return out;
}

FlipGraph build_flip_graph(int n, const EdgeSet& fixed, int limit) {
  if (fixed.n() != n) {
    throw Error(ErrorCode::MismatchedAmbient,
                "constraint is over T_" + std::to_string(fixed.n()) + ", expected T_" +
                    std::to_string(n));
  }
  if (!is_plane(fixed)) {
    throw Error(ErrorCode::NotPlane, "constraint " + fixed.key() + " has a crossing pair");
  }

  std::vector<MaxPlaneSubgraph> nodes;
  for (MaxPlaneSubgraph& g : enumerate_maximal_plane(n, limit)) {
    if (g.edges().contains_all(fixed)) nodes.push_back(std::move(g));
  }

  // Adjacency holds exactly when the symmetric difference is one edge each
  // way, so candidates are generated by swapping a single blocked edge in and
  // looked up among the nodes; membership certifies maximality.
  std::vector<FlipLink> links;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    const MaxPlaneSubgraph& g = nodes[static_cast<std::size_t>(i)];
    for (const Edge& added : all_edges(n)) {
      if (g.contains(added)) continue;
      Edge removed{};
      int crossings = 0;
      for (const Edge& member : g.edges()) {
        if (crosses(added, member)) {
          removed = member;
          if (++crossings > 1) break;
        }
      }
      if (crossings != 1) continue;
      MaxPlaneSubgraph candidate(g.edges().without(removed).with(added));
      auto pos = std::lower_bound(nodes.begin(), nodes.end(), candidate);
      if (pos == nodes.end() || *pos != candidate) continue;
      const int j = static_cast<int>(pos - nodes.begin());
      if (j > i) links.push_back(FlipLink{i, j, ExchangeMove{removed, added}});
    }
  }
  std::sort(links.begin(), links.end(),
            [](const FlipLink& l, const FlipLink& r) { return std::tie(l.a, l.b) < std::tie(r.a, r.b); });
  return FlipGraph(n, fixed, std::move(nodes), std::move(links));
}

bool is_connected(const FlipGraph& fg) {
  if (fg.node_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "connectivity is undefined for an empty flip graph");
  }
  std::vector<char> seen(static_cast<std::size_t>(fg.node_count()), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : fg.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == fg.node_count();
}

void validate_flip_path(const FlipPath& p) {
  if (p.nodes.empty()) {
    throw Error(ErrorCode::InvalidPath, "a flip path must contain at least one node");
  }
  if (p.moves.size() + 1 != p.nodes.size()) {
    throw Error(ErrorCode::InvalidPath, "a flip path needs exactly one move per step");
  }
  if (p.constraint.n() != p.n) {
    throw Error(ErrorCode::MismatchedAmbient, "constraint ambient differs from path ambient");
  }
  for (const MaxPlaneSubgraph& node : p.nodes) {
    if (node.n() != p.n) {
      throw Error(ErrorCode::MismatchedAmbient, "node " + node.key() + " has wrong ambient");
    }
    if (!node.edges().contains_all(p.constraint)) {
      throw Error(ErrorCode::FixedSetViolation,
                  "node " + node.key() + " drops the fixed edge set " + p.constraint.key());
    }
  }
  for (std::size_t i = 0; i < p.moves.size(); ++i) {
    if (apply_move(p.nodes[i].edges(), p.moves[i]) != p.nodes[i + 1].edges()) {
      throw Error(ErrorCode::InvalidPath,
                  "move " + std::to_string(i) + " does not produce the following node");
    }
  }
}

std::optional<FlipPath> bfs_path(const FlipGraph& fg, const MaxPlaneSubgraph& a,
                                 const MaxPlaneSubgraph& b) {
  const auto source = fg.index_of(a);
  const auto target = fg.index_of(b);
  if (!source) throw Error(ErrorCode::UnknownNode, a.key() + " is not a node of this flip graph");
  if (!target) throw Error(ErrorCode::UnknownNode, b.key() + " is not a node of this flip graph");

  std::vector<int> parent(static_cast<std::size_t>(fg.node_count()), -1);
  std::vector<char> seen(static_cast<std::size_t>(fg.node_count()), 0);
  std::deque<int> queue{*source};
  seen[static_cast<std::size_t>(*source)] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == *target) break;
    for (int v : fg.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }
  if (!seen[static_cast<std::size_t>(*target)]) return std::nullopt;

  std::vector<int> indices{*target};
  while (indices.back() != *source) indices.push_back(parent[static_cast<std::size_t>(indices.back())]);
  std::reverse(indices.begin(), indices.end());

  FlipPath path;
  path.n = fg.n();
  path.constraint = fg.constraint();
  path.constructive = false;
  for (int idx : indices) path.nodes.push_back(fg.node(idx));
  for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
    const EdgeSet& cur = path.nodes[i].edges();
    const EdgeSet& next = path.nodes[i + 1].edges();
    Edge removed{}, added{};
    for (const Edge& e : cur)
      if (!next.contains(e)) removed = e;
    for (const Edge& e : next)
      if (!cur.contains(e)) added = e;
    path.moves.push_back(ExchangeMove{removed, added});
  }
  validate_flip_path(path);
  return path;
}

}  // namespace twist
