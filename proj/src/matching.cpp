#include "twist/matching.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "twist/error.hpp"

namespace twist {

PlanePerfectMatching::PlanePerfectMatching(EdgeSet edges) : edges_(std::move(edges)) {
  const int n = edges_.n();
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::OddVertexCount,
                "perfect matchings need an even ambient vertex count, got n = " + std::to_string(n));
  }
  if (static_cast<int>(edges_.size()) != n / 2) {
    throw Error(ErrorCode::InvalidMatching,
                edges_.key() + " has " + std::to_string(edges_.size()) + " edges, expected " +
                    std::to_string(n / 2));
  }
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges_) {
    ++degree[static_cast<std::size_t>(e.lo)];
    ++degree[static_cast<std::size_t>(e.hi)];
  }
  for (int v = 1; v <= n; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 1) {
      throw Error(ErrorCode::InvalidMatching,
                  edges_.key() + " covers vertex " + std::to_string(v) + " " +
                      std::to_string(degree[static_cast<std::size_t>(v)]) + " times");
    }
  }
  if (!is_plane(edges_)) {
    throw Error(ErrorCode::NotPlane, "matching " + edges_.key() + " has a crossing pair");
  }
}

bool matchings_adjacent(const PlanePerfectMatching& l, const PlanePerfectMatching& n) {
  if (l.n() != n.n()) {
    throw Error(ErrorCode::MismatchedAmbient,
                "matchings live in T_" + std::to_string(l.n()) + " and T_" + std::to_string(n.n()));
  }
  std::vector<Edge> diff;
  for (const Edge& e : l.edges())
    if (!n.edges().contains(e)) diff.push_back(e);
  for (const Edge& e : n.edges())
    if (!l.edges().contains(e)) diff.push_back(e);
  if (diff.size() != 4) return false;

  // The four edges must form one plane cycle: four distinct vertices, each of
  // degree two, connected, pairwise non-crossing.
  std::map<int, int> degree;
  for (const Edge& e : diff) {
    ++degree[e.lo];
    ++degree[e.hi];
  }
  if (degree.size() != 4) return false;
  for (const auto& [vertex, count] : degree) {
    (void)vertex;
    if (count != 2) return false;
  }
  std::map<int, std::vector<int>> adjacency;
  for (const Edge& e : diff) {
    adjacency[e.lo].push_back(e.hi);
    adjacency[e.hi].push_back(e.lo);
  }
  std::vector<int> stack{degree.begin()->first};
  std::map<int, bool> seen{{stack.front(), true}};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  for (const auto& [vertex, count] : degree) {
    (void)count;
    if (!seen[vertex]) return false;
  }
  for (std::size_t i = 0; i < diff.size(); ++i)
    for (std::size_t j = i + 1; j < diff.size(); ++j)
      if (crosses(diff[i], diff[j])) return false;
  return true;
}

MatchingGraph::MatchingGraph(int n, std::vector<PlanePerfectMatching> nodes,
                             std::vector<MatchingLink> links)
    : n_(n), nodes_(std::move(nodes)), links_(std::move(links)) {
  for (const PlanePerfectMatching& node : nodes_) {
    if (node.n() != n_) {
      throw Error(ErrorCode::MismatchedAmbient, "matching " + node.key() + " has wrong ambient");
    }
  }
  if (!std::is_sorted(nodes_.begin(), nodes_.end()) ||
      std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw Error(ErrorCode::InvalidGraph, "nodes must be sorted and duplicate-free");
  }
  adjacency_.assign(nodes_.size(), {});
  for (const MatchingLink& link : links_) {
    if (link.a < 0 || link.b <= link.a || link.b >= static_cast<int>(nodes_.size())) {
      throw Error(ErrorCode::InvalidGraph, "link endpoints out of range");
    }
    adjacency_[static_cast<std::size_t>(link.a)].push_back(link.b);
    adjacency_[static_cast<std::size_t>(link.b)].push_back(link.a);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

std::optional<int> MatchingGraph::index_of(const PlanePerfectMatching& m) const noexcept {
  auto pos = std::lower_bound(nodes_.begin(), nodes_.end(), m);
  if (pos == nodes_.end() || *pos != m) return std::nullopt;
  return static_cast<int>(pos - nodes_.begin());
}

namespace {

// Backtracks over the lowest-index uncovered vertex. Candidate partners come
// pre-restricted (whole T_n, or the edges of one subgraph).
void collect_matchings(int n, const std::vector<std::vector<int>>& forward,
                       std::vector<char>& covered, std::vector<Edge>& current, bool check_crossings,
                       std::vector<PlanePerfectMatching>& out) {
  int v = 0;
  for (int i = 1; i <= n; ++i) {
    if (!covered[static_cast<std::size_t>(i)]) {
      v = i;
      break;
    }
  }
  if (v == 0) {
    out.emplace_back(EdgeSet(n, current));
    return;
  }
  for (int w : forward[static_cast<std::size_t>(v)]) {
    if (covered[static_cast<std::size_t>(w)]) continue;
    const Edge e{v, w};
    if (check_crossings) {
      bool blocked = false;
      for (const Edge& member : current) {
        if (crosses(e, member)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
    }
    covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(w)] = 1;
    current.push_back(e);
    collect_matchings(n, forward, covered, current, check_crossings, out);
    current.pop_back();
    covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(w)] = 0;
  }
}

}  // namespace

std::vector<PlanePerfectMatching> enumerate_plane_perfect_matchings(int n, int limit) {
  if (n < 2) {
    throw Error(ErrorCode::OutOfRange,
                "T_n needs at least 2 vertices, got n = " + std::to_string(n));
  }
  if (n % 2 != 0) {
    throw Error(ErrorCode::OddVertexCount,
                "perfect matchings need even n, got n = " + std::to_string(n));
  }
  const int effective = std::min(limit, kMatchingHardLimit);
  if (n > effective) {
    throw Error(ErrorCode::LimitExceeded,
                "n = " + std::to_string(n) + " exceeds the matching enumeration guard " +
                    std::to_string(effective) + " (hard cap " + std::to_string(kMatchingHardLimit) +
                    ")");
  }
  std::vector<std::vector<int>> forward(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v)
    for (int w = v + 1; w <= n; ++w) forward[static_cast<std::size_t>(v)].push_back(w);
  std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Edge> current;
  std::vector<PlanePerfectMatching> out;
  collect_matchings(n, forward, covered, current, /*check_crossings=*/true, out);
  std::sort(out.begin(), out.end());
  return out;
}

MatchingGraph build_matching_graph(int n, int limit) {
  std::vector<PlanePerfectMatching> nodes = enumerate_plane_perfect_matchings(n, limit);
  std::vector<MatchingLink> links;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(nodes.size()); ++j)
      if (matchings_adjacent(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(j)]))
        links.push_back(MatchingLink{i, j});
  return MatchingGraph(n, std::move(nodes), std::move(links));
}

bool is_connected(const MatchingGraph& mg) {
  if (mg.node_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "connectivity is undefined for an empty matching graph");
  }
  std::vector<char> seen(static_cast<std::size_t>(mg.node_count()), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : mg.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == mg.node_count();
}

std::vector<PlanePerfectMatching> matching_path(const MatchingGraph& mg,
                                                const PlanePerfectMatching& from,
                                                const PlanePerfectMatching& to) {
  const auto source = mg.index_of(from);
  const auto target = mg.index_of(to);
  if (!source) throw Error(ErrorCode::UnknownNode, from.key() + " is not a plane perfect matching node");
  if (!target) throw Error(ErrorCode::UnknownNode, to.key() + " is not a plane perfect matching node");

  std::vector<int> parent(static_cast<std::size_t>(mg.node_count()), -1);
  std::vector<char> seen(static_cast<std::size_t>(mg.node_count()), 0);
  std::deque<int> queue{*source};
  seen[static_cast<std::size_t>(*source)] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == *target) break;
    for (int v : mg.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }
  if (!seen[static_cast<std::size_t>(*target)]) {
    throw Error(ErrorCode::NoPath,
                "matching graph of T_" + std::to_string(mg.n()) +
                    " has no path between the requested matchings; this contradicts its expected connectivity");
  }
  std::vector<int> indices{*target};
  while (indices.back() != *source) indices.push_back(parent[static_cast<std::size_t>(indices.back())]);
  std::reverse(indices.begin(), indices.end());
  std::vector<PlanePerfectMatching> out;
  out.reserve(indices.size());
  for (int idx : indices) out.push_back(mg.node(idx));
  return out;
}

std::vector<PlanePerfectMatching> perfect_matchings_of(const MaxPlaneSubgraph& g) {
  const int n = g.n();
  if (n % 2 != 0) {
    throw Error(ErrorCode::OddVertexCount,
                "perfect matchings need even n, got n = " + std::to_string(n));
  }
  std::vector<std::vector<int>> forward(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : g.edges()) forward[static_cast<std::size_t>(e.lo)].push_back(e.hi);
  std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Edge> current;
  std::vector<PlanePerfectMatching> out;
  // Subsets of a plane graph are plane, so the crossing filter is skipped.
  collect_matchings(n, forward, covered, current, /*check_crossings=*/false, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twist
