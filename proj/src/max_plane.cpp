#include "twist/max_plane.hpp"

#include <algorithm>
#include <bitset>

#include "twist/error.hpp"

namespace twist {

bool is_plane(const EdgeSet& s) noexcept {
  const auto& edges = s.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (crosses(edges[i], edges[j])) return false;
  return true;
}

bool is_maximal_plane(const EdgeSet& s) noexcept {
  if (!is_plane(s)) return false;
  for (const Edge& candidate : all_edges(s.n())) {
    if (s.contains(candidate)) continue;
    bool blocked = false;
    for (const Edge& member : s) {
      if (crosses(candidate, member)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return false;
  }
  return true;
}

MaxPlaneSubgraph::MaxPlaneSubgraph(EdgeSet edges) : edges_(std::move(edges)) {
  if (!is_plane(edges_)) {
    throw Error(ErrorCode::NotPlane, "edge set " + edges_.key() + " has a crossing pair");
  }
  if (!is_maximal_plane(edges_)) {
    throw Error(ErrorCode::NotMaximal,
                "edge set " + edges_.key() + " is plane but not maximal in T_" +
                    std::to_string(edges_.n()));
  }
}

MaxPlaneSubgraph complete_to_maximal(const EdgeSet& s) {
  if (!is_plane(s)) {
    throw Error(ErrorCode::NotPlane, "cannot complete non-plane edge set " + s.key());
  }
  std::vector<Edge> current(s.edges());
  for (const Edge& candidate : all_edges(s.n())) {
    bool blocked = false;
    for (const Edge& member : current) {
      if (crosses(candidate, member)) {
        blocked = true;
        break;
      }
    }
    if (!blocked && !std::binary_search(current.begin(), current.end(), candidate)) {
      current.insert(std::upper_bound(current.begin(), current.end(), candidate), candidate);
    }
  }
  return MaxPlaneSubgraph(EdgeSet(s.n(), std::move(current)));
}

namespace {

// Bitset wide enough for C(12,2) = 66 edges, the hard enumeration cap.
using EdgeBits = std::bitset<128>;

// Pivoted Bron-Kerbosch for maximal cliques of the compatibility graph
// (complement of the crossing-conflict graph).
void bron_kerbosch(const std::vector<EdgeBits>& compat, int edge_count, EdgeBits r, EdgeBits p,
                   EdgeBits x, std::vector<EdgeBits>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (int u = 0; u < edge_count; ++u) {
    if (!p[u] && !x[u]) continue;
    std::size_t score = (p & compat[u]).count();
    if (pivot < 0 || score > best) {
      pivot = u;
      best = score;
    }
  }
  EdgeBits candidates = p & ~compat[pivot];
  for (int v = 0; v < edge_count; ++v) {
    if (!candidates[v]) continue;
    EdgeBits rv = r;
    rv.set(v);
    bron_kerbosch(compat, edge_count, rv, p & compat[v], x & compat[v], out);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

std::vector<MaxPlaneSubgraph> enumerate_maximal_plane(int n, int limit) {
  if (n < 2) {
    throw Error(ErrorCode::OutOfRange,
                "T_n needs at least 2 vertices, got n = " + std::to_string(n));
  }
  const int effective = std::min(limit, kMaxPlaneHardLimit);
  if (n > effective) {
    throw Error(ErrorCode::LimitExceeded,
                "n = " + std::to_string(n) + " exceeds the enumeration guard " +
                    std::to_string(effective) + " (hard cap " +
                    std::to_string(kMaxPlaneHardLimit) + ")");
  }

  const std::vector<Edge> edges = all_edges(n);
  const int edge_count = static_cast<int>(edges.size());
  std::vector<EdgeBits> compat(edges.size());
  for (int i = 0; i < edge_count; ++i)
    for (int j = 0; j < edge_count; ++j)
      if (i != j && !crosses(edges[i], edges[j])) compat[i].set(j);

  EdgeBits p;
  for (int i = 0; i < edge_count; ++i) p.set(i);
  std::vector<EdgeBits> cliques;
  bron_kerbosch(compat, edge_count, EdgeBits{}, p, EdgeBits{}, cliques);

  std::vector<MaxPlaneSubgraph> out;
  out.reserve(cliques.size());
  for (const EdgeBits& bits : cliques) {
    std::vector<Edge> members;
    for (int i = 0; i < edge_count; ++i)
      if (bits[i]) members.push_back(edges[i]);
    out.emplace_back(EdgeSet(n, std::move(members)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twist
