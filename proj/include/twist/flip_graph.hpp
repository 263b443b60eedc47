#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twist/max_plane.hpp"

namespace twist {

// Single edge exchange: applying the move to G yields (G - removed) + added.
struct ExchangeMove {
  Edge removed;
  Edge added;

  friend constexpr auto operator<=>(const ExchangeMove&, const ExchangeMove&) = default;
};

ExchangeMove reversed(const ExchangeMove& m) noexcept;

// Throws when `removed` is absent or `added` already present.
EdgeSet apply_move(const EdgeSet& s, const ExchangeMove& m);

// Link between node indices a < b, witnessed by the move oriented a -> b.
// The witness is unique: two maximal plane subgraphs adjacent by exchange
// differ in exactly one edge each way.
struct FlipLink {
  int a = 0;
  int b = 0;
  ExchangeMove move;
};

// MP(T_n, F): nodes are the maximal plane subgraphs of T_n containing every
// edge of the constraint F, links are single edge exchanges. An empty F
// gives MP(T_n). Immutable once built.
class FlipGraph {
 public:
  FlipGraph(int n, EdgeSet constraint, std::vector<MaxPlaneSubgraph> nodes,
            std::vector<FlipLink> links);

  int n() const noexcept { return n_; }
  const EdgeSet& constraint() const noexcept { return constraint_; }
  int node_count() const noexcept { return static_cast<int>(nodes_.size()); }
  int link_count() const noexcept { return static_cast<int>(links_.size()); }
  const std::vector<MaxPlaneSubgraph>& nodes() const noexcept { return nodes_; }
  const MaxPlaneSubgraph& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
  const std::vector<FlipLink>& links() const noexcept { return links_; }
  const std::vector<int>& neighbors(int i) const {
    return adjacency_.at(static_cast<std::size_t>(i));
  }

  std::optional<int> index_of(const MaxPlaneSubgraph& g) const noexcept;

 private:
  int n_;
  EdgeSet constraint_;
  std::vector<MaxPlaneSubgraph> nodes_;  // sorted lexicographically by edge list
  std::vector<FlipLink> links_;          // sorted by (a, b)
  std::vector<std::vector<int>> adjacency_;
};

// All exchange moves out of g, ordered by (removed, added) lexicographically,
// each paired with the resulting maximal plane subgraph.
std::vector<std::pair<ExchangeMove, MaxPlaneSubgraph>> exchange_neighbors(
    const MaxPlaneSubgraph& g);

// Builds MP(T_n, F). Throws NotPlane for a crossing constraint and the same
// guards as enumerate_maximal_plane.
FlipGraph build_flip_graph(int n, const EdgeSet& fixed, int limit = kMaxPlaneDefaultLimit);

// Throws EmptyGraph for a graph with no nodes.
bool is_connected(const FlipGraph& fg);

// Walk through maximal plane subgraphs where consecutive nodes differ by the
// recorded single exchange. `constructive` records whether the path came out
// of the flip-path construction (true) or a graph search (false).
struct FlipPath {
  int n = 0;
  EdgeSet constraint;
  std::vector<MaxPlaneSubgraph> nodes;
  std::vector<ExchangeMove> moves;
  bool constructive = false;

  std::size_t length() const noexcept { return moves.size(); }
};

// Full contract check: non-empty, one move per step, every step applies
// exactly, every node contains the constraint. Node maximality holds by
// construction of MaxPlaneSubgraph. Throws InvalidPath / FixedSetViolation.
void validate_flip_path(const FlipPath& p);

// Shortest path by breadth-first search, ties broken toward smaller node
// indices. Returns nullopt when b is unreachable from a.
// Throws UnknownNode when either endpoint is not a node of fg.
std::optional<FlipPath> bfs_path(const FlipGraph& fg, const MaxPlaneSubgraph& a,
                                 const MaxPlaneSubgraph& b);

}  // namespace twist
