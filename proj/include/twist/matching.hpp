#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "twist/max_plane.hpp"

namespace twist {

inline constexpr int kMatchingDefaultLimit = 12;
inline constexpr int kMatchingHardLimit = 16;

// Perfect matching of T_n (n even) whose edges are pairwise non-crossing.
// The constructor validates the cover and planarity.
class PlanePerfectMatching {
 public:
  explicit PlanePerfectMatching(EdgeSet edges);

  int n() const noexcept { return edges_.n(); }
  const EdgeSet& edges() const noexcept { return edges_; }
  std::string key() const { return edges_.key(); }

  friend auto operator<=>(const PlanePerfectMatching&, const PlanePerfectMatching&) = default;

 private:
  EdgeSet edges_;
};

// Adjacency rule of the matching graph: the symmetric difference is a single
// plane cycle with four edges. Symmetric and irreflexive.
// Throws MismatchedAmbient when the ambient vertex counts differ.
bool matchings_adjacent(const PlanePerfectMatching& l, const PlanePerfectMatching& n);

struct MatchingLink {
  int a = 0;
  int b = 0;
};

// The matching graph of T_n: nodes are the plane perfect matchings, links by
// matchings_adjacent. Immutable once built.
class MatchingGraph {
 public:
  MatchingGraph(int n, std::vector<PlanePerfectMatching> nodes, std::vector<MatchingLink> links);

  int n() const noexcept { return n_; }
  int node_count() const noexcept { return static_cast<int>(nodes_.size()); }
  int link_count() const noexcept { return static_cast<int>(links_.size()); }
  const std::vector<PlanePerfectMatching>& nodes() const noexcept { return nodes_; }
  const PlanePerfectMatching& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
  const std::vector<MatchingLink>& links() const noexcept { return links_; }
  const std::vector<int>& neighbors(int i) const {
    return adjacency_.at(static_cast<std::size_t>(i));
  }

  std::optional<int> index_of(const PlanePerfectMatching& m) const noexcept;

 private:
  int n_;
  std::vector<PlanePerfectMatching> nodes_;
  std::vector<MatchingLink> links_;
  std::vector<std::vector<int>> adjacency_;
};

// All plane perfect matchings of T_n in lexicographic order.
// Throws OddVertexCount for odd n, OutOfRange for n < 2, LimitExceeded above
// min(limit, hard cap).
std::vector<PlanePerfectMatching> enumerate_plane_perfect_matchings(
    int n, int limit = kMatchingDefaultLimit);

MatchingGraph build_matching_graph(int n, int limit = kMatchingDefaultLimit);

bool is_connected(const MatchingGraph& mg);

// Shortest matching-graph path, ties toward smaller node indices. A missing
// path raises NoPath: at the scales this library enumerates, that would
// falsify the connectivity of the matching graph and must surface loudly.
std::vector<PlanePerfectMatching> matching_path(const MatchingGraph& mg,
                                                const PlanePerfectMatching& from,
                                                const PlanePerfectMatching& to);

// Perfect matchings using only edges of g, in lexicographic order; empty when
// none exists. Throws OddVertexCount for odd ambient.
std::vector<PlanePerfectMatching> perfect_matchings_of(const MaxPlaneSubgraph& g);

}  // namespace twist
