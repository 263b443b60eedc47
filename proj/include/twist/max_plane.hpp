#pragma once

#include <compare>
#include <string>
#include <vector>

#include "twist/edge_set.hpp"

namespace twist {

// Enumeration guards. The default keeps interactive use snappy; the hard cap
// exists because the number of maximal plane subgraphs explodes with n.
inline constexpr int kMaxPlaneDefaultLimit = 9;
inline constexpr int kMaxPlaneHardLimit = 12;

// True iff no two edges of s cross under the twisted rule.
bool is_plane(const EdgeSet& s) noexcept;

// True iff s is plane and every edge of T_n outside s crosses a member.
bool is_maximal_plane(const EdgeSet& s) noexcept;

// A plane subgraph of T_n that no edge of T_n can extend. The constructor
// validates both invariants, so every live value is trustworthy.
class MaxPlaneSubgraph {
 public:
  explicit MaxPlaneSubgraph(EdgeSet edges);

  int n() const noexcept { return edges_.n(); }
  const EdgeSet& edges() const noexcept { return edges_; }
  bool contains(const Edge& e) const noexcept { return edges_.contains(e); }
  std::string key() const { return edges_.key(); }

  friend auto operator<=>(const MaxPlaneSubgraph&, const MaxPlaneSubgraph&) = default;

 private:
  EdgeSet edges_;
};

// Deterministic greedy completion: scans the edges of T_n in lexicographic
// order and adds each one that crosses nothing already present.
// Throws NotPlane when the input is not plane.
MaxPlaneSubgraph complete_to_maximal(const EdgeSet& s);

// All maximal plane subgraphs of T_n, sorted lexicographically by edge list.
// Maximal plane subgraphs are exactly the maximal independent sets of the
// crossing-conflict graph on E(T_n); the enumeration walks that graph with a
// pivoted Bron-Kerbosch over the complement.
// Throws OutOfRange for n < 2 and LimitExceeded above min(limit, hard cap).
std::vector<MaxPlaneSubgraph> enumerate_maximal_plane(int n, int limit = kMaxPlaneDefaultLimit);

}  // namespace twist
