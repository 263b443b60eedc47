#pragma once

#include <compare>
#include <string>

namespace twist {

// Vertices of the twisted graph T_n are indexed 1..n, left to right. An edge
// is stored with lo < hi; make_edge normalizes argument order.
struct Edge {
  int lo = 0;
  int hi = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Throws Error(Loop) for a == b and Error(OutOfRange) for indices < 1.
Edge make_edge(int a, int b);

// Crossing rule of the twisted drawing: (i,j) and (s,t) cross exactly when
// i < s < t < j or s < i < j < t, i.e. one index interval strictly contains
// the other. Edges sharing an endpoint never cross.
bool crosses(const Edge& e, const Edge& f) noexcept;

// "2-5"
std::string edge_label(const Edge& e);

}  // namespace twist
