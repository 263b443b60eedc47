#pragma once

#include <vector>

#include "twist/max_plane.hpp"

namespace twist {

// Forward-neighbor data of a maximal plane subgraph: for each vertex i, the
// sorted indices j > i with (i, j) present.
struct DegreeSignature {
  int n = 0;
  std::vector<std::vector<int>> forward;  // forward[i - 1] belongs to vertex i

  int forward_degree(int i) const {
    return static_cast<int>(forward.at(static_cast<std::size_t>(i - 1)).size());
  }
  // Largest forward neighbor of vertex i; 0 when the forward set is empty.
  int max_forward(int i) const {
    const auto& row = forward.at(static_cast<std::size_t>(i - 1));
    return row.empty() ? 0 : row.back();
  }
};

DegreeSignature degree_signature(const MaxPlaneSubgraph& g);

// k = length of the longest prefix of vertices 1..k on which the forward
// degrees of the two graphs agree (0 when they already differ at vertex 1),
// m = n - 1 - k. m reaching 0 is the equality case.
struct PairMeasure {
  int k = 0;
  int m = 0;
};

PairMeasure pair_measure(const MaxPlaneSubgraph& r, const MaxPlaneSubgraph& q);

}  // namespace twist
