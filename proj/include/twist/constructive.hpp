#pragma once

#include "twist/flip_graph.hpp"
#include "twist/matching.hpp"
#include "twist/signature.hpp"

namespace twist {

// Constructs a flip path from `from` to `to` through maximal plane subgraphs
// that all contain `fixed`, by the degree-signature induction: at the first
// vertex p where the forward degrees disagree, the side with the larger
// degree repeatedly exchanges (p, maxForward(p)) for (p+1, maxForward(p)-1)
// until the degrees at p meet, then the induction recurses on the next
// disagreement. Every constructed step is validated for planarity, maximality
// and containment of `fixed`; a failed step raises ClaimViolation with the
// step index and the offending edge set instead of repairing anything.
//
// Preconditions: same ambient, fixed plane and contained in both endpoints
// (FixedSetViolation otherwise).
FlipPath fixed_edge_flip_path(const MaxPlaneSubgraph& from, const MaxPlaneSubgraph& to,
                              const EdgeSet& fixed);

// Constructs a flip path from `from` to `to` in which every node contains at
// least one perfect matching: pick the lexicographically least perfect
// matchings M(from) and M(to), walk a shortest matching-graph path
// M_0, ..., M_k between them, extend each union M_{i-1} ∪ M_i greedily to a
// maximal plane subgraph, and splice the fixed_edge_flip_path segments that
// pin M_i between consecutive anchors.
//
// Throws NoPerfectMatching when either endpoint has none, OddVertexCount for
// odd ambients, and propagates ClaimViolation from the segments.
FlipPath matching_preserving_path(const MaxPlaneSubgraph& from, const MaxPlaneSubgraph& to,
                                  int matching_limit = kMatchingDefaultLimit);

}  // namespace twist
