#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "twist/flip_graph.hpp"
#include "twist/matching.hpp"

namespace twist {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// A suite passes iff every constituent check passes. wall_ms is informational
// and deliberately kept out of the serialized report so that reports stay
// byte-identical across runs.
struct VerificationReport {
  std::string suite;
  int n_max = 0;
  std::vector<CheckResult> checks;
  std::int64_t wall_ms = 0;

  bool passed() const noexcept;
};

nlohmann::json report_to_json(const VerificationReport& report);

// Exhaustive pair scan for every n up to n_max: symmetry of the crossing
// predicate, shared endpoints never crossing, and agreement with the
// strict-containment characterization.
VerificationReport verify_crossing(int n_max);

// Matching graph connected for every even n in [4, n_max].
VerificationReport verify_theorem1(int n_max, int matching_limit = kMatchingDefaultLimit);

// For every n in [4, n_max] and every ordered pair (R, Q) of maximal plane
// subgraphs with F = E(R) ∩ E(Q): the constructive path is valid, endpoint
// exact, F-containing, free of claim violations. For n <= 6 the existence of
// each path is cross-checked against breadth-first search in MP(T_n, F).
VerificationReport verify_theorem2(int n_max, int max_plane_limit = kMaxPlaneDefaultLimit);

// For every even n in [4, n_max] and every ordered pair of matching-containing
// maximal plane subgraphs: the matching-preserving path is valid and every
// node keeps a non-empty perfect matching set; connectivity of the induced
// subgraph is confirmed independently by search.
VerificationReport verify_theorem3(int n_max, int max_plane_limit = kMaxPlaneDefaultLimit,
                                   int matching_limit = kMatchingDefaultLimit);

// Existence of a maximal plane subgraph of T_6 without any perfect matching.
// Requires n_max >= 6.
VerificationReport verify_fig3(int n_max, int max_plane_limit = kMaxPlaneDefaultLimit);

// All of the above with check names prefixed by their suite. The fig3 suite
// joins only when n_max >= 6.
VerificationReport verify_all(int n_max, int max_plane_limit = kMaxPlaneDefaultLimit,
                              int matching_limit = kMatchingDefaultLimit);

}  // namespace twist
