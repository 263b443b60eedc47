#include "twist/constructive.hpp"

#include <algorithm>

#include "twist/error.hpp"

namespace twist {

namespace {

// One level of the induction: starting from nodes.back(), performs `steps`
// exchanges at the pivot, appending each intermediate node and move. Raises
// ClaimViolation the moment a constructed step stops being a maximal plane
// subgraph containing `fixed`, or the exchange formula degenerates.
void run_pivot_iteration(int pivot, int steps, const EdgeSet& fixed,
                         std::vector<MaxPlaneSubgraph>& nodes, std::vector<ExchangeMove>& moves,
                         int& step_counter) {
  for (int i = 0; i < steps; ++i) {
    const MaxPlaneSubgraph& cur = nodes.back();
    const DegreeSignature sig = degree_signature(cur);
    const int degree = sig.forward_degree(pivot);
    if (degree == 0) {
      throw ClaimViolation(step_counter, cur.key(),
                           "pivot v" + std::to_string(pivot) +
                               " ran out of forward edges before the iteration finished");
    }
    const int far = sig.max_forward(pivot);
    // Added edge is (pivot+1, far-1); far <= pivot+2 would make it a loop or
    // an inverted pair, which the construction never repairs.
    if (far <= pivot + 2) {
      throw ClaimViolation(step_counter, cur.key(),
                           "exchange at pivot v" + std::to_string(pivot) +
                               " would add the degenerate edge (" + std::to_string(pivot + 1) +
                               ", " + std::to_string(far - 1) + ")");
    }
    const Edge removed = make_edge(pivot, far);
    const Edge added = make_edge(pivot + 1, far - 1);
    if (cur.contains(added)) {
      throw ClaimViolation(step_counter, cur.key(),
                           "exchange at pivot v" + std::to_string(pivot) + " adds " +
                               edge_label(added) + " which is already present");
    }
    const EdgeSet next_edges = cur.edges().without(removed).with(added);
    if (!next_edges.contains_all(fixed)) {
      throw ClaimViolation(step_counter, next_edges.key(),
                           "exchange removed an edge of the fixed set " + fixed.key());
    }
    MaxPlaneSubgraph next = [&]() -> MaxPlaneSubgraph {
      try {
        return MaxPlaneSubgraph(next_edges);
      } catch (const Error& e) {
        throw ClaimViolation(step_counter, next_edges.key(),
                             std::string("constructed step is not a maximal plane subgraph: ") +
                                 e.what());
      }
    }();
    if (degree_signature(next).forward_degree(pivot) != degree - 1) {
      throw ClaimViolation(step_counter, next.key(),
                           "exchange did not lower the forward degree at pivot v" +
                               std::to_string(pivot) + " by exactly one");
    }
    moves.push_back(ExchangeMove{removed, added});
    nodes.push_back(std::move(next));
    ++step_counter;
  }
}

}  // namespace

FlipPath fixed_edge_flip_path(const MaxPlaneSubgraph& from, const MaxPlaneSubgraph& to,
                              const EdgeSet& fixed) {
  const int n = from.n();
  if (to.n() != n || fixed.n() != n) {
    throw Error(ErrorCode::MismatchedAmbient, "endpoints and fixed set must share one ambient");
  }
  if (!is_plane(fixed)) {
    throw Error(ErrorCode::NotPlane, "fixed set " + fixed.key() + " has a crossing pair");
  }
  if (!from.edges().contains_all(fixed) || !to.edges().contains_all(fixed)) {
    throw Error(ErrorCode::FixedSetViolation,
                "fixed set " + fixed.key() + " is not contained in both endpoints");
  }

  // The path grows from both ends; whichever side has the larger forward
  // degree at the pivot iterates. The back segment is reversed when the ends
  // meet, so the exchange formula only ever runs in the degree-lowering
  // direction.
  std::vector<MaxPlaneSubgraph> front{from};
  std::vector<MaxPlaneSubgraph> back{to};
  std::vector<ExchangeMove> front_moves;
  std::vector<ExchangeMove> back_moves;
  int step_counter = 0;

  while (front.back() != back.back()) {
    const MaxPlaneSubgraph& a = front.back();
    const MaxPlaneSubgraph& b = back.back();
    const PairMeasure measure = pair_measure(a, b);
    if (measure.m == 0) {
      throw ClaimViolation(step_counter, a.key() + " vs " + b.key(),
                           "forward degrees agree at every vertex yet the subgraphs differ");
    }
    const int pivot = measure.k + 1;
    const DegreeSignature sig_a = degree_signature(a);
    const DegreeSignature sig_b = degree_signature(b);
    const bool advance_front = sig_a.forward_degree(pivot) > sig_b.forward_degree(pivot);
    const DegreeSignature& high = advance_front ? sig_a : sig_b;
    const DegreeSignature& low = advance_front ? sig_b : sig_a;
    if (low.forward_degree(pivot) == 0) {
      throw ClaimViolation(step_counter, (advance_front ? b : a).key(),
                           "pivot v" + std::to_string(pivot) +
                               " has no forward edge on the low side; the step count "
                               "maxForward difference is undefined");
    }
    const int steps = high.max_forward(pivot) - low.max_forward(pivot);
    if (steps <= 0) {
      throw ClaimViolation(step_counter, a.key() + " vs " + b.key(),
                           "forward degrees differ at pivot v" + std::to_string(pivot) +
                               " but maxForward does not exceed the low side");
    }
    run_pivot_iteration(pivot, steps, fixed, advance_front ? front : back,
                        advance_front ? front_moves : back_moves, step_counter);
    if (pair_measure(front.back(), back.back()).k < measure.k + 1) {
      throw ClaimViolation(step_counter, front.back().key() + " vs " + back.back().key(),
                           "pair measure did not increase after the pivot iteration at v" +
                               std::to_string(pivot));
    }
  }

  FlipPath path;
  path.n = n;
  path.constraint = fixed;
  path.constructive = true;
  path.nodes = std::move(front);
  path.moves = std::move(front_moves);
  for (int i = static_cast<int>(back.size()) - 2; i >= 0; --i) {
    path.moves.push_back(reversed(back_moves[static_cast<std::size_t>(i)]));
    path.nodes.push_back(back[static_cast<std::size_t>(i)]);
  }
  validate_flip_path(path);
  return path;
}

FlipPath matching_preserving_path(const MaxPlaneSubgraph& from, const MaxPlaneSubgraph& to,
                                  int matching_limit) {
  const int n = from.n();
  if (to.n() != n) {
    throw Error(ErrorCode::MismatchedAmbient, "endpoints must share one ambient");
  }
  if (n % 2 != 0) {
    throw Error(ErrorCode::OddVertexCount,
                "matching-preserving paths need even n, got n = " + std::to_string(n));
  }
  const std::vector<PlanePerfectMatching> from_matchings = perfect_matchings_of(from);
  if (from_matchings.empty()) {
    throw Error(ErrorCode::NoPerfectMatching,
                "subgraph " + from.key() + " contains no perfect matching");
  }
  const std::vector<PlanePerfectMatching> to_matchings = perfect_matchings_of(to);
  if (to_matchings.empty()) {
    throw Error(ErrorCode::NoPerfectMatching,
                "subgraph " + to.key() + " contains no perfect matching");
  }

  // Lexicographically least matchings keep the construction reproducible.
  const PlanePerfectMatching& matching_from = from_matchings.front();
  const PlanePerfectMatching& matching_to = to_matchings.front();
  const MatchingGraph mg = build_matching_graph(n, matching_limit);
  const std::vector<PlanePerfectMatching> matchings =
      matching_path(mg, matching_from, matching_to);

  // Anchors: from, one greedy extension per consecutive matching union, to.
  std::vector<MaxPlaneSubgraph> anchors;
  anchors.push_back(from);
  for (std::size_t i = 1; i < matchings.size(); ++i) {
    std::vector<Edge> merged(matchings[i - 1].edges().edges());
    const auto& step = matchings[i].edges().edges();
    merged.insert(merged.end(), step.begin(), step.end());
    anchors.push_back(complete_to_maximal(EdgeSet(n, std::move(merged))));
  }
  anchors.push_back(to);

  FlipPath path;
  path.n = n;
  path.constraint = EdgeSet(n);
  path.constructive = true;
  path.nodes.push_back(from);
  for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
    // anchors.size() == matchings.size() + 1, so segment i pins matching i.
    const FlipPath segment = fixed_edge_flip_path(anchors[i], anchors[i + 1], matchings[i].edges());
    for (std::size_t j = 1; j < segment.nodes.size(); ++j) {
      path.nodes.push_back(segment.nodes[j]);
      path.moves.push_back(segment.moves[j - 1]);
    }
  }
  validate_flip_path(path);
  return path;
}

}  // namespace twist
