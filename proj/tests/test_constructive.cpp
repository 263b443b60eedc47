#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "test_util.hpp"
#include "twist/constructive.hpp"
#include "twist/error.hpp"

using namespace twist;
using testutil::es;

namespace {

MaxPlaneSubgraph t4_minus_14() {
  return MaxPlaneSubgraph(es(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
}

MaxPlaneSubgraph t4_minus_23() {
  return MaxPlaneSubgraph(es(4, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

}  // namespace

TEST_CASE("degree_signature fixtures") {
  const DegreeSignature a = degree_signature(t4_minus_14());
  CHECK(a.forward_degree(1) == 2);
  CHECK(a.forward_degree(2) == 2);
  CHECK(a.forward_degree(3) == 1);
  CHECK(a.max_forward(1) == 3);
  CHECK(a.max_forward(2) == 4);
  CHECK(a.max_forward(3) == 4);

  const DegreeSignature b = degree_signature(t4_minus_23());
  CHECK(b.forward_degree(1) == 3);
  CHECK(b.forward_degree(2) == 1);
  CHECK(b.forward_degree(3) == 1);
  CHECK(b.max_forward(1) == 4);
  CHECK(b.max_forward(2) == 4);
  CHECK(b.max_forward(3) == 4);

  const DegreeSignature tiny = degree_signature(MaxPlaneSubgraph(es(2, {{1, 2}})));
  CHECK(tiny.forward_degree(1) == 1);
  CHECK(tiny.max_forward(1) == 2);
}

TEST_CASE("pair_measure fixtures") {
  const PairMeasure same = pair_measure(t4_minus_14(), t4_minus_14());
  CHECK(same.k == 3);
  CHECK(same.m == 0);

  const PairMeasure diff = pair_measure(t4_minus_14(), t4_minus_23());
  CHECK(diff.k == 0);
  CHECK(diff.m == 3);

  // These two T_5 subgraphs agree on the forward degree of v1 only.
  const MaxPlaneSubgraph r(es(5, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}));
  const MaxPlaneSubgraph q(es(5, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {4, 5}}));
  const PairMeasure prefix = pair_measure(r, q);
  CHECK(prefix.k == 1);
  CHECK(prefix.m == 3);

  CHECK_THROWS_AS(pair_measure(t4_minus_14(), MaxPlaneSubgraph(es(2, {{1, 2}}))), Error);
}

TEST_CASE("pair measure vanishes exactly on equal subgraphs, n <= 6") {
  for (int n = 4; n <= 6; ++n) {
    const auto subgraphs = enumerate_maximal_plane(n);
    for (const auto& r : subgraphs) {
      for (const auto& q : subgraphs) {
        CHECK((pair_measure(r, q).m == 0) == (r == q));
      }
    }
  }
}

TEST_CASE("fixed_edge_flip_path single-step fixture at n = 4") {
  const EdgeSet fixed = es(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  const FlipPath path = fixed_edge_flip_path(t4_minus_23(), t4_minus_14(), fixed);
  REQUIRE(path.length() == 1);
  CHECK(path.nodes.front() == t4_minus_23());
  CHECK(path.nodes.back() == t4_minus_14());
  CHECK(path.moves.front().removed == Edge{1, 4});
  CHECK(path.moves.front().added == Edge{2, 3});
  CHECK(path.constructive);
}

TEST_CASE("fixed_edge_flip_path with equal endpoints") {
  const FlipPath path = fixed_edge_flip_path(t4_minus_14(), t4_minus_14(), EdgeSet(4));
  CHECK(path.length() == 0);
  CHECK(path.nodes.size() == 1);
}

TEST_CASE("fixed_edge_flip_path rejects a fixed set outside the endpoints") {
  CHECK_THROWS_AS(fixed_edge_flip_path(t4_minus_14(), t4_minus_23(), es(4, {{1, 4}})), Error);
  try {
    fixed_edge_flip_path(t4_minus_14(), t4_minus_23(), es(4, {{1, 4}}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FixedSetViolation);
  }
  CHECK_THROWS_AS(
      fixed_edge_flip_path(t4_minus_14(), MaxPlaneSubgraph(es(2, {{1, 2}})), EdgeSet(4)), Error);
}

TEST_CASE("constructive paths are valid and agree with search for every pair, n <= 5") {
  for (int n = 4; n <= 5; ++n) {
    const auto subgraphs = enumerate_maximal_plane(n);
    for (const auto& r : subgraphs) {
      for (const auto& q : subgraphs) {
        const EdgeSet fixed = edge_set_intersection(r.edges(), q.edges());
        const FlipPath path = fixed_edge_flip_path(r, q, fixed);
        validate_flip_path(path);
        CHECK(path.nodes.front() == r);
        CHECK(path.nodes.back() == q);
        for (const auto& node : path.nodes) CHECK(node.edges().contains_all(fixed));
        const FlipGraph fg = build_flip_graph(n, fixed);
        CHECK(bfs_path(fg, r, q).has_value());
      }
    }
  }
}

TEST_CASE("a fixed set smaller than the intersection is accepted") {
  const auto subgraphs = enumerate_maximal_plane(5);
  const FlipPath path = fixed_edge_flip_path(subgraphs.front(), subgraphs.back(), es(5, {{1, 2}}));
  validate_flip_path(path);
  for (const auto& node : path.nodes) CHECK(node.contains(Edge{1, 2}));
}

TEST_CASE("matching_preserving_path fixture at n = 4") {
  const FlipPath path = matching_preserving_path(t4_minus_14(), t4_minus_23());
  validate_flip_path(path);
  CHECK(path.nodes.front() == t4_minus_14());
  CHECK(path.nodes.back() == t4_minus_23());
  for (const auto& node : path.nodes) CHECK_FALSE(perfect_matchings_of(node).empty());
}

TEST_CASE("matching_preserving_path with equal endpoints") {
  const FlipPath path = matching_preserving_path(t4_minus_14(), t4_minus_14());
  CHECK(path.length() == 0);
}

TEST_CASE("matching_preserving_path rejects endpoints without matchings") {
  const MaxPlaneSubgraph double_star(
      es(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}}));
  REQUIRE(perfect_matchings_of(double_star).empty());
  const auto subgraphs = enumerate_maximal_plane(6);
  const auto other_it =
      std::find_if(subgraphs.begin(), subgraphs.end(),
                   [](const MaxPlaneSubgraph& g) { return !perfect_matchings_of(g).empty(); });
  REQUIRE(other_it != subgraphs.end());
  const MaxPlaneSubgraph& other = *other_it;
  try {
    matching_preserving_path(double_star, other);
    FAIL("precondition did not fire");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoPerfectMatching);
  }
  CHECK_THROWS_AS(matching_preserving_path(MaxPlaneSubgraph(es(3, {{1, 2}, {1, 3}, {2, 3}})),
                                           MaxPlaneSubgraph(es(3, {{1, 2}, {1, 3}, {2, 3}}))),
                  Error);
}

TEST_CASE("matching-preserving paths stay inside the matching-containing subgraphs at n = 6") {
  std::vector<MaxPlaneSubgraph> with_matching;
  for (const auto& g : enumerate_maximal_plane(6)) {
    if (!perfect_matchings_of(g).empty()) with_matching.push_back(g);
  }
  REQUIRE(with_matching.size() == 13);
  for (const auto& s : with_matching) {
    for (const auto& r : with_matching) {
      const FlipPath path = matching_preserving_path(s, r);
      validate_flip_path(path);
      CHECK(path.nodes.front() == s);
      CHECK(path.nodes.back() == r);
      for (const auto& node : path.nodes) CHECK_FALSE(perfect_matchings_of(node).empty());
    }
  }
}
