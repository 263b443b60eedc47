#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "twist/edge_set.hpp"
#include "twist/matching.hpp"
#include "twist/max_plane.hpp"

namespace testutil {

inline twist::EdgeSet es(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<twist::Edge> edges;
  for (const auto& [a, b] : pairs) edges.push_back(twist::make_edge(a, b));
  return twist::EdgeSet(n, std::move(edges));
}

inline oracle::RawSet to_raw(const twist::EdgeSet& s) {
  oracle::RawSet out;
  for (const twist::Edge& e : s) out.emplace_back(e.lo, e.hi);
  return out;
}

inline std::vector<oracle::RawSet> to_raw_list(const std::vector<twist::MaxPlaneSubgraph>& items) {
  std::vector<oracle::RawSet> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(to_raw(item.edges()));
  return out;
}

inline std::vector<oracle::RawSet> to_raw_list(
    const std::vector<twist::PlanePerfectMatching>& items) {
  std::vector<oracle::RawSet> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(to_raw(item.edges()));
  return out;
}

}  // namespace testutil
