#pragma once

// Brute-force reference computations used only by tests. Everything here is
// written directly against the index definitions and stays independent of the
// library's enumerators and searches, so agreement between the two routes is
// meaningful.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using RawEdge = std::pair<int, int>;  // (lo, hi), lo < hi
using RawSet = std::vector<RawEdge>;  // sorted

inline bool crosses_raw(const RawEdge& e, const RawEdge& f) {
  return (e.first < f.first && f.second < e.second) ||
         (f.first < e.first && e.second < f.second);
}

inline RawSet all_edges_raw(int n) {
  RawSet out;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

// All maximal plane subgraphs of T_n by testing every subset of E(T_n).
// Feasible through n = 6 (2^15 subsets).
inline std::vector<RawSet> max_plane_by_subsets(int n) {
  const RawSet edges = all_edges_raw(n);
  const int count = static_cast<int>(edges.size());
  std::vector<std::uint32_t> conflict(edges.size(), 0);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j && crosses_raw(edges[static_cast<std::size_t>(i)], edges[static_cast<std::size_t>(j)]))
        conflict[static_cast<std::size_t>(i)] |= (1u << j);

  std::vector<RawSet> out;
  for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
    bool plane = true;
    for (int i = 0; i < count && plane; ++i)
      if ((mask & (1u << i)) && (conflict[static_cast<std::size_t>(i)] & mask)) plane = false;
    if (!plane) continue;
    bool maximal = true;
    for (int i = 0; i < count && maximal; ++i)
      if (!(mask & (1u << i)) && !(conflict[static_cast<std::size_t>(i)] & mask)) maximal = false;
    if (!maximal) continue;
    RawSet set;
    for (int i = 0; i < count; ++i)
      if (mask & (1u << i)) set.push_back(edges[static_cast<std::size_t>(i)]);
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All maximal plane subgraphs by growing every branch from the empty set,
// visiting each plane subgraph once. Feasible through n = 7 (masks fit in
// 32 bits, E(T_7) = 21).
inline std::vector<RawSet> max_plane_by_growth(int n) {
  const RawSet edges = all_edges_raw(n);
  const int count = static_cast<int>(edges.size());
  std::vector<std::uint32_t> conflict(edges.size(), 0);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j && crosses_raw(edges[static_cast<std::size_t>(i)], edges[static_cast<std::size_t>(j)]))
        conflict[static_cast<std::size_t>(i)] |= (1u << j);

  std::vector<std::uint32_t> maximal;
  std::vector<char> visited(std::size_t{1} << count, 0);
  std::vector<std::uint32_t> stack{0};
  visited[0] = 1;
  while (!stack.empty()) {
    const std::uint32_t mask = stack.back();
    stack.pop_back();
    bool grew = false;
    for (int i = 0; i < count; ++i) {
      if (mask & (1u << i)) continue;
      if (conflict[static_cast<std::size_t>(i)] & mask) continue;
      grew = true;
      const std::uint32_t child = mask | (1u << i);
      if (!visited[child]) {
        visited[child] = 1;
        stack.push_back(child);
      }
    }
    if (!grew) maximal.push_back(mask);
  }

  std::vector<RawSet> out;
  out.reserve(maximal.size());
  for (std::uint32_t mask : maximal) {
    RawSet set;
    for (int i = 0; i < count; ++i)
      if (mask & (1u << i)) set.push_back(edges[static_cast<std::size_t>(i)]);
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All perfect matchings of K_n by recursive pairing, filtered to the plane
// ones. (n-1)!! candidates; fine through n = 12.
inline std::vector<RawSet> plane_matchings_by_filter(int n) {
  std::vector<RawSet> out;
  RawSet current;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  const auto recurse = [&](const auto& self) -> void {
    int v = 0;
    for (int i = 1; i <= n; ++i) {
      if (!used[static_cast<std::size_t>(i)]) {
        v = i;
        break;
      }
    }
    if (v == 0) {
      bool plane = true;
      for (std::size_t i = 0; i < current.size() && plane; ++i)
        for (std::size_t j = i + 1; j < current.size() && plane; ++j)
          if (crosses_raw(current[i], current[j])) plane = false;
      if (plane) out.push_back(current);
      return;
    }
    used[static_cast<std::size_t>(v)] = 1;
    for (int w = v + 1; w <= n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      current.emplace_back(v, w);
      self(self);
      current.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
    used[static_cast<std::size_t>(v)] = 0;
  };
  recurse(recurse);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
