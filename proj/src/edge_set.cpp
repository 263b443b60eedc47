#include "twist/edge_set.hpp"

#include <algorithm>
#include <iterator>

#include "twist/error.hpp"

namespace twist {

EdgeSet::EdgeSet(int n) : n_(n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "ambient vertex count must be non-negative");
}

EdgeSet::EdgeSet(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "ambient vertex count must be non-negative");
  for (const Edge& e : edges_) {
    if (e.lo < 1 || e.hi <= e.lo || e.hi > n_) {
      throw Error(ErrorCode::OutOfRange,
                  "edge " + edge_label(e) + " is not a canonical edge of T_" + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool EdgeSet::contains_all(const EdgeSet& other) const noexcept {
  return std::includes(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end());
}

EdgeSet EdgeSet::with(const Edge& e) const {
  if (e.lo < 1 || e.hi <= e.lo || e.hi > n_) {
    throw Error(ErrorCode::OutOfRange,
                "edge " + edge_label(e) + " is not a canonical edge of T_" + std::to_string(n_));
  }
  EdgeSet out = *this;
  auto pos = std::lower_bound(out.edges_.begin(), out.edges_.end(), e);
  if (pos == out.edges_.end() || *pos != e) out.edges_.insert(pos, e);
  return out;
}

EdgeSet EdgeSet::without(const Edge& e) const {
  EdgeSet out = *this;
  auto pos = std::lower_bound(out.edges_.begin(), out.edges_.end(), e);
  if (pos != out.edges_.end() && *pos == e) out.edges_.erase(pos);
  return out;
}

std::string EdgeSet::key() const {
  if (edges_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i > 0) out += ",";
    out += edge_label(edges_[i]);
  }
  return out;
}

EdgeSet edge_set_intersection(const EdgeSet& a, const EdgeSet& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorCode::MismatchedAmbient,
                "edge sets live in T_" + std::to_string(a.n()) + " and T_" + std::to_string(b.n()));
  }
  std::vector<Edge> shared;
  std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                        std::back_inserter(shared));
  return EdgeSet(a.n(), std::move(shared));
}

std::vector<Edge> all_edges(int n) {
  std::vector<Edge> out;
  if (n < 2) return out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(Edge{i, j});
  return out;
}

}  // namespace twist
