#pragma once

#include <compare>
#include <string>
#include <vector>

#include "twist/edge.hpp"

namespace twist {

// Sorted duplicate-free set of edges over the ambient vertex range [1, n].
// Construction canonicalizes (sorts, drops duplicates) and rejects endpoints
// outside the range. Values are immutable; "mutators" return copies.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int n);
  EdgeSet(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  bool contains(const Edge& e) const noexcept;
  bool contains_all(const EdgeSet& other) const noexcept;

  EdgeSet with(const Edge& e) const;
  EdgeSet without(const Edge& e) const;

  // "1-2,1-3,2-3"; empty set renders as "{}".
  std::string key() const;

  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }

  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// The C(n,2) edges of T_n in lexicographic (lo, hi) order.
std::vector<Edge> all_edges(int n);

// Throws MismatchedAmbient when the two sets disagree on n.
EdgeSet edge_set_intersection(const EdgeSet& a, const EdgeSet& b);

}  // namespace twist
