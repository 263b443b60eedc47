#include "twist/edge.hpp"

#include "twist/error.hpp"

namespace twist {

Edge make_edge(int a, int b) {
  if (a == b) {
    throw Error(ErrorCode::Loop,
                "edge endpoints must differ, got (" + std::to_string(a) + ", " +
                    std::to_string(b) + ")");
  }
  if (a < 1 || b < 1) {
    throw Error(ErrorCode::OutOfRange,
                "vertex indices are 1-based, got (" + std::to_string(a) + ", " +
                    std::to_string(b) + ")");
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

bool crosses(const Edge& e, const Edge& f) noexcept {
  return (e.lo < f.lo && f.hi < e.hi) || (f.lo < e.lo && e.hi < f.hi);
}

std::string edge_label(const Edge& e) {
  return std::to_string(e.lo) + "-" + std::to_string(e.hi);
}

}  // namespace twist
