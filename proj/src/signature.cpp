#include "twist/signature.hpp"

#include "twist/error.hpp"

namespace twist {

DegreeSignature degree_signature(const MaxPlaneSubgraph& g) {
  DegreeSignature sig;
  sig.n = g.n();
  sig.forward.assign(static_cast<std::size_t>(sig.n), {});
  for (const Edge& e : g.edges()) {
    sig.forward[static_cast<std::size_t>(e.lo - 1)].push_back(e.hi);
  }
  // Edge lists are sorted by (lo, hi), so each forward row is already sorted.
  return sig;
}

PairMeasure pair_measure(const MaxPlaneSubgraph& r, const MaxPlaneSubgraph& q) {
  if (r.n() != q.n()) {
    throw Error(ErrorCode::MismatchedAmbient,
                "subgraphs live in T_" + std::to_string(r.n()) + " and T_" + std::to_string(q.n()));
  }
  const DegreeSignature sr = degree_signature(r);
  const DegreeSignature sq = degree_signature(q);
  PairMeasure out;
  out.k = 0;
  for (int i = 1; i <= r.n() - 1; ++i) {
    if (sr.forward_degree(i) != sq.forward_degree(i)) break;
    out.k = i;
  }
  out.m = r.n() - 1 - out.k;
  return out;
}

}  // namespace twist
