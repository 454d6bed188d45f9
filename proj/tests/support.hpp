#pragma once

#include <cstdint>

#include "isolab/graph.hpp"
#include "naive.hpp"

namespace isolab::test {

inline oracle::EdgePairs pairs_of(const Graph& g) {
  oracle::EdgePairs out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t mask = 0;
  s.for_each([&](Vertex v) { mask |= std::uint64_t{1} << v; });
  return mask;
}

inline VertexSet set_of_mask(Vertex n, std::uint64_t mask) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if ((mask >> v) & 1u) s.insert(v);
  return s;
}

}  // namespace isolab::test
