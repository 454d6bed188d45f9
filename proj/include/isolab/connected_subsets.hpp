#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "isolab/graph.hpp"

namespace isolab {

enum class Visit { Descend, Prune, Stop };

/// State handed to the visitor for each connected induced subset.
struct SubsetView {
  std::span<const Vertex> members;  // members[0] is the minimum vertex
  std::uint64_t boundary = 0;       // |boundary edges|
  std::uint64_t induced_edges = 0;  // edges inside the subset
  /// |N(w) ∩ subset| for every vertex w of the graph.
  std::span<const std::uint32_t> neighbors_inside;
};

struct EnumerationStats {
  std::uint64_t visits = 0;
  bool budget_exhausted = false;
  bool stopped = false;
};

/// Visits every connected induced subset of size <= max_size exactly once,
/// grown from its minimum vertex (ESU-style exclusive extension). Returning
/// Visit::Prune skips all supersets reached through the current subset;
/// Visit::Stop ends the enumeration. Stops with budget_exhausted once more than
/// max_visits subsets have been visited.
EnumerationStats for_each_connected_subset(const Graph& g, std::uint32_t max_size,
                                           std::uint64_t max_visits,
                                           const std::function<Visit(const SubsetView&)>& visit);

}  // namespace isolab
