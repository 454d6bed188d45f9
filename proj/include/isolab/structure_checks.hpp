#pragma once

#include <cstdint>
#include <optional>

#include "isolab/graph.hpp"

namespace isolab {

/// Vertices of degree below 4(d + 6), with the two distance properties the
/// small-set argument relies on.
struct SmallSetReport {
  VertexSet members;
  bool independent = true;
  /// No vertex of the graph is adjacent to two members.
  bool no_common_neighbors = true;
  std::uint32_t d_used = 0;
};

std::uint32_t small_degree_threshold(std::uint32_t d);

SmallSetReport small_set(const Graph& g, std::uint32_t d);

/// SMALL is independent and no two SMALL vertices share a neighbor, i.e. all
/// pairwise distances inside SMALL are at least 3.
bool check_claim1(const Graph& g, std::uint32_t d);

inline constexpr std::uint64_t kDensityVisitLimit = 10'000'000;

/// Some S with |S| = k <= k_max and more than 2k induced edges, or nullopt.
/// Only connected sets inside the 3-core are searched: a violator always has a
/// violating component, and peeling its vertices of degree <= 2 keeps it a
/// violator. Throws DomainError if k_max > n and ResourceError when more
/// than `visit_limit` connected subsets would be visited.
std::optional<VertexSet> check_density(const Graph& g, std::uint32_t k_max,
                                       std::uint64_t visit_limit = kDensityVisitLimit);

struct BadSetReport {
  VertexSet set;
  std::uint32_t d_used = 0;
  /// d|S| - |∂S|; positive iff the set is bad.
  std::int64_t deficiency = 0;
  /// Evaluated only for |S| <= kElementaryCap.
  std::optional<bool> elementary;

  bool bad() const noexcept { return deficiency > 0; }
};

inline constexpr std::size_t kElementaryCap = 20;

/// Throws DomainError for an empty set.
BadSetReport is_bad(const Graph& g, const VertexSet& s, std::uint32_t d);

/// s is bad and no proper nonempty subset is. Throws ResourceError when
/// |s| > kElementaryCap.
bool is_elementary_bad(const Graph& g, const VertexSet& s, std::uint32_t d);

}  // namespace isolab
