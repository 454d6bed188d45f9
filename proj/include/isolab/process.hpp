#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "isolab/graph.hpp"
#include "isolab/rng.hpp"

namespace isolab {

/// Number of unordered vertex pairs, n(n-1)/2.
constexpr std::uint64_t pair_count(Vertex n) {
  return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
}

/// Colex pair indexing: (u, v) with u < v maps to v(v-1)/2 + u.
std::uint64_t pair_index(Edge e);
Edge pair_at(std::uint64_t index);

/// G(n, p): every pair independently with probability p.
Graph sample_gnp(Vertex n, double p, std::uint64_t seed, GraphOptions options = {});

/// G(n, M): uniform over graphs with exactly m edges.
Graph sample_gnm(Vertex n, std::uint64_t m, std::uint64_t seed, GraphOptions options = {});

class PairStream;

/// A random graph process: a uniform ordering of all N = n(n-1)/2 pairs.
/// G(t) is the graph formed by the first t pairs.
///
/// For n <= kMaterializeCap the ordering is stored. Above it the ordering is
/// regenerated on demand from the seed by a sparse Fisher-Yates walk, which
/// yields the same sequence the stored shuffle would.
class ProcessTrace {
 public:
  static constexpr Vertex kMaterializeCap = 4096;

  /// Trace from an explicit ordering. Throws DomainError unless the ordering is
  /// a permutation of all pairs.
  static ProcessTrace from_order(Vertex n, std::vector<Edge> order);

  Vertex n() const noexcept { return n_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t num_pairs() const noexcept { return pair_count(n_); }
  bool materialized() const noexcept { return !order_.empty(); }

  /// Stored ordering; empty when the trace is streamed.
  std::span<const Edge> order() const noexcept { return order_; }

  PairStream stream() const;

 private:
  friend ProcessTrace sample_trace(Vertex n, std::uint64_t seed);
  friend ProcessTrace sample_trace_streamed(Vertex n, std::uint64_t seed);
  ProcessTrace(Vertex n, std::uint64_t seed, std::vector<Edge> order)
      : n_(n), seed_(seed), order_(std::move(order)) {}

  Vertex n_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<Edge> order_;
};

/// Sequential reader over a trace's ordering.
class PairStream {
 public:
  bool done() const noexcept { return position_ == total_; }
  /// Number of pairs produced so far, i.e. the current time t.
  std::uint64_t position() const noexcept { return position_; }
  Edge next();

 private:
  friend class ProcessTrace;
  PairStream(const ProcessTrace& trace);

  std::span<const Edge> stored_;
  std::uint64_t total_ = 0;
  std::uint64_t position_ = 0;
  SplitMix64 rng_{0};
  std::unordered_map<std::uint64_t, std::uint64_t> displaced_;
};

/// Uniform process via Fisher-Yates; stored for n <= kMaterializeCap.
/// Throws DomainError for n < 2.
ProcessTrace sample_trace(Vertex n, std::uint64_t seed);
/// Same ordering as sample_trace(n, seed) but never stored.
ProcessTrace sample_trace_streamed(Vertex n, std::uint64_t seed);

/// Degrees under edge insertion with O(1) amortized minimum-degree upkeep
/// through a degree histogram.
class DegreeTracker {
 public:
  explicit DegreeTracker(Vertex n);
  void add(Edge e);
  std::uint32_t min_degree() const noexcept { return min_; }
  std::uint32_t degree(Vertex v) const { return degree_[v]; }

 private:
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint64_t> histogram_;
  std::uint32_t min_ = 0;
};

/// tau[d-1] = first t with min degree of G(t) >= d, for d = 1..d_max.
struct HittingTimes {
  std::vector<std::uint64_t> tau;

  std::uint32_t d_max() const noexcept { return static_cast<std::uint32_t>(tau.size()); }
  std::uint64_t at(std::uint32_t d) const { return tau.at(d - 1); }
};

/// Single pass over the ordering. Throws DomainError if d_max >= n.
HittingTimes hitting_times(const ProcessTrace& trace, std::uint32_t d_max);

/// Graph on the first t pairs. Throws DomainError if t > N.
Graph graph_at(const ProcessTrace& trace, std::uint64_t t, GraphOptions options = {});

}  // namespace isolab
