#include "isolab/process.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "isolab/error.hpp"

namespace isolab {

std::uint64_t pair_index(Edge e) {
  return static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u;
}

Edge pair_at(std::uint64_t index) {
  auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (v * (v - 1) / 2 > index) --v;
  while ((v + 1) * v / 2 <= index) ++v;
  return {static_cast<Vertex>(index - v * (v - 1) / 2), static_cast<Vertex>(v)};
}

Graph sample_gnp(Vertex n, double p, std::uint64_t seed, GraphOptions options) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  const std::uint64_t total = pair_count(n);
  std::vector<Edge> edges;
  if (p == 1.0) {
    edges.reserve(total);
    for (std::uint64_t k = 0; k < total; ++k) edges.push_back(pair_at(k));
  } else if (p > 0.0) {
    // Geometric gaps between successive present pairs (Batagelj-Brandes).
    SplitMix64 rng(seed);
    const double log_q = std::log1p(-p);
    edges.reserve(static_cast<std::size_t>(static_cast<double>(total) * p * 1.1) + 16);
    std::uint64_t k = 0;
    while (true) {
      const double gap = std::floor(std::log1p(-rng.uniform01()) / log_q);
      if (gap >= static_cast<double>(total - k)) break;
      k += static_cast<std::uint64_t>(gap);
      edges.push_back(pair_at(k));
      if (++k >= total) break;
    }
  }
  return Graph::from_edges(n, edges, options);
}

Graph sample_gnm(Vertex n, std::uint64_t m, std::uint64_t seed, GraphOptions options) {
  const std::uint64_t total = pair_count(n);
  if (m > total) {
    throw DomainError("requested " + std::to_string(m) + " edges but only " +
                      std::to_string(total) + " pairs exist");
  }
  // Floyd's sampling of an m-subset of pair indices.
  SplitMix64 rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = rng.uniform_below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> indices(chosen.begin(), chosen.end());
  std::sort(indices.begin(), indices.end());
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t k : indices) edges.push_back(pair_at(k));
  return Graph::from_edges(n, edges, options);
}

ProcessTrace ProcessTrace::from_order(Vertex n, std::vector<Edge> order) {
  if (n < 2) throw DomainError("a process needs at least two vertices");
  if (order.size() != pair_count(n)) throw DomainError("ordering must list every pair exactly once");
  std::vector<bool> seen(order.size(), false);
  for (const Edge& e : order) {
    if (e.u == e.v || e.v >= n) throw DomainError("invalid pair in ordering");
    const auto k = pair_index(e);
    if (seen[k]) throw DomainError("pair listed twice in ordering");
    seen[k] = true;
  }
  return ProcessTrace(n, 0, std::move(order));
}

PairStream ProcessTrace::stream() const { return PairStream(*this); }

PairStream::PairStream(const ProcessTrace& trace)
    : stored_(trace.order()), total_(trace.num_pairs()), rng_(trace.seed()) {}

Edge PairStream::next() {
  if (done()) throw DomainError("pair stream exhausted");
  const std::uint64_t i = position_++;
  if (!stored_.empty()) return stored_[i];

  const std::uint64_t j = i + rng_.uniform_below(total_ - i);
  auto value_at = [&](std::uint64_t x) {
    const auto it = displaced_.find(x);
    return it == displaced_.end() ? x : it->second;
  };
  const std::uint64_t picked = value_at(j);
  if (j != i) displaced_[j] = value_at(i);
  displaced_.erase(i);
  return pair_at(picked);
}

ProcessTrace sample_trace(Vertex n, std::uint64_t seed) {
  if (n < 2) throw DomainError("a process needs at least two vertices");
  if (n > ProcessTrace::kMaterializeCap) return sample_trace_streamed(n, seed);

  const std::uint64_t total = pair_count(n);
  std::vector<Edge> order;
  order.reserve(total);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) order.emplace_back(u, v);

  SplitMix64 rng(seed);
  for (std::uint64_t i = 0; i + 1 < total; ++i) {
    const std::uint64_t j = i + rng.uniform_below(total - i);
    std::swap(order[i], order[j]);
  }
  return ProcessTrace(n, seed, std::move(order));
}

ProcessTrace sample_trace_streamed(Vertex n, std::uint64_t seed) {
  if (n < 2) throw DomainError("a process needs at least two vertices");
  return ProcessTrace(n, seed, {});
}

DegreeTracker::DegreeTracker(Vertex n) : degree_(n, 0), histogram_(n, 0) {
  if (n > 0) histogram_[0] = n;
}

void DegreeTracker::add(Edge e) {
  for (Vertex x : {e.u, e.v}) {
    --histogram_[degree_[x]];
    ++histogram_[++degree_[x]];
  }
  while (min_ + 1 < histogram_.size() && histogram_[min_] == 0) ++min_;
}

HittingTimes hitting_times(const ProcessTrace& trace, std::uint32_t d_max) {
  if (d_max >= trace.n()) {
    throw DomainError("minimum degree cannot exceed n - 1 = " + std::to_string(trace.n() - 1));
  }
  HittingTimes out;
  out.tau.reserve(d_max);
  DegreeTracker degrees(trace.n());
  auto stream = trace.stream();
  while (out.tau.size() < d_max) {
    degrees.add(stream.next());
    while (out.tau.size() < d_max && degrees.min_degree() > out.tau.size()) {
      out.tau.push_back(stream.position());
    }
  }
  return out;
}

Graph graph_at(const ProcessTrace& trace, std::uint64_t t, GraphOptions options) {
  if (t > trace.num_pairs()) {
    throw DomainError("time " + std::to_string(t) + " exceeds N = " + std::to_string(trace.num_pairs()));
  }
  std::vector<Edge> edges;
  edges.reserve(t);
  auto stream = trace.stream();
  while (stream.position() < t) edges.push_back(stream.next());
  return Graph::from_edges(trace.n(), edges, options);
}

}  // namespace isolab
