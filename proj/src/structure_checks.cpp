#include "isolab/structure_checks.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>
#include <vector>

#include "isolab/connected_subsets.hpp"
#include "isolab/error.hpp"

namespace isolab {

std::uint32_t small_degree_threshold(std::uint32_t d) { return 4 * (d + 6); }

SmallSetReport small_set(const Graph& g, std::uint32_t d) {
  const Vertex n = g.num_vertices();
  const std::uint32_t threshold = small_degree_threshold(d);
  SmallSetReport report;
  report.members = VertexSet(n);
  report.d_used = d;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < threshold) report.members.insert(v);

  std::vector<std::uint8_t> touched(n, 0);
  report.members.for_each([&](Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (report.members.contains(w)) report.independent = false;
      if (touched[w] != 0) report.no_common_neighbors = false;
      touched[w] = 1;
    }
  });
  return report;
}

bool check_claim1(const Graph& g, std::uint32_t d) {
  const auto report = small_set(g, d);
  return report.independent && report.no_common_neighbors;
}

namespace {

// Vertices of the 3-core, ascending. Deleting a vertex of degree <= 2 from a
// set with more than 2k edges leaves more than 2(k-1) edges, so every
// violator contains one inside the 3-core.
std::vector<Vertex> three_core(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::uint32_t> degree(n);
  std::vector<Vertex> stack;
  std::vector<std::uint8_t> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < 3) {
      removed[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (removed[w] == 0 && --degree[w] < 3) {
        removed[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < n; ++v)
    if (removed[v] == 0) core.push_back(v);
  return core;
}

std::optional<VertexSet> search_dense_subset(const Graph& g, std::uint32_t k_max, std::uint64_t visit_limit);

}  // namespace

std::optional<VertexSet> check_density(const Graph& g, std::uint32_t k_max, std::uint64_t visit_limit) {
  const Vertex n = g.num_vertices();
  if (k_max > n) throw DomainError("k_max exceeds the number of vertices");

  const auto core = three_core(g);
  if (core.empty()) return std::nullopt;

  std::optional<VertexSet> found;
  if (core.size() == n) {
    found = search_dense_subset(g, k_max, visit_limit);
  } else {
    std::vector<Vertex> local(n, 0);
    for (Vertex i = 0; i < core.size(); ++i) local[core[i]] = i;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      if (std::binary_search(core.begin(), core.end(), e.u) && std::binary_search(core.begin(), core.end(), e.v)) {
        edges.push_back({local[e.u], local[e.v]});
      }
    }
    const auto sub = Graph::from_edges(static_cast<Vertex>(core.size()), edges, g.options());
    const auto hit = search_dense_subset(sub, std::min<std::uint32_t>(k_max, static_cast<Vertex>(core.size())),
                                         visit_limit);
    if (hit) {
      found = VertexSet(n);
      hit->for_each([&](Vertex v) { found->insert(core[v]); });
    }
  }
  if (found && induced_edge_count(g, *found) <= 2 * found->size()) {
    throw InvariantError("density violator failed re-verification");
  }
  return found;
}

namespace {

std::optional<VertexSet> search_dense_subset(const Graph& g, std::uint32_t k_max, std::uint64_t visit_limit) {
  const Vertex n = g.num_vertices();
  std::optional<VertexSet> found;
  std::vector<std::uint32_t> candidate_links;
  std::vector<Vertex> seen;
  std::vector<std::uint8_t> marked(n, 0);

  const auto stats = for_each_connected_subset(g, k_max, visit_limit, [&](const SubsetView& view) {
    const std::uint64_t k = view.members.size();
    if (view.induced_edges > 2 * k) {
      found = VertexSet(n, view.members);
      return Visit::Stop;
    }
    const std::uint64_t room = k_max - k;
    if (room == 0) return Visit::Prune;

    // Any superset adds j vertices above the root; each brings its links into
    // the current set plus at most C(j,2) edges among the newcomers.
    const Vertex root = view.members.front();
    candidate_links.clear();
    seen.clear();
    for (Vertex u : view.members) {
      for (Vertex w : g.neighbors(u)) {
        if (w <= root || marked[w] != 0 || view.neighbors_inside[w] == 0) continue;
        if (std::find(view.members.begin(), view.members.end(), w) != view.members.end()) continue;
        marked[w] = 1;
        seen.push_back(w);
        candidate_links.push_back(view.neighbors_inside[w]);
      }
    }
    for (Vertex w : seen) marked[w] = 0;
    std::sort(candidate_links.begin(), candidate_links.end(), std::greater<>());

    std::uint64_t links = 0;
    for (std::uint64_t j = 1; j <= room; ++j) {
      if (j <= candidate_links.size()) links += candidate_links[j - 1];
      if (view.induced_edges + links + j * (j - 1) / 2 > 2 * (k + j)) return Visit::Descend;
    }
    return Visit::Prune;
  });

  if (stats.budget_exhausted) {
    throw ResourceError("density check would visit more than " + std::to_string(visit_limit) +
                        " connected subsets; use a smaller k_max than " + std::to_string(k_max));
  }
  return found;
}

}  // namespace

BadSetReport is_bad(const Graph& g, const VertexSet& s, std::uint32_t d) {
  BadSetReport report;
  report.set = s;
  report.d_used = d;
  report.deficiency = static_cast<std::int64_t>(d) * static_cast<std::int64_t>(s.size()) -
                      static_cast<std::int64_t>(boundary_size(g, s));
  if (s.size() <= kElementaryCap) report.elementary = is_elementary_bad(g, s, d);
  return report;
}

bool is_elementary_bad(const Graph& g, const VertexSet& s, std::uint32_t d) {
  if (s.empty()) throw DomainError("bad-set checks need a nonempty set");
  if (s.size() > kElementaryCap) {
    throw ResourceError("elementary check enumerates all subsets; |S| = " + std::to_string(s.size()) +
                        " exceeds " + std::to_string(kElementaryCap));
  }
  const auto members = s.members();
  const auto k = static_cast<std::uint32_t>(members.size());
  std::vector<std::uint32_t> local_adj(k, 0);
  std::vector<std::int64_t> degree(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    degree[i] = g.degree(members[i]);
    for (std::uint32_t j = 0; j < k; ++j)
      if (g.has_edge(members[i], members[j])) local_adj[i] |= 1U << j;
  }

  const std::uint32_t full = k == 32 ? ~0U : (1U << k) - 1;
  auto is_bad_mask = [&](std::int64_t boundary, std::uint32_t mask) {
    return boundary < static_cast<std::int64_t>(d) * std::popcount(mask);
  };

  // Gray-code walk over all subsets with incremental boundary.
  std::uint32_t mask = 0;
  std::int64_t boundary = 0;
  bool whole_is_bad = false;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << k); ++step) {
    const auto bit = static_cast<std::uint32_t>(std::countr_zero(step));
    const std::int64_t links = std::popcount(local_adj[bit] & mask);
    if ((mask >> bit) & 1U) {
      mask &= ~(1U << bit);
      boundary += 2 * links - degree[bit];
    } else {
      boundary += degree[bit] - 2 * links;
      mask |= 1U << bit;
    }
    if (mask == full) {
      whole_is_bad = is_bad_mask(boundary, mask);
    } else if (is_bad_mask(boundary, mask)) {
      return false;
    }
  }
  return whole_is_bad;
}

}  // namespace isolab
