#include "isolab/iso_solver.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "isolab/connected_subsets.hpp"
#include "isolab/error.hpp"
#include "isolab/rng.hpp"

namespace isolab {

void SolverConfig::validate() const {
  if (exact_cap > kMaxExactCap) {
    throw ConfigError("exact_cap " + std::to_string(exact_cap) + " exceeds the enumeration limit " +
                      std::to_string(kMaxExactCap));
  }
  if (bisection_samples == 0) throw ConfigError("bisection_samples must be at least 1");
}

std::uint32_t ceil_fourth_root(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(n), 0.25)));
  auto fourth = [](std::uint64_t x) { return x * x * x * x; };
  while (r > 0 && fourth(r - 1) >= n) --r;
  while (fourth(r) < n) ++r;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t small_set_cap_for(const SolverConfig& cfg, Vertex n) {
  if (cfg.small_set_cap != 0) return cfg.small_set_cap;
  return std::max<std::uint32_t>(ceil_fourth_root(n), 1);
}

const char* to_string(WitnessKind kind) {
  return kind == WitnessKind::IndependentMinDegree ? "independent_min_degree" : "other";
}

WitnessKind classify_witness(const Graph& g, const VertexSet& s) {
  const std::uint32_t delta = min_degree(g);
  bool all_min = true;
  s.for_each([&](Vertex v) { all_min = all_min && g.degree(v) == delta; });
  return all_min && is_independent(g, s) ? WitnessKind::IndependentMinDegree : WitnessKind::Other;
}

CutReport make_cut_report(const Graph& g, const VertexSet& s) {
  if (s.empty() || s.size() > g.num_vertices() / 2) {
    throw DomainError("witness size must lie in [1, floor(n/2)]");
  }
  CutReport report;
  report.witness = s;
  report.boundary = boundary_size(g, s);
  report.ratio = Ratio{report.boundary, s.size()};
  report.witness_kind = classify_witness(g, s);
  return report;
}

namespace {

// Subsets are single machine words; n <= kMaxExactCap < 64.
class ExactSearch {
 public:
  ExactSearch(const Graph& g, bool collect_all, bool prune)
      : n_(g.num_vertices()), collect_all_(collect_all), prune_(prune) {
    for (Vertex v = 0; v < n_; ++v) {
      deg_[v] = g.degree(v);
      for (Vertex u : g.neighbors(v)) adj_[v] |= Word{1} << u;
    }
  }

  void run() {
    const Vertex half = n_ / 2;
    for (std::uint32_t k = 1; k <= half; ++k) {
      if (n_ % 2 == 0 && k == half) {
        dfs(Word{1}, 1, deg_[0], 0, 1, k);
      } else {
        dfs(0, 0, 0, 0, 0, k);
      }
    }
  }

  Ratio best() const { return best_; }
  const std::vector<Word>& minimizers() const { return minimizers_; }

 private:
  static Word below(Vertex v) { return (Word{1} << v) - 1; }

  // `lower` counts edges from mask to vertices below `next` that are not in
  // mask; those stay outside every completion, so it bounds |∂S| from below.
  void dfs(Word mask, std::uint32_t size, std::uint64_t boundary, std::uint64_t lower, Vertex next,
           std::uint32_t k) {
    if (size == k) {
      evaluate(mask, boundary, k);
      return;
    }
    const std::uint32_t remaining = k - size;
    std::uint64_t gap_cross = 0;
    for (Vertex v = next; v + remaining <= n_; ++v) {
      const std::uint64_t grown =
          boundary + deg_[v] - 2ULL * static_cast<std::uint64_t>(std::popcount(adj_[v] & mask));
      const std::uint64_t bound =
          lower + gap_cross + static_cast<std::uint64_t>(std::popcount(adj_[v] & below(v) & ~mask));
      if (!(prune_ && size + 1 < k && beyond_best(bound, k))) {
        dfs(mask | (Word{1} << v), size + 1, grown, bound, v + 1, k);
      }
      gap_cross += static_cast<std::uint64_t>(std::popcount(adj_[v] & mask));
    }
  }

  bool beyond_best(std::uint64_t lower, std::uint32_t k) const {
    if (!have_best_) return false;
    const Ratio r{lower, k};
    // Ties can still matter when every minimizer is wanted.
    return collect_all_ ? r > best_ : r >= best_;
  }

  void evaluate(Word mask, std::uint64_t boundary, std::uint32_t k) {
    const Ratio r{boundary, k};
    if (!have_best_ || r < best_) {
      best_ = r;
      have_best_ = true;
      minimizers_.assign(1, mask);
    } else if (collect_all_ && r == best_) {
      minimizers_.push_back(mask);
    }
  }

  Vertex n_;
  bool collect_all_;
  bool prune_;
  std::array<Word, 64> adj_{};
  std::array<std::uint32_t, 64> deg_{};
  Ratio best_;
  bool have_best_ = false;
  std::vector<Word> minimizers_;
};

void require_exact_range(const Graph& g, const SolverConfig& cfg) {
  cfg.validate();
  const Vertex n = g.num_vertices();
  if (n < 2) throw DomainError("the isoperimetric constant needs n >= 2");
  if (n > cfg.exact_cap) {
    throw DomainError("n = " + std::to_string(n) + " exceeds exact_cap = " + std::to_string(cfg.exact_cap));
  }
}

VertexSet from_mask(Vertex n, Word mask) {
  VertexSet s(n);
  for (; mask != 0; mask &= mask - 1) s.insert(static_cast<Vertex>(std::countr_zero(mask)));
  return s;
}

void check_upper_bound(const Graph& g, const Ratio& r) {
  if (r > Ratio{min_degree(g), 1}) {
    throw InvariantError("computed i(G) = " + r.to_string() + " exceeds the minimum degree " +
                         std::to_string(min_degree(g)));
  }
}

// Uniform floor(n/2)-subsets by partial Fisher-Yates over a persistent permutation.
class BisectionSampler {
 public:
  BisectionSampler(Vertex n, std::uint64_t seed) : n_(n), perm_(n), rng_(seed) {
    std::iota(perm_.begin(), perm_.end(), Vertex{0});
  }

  VertexSet next() {
    const Vertex half = n_ / 2;
    for (Vertex i = 0; i < half; ++i) {
      const auto j = static_cast<Vertex>(i + rng_.uniform_below(n_ - i));
      std::swap(perm_[i], perm_[j]);
    }
    return VertexSet(n_, std::span<const Vertex>(perm_.data(), half));
  }

 private:
  Vertex n_;
  std::vector<Vertex> perm_;
  SplitMix64 rng_;
};

// Steepest single-vertex moves on |∂S| - d|S|; plateau moves are rejected.
std::optional<VertexSet> local_search(const Graph& g, std::uint32_t d, VertexSet s) {
  const Vertex n = g.num_vertices();
  const Vertex half = n / 2;
  std::vector<std::uint32_t> inside(n, 0);
  s.for_each([&](Vertex v) {
    for (Vertex u : g.neighbors(v)) ++inside[u];
  });
  std::int64_t objective =
      static_cast<std::int64_t>(boundary_size(g, s)) - static_cast<std::int64_t>(d) * static_cast<std::int64_t>(s.size());

  const std::uint64_t move_limit = 20ULL * n;
  for (std::uint64_t moves = 0; objective >= 0 && moves < move_limit; ++moves) {
    std::int64_t best_delta = 0;
    Vertex best_v = n;
    for (Vertex v = 0; v < n; ++v) {
      const auto deg = static_cast<std::int64_t>(g.degree(v));
      const auto in = static_cast<std::int64_t>(inside[v]);
      std::int64_t delta = 0;
      if (s.contains(v)) {
        if (s.size() <= 1) continue;
        delta = -deg + 2 * in + d;
      } else {
        if (s.size() >= half) continue;
        delta = deg - 2 * in - d;
      }
      if (delta < best_delta) {
        best_delta = delta;
        best_v = v;
      }
    }
    if (best_v == n) break;
    const bool adding = !s.contains(best_v);
    if (adding) {
      s.insert(best_v);
    } else {
      s.erase(best_v);
    }
    for (Vertex u : g.neighbors(best_v)) adding ? ++inside[u] : --inside[u];
    objective += best_delta;
  }
  if (objective < 0) return s;
  return std::nullopt;
}

bool violates(std::uint64_t boundary, std::uint32_t d, std::size_t size) {
  return boundary < static_cast<std::uint64_t>(d) * size;
}

}  // namespace

CutReport iso_exact(const Graph& g, const SolverConfig& cfg) {
  require_exact_range(g, cfg);
  ExactSearch search(g, /*collect_all=*/false, cfg.prune);
  search.run();
  check_upper_bound(g, search.best());
  return make_cut_report(g, from_mask(g.num_vertices(), search.minimizers().front()));
}

std::vector<CutReport> iso_exact_all_witnesses(const Graph& g, const SolverConfig& cfg) {
  require_exact_range(g, cfg);
  ExactSearch search(g, /*collect_all=*/true, cfg.prune);
  search.run();
  check_upper_bound(g, search.best());
  std::vector<CutReport> out;
  out.reserve(search.minimizers().size());
  for (Word mask : search.minimizers()) out.push_back(make_cut_report(g, from_mask(g.num_vertices(), mask)));
  return out;
}

std::optional<VertexSet> find_bad_set(const Graph& g, std::uint32_t d, const SolverConfig& cfg) {
  cfg.validate();
  if (d == 0) throw DomainError("degree parameter d must be at least 1");
  const Vertex n = g.num_vertices();
  if (n < 2) return std::nullopt;
  const Vertex half = n / 2;

  // Every bad set contains a connected bad set, so connected sets suffice here.
  std::optional<VertexSet> found;
  const std::uint32_t cap = std::min<std::uint32_t>(small_set_cap_for(cfg, n), half);
  for_each_connected_subset(g, cap, cfg.connected_visit_budget, [&](const SubsetView& view) {
    if (violates(view.boundary, d, view.members.size())) {
      found = VertexSet(n, view.members);
      return Visit::Stop;
    }
    return Visit::Descend;
  });
  if (found) return found;

  BisectionSampler sampler(n, derive_seed(cfg.seed, {0}));
  VertexSet worst;
  std::int64_t worst_objective = 0;
  for (std::uint64_t i = 0; i < cfg.bisection_samples; ++i) {
    VertexSet s = sampler.next();
    const std::uint64_t b = boundary_size(g, s);
    if (violates(b, d, s.size())) return s;
    const std::int64_t objective = static_cast<std::int64_t>(b) - static_cast<std::int64_t>(d) * static_cast<std::int64_t>(s.size());
    if (worst.empty() || objective < worst_objective) {
      worst = std::move(s);
      worst_objective = objective;
    }
  }

  BisectionSampler restarts(n, derive_seed(cfg.seed, {1}));
  for (std::uint32_t r = 0; r < cfg.local_search_restarts; ++r) {
    VertexSet start = r == 0 ? worst : restarts.next();
    if (auto hit = local_search(g, d, std::move(start))) return hit;
  }

  if (n <= cfg.exact_cap) {
    CutReport exact = iso_exact(g, cfg);
    if (exact.ratio < Ratio{d, 1}) return exact.witness;
  }
  return std::nullopt;
}

CutReport sample_bisection_max_ratio(const Graph& g, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw DomainError("at least one bisection sample is required");
  if (g.num_vertices() < 2) throw DomainError("bisections need n >= 2");
  BisectionSampler sampler(g.num_vertices(), seed);
  VertexSet best_set;
  std::uint64_t best_boundary = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    VertexSet s = sampler.next();
    const std::uint64_t b = boundary_size(g, s);
    if (best_set.empty() || b > best_boundary) {
      best_boundary = b;
      best_set = std::move(s);
    }
  }
  return make_cut_report(g, best_set);
}

}  // namespace isolab
