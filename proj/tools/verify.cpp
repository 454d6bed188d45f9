#include "verify.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "isolab/iso_solver.hpp"
#include "isolab/process.hpp"
#include "isolab/rng.hpp"
#include "isolab/spectral.hpp"
#include "isolab/structure_checks.hpp"
#include "naive.hpp"

namespace isolab::cli {

namespace {

oracle::EdgePairs pairs_of(const Graph& g) {
  oracle::EdgePairs out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::uint64_t mask_of(const VertexSet& s) { return s.words().empty() ? 0 : s.words()[0]; }

}  // namespace

int run_verify(std::uint64_t seed, std::uint64_t graphs_per_n, std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    std::string problem;
    try {
      problem = body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    out << (problem.empty() ? "ok    " : "FAIL  ") << name << (problem.empty() ? "" : ": " + problem) << '\n';
    if (!problem.empty()) ++failures;
  };

  check("iso_exact matches brute force (n = 2..10)", [&]() -> std::string {
    for (Vertex n = 2; n <= 10; ++n) {
      for (std::uint64_t k = 0; k < graphs_per_n; ++k) {
        const double p = 0.1 + 0.8 * static_cast<double>(k % 9) / 8.0;
        const Graph g = sample_gnp(n, p, derive_seed(seed, {n, k}));
        const auto edges = pairs_of(g);
        const auto mine = iso_exact(g);
        const auto ref = oracle::isoperimetric(n, edges);
        if (!(mine.ratio == Ratio{ref.num, ref.den})) {
          return "n=" + std::to_string(n) + " graph " + std::to_string(k) + ": " + mine.ratio.to_string() +
                 " vs " + std::to_string(ref.num) + "/" + std::to_string(ref.den);
        }
        if (oracle::cut_edges(edges, mask_of(mine.witness)) != mine.boundary) return "witness boundary mismatch";
      }
    }
    return {};
  });

  check("spectral sandwich on connected samples (n = 8, 12)", [&]() -> std::string {
    for (Vertex n : {8u, 12u}) {
      for (std::uint64_t k = 0; k < graphs_per_n; ++k) {
        const Graph g = sample_gnp(n, 0.5, derive_seed(seed, {100 + n, k}));
        if (!oracle::connected(n, pairs_of(g))) continue;
        const double i = iso_exact(g).ratio.to_double();
        const auto b = spectral_bounds(g);
        if (b.lower - 1e-7 > i || i > b.upper + 1e-7) return "violation at n=" + std::to_string(n);
      }
    }
    return {};
  });

  check("lambda2 of K_n and C_4", [&]() -> std::string {
    for (Vertex n = 2; n <= 12; ++n) {
      if (std::abs(lambda2(complete_graph(n)) - n) > 1e-9) return "K_" + std::to_string(n);
    }
    if (std::abs(lambda2(cycle_graph(4)) - 2.0) > 1e-9) return "C_4";
    return {};
  });

  check("hitting times match prefix replay (n = 6)", [&]() -> std::string {
    for (std::uint64_t k = 0; k < graphs_per_n; ++k) {
      const auto trace = sample_trace(6, derive_seed(seed, {200, k}));
      oracle::EdgePairs order;
      for (const Edge& e : trace.order()) order.emplace_back(e.u, e.v);
      const auto tau = hitting_times(trace, 3);
      for (std::uint32_t d = 1; d <= 3; ++d) {
        if (tau.at(d) != oracle::degree_hitting_time(6, order, d)) return "trace " + std::to_string(k);
      }
    }
    return {};
  });

  check("density checker matches brute force (n = 10)", [&]() -> std::string {
    for (std::uint64_t k = 0; k < graphs_per_n; ++k) {
      const Graph g = sample_gnp(10, 0.6, derive_seed(seed, {300, k}));
      const bool mine = check_density(g, 10).has_value();
      const bool ref = oracle::dense_subset(10, pairs_of(g), 10) != 0;
      if (mine != ref) return "graph " + std::to_string(k);
    }
    return {};
  });

  return failures;
}

}  // namespace isolab::cli
