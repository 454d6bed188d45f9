#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isolab/graph.hpp"
#include "isolab/ratio.hpp"

namespace isolab {

struct SolverConfig {
  /// Largest n handled by full subset enumeration. At most kMaxExactCap.
  Vertex exact_cap = 26;
  /// Largest |S| for the connected small-set search; 0 means ceil(n^(1/4)).
  std::uint32_t small_set_cap = 0;
  std::uint64_t bisection_samples = 10'000;
  std::uint32_t local_search_restarts = 8;
  /// Connected subsets visited by the small-set phase before it gives up.
  std::uint64_t connected_visit_budget = 10'000'000;
  std::uint64_t seed = 0;
  /// Branch-and-bound pruning in the exact enumeration. Never changes results.
  bool prune = true;

  static constexpr Vertex kMaxExactCap = 30;

  /// Throws ConfigError.
  void validate() const;
};

/// Exact integer ceil(n^(1/4)).
std::uint32_t ceil_fourth_root(std::uint64_t n);

/// ceil(n^(1/4)) unless overridden by cfg.small_set_cap.
std::uint32_t small_set_cap_for(const SolverConfig& cfg, Vertex n);

enum class WitnessKind { IndependentMinDegree, Other };

const char* to_string(WitnessKind kind);

/// A set S with its boundary and the exact ratio |∂S| / |S|.
struct CutReport {
  VertexSet witness;
  std::uint64_t boundary = 0;
  Ratio ratio;
  WitnessKind witness_kind = WitnessKind::Other;
};

/// IndependentMinDegree iff s is independent and every member has degree δ(g).
WitnessKind classify_witness(const Graph& g, const VertexSet& s);

/// Builds a report for s, checking 1 <= |s| <= floor(n/2).
CutReport make_cut_report(const Graph& g, const VertexSet& s);

/// Isoperimetric constant by enumeration of all S with 1 <= |S| <= floor(n/2).
/// The witness is the minimizer that is smallest in (size, lexicographic)
/// order; for even n, half-size sets are enumerated with vertex 0 inside.
/// Requires 2 <= n <= cfg.exact_cap. Throws InvariantError if the result
/// exceeds δ(g).
CutReport iso_exact(const Graph& g, const SolverConfig& cfg = {});

/// Every minimizing set in (size, lexicographic) order, each classified.
/// Half-size sets of even-order graphs appear once per unordered bisection
/// (the side containing vertex 0).
std::vector<CutReport> iso_exact_all_witnesses(const Graph& g, const SolverConfig& cfg = {});

/// Searches for S with |∂S| < d|S| and |S| <= floor(n/2): connected small
/// sets, sampled bisections, then local search from the worst bisection and
/// fresh samples. Only for n <= cfg.exact_cap is an empty result a proof of
/// absence (the search ends with iso_exact).
std::optional<VertexSet> find_bad_set(const Graph& g, std::uint32_t d, const SolverConfig& cfg = {});

/// Maximum of |∂S|/|S| over `samples` uniform sets of size floor(n/2). A lower
/// bound on the largest bisection ratio.
CutReport sample_bisection_max_ratio(const Graph& g, std::uint64_t samples, std::uint64_t seed);

}  // namespace isolab
