#include <algorithm>
#include <numeric>
#include <string>

#include "internal.hpp"
#include "isolab/error.hpp"
#include "isolab/iso_solver.hpp"
#include "isolab/process.hpp"
#include "isolab/rng.hpp"
#include "isolab/spectral.hpp"
#include "isolab/structure_checks.hpp"
#include "isolab/worker_pool.hpp"

namespace isolab {

namespace {

using nlohmann::ordered_json;

struct WindowLevel {
  std::uint64_t lower = 0;  // m_d
  std::uint64_t upper = 0;  // M_d
  std::uint32_t delta_at_lower = 0;
  std::uint32_t delta_at_upper = 0;
  std::uint64_t tau = 0;
  bool lower_ok = false;
  bool upper_ok = false;
};

}  // namespace

ExperimentResult run_prop1(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<std::uint64_t> lower(cfg.d_max + 1), upper(cfg.d_max + 1);
  for (std::uint32_t d = 1; d <= cfg.d_max; ++d) {
    const auto params = ThresholdParams::make(cfg.n, d, cfg.omega_rule);
    lower[d] = lower_threshold(params);
    upper[d] = upper_threshold(params);
    if (lower[d] >= upper[d]) throw InvariantError("m_d >= M_d");
  }
  const std::uint64_t horizon = *std::max_element(upper.begin() + 1, upper.end());

  std::vector<std::vector<WindowLevel>> trials(cfg.trials);
  std::vector<std::uint64_t> seeds(cfg.trials);
  parallel_for(cfg.trials, cfg.workers, [&](std::uint64_t t) {
    seeds[t] = derive_seed(cfg.master_seed, {t});
    auto& levels = trials[t];
    levels.resize(cfg.d_max);
    for (std::uint32_t d = 1; d <= cfg.d_max; ++d) {
      levels[d - 1].lower = lower[d];
      levels[d - 1].upper = upper[d];
    }

    const auto trace = sample_trace(cfg.n, seeds[t]);
    auto stream = trace.stream();
    DegreeTracker degrees(cfg.n);
    std::uint32_t reached = 0;
    auto snapshot = [&] {
      const std::uint64_t now = stream.position();
      for (auto& level : levels) {
        if (now == level.lower) level.delta_at_lower = degrees.min_degree();
        if (now == level.upper) level.delta_at_upper = degrees.min_degree();
      }
    };
    snapshot();
    while (!stream.done() && (stream.position() < horizon || reached < cfg.d_max)) {
      degrees.add(stream.next());
      snapshot();
      while (reached < cfg.d_max && degrees.min_degree() > reached) levels[reached++].tau = stream.position();
    }

    for (std::uint32_t d = 1; d <= cfg.d_max; ++d) {
      auto& level = levels[d - 1];
      level.lower_ok = level.delta_at_lower + 1 <= d;
      level.upper_ok = level.delta_at_upper >= d;
      // Cross-check against the hitting time: δ(G(t)) >= d iff t >= τ(δ=d).
      if (level.lower_ok != (level.tau > level.lower) || level.upper_ok != (level.tau <= level.upper)) {
        throw InvariantError("threshold snapshot disagrees with hitting time");
      }
    }
  });

  ExperimentResult result = detail::make_result(cfg);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    ordered_json rec;
    rec["trial"] = t;
    rec["seed"] = seeds[t];
    auto arr = [&](auto field) {
      auto a = ordered_json::array();
      for (const auto& level : trials[t]) a.push_back(field(level));
      return a;
    };
    rec["m_d"] = arr([](const WindowLevel& l) { return l.lower; });
    rec["M_d"] = arr([](const WindowLevel& l) { return l.upper; });
    rec["delta_at_m_d"] = arr([](const WindowLevel& l) { return l.delta_at_lower; });
    rec["delta_at_M_d"] = arr([](const WindowLevel& l) { return l.delta_at_upper; });
    rec["tau"] = arr([](const WindowLevel& l) { return l.tau; });
    rec["lower_ok"] = arr([](const WindowLevel& l) { return l.lower_ok; });
    rec["upper_ok"] = arr([](const WindowLevel& l) { return l.upper_ok; });
    result.records.push_back(std::move(rec));
  }
  for (std::uint32_t d = 1; d <= cfg.d_max; ++d) {
    std::vector<bool> lo, up, window;
    detail::SummaryBuilder tau("tau_" + std::to_string(d));
    for (const auto& levels : trials) {
      const auto& level = levels[d - 1];
      lo.push_back(level.lower_ok);
      up.push_back(level.upper_ok);
      window.push_back(level.lower_ok && level.upper_ok);
      tau.add(static_cast<double>(level.tau));
    }
    const auto suffix = "_d" + std::to_string(d);
    result.frequencies.push_back(detail::count_frequency("min_degree_below_d_at_m" + suffix, lo));
    result.frequencies.push_back(detail::count_frequency("min_degree_at_least_d_at_M" + suffix, up));
    result.frequencies.push_back(detail::count_frequency("hitting_time_in_window" + suffix, window));
    result.summaries.push_back(tau.build());
  }
  return result;
}

namespace {

struct ClaimsSnapshot {
  std::uint64_t edges = 0;
  std::size_t small_count = 0;
  bool claim1 = false;
  bool claim2 = false;
  bool lemma3 = false;
  std::optional<VertexSet> density_violator;
  std::optional<VertexSet> large_set_violator;
};

std::vector<std::uint32_t> large_set_sizes(Vertex n) {
  std::vector<std::uint32_t> sizes;
  const std::uint32_t half = n / 2;
  for (std::uint32_t k = ceil_fourth_root(n); k < half; k *= 2) sizes.push_back(k);
  if (half >= 1) sizes.push_back(half);
  return sizes;
}

ClaimsSnapshot claims_snapshot(const ExperimentConfig& cfg, std::uint64_t edges, std::uint64_t seed,
                               std::uint32_t k_max) {
  ClaimsSnapshot out;
  out.edges = edges;
  const Graph g = sample_gnm(cfg.n, edges, derive_seed(seed, {0}));
  const auto small = small_set(g, cfg.d);
  out.small_count = small.members.size();
  out.claim1 = small.independent && small.no_common_neighbors;

  out.density_violator = check_density(g, k_max);
  if (out.density_violator && induced_edge_count(g, *out.density_violator) <= 2 * out.density_violator->size()) {
    throw InvariantError("density violator failed re-verification");
  }
  out.claim2 = !out.density_violator;

  // Sampled falsification of |∂S| > d|S| for n^(1/4) <= |S| <= n/2.
  SplitMix64 rng(derive_seed(seed, {1}));
  std::vector<Vertex> perm(cfg.n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  out.lemma3 = true;
  for (std::uint32_t size : large_set_sizes(cfg.n)) {
    for (std::uint64_t s = 0; s < cfg.large_set_samples && out.lemma3; ++s) {
      for (std::uint32_t i = 0; i < size; ++i) std::swap(perm[i], perm[i + rng.uniform_below(cfg.n - i)]);
      VertexSet set(cfg.n, std::span<const Vertex>(perm.data(), size));
      if (boundary_size(g, set) <= static_cast<std::uint64_t>(cfg.d) * size) {
        out.lemma3 = false;
        out.large_set_violator = std::move(set);
      }
    }
  }
  return out;
}

}  // namespace

ExperimentResult run_claims(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto params = ThresholdParams::make(cfg.n, cfg.d, cfg.omega_rule);
  const std::uint64_t m_lower = lower_threshold(params);
  const std::uint64_t m_upper = upper_threshold(params);
  const std::uint32_t k_max = cfg.k_max != 0 ? cfg.k_max : ceil_fourth_root(cfg.n);

  struct Trial {
    std::uint64_t seed = 0;
    ClaimsSnapshot at_lower, at_upper;
  };
  std::vector<Trial> trials(cfg.trials);
  parallel_for(cfg.trials, cfg.workers, [&](std::uint64_t t) {
    trials[t].seed = derive_seed(cfg.master_seed, {t});
    trials[t].at_lower = claims_snapshot(cfg, m_lower, derive_seed(trials[t].seed, {0}), k_max);
    trials[t].at_upper = claims_snapshot(cfg, m_upper, derive_seed(trials[t].seed, {1}), k_max);
  });

  ExperimentResult result = detail::make_result(cfg);
  auto witness = [](const std::optional<VertexSet>& s) {
    return s ? detail::members_json(*s) : ordered_json(nullptr);
  };
  std::vector<bool> c1, c2, l3, c1_lo, c1_hi, c2_lo, c2_hi, l3_lo, l3_hi;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const auto& trial = trials[t];
    ordered_json rec;
    rec["trial"] = t;
    rec["seed"] = trial.seed;
    for (const auto* snap : {&trial.at_lower, &trial.at_upper}) {
      const std::string tag = snap == &trial.at_lower ? "_at_m_d" : "_at_M_d";
      rec["edges" + tag] = snap->edges;
      rec["small_count" + tag] = snap->small_count;
      rec["claim1" + tag] = snap->claim1;
      rec["claim2" + tag] = snap->claim2;
      rec["lemma3" + tag] = snap->lemma3;
      rec["density_violator" + tag] = witness(snap->density_violator);
      rec["large_set_violator" + tag] = witness(snap->large_set_violator);
    }
    result.records.push_back(std::move(rec));

    c1_lo.push_back(trial.at_lower.claim1);
    c1_hi.push_back(trial.at_upper.claim1);
    c2_lo.push_back(trial.at_lower.claim2);
    c2_hi.push_back(trial.at_upper.claim2);
    l3_lo.push_back(trial.at_lower.lemma3);
    l3_hi.push_back(trial.at_upper.lemma3);
    c1.push_back(trial.at_lower.claim1 && trial.at_upper.claim1);
    c2.push_back(trial.at_lower.claim2 && trial.at_upper.claim2);
    l3.push_back(trial.at_lower.lemma3 && trial.at_upper.lemma3);
  }
  result.frequencies.push_back(detail::count_frequency("claim1_small_set_separated", c1));
  result.frequencies.push_back(detail::count_frequency("claim2_sparse_small_subgraphs", c2));
  result.frequencies.push_back(detail::count_frequency("lemma3_large_sets_expand", l3));
  result.frequencies.push_back(detail::count_frequency("claim1_at_m_d", c1_lo));
  result.frequencies.push_back(detail::count_frequency("claim1_at_M_d", c1_hi));
  result.frequencies.push_back(detail::count_frequency("claim2_at_m_d", c2_lo));
  result.frequencies.push_back(detail::count_frequency("claim2_at_M_d", c2_hi));
  result.frequencies.push_back(detail::count_frequency("lemma3_at_m_d", l3_lo));
  result.frequencies.push_back(detail::count_frequency("lemma3_at_M_d", l3_hi));
  detail::SummaryBuilder small_lo("small_count_at_m_d"), small_hi("small_count_at_M_d");
  for (const auto& trial : trials) {
    small_lo.add(static_cast<double>(trial.at_lower.small_count));
    small_hi.add(static_cast<double>(trial.at_upper.small_count));
  }
  result.summaries.push_back(small_lo.build());
  result.summaries.push_back(small_hi.build());
  return result;
}

namespace {

struct SandwichTrial {
  std::uint64_t attempts = 0;
  std::uint64_t disconnected = 0;
  Ratio iso;
  std::uint32_t min_degree = 0;
  std::uint32_t max_degree = 0;
  SpectralReport spectral;
  bool sandwich_ok = false;
};

}  // namespace

ExperimentResult run_sandwich(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::uint64_t points = cfg.p_grid.size();
  std::vector<SandwichTrial> tasks(points * cfg.trials);
  SolverConfig solver;
  solver.exact_cap = cfg.exact_cap;

  parallel_for(tasks.size(), cfg.workers, [&](std::uint64_t task) {
    const std::uint64_t point = task / cfg.trials;
    const std::uint64_t trial = task % cfg.trials;
    const double p = cfg.p_grid[point];
    SandwichTrial& out = tasks[task];
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (attempt == cfg.max_attempts) {
        throw ResourceError("no connected G(" + std::to_string(cfg.n) + ", " + detail::format_double(p) +
                            ") sample within " + std::to_string(cfg.max_attempts) + " attempts");
      }
      const Graph g = sample_gnp(cfg.n, p, derive_seed(cfg.master_seed, {point, trial, attempt}));
      out.attempts = attempt + 1;
      if (!is_connected(g)) {
        // i = 0 = λ/2 here; only check that the spectrum agrees.
        if (lambda2(g) != 0.0) throw InvariantError("disconnected sample with positive lambda2");
        ++out.disconnected;
        continue;
      }
      out.iso = iso_exact(g, solver).ratio;
      out.min_degree = min_degree(g);
      out.max_degree = max_degree(g);
      out.spectral = spectral_bounds(g);
      const double iso = out.iso.to_double();
      out.sandwich_ok = out.spectral.lower - cfg.tol <= iso && iso <= out.spectral.upper + cfg.tol;
      break;
    }
  });

  ExperimentResult result = detail::make_result(cfg);
  std::vector<bool> all_ok;
  for (std::uint64_t point = 0; point < points; ++point) {
    const std::string p_label = detail::format_double(cfg.p_grid[point]);
    std::vector<bool> ok;
    detail::SummaryBuilder ratio("i_over_min_degree_p" + p_label);
    detail::SummaryBuilder skipped("disconnected_skipped_p" + p_label);
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
      const auto& t = tasks[point * cfg.trials + trial];
      ordered_json rec;
      rec["p"] = cfg.p_grid[point];
      rec["trial"] = trial;
      rec["attempts"] = t.attempts;
      rec["disconnected_skipped"] = t.disconnected;
      rec["i"] = t.iso.to_string();
      rec["i_value"] = t.iso.to_double();
      rec["min_degree"] = t.min_degree;
      rec["max_degree"] = t.max_degree;
      rec["lambda2"] = t.spectral.lambda2;
      rec["lower"] = t.spectral.lower;
      rec["upper"] = t.spectral.upper;
      rec["sandwich_ok"] = t.sandwich_ok;
      rec["i_over_min_degree"] = t.iso.to_double() / t.min_degree;
      result.records.push_back(std::move(rec));
      ok.push_back(t.sandwich_ok);
      all_ok.push_back(t.sandwich_ok);
      ratio.add(t.iso.to_double() / t.min_degree);
      skipped.add(static_cast<double>(t.disconnected));
    }
    result.frequencies.push_back(detail::count_frequency("sandwich_holds_p" + p_label, ok));
    result.summaries.push_back(ratio.build());
    result.summaries.push_back(skipped.build());
  }
  result.frequencies.insert(result.frequencies.begin(), detail::count_frequency("sandwich_holds", all_ok));
  return result;
}

}  // namespace isolab
