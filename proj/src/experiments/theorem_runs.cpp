#include <cmath>
#include <optional>
#include <string>

#include "internal.hpp"
#include "isolab/error.hpp"
#include "isolab/iso_solver.hpp"
#include "isolab/process.hpp"
#include "isolab/rng.hpp"
#include "isolab/worker_pool.hpp"

namespace isolab {

namespace {

using nlohmann::ordered_json;

struct Theorem1Level {
  std::uint64_t tau = 0;
  Ratio iso;
  bool i_equals_delta = false;
  std::optional<std::size_t> minimizers;         // exact mode
  std::optional<bool> all_independent_min_degree;  // exact mode
  std::optional<std::int64_t> witness_deficiency;
  std::optional<VertexSet> violation;
};

struct Theorem1Trial {
  std::uint64_t seed = 0;
  std::vector<Theorem1Level> levels;
  std::optional<bool> all_t;
};

// Re-derives the boundary of a recorded witness before it is persisted.
std::int64_t revalidated_deficiency(const Graph& g, const CutReport& report, std::uint32_t delta) {
  const std::uint64_t boundary = boundary_size(g, report.witness);
  if (boundary != report.boundary) throw InvariantError("witness boundary changed on re-validation");
  return static_cast<std::int64_t>(delta) * static_cast<std::int64_t>(report.witness.size()) -
         static_cast<std::int64_t>(boundary);
}

Theorem1Trial theorem1_trial(const ExperimentConfig& cfg, std::uint64_t trial) {
  Theorem1Trial out;
  out.seed = derive_seed(cfg.master_seed, {trial});
  const bool exact = cfg.n <= cfg.exact_cap;
  if (cfg.d_max == 0) {
    if (exact) out.all_t = true;
    return out;
  }

  SolverConfig solver;
  solver.exact_cap = cfg.exact_cap;
  solver.bisection_samples = cfg.bisection_samples;
  solver.seed = derive_seed(out.seed, {1});

  const auto trace = sample_trace(cfg.n, out.seed);
  const auto times = hitting_times(trace, cfg.d_max);

  // Along the process |∂S| never decreases and δ stays at d on
  // [τ(δ=d), τ(δ=d+1)), while i = δ = 0 before τ(δ=1). So i = δ holds for
  // every t <= τ(δ=d_max) exactly when it holds at each hitting time.
  bool all_t = true;
  for (std::uint32_t d = 1; d <= cfg.d_max; ++d) {
    Theorem1Level level;
    level.tau = times.at(d);
    const Graph g = graph_at(trace, level.tau);
    const std::uint32_t delta = min_degree(g);
    if (delta != d) throw InvariantError("min degree at its hitting time differs from d");

    if (exact) {
      const auto witnesses = iso_exact_all_witnesses(g, solver);
      const CutReport& best = witnesses.front();
      level.iso = best.ratio;
      level.i_equals_delta = best.ratio == Ratio{delta, 1};
      level.minimizers = witnesses.size();
      bool all_kind = true;
      for (const auto& w : witnesses) all_kind = all_kind && w.witness_kind == WitnessKind::IndependentMinDegree;
      level.all_independent_min_degree = all_kind;
      level.witness_deficiency = revalidated_deficiency(g, best, delta);
      if (!level.i_equals_delta) level.violation = best.witness;
    } else {
      const auto bad = find_bad_set(g, d, solver);
      if (bad) {
        const CutReport report = make_cut_report(g, *bad);
        level.iso = report.ratio;
        level.witness_deficiency = revalidated_deficiency(g, report, delta);
        if (*level.witness_deficiency <= 0) throw InvariantError("bad-set search returned a set that is not bad");
        level.violation = *bad;
      } else {
        level.iso = Ratio{delta, 1};
        level.i_equals_delta = true;
      }
    }
    all_t = all_t && level.i_equals_delta;
    out.levels.push_back(std::move(level));
  }
  if (exact) out.all_t = all_t;
  return out;
}

template <class T>
ordered_json optional_json(const std::optional<T>& value) {
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

}  // namespace

ExperimentResult run_theorem1(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<Theorem1Trial> trials(cfg.trials);
  parallel_for(cfg.trials, cfg.workers, [&](std::uint64_t t) { trials[t] = theorem1_trial(cfg, t); });

  ExperimentResult result = detail::make_result(cfg);
  const bool exact = cfg.n <= cfg.exact_cap;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const auto& trial = trials[t];
    ordered_json rec;
    rec["trial"] = t;
    rec["seed"] = trial.seed;
    auto tau = ordered_json::array(), iso = ordered_json::array(), iso_value = ordered_json::array(),
         equal = ordered_json::array(), minimizers = ordered_json::array(), kinds = ordered_json::array(),
         deficiency = ordered_json::array(), violations = ordered_json::array();
    for (const auto& level : trial.levels) {
      tau.push_back(level.tau);
      iso.push_back(level.iso.to_string());
      iso_value.push_back(level.iso.to_double());
      equal.push_back(level.i_equals_delta);
      minimizers.push_back(optional_json(level.minimizers));
      kinds.push_back(optional_json(level.all_independent_min_degree));
      deficiency.push_back(optional_json(level.witness_deficiency));
      violations.push_back(level.violation ? detail::members_json(*level.violation) : ordered_json(nullptr));
    }
    rec["tau"] = tau;
    rec["i"] = iso;
    rec["i_value"] = iso_value;
    rec["i_equals_delta"] = equal;
    rec["minimizers"] = minimizers;
    rec["all_minimizers_independent_min_degree"] = kinds;
    rec["witness_deficiency"] = deficiency;
    rec["violation_witness"] = violations;
    rec["i_equals_delta_for_all_t"] = optional_json(trial.all_t);
    result.records.push_back(std::move(rec));
  }

  for (std::uint32_t d = 1; d <= cfg.d_max; ++d) {
    std::vector<bool> equal;
    for (const auto& trial : trials) equal.push_back(trial.levels[d - 1].i_equals_delta);
    result.frequencies.push_back(detail::count_frequency("i_equals_delta_at_tau_" + std::to_string(d), equal));
  }
  if (exact) {
    std::vector<bool> all_t;
    for (const auto& trial : trials) all_t.push_back(*trial.all_t);
    result.frequencies.push_back(detail::count_frequency("i_equals_delta_for_all_t", all_t));
    for (std::uint32_t d = 1; d <= cfg.d_max; ++d) {
      std::vector<bool> kinds;
      for (const auto& trial : trials) kinds.push_back(*trial.levels[d - 1].all_independent_min_degree);
      result.frequencies.push_back(detail::count_frequency(
          "minimizers_independent_min_degree_at_tau_" + std::to_string(d), kinds));
    }
    // Among hitting times with i = δ, how often the reported witness has zero deficiency.
    std::vector<bool> zero;
    for (const auto& trial : trials)
      for (const auto& level : trial.levels)
        if (level.i_equals_delta) zero.push_back(*level.witness_deficiency == 0);
    result.frequencies.push_back(detail::count_frequency("zero_deficiency_when_i_equals_delta", zero));
  }
  for (std::uint32_t d = 1; d <= cfg.d_max; ++d) {
    detail::SummaryBuilder tau("tau_" + std::to_string(d));
    detail::SummaryBuilder iso("i_at_tau_" + std::to_string(d));
    for (const auto& trial : trials) {
      tau.add(static_cast<double>(trial.levels[d - 1].tau));
      iso.add(trial.levels[d - 1].iso.to_double());
    }
    result.summaries.push_back(tau.build());
    result.summaries.push_back(iso.build());
  }
  return result;
}

namespace {

struct Theorem2Trial {
  std::uint64_t seed = 0;
  std::uint32_t min_degree = 0;
  std::uint32_t max_degree = 0;
  CutReport max_bisection;
  bool bisection_ok = false;
  bool degree_ok = false;
};

}  // namespace

ExperimentResult run_theorem2(const ExperimentConfig& cfg) {
  cfg.validate();
  const double p = theorem2_edge_probability(cfg.n, cfg.c);
  const double eps_split = split_epsilon(cfg.eps);
  const double degree_floor = (1.0 - eps_split) * cfg.n * p;

  std::vector<Theorem2Trial> trials(cfg.trials);
  parallel_for(cfg.trials, cfg.workers, [&](std::uint64_t t) {
    Theorem2Trial& out = trials[t];
    out.seed = derive_seed(cfg.master_seed, {t});
    const Graph g = sample_gnp(cfg.n, p, derive_seed(out.seed, {0}));
    out.min_degree = min_degree(g);
    out.max_degree = max_degree(g);
    out.max_bisection = sample_bisection_max_ratio(g, cfg.bisection_samples, derive_seed(out.seed, {1}));
    if (boundary_size(g, out.max_bisection.witness) != out.max_bisection.boundary) {
      throw InvariantError("bisection boundary changed on re-validation");
    }
    out.bisection_ok = bisection_below_bound(out.max_bisection.boundary, out.max_bisection.witness.size(),
                                             out.min_degree, cfg.eps);
    out.degree_ok = out.min_degree >= degree_floor;
  });

  ExperimentResult result = detail::make_result(cfg);
  std::vector<bool> bisection_ok, degree_ok;
  detail::SummaryBuilder ratio_over_delta("max_bisection_ratio_over_min_degree");
  detail::SummaryBuilder delta("min_degree");
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const auto& trial = trials[t];
    const auto& cut = trial.max_bisection;
    ordered_json rec;
    rec["trial"] = t;
    rec["seed"] = trial.seed;
    rec["min_degree"] = trial.min_degree;
    rec["max_degree"] = trial.max_degree;
    rec["max_bisection_boundary"] = cut.boundary;
    rec["bisection_size"] = cut.witness.size();
    rec["max_bisection_ratio"] = cut.ratio.to_string();
    rec["max_bisection_ratio_value"] = cut.ratio.to_double();
    rec["bound"] = (0.5 + cfg.eps) * trial.min_degree;
    rec["bisection_ok"] = trial.bisection_ok;
    rec["degree_ok"] = trial.degree_ok;
    rec["violation_witness"] = trial.bisection_ok ? ordered_json(nullptr) : detail::members_json(cut.witness);
    result.records.push_back(std::move(rec));

    bisection_ok.push_back(trial.bisection_ok);
    degree_ok.push_back(trial.degree_ok);
    if (trial.min_degree > 0) ratio_over_delta.add(cut.ratio.to_double() / trial.min_degree);
    delta.add(trial.min_degree);
  }
  result.frequencies.push_back(detail::count_frequency("sampled_bisections_below_bound", bisection_ok));
  result.frequencies.push_back(detail::count_frequency("min_degree_above_floor", degree_ok));
  result.summaries.push_back(ratio_over_delta.build());
  result.summaries.push_back(delta.build());
  return result;
}

}  // namespace isolab
