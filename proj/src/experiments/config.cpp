#include <chrono>
#include <charconv>
#include <cmath>
#include <string>

#include "internal.hpp"
#include "isolab/error.hpp"
#include "isolab/iso_solver.hpp"
#include "isolab/thresholds.hpp"

#ifndef ISOLAB_VERSION
#define ISOLAB_VERSION "0.0.0"
#endif

namespace isolab {

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Theorem1:
      return "theorem1";
    case ExperimentKind::Theorem2:
      return "theorem2";
    case ExperimentKind::Prop1:
      return "prop1";
    case ExperimentKind::Claims:
      return "claims";
    case ExperimentKind::Sandwich:
      return "sandwich";
  }
  return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  for (auto kind : {ExperimentKind::Theorem1, ExperimentKind::Theorem2, ExperimentKind::Prop1,
                    ExperimentKind::Claims, ExperimentKind::Sandwich}) {
    if (name == to_string(kind)) return kind;
  }
  throw ConfigError("unknown experiment kind '" + std::string(name) +
                    "' (expected theorem1, theorem2, prop1, claims or sandwich)");
}

std::string code_version() { return std::string("iso-lab ") + ISOLAB_VERSION; }

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

std::uint32_t effective_k_max(const ExperimentConfig& cfg) {
  return cfg.k_max != 0 ? cfg.k_max : ceil_fourth_root(cfg.n);
}

}  // namespace

ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  switch (kind) {
    case ExperimentKind::Theorem1:
      cfg.n = 12;
      cfg.trials = 200;
      cfg.d_max = 3;
      break;
    case ExperimentKind::Theorem2:
      cfg.n = 2000;
      cfg.trials = 50;
      break;
    case ExperimentKind::Prop1:
      cfg.n = 50'000;
      cfg.trials = 50;
      cfg.d_max = 2;
      break;
    case ExperimentKind::Claims:
      cfg.n = 3000;
      cfg.trials = 50;
      cfg.d = 2;
      break;
    case ExperimentKind::Sandwich:
      cfg.n = 16;
      cfg.trials = 100;
      break;
  }
  return cfg;
}

void ExperimentConfig::validate() const {
  require(trials >= 1, "trials must be at least 1");
  require(n >= 2, "n must be at least 2");

  switch (kind) {
    case ExperimentKind::Theorem1:
      require(d_max < n, "d_max must be at most n - 1");
      require(exact_cap <= SolverConfig::kMaxExactCap,
              "exact_cap must be at most " + std::to_string(SolverConfig::kMaxExactCap));
      require(n <= exact_cap || falsifier,
              "n = " + std::to_string(n) + " exceeds exact_cap = " + std::to_string(exact_cap) +
                  "; raise exact_cap or enable falsifier mode");
      require(!falsifier || bisection_samples >= 1, "bisection_samples must be at least 1");
      break;
    case ExperimentKind::Theorem2: {
      require(eps > 0.0 && eps < 0.5, "eps must lie in (0, 1/2)");
      const double c_min = c_epsilon(eps);
      require(c > c_min, "C = " + detail::format_double(c) + " must exceed (1+2eps)/(2eps - ln(1+2eps)) = " +
                             detail::format_double(c_min) + " for eps = " + detail::format_double(eps));
      require(n >= 100, "theorem2 runs need n >= 100");
      require(bisection_samples >= 1, "bisection_samples must be at least 1");
      const double p = c * std::log(static_cast<double>(n)) / n;
      require(p <= 1.0, "C ln(n)/n exceeds 1");
      break;
    }
    case ExperimentKind::Prop1:
      require(d_max >= 1, "prop1 needs d_max >= 1");
      require(d_max < n, "d_max must be at most n - 1");
      for (std::uint32_t dd = 1; dd <= d_max; ++dd) {
        const auto params = ThresholdParams::make(n, dd, omega_rule);
        (void)lower_threshold(params);
      }
      break;
    case ExperimentKind::Claims: {
      require(d >= 1, "claims needs d >= 1");
      const auto params = ThresholdParams::make(n, d, omega_rule);
      (void)lower_threshold(params);
      require(effective_k_max(*this) <= n, "k_max exceeds n");
      break;
    }
    case ExperimentKind::Sandwich:
      require(exact_cap <= SolverConfig::kMaxExactCap,
              "exact_cap must be at most " + std::to_string(SolverConfig::kMaxExactCap));
      require(n <= exact_cap, "sandwich needs exact i(G): n must not exceed exact_cap");
      require(!p_grid.empty(), "p grid is empty");
      for (double p : p_grid) require(p > 0.0 && p <= 1.0, "grid probabilities must lie in (0, 1]");
      require(tol >= 0.0, "tolerance must be nonnegative");
      require(max_attempts >= 1, "max_attempts must be at least 1");
      break;
  }
}

nlohmann::ordered_json ExperimentConfig::echo() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(kind);
  j["n"] = n;
  j["trials"] = trials;
  j["seed"] = master_seed;
  switch (kind) {
    case ExperimentKind::Theorem1:
      j["d_max"] = d_max;
      j["exact_cap"] = exact_cap;
      j["mode"] = n <= exact_cap ? "exact" : "falsifier";
      if (n > exact_cap) j["bisection_samples"] = bisection_samples;
      break;
    case ExperimentKind::Theorem2:
      j["eps"] = eps;
      j["C"] = c;
      j["c_epsilon"] = c_epsilon(eps);
      j["p"] = theorem2_edge_probability(n, c);
      j["eps_split"] = split_epsilon(eps);
      j["bisection_samples"] = bisection_samples;
      break;
    case ExperimentKind::Prop1:
      j["d_max"] = d_max;
      j["omega_rule"] = omega_rule.to_string();
      break;
    case ExperimentKind::Claims:
      j["d"] = d;
      j["omega_rule"] = omega_rule.to_string();
      j["k_max"] = effective_k_max(*this);
      j["large_set_samples"] = large_set_samples;
      break;
    case ExperimentKind::Sandwich:
      j["p_grid"] = p_grid;
      j["tol"] = tol;
      j["exact_cap"] = exact_cap;
      break;
  }
  return j;
}

const Frequency* ExperimentResult::frequency(std::string_view name) const {
  for (const auto& f : frequencies)
    if (f.name == name) return &f;
  return nullptr;
}

const Summary* ExperimentResult::summary(std::string_view name) const {
  for (const auto& s : summaries)
    if (s.name == name) return &s;
  return nullptr;
}

bool bisection_below_bound(std::uint64_t boundary, std::uint64_t size, std::uint32_t min_degree, double eps) {
  const long double lhs = 2.0L * static_cast<long double>(boundary);
  const long double rhs = (1.0L + 2.0L * static_cast<long double>(eps)) * min_degree * static_cast<long double>(size);
  return lhs < rhs;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  ExperimentResult result;
  switch (cfg.kind) {
    case ExperimentKind::Theorem1:
      result = run_theorem1(cfg);
      break;
    case ExperimentKind::Theorem2:
      result = run_theorem2(cfg);
      break;
    case ExperimentKind::Prop1:
      result = run_prop1(cfg);
      break;
    case ExperimentKind::Claims:
      result = run_claims(cfg);
      break;
    case ExperimentKind::Sandwich:
      result = run_sandwich(cfg);
      break;
  }
  result.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace detail {

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

ExperimentResult make_result(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.version = code_version();
  r.kind = cfg.kind;
  r.config = cfg.echo();
  return r;
}

}  // namespace detail

}  // namespace isolab
