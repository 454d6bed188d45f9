#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "isolab/graph.hpp"
#include "isolab/thresholds.hpp"

namespace isolab {

inline constexpr std::string_view kResultSchema = "iso-lab/1";

enum class ExperimentKind { Theorem1, Theorem2, Prop1, Claims, Sandwich };

const char* to_string(ExperimentKind kind);
/// "theorem1", "theorem2", "prop1", "claims", "sandwich". Throws ConfigError.
ExperimentKind parse_experiment_kind(std::string_view name);

/// Flat configuration shared by all experiment kinds; each kind reads the
/// fields it needs and validate() checks them against the module preconditions.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Theorem1;
  Vertex n = 12;
  std::uint64_t trials = 100;
  std::uint64_t master_seed = 1;

  std::uint32_t d_max = 3;  // theorem1, prop1
  std::uint32_t d = 2;      // claims
  double eps = 0.25;        // theorem2
  double c = 16.0;          // theorem2
  std::uint64_t bisection_samples = 10'000;
  Vertex exact_cap = 26;
  OmegaRule omega_rule;
  /// theorem1 above exact_cap: search for bad sets instead of exact i(G).
  bool falsifier = false;

  std::vector<double> p_grid{0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};  // sandwich
  double tol = 1e-7;                                                   // sandwich
  std::uint64_t max_attempts = 100'000;  // sandwich resampling per connected sample

  std::uint32_t k_max = 0;                 // claims; 0 means ceil(n^(1/4))
  std::uint64_t large_set_samples = 200;  // claims, per size on the grid

  /// Execution only; never part of the result.
  unsigned workers = 1;

  /// Desk-scale defaults for `kind`.
  static ExperimentConfig defaults(ExperimentKind kind);

  /// Throws ConfigError before any trial runs.
  void validate() const;
  /// Fields relevant to `kind`, in a fixed order.
  nlohmann::ordered_json echo() const;
};

/// successes / trials, reported unreduced.
struct Frequency {
  std::string name;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
};

struct Summary {
  std::string name;
  std::uint64_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

struct ExperimentResult {
  std::string schema{kResultSchema};
  std::string version;
  ExperimentKind kind = ExperimentKind::Theorem1;
  nlohmann::ordered_json config;
  std::vector<Frequency> frequencies;
  std::vector<Summary> summaries;
  /// One object per trial, ordered by trial index.
  std::vector<nlohmann::ordered_json> records;
  double wall_clock_seconds = 0.0;

  const Frequency* frequency(std::string_view name) const;
  const Summary* summary(std::string_view name) const;
};

/// Version string stamped into every result.
std::string code_version();

ExperimentResult run_theorem1(const ExperimentConfig& cfg);
ExperimentResult run_theorem2(const ExperimentConfig& cfg);
ExperimentResult run_prop1(const ExperimentConfig& cfg);
ExperimentResult run_claims(const ExperimentConfig& cfg);
ExperimentResult run_sandwich(const ExperimentConfig& cfg);

/// Validates, dispatches on cfg.kind and stamps wall-clock time.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Strict comparison |∂S|/|S| < (1/2 + eps) δ, i.e. 2|∂S| < (1 + 2 eps) δ |S|.
bool bisection_below_bound(std::uint64_t boundary, std::uint64_t size, std::uint32_t min_degree, double eps);

enum class OutputFormat { Json, Csv };
OutputFormat parse_output_format(std::string_view name);

/// JSON: the full result with a top-level "schema" and wall_clock_seconds last.
/// CSV: the aggregate table with header
///   kind,metric,type,successes,trials,frequency,count,min,max,mean
std::string emit(const ExperimentResult& result, OutputFormat format);

/// Per-trial records as CSV; arrays are joined with ';'.
std::string emit_records_csv(const ExperimentResult& result);

/// Inverse of emit(..., Json). Throws ConfigError on schema mismatch.
ExperimentResult parse_result_json(std::string_view text);

/// Writes `bytes` to `path`; throws IoError naming the path.
void write_file(const std::string& path, std::string_view bytes);

}  // namespace isolab
