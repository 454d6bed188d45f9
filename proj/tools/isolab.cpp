// Command-line front end: sampling, exact analysis of edge-list files,
// process and threshold tables, experiment runs and oracle cross-checks.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isolab/edge_list.hpp"
#include "isolab/error.hpp"
#include "isolab/experiments.hpp"
#include "isolab/iso_solver.hpp"
#include "isolab/process.hpp"
#include "isolab/spectral.hpp"
#include "isolab/thresholds.hpp"
#include "verify.hpp"

namespace {

using namespace isolab;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInvariant = 3;

void deliver(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

ordered_json members(const VertexSet& s) {
  auto arr = ordered_json::array();
  s.for_each([&](Vertex v) { arr.push_back(v); });
  return arr;
}

struct SampleArgs {
  Vertex n = 0;
  std::optional<double> p;
  std::optional<std::uint64_t> m;
  std::uint64_t seed = 1;
  std::string out;
};

void cmd_sample(const SampleArgs& a) {
  if (a.p.has_value() == a.m.has_value()) throw ConfigError("sample needs exactly one of --p or --m");
  const Graph g = a.p ? sample_gnp(a.n, *a.p, a.seed) : sample_gnm(a.n, *a.m, a.seed);
  deliver(write_edge_list(g), a.out);
}

struct IsoArgs {
  std::string file;
  Vertex exact_cap = 26;
  std::optional<std::uint32_t> d;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  bool all_witnesses = false;
  std::string out;
};

void cmd_iso(const IsoArgs& a) {
  const Graph g = read_edge_list_file(a.file);
  SolverConfig solver;
  solver.exact_cap = a.exact_cap;
  solver.bisection_samples = a.samples;
  solver.seed = a.seed;
  solver.validate();

  ordered_json j;
  j["n"] = g.num_vertices();
  j["edges"] = g.num_edges();
  j["min_degree"] = min_degree(g);
  j["max_degree"] = max_degree(g);
  j["connected"] = is_connected(g);
  if (g.num_vertices() >= 2 && g.num_vertices() <= a.exact_cap) {
    const auto best = iso_exact(g, solver);
    j["i"] = best.ratio.reduced().to_string();
    j["i_value"] = best.ratio.to_double();
    j["witness"] = members(best.witness);
    j["witness_boundary"] = best.boundary;
    j["witness_kind"] = to_string(best.witness_kind);
    if (a.all_witnesses) {
      auto all = ordered_json::array();
      for (const auto& w : iso_exact_all_witnesses(g, solver)) {
        all.push_back(ordered_json{{"set", members(w.witness)}, {"kind", to_string(w.witness_kind)}});
      }
      j["minimizers"] = std::move(all);
    }
  } else {
    j["i"] = nullptr;
  }
  if (g.num_vertices() >= 2 && g.num_vertices() <= kSpectralCap) {
    const auto b = spectral_bounds(g);
    j["lambda2"] = b.lambda2;
    j["spectral_lower"] = b.lower;
    j["spectral_upper"] = b.upper;
  }
  if (a.d) {
    const auto bad = find_bad_set(g, *a.d, solver);
    j["bad_set_d"] = *a.d;
    j["bad_set"] = bad ? members(*bad) : ordered_json(nullptr);
    if (bad) j["bad_set_boundary"] = boundary_size(g, *bad);
  }
  deliver(j.dump(2) + "\n", a.out);
}

struct ProcessArgs {
  Vertex n = 0;
  std::uint64_t seed = 1;
  std::uint32_t d_max = 3;
  std::string format = "csv";
  std::string out;
};

void cmd_process(const ProcessArgs& a) {
  const auto format = parse_output_format(a.format);
  const auto trace = sample_trace(a.n, a.seed);
  const auto tau = hitting_times(trace, a.d_max);
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "d,tau\n";
    for (std::uint32_t d = 1; d <= a.d_max; ++d) out << d << ',' << tau.at(d) << '\n';
  } else {
    ordered_json j;
    j["n"] = a.n;
    j["seed"] = a.seed;
    j["tau"] = tau.tau;
    out << j.dump(2) << '\n';
  }
  deliver(out.str(), a.out);
}

struct ThresholdArgs {
  std::vector<std::uint64_t> n{1000, 10'000, 50'000, 100'000};
  std::uint32_t d_max = 2;
  std::string omega_rule = "loglogr";
  std::vector<double> eps{0.05, 0.1, 0.25, 0.5};
  std::string out;
};

void cmd_thresholds(const ThresholdArgs& a) {
  const auto rule = OmegaRule::parse(a.omega_rule);
  std::ostringstream out;
  out << "n,d,r,omega,m_d,M_d\n";
  for (std::uint64_t n : a.n) {
    for (std::uint32_t d = 1; d <= a.d_max; ++d) {
      out << n << ',' << d << ',';
      try {
        const auto params = ThresholdParams::make(n, d, rule);
        out << params.r() << ',' << params.omega << ',' << lower_threshold(params) << ','
            << upper_threshold(params) << '\n';
      } catch (const DomainError& e) {
        out << ",,,,  # " << e.what() << '\n';
      }
    }
  }
  out << "\neps,c_epsilon\n";
  for (double eps : a.eps) out << eps << ',' << c_epsilon(eps) << '\n';
  deliver(out.str(), a.out);
}

struct RunArgs {
  std::string kind;
  std::optional<Vertex> n;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> d_max;
  std::optional<std::uint32_t> d;
  std::optional<double> eps;
  std::optional<double> c;
  std::optional<std::string> omega_rule;
  std::optional<Vertex> exact_cap;
  std::optional<std::uint64_t> samples;
  std::optional<std::vector<double>> p_grid;
  std::optional<double> tol;
  std::optional<std::uint32_t> k_max;
  std::optional<std::uint64_t> large_set_samples;
  std::optional<std::uint64_t> max_attempts;
  bool falsifier = false;
  unsigned workers = 1;
  std::string format = "json";
  std::string out;
  std::string records_csv;
};

template <class T, class U>
void apply(const std::optional<T>& from, U& to) {
  if (from) to = static_cast<U>(*from);
}

void cmd_run(const RunArgs& a) {
  auto cfg = ExperimentConfig::defaults(parse_experiment_kind(a.kind));
  apply(a.n, cfg.n);
  apply(a.trials, cfg.trials);
  apply(a.seed, cfg.master_seed);
  apply(a.d_max, cfg.d_max);
  apply(a.d, cfg.d);
  apply(a.eps, cfg.eps);
  apply(a.c, cfg.c);
  if (a.omega_rule) cfg.omega_rule = OmegaRule::parse(*a.omega_rule);
  apply(a.exact_cap, cfg.exact_cap);
  apply(a.samples, cfg.bisection_samples);
  if (a.p_grid) cfg.p_grid = *a.p_grid;
  apply(a.tol, cfg.tol);
  apply(a.k_max, cfg.k_max);
  apply(a.large_set_samples, cfg.large_set_samples);
  apply(a.max_attempts, cfg.max_attempts);
  cfg.falsifier = a.falsifier;
  cfg.workers = a.workers == 0 ? 1 : a.workers;
  const auto format = parse_output_format(a.format);

  const auto result = run_experiment(cfg);
  deliver(emit(result, format), a.out);
  if (!a.records_csv.empty()) write_file(a.records_csv, emit_records_csv(result));
}

// Applies `key=value` lines (INI syntax) to options of `cmd` that were not set
// on the command line. Keys are option names without the leading dashes.
void apply_config_file(CLI::App& cmd, const std::string& path) {
  if (!std::ifstream(path)) throw IoError("cannot open config file '" + path + "'");
  for (const auto& item : CLI::ConfigINI().from_file(path)) {
    if (item.name == "config") throw ConfigError("config files cannot include other config files");
    CLI::Option* opt = nullptr;
    try {
      opt = cmd.get_option("--" + item.name);
    } catch (const CLI::OptionNotFound&) {
      throw ConfigError("unknown key '" + item.name + "' in " + path);
    }
    if (opt->count() > 0) continue;
    opt->add_result(item.inputs);
    opt->run_callback();
  }
}

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isoperimetric constants of random graphs: exact solvers and Monte Carlo experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", code_version());

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Emit a G(n,p) or G(n,M) edge list");
  sample_cmd->add_option("--n", sample.n, "Number of vertices")->required();
  sample_cmd->add_option("--p", sample.p, "Edge probability");
  sample_cmd->add_option("--m", sample.m, "Edge count");
  sample_cmd->add_option("--seed", sample.seed, "RNG seed");
  sample_cmd->add_option("--out", sample.out, "Output path (default stdout)");

  IsoArgs iso;
  auto* iso_cmd = app.add_subcommand("iso", "Analyse an edge-list file");
  iso_cmd->add_option("file", iso.file, "Edge-list file")->required();
  iso_cmd->add_option("--exact-cap", iso.exact_cap, "Largest n solved exactly");
  iso_cmd->add_option("--d", iso.d, "Also search for S with |boundary| < d|S|");
  iso_cmd->add_option("--samples", iso.samples, "Bisection samples for the bad-set search");
  iso_cmd->add_option("--seed", iso.seed, "RNG seed for the bad-set search");
  iso_cmd->add_flag("--all-witnesses", iso.all_witnesses, "List every minimizing set");
  iso_cmd->add_option("--out", iso.out, "Output path (default stdout)");

  ProcessArgs process;
  auto* process_cmd = app.add_subcommand("process", "Minimum-degree hitting times of one random graph process");
  process_cmd->add_option("--n", process.n, "Number of vertices")->required();
  process_cmd->add_option("--seed", process.seed, "RNG seed");
  process_cmd->add_option("--d-max", process.d_max, "Largest minimum degree tracked");
  process_cmd->add_option("--format", process.format, "csv or json");
  process_cmd->add_option("--out", process.out, "Output path (default stdout)");

  ThresholdArgs thresholds;
  auto* thresholds_cmd = app.add_subcommand("thresholds", "Print m_d, M_d and c_epsilon tables");
  thresholds_cmd->add_option("--n", thresholds.n, "Vertex counts")->delimiter(',');
  thresholds_cmd->add_option("--d-max", thresholds.d_max, "Largest d");
  thresholds_cmd->add_option("--omega-rule", thresholds.omega_rule, "loglogr, logloglogn or explicit:<value>");
  thresholds_cmd->add_option("--eps", thresholds.eps, "eps values for c_epsilon")->delimiter(',');
  thresholds_cmd->add_option("--out", thresholds.out, "Output path (default stdout)");

  RunArgs run;
  run.workers = default_workers();
  auto* run_cmd = app.add_subcommand("run", "Run an experiment");
  std::string run_config;
  run_cmd->add_option("--config", run_config, "key=value file of run options; command-line flags take precedence");
  run_cmd->add_option("kind", run.kind, "theorem1, theorem2, prop1, claims or sandwich")->required();
  run_cmd->add_option("--n", run.n, "Number of vertices");
  run_cmd->add_option("--trials", run.trials, "Number of trials");
  run_cmd->add_option("--seed", run.seed, "Master seed");
  run_cmd->add_option("--d-max", run.d_max, "Largest minimum degree examined (theorem1, prop1)");
  run_cmd->add_option("--d", run.d, "Target minimum degree (claims)");
  run_cmd->add_option("--eps", run.eps, "Bisection slack (theorem2)");
  run_cmd->add_option("--C", run.c, "Density constant, p = C ln(n)/n (theorem2)");
  run_cmd->add_option("--omega-rule", run.omega_rule, "loglogr, logloglogn or explicit:<value>");
  run_cmd->add_option("--exact-cap", run.exact_cap, "Largest n solved exactly");
  run_cmd->add_option("--samples", run.samples, "Bisection samples per graph");
  run_cmd->add_option("--p-grid", run.p_grid, "Edge probabilities (sandwich)")->delimiter(',');
  run_cmd->add_option("--tol", run.tol, "Absolute tolerance of the spectral check (sandwich)");
  run_cmd->add_option("--k-max", run.k_max, "Largest set size for the density check (claims)");
  run_cmd->add_option("--large-set-samples", run.large_set_samples, "Random sets per size (claims)");
  run_cmd->add_option("--max-attempts", run.max_attempts, "Resampling budget per connected graph (sandwich)");
  run_cmd->add_flag("--falsifier", run.falsifier, "theorem1 above exact-cap: search for bad sets");
  run_cmd->add_option("--workers", run.workers, "Worker threads")->envname("ISOLAB_WORKERS");
  run_cmd->add_option("--format", run.format, "json or csv");
  run_cmd->add_option("--out", run.out, "Output path (default stdout)");
  run_cmd->add_option("--records-csv", run.records_csv, "Also write per-trial records as CSV");

  std::uint64_t verify_seed = 1;
  std::uint64_t verify_graphs = 50;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check solvers against brute-force references");
  verify_cmd->add_option("--seed", verify_seed, "RNG seed");
  verify_cmd->add_option("--graphs", verify_graphs, "Random graphs per check and size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd && !run_config.empty()) {
      try {
        apply_config_file(*run_cmd, run_config);
      } catch (const CLI::Error& e) {
        throw ConfigError(std::string("config file ") + run_config + ": " + e.what());
      }
    }
    if (*sample_cmd) cmd_sample(sample);
    if (*iso_cmd) cmd_iso(iso);
    if (*process_cmd) cmd_process(process);
    if (*thresholds_cmd) cmd_thresholds(thresholds);
    if (*run_cmd) cmd_run(run);
    if (*verify_cmd) {
      const int failed = cli::run_verify(verify_seed, verify_graphs, std::cout);
      return failed == 0 ? kExitOk : kExitInvariant;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
