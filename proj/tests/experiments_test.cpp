#include <gtest/gtest.h>

#include <cmath>

#include "isolab/error.hpp"
#include "isolab/experiments.hpp"
#include "isolab/iso_solver.hpp"
#include "isolab/process.hpp"
#include "isolab/rng.hpp"
#include "isolab/worker_pool.hpp"

namespace isolab {
namespace {

std::string without_clock(ExperimentResult r) {
  r.wall_clock_seconds = 0;
  return emit(r, OutputFormat::Json);
}

ExperimentConfig small(ExperimentKind kind) {
  auto cfg = ExperimentConfig::defaults(kind);
  switch (kind) {
    case ExperimentKind::Theorem1:
      cfg.n = 10;
      cfg.trials = 12;
      cfg.d_max = 2;
      break;
    case ExperimentKind::Theorem2:
      cfg.n = 200;
      cfg.eps = 0.4;
      cfg.c = 8.5;
      cfg.trials = 4;
      cfg.bisection_samples = 200;
      break;
    case ExperimentKind::Prop1:
      cfg.n = 3000;
      cfg.trials = 6;
      break;
    case ExperimentKind::Claims:
      cfg.n = 400;
      cfg.trials = 3;
      cfg.large_set_samples = 20;
      break;
    case ExperimentKind::Sandwich:
      cfg.n = 9;
      cfg.trials = 6;
      cfg.p_grid = {0.3, 0.7};
      break;
  }
  return cfg;
}

constexpr ExperimentKind kAllKinds[] = {ExperimentKind::Theorem1, ExperimentKind::Theorem2, ExperimentKind::Prop1,
                                        ExperimentKind::Claims, ExperimentKind::Sandwich};

TEST(WorkerPool, RunsEveryIndexAndRethrowsLowest) {
  std::vector<int> hits(100, 0);
  parallel_for(100, 4, [&](std::uint64_t i) { ++hits[i]; });
  for (int h : hits) EXPECT_EQ(h, 1);
  try {
    parallel_for(50, 3, [](std::uint64_t i) {
      if (i == 7 || i == 30) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
}

TEST(Experiments, IdenticalAcrossWorkerCountsAndReruns) {
  for (auto kind : kAllKinds) {
    auto cfg = small(kind);
    cfg.workers = 1;
    const auto serial = without_clock(run_experiment(cfg));
    cfg.workers = 5;
    EXPECT_EQ(without_clock(run_experiment(cfg)), serial) << to_string(kind);
    EXPECT_EQ(without_clock(run_experiment(cfg)), serial) << to_string(kind);
  }
}

TEST(Experiments, SchemaAndConfigEcho) {
  const auto r = run_experiment(small(ExperimentKind::Theorem1));
  const auto j = nlohmann::ordered_json::parse(emit(r, OutputFormat::Json));
  EXPECT_EQ(j.begin().key(), "schema");
  EXPECT_EQ(j["schema"], "iso-lab/1");
  EXPECT_EQ((--j.end()).key(), "wall_clock_seconds");
  EXPECT_EQ(j["config"]["n"], 10);
  EXPECT_FALSE(j["config"].contains("workers"));
  EXPECT_EQ(j["records"].size(), 12u);
  EXPECT_EQ(j["version"], code_version());
}

TEST(Emit, JsonRoundTrip) {
  for (auto kind : kAllKinds) {
    const auto r = run_experiment(small(kind));
    const std::string once = emit(r, OutputFormat::Json);
    EXPECT_EQ(emit(parse_result_json(once), OutputFormat::Json), once) << to_string(kind);
  }
  EXPECT_THROW(parse_result_json(R"({"schema": "other/2"})"), ConfigError);
  EXPECT_THROW(parse_result_json("not json"), ConfigError);
}

TEST(Emit, CsvAggregates) {
  ExperimentResult r;
  r.kind = ExperimentKind::Sandwich;
  r.frequencies.push_back({"holds", 3, 4});
  r.summaries.push_back({"ratio", 2, 0.5, 1.0, 0.75});
  EXPECT_EQ(emit(r, OutputFormat::Csv),
            "kind,metric,type,successes,trials,frequency,count,min,max,mean\n"
            "sandwich,holds,frequency,3,4,3/4,,,,\n"
            "sandwich,ratio,summary,,,,2,0.5,1,0.75\n");
  EXPECT_THROW(parse_output_format("xml"), ConfigError);
}

TEST(Emit, RecordsCsvJoinsArrays) {
  ExperimentResult r;
  r.records.push_back({{"trial", 0}, {"tau", {3, 5}}, {"witness", {{1, 2}, nullptr}}, {"ok", true}});
  EXPECT_EQ(emit_records_csv(r), "trial,tau,witness,ok\n0,3;5,1 2;,1\n");
}

TEST(Emit, WriteFileReportsPath) {
  try {
    write_file("/nonexistent-dir/out.json", "x");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/out.json"), std::string::npos);
  }
}

TEST(Config, Validation) {
  auto t2 = ExperimentConfig::defaults(ExperimentKind::Theorem2);
  EXPECT_NO_THROW(t2.validate());
  t2.c = 10;
  try {
    t2.validate();
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("15.86"), std::string::npos);
  }
  t2.c = 16;
  t2.eps = 0.5;
  EXPECT_THROW(t2.validate(), ConfigError);
  t2.eps = 0.25;
  t2.n = 50;
  EXPECT_THROW(t2.validate(), ConfigError);

  auto t1 = ExperimentConfig::defaults(ExperimentKind::Theorem1);
  t1.n = 40;
  EXPECT_THROW(t1.validate(), ConfigError);
  t1.falsifier = true;
  EXPECT_NO_THROW(t1.validate());
  t1.exact_cap = 31;
  EXPECT_THROW(t1.validate(), ConfigError);

  auto p1 = ExperimentConfig::defaults(ExperimentKind::Prop1);
  p1.n = 20;
  EXPECT_THROW(p1.validate(), DomainError);

  auto sw = ExperimentConfig::defaults(ExperimentKind::Sandwich);
  sw.p_grid = {0.0};
  EXPECT_THROW(sw.validate(), ConfigError);
  sw.p_grid = {0.5};
  sw.trials = 0;
  EXPECT_THROW(sw.validate(), ConfigError);

  EXPECT_THROW(parse_experiment_kind("theorem3"), ConfigError);
  for (auto kind : kAllKinds) EXPECT_EQ(parse_experiment_kind(to_string(kind)), kind);
}

TEST(Theorem1, ZeroDegreeIsVacuous) {
  auto cfg = small(ExperimentKind::Theorem1);
  cfg.d_max = 0;
  const auto r = run_experiment(cfg);
  const auto* f = r.frequency("i_equals_delta_for_all_t");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->successes, cfg.trials);
}

TEST(Theorem1, RecordsAgreeWithDirectRecomputation) {
  auto cfg = small(ExperimentKind::Theorem1);
  const auto r = run_experiment(cfg);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const auto& rec = r.records[t];
    const auto trace = sample_trace(cfg.n, rec["seed"].get<std::uint64_t>());
    const auto tau = hitting_times(trace, cfg.d_max);
    bool all = true;
    for (std::uint32_t d = 1; d <= cfg.d_max; ++d) {
      ASSERT_EQ(rec["tau"][d - 1], tau.at(d));
      const Graph g = graph_at(trace, tau.at(d));
      const auto best = iso_exact(g);
      ASSERT_EQ(rec["i"][d - 1], best.ratio.to_string());
      const bool equal = best.ratio == Ratio{d, 1};
      ASSERT_EQ(rec["i_equals_delta"][d - 1], equal);
      all = all && equal;
      if (equal) {
        ASSERT_EQ(rec["witness_deficiency"][d - 1], 0);
        ASSERT_TRUE(rec["violation_witness"][d - 1].is_null());
      } else {
        // Every recorded i < δ event carries a witness with |∂S| < δ|S|.
        VertexSet s(cfg.n);
        for (const auto& v : rec["violation_witness"][d - 1]) s.insert(v.get<Vertex>());
        ASSERT_LT(boundary_size(g, s), d * s.size());
      }
    }
    ASSERT_EQ(rec["i_equals_delta_for_all_t"], all);
  }
}

TEST(Theorem1, FalsifierAgreesWithExactBelowCap) {
  auto exact = small(ExperimentKind::Theorem1);
  exact.n = 14;
  exact.exact_cap = 14;
  auto falsifier = exact;
  falsifier.exact_cap = 13;
  falsifier.falsifier = true;
  falsifier.bisection_samples = 500;
  const auto a = run_experiment(exact), b = run_experiment(falsifier);
  // The heuristic can only miss violations, never invent them.
  for (std::uint64_t t = 0; t < exact.trials; ++t) {
    for (std::uint32_t d = 0; d < exact.d_max; ++d) {
      if (!b.records[t]["i_equals_delta"][d].get<bool>()) {
        EXPECT_FALSE(a.records[t]["i_equals_delta"][d].get<bool>());
      }
    }
  }
}

TEST(Theorem2, BoundComparisonIsExactOnCompleteGraphs) {
  // K_n bisections all have ratio ceil(n/2); compare with (1/2 + eps)(n - 1).
  for (std::uint32_t n = 4; n <= 40; ++n) {
    for (double eps : {0.1, 0.25, 0.49}) {
      const std::uint64_t half = n / 2;
      const std::uint64_t boundary = half * (n - half);
      const bool expected = 2.0L * ((n + 1) / 2) < (1.0L + 2.0L * eps) * (n - 1);
      EXPECT_EQ(bisection_below_bound(boundary, half, n - 1, eps), expected);
    }
  }
  // Equality is not "below".
  EXPECT_FALSE(bisection_below_bound(3, 2, 2, 0.25));
}

TEST(Theorem2, ViolationsShipWitnesses) {
  auto cfg = small(ExperimentKind::Theorem2);
  const auto r = run_experiment(cfg);
  for (const auto& rec : r.records) {
    if (rec["bisection_ok"].get<bool>()) {
      EXPECT_TRUE(rec["violation_witness"].is_null());
    } else {
      EXPECT_FALSE(rec["violation_witness"].is_null());
    }
  }
}

TEST(Prop1, DegreeOneLowerCheckMeansIsolatedVertex) {
  auto cfg = small(ExperimentKind::Prop1);
  cfg.d_max = 1;
  cfg.n = 2000;
  const auto r = run_experiment(cfg);
  for (const auto& rec : r.records) {
    const auto trace = sample_trace(cfg.n, rec["seed"].get<std::uint64_t>());
    const Graph g = graph_at(trace, rec["m_d"][0].get<std::uint64_t>());
    EXPECT_EQ(rec["lower_ok"][0].get<bool>(), min_degree(g) == 0);
    const Graph h = graph_at(trace, rec["M_d"][0].get<std::uint64_t>());
    EXPECT_EQ(rec["upper_ok"][0].get<bool>(), min_degree(h) >= 1);
  }
}

TEST(Sandwich, NoViolationsAndCompleteGraphCase) {
  const auto r = run_experiment(small(ExperimentKind::Sandwich));
  const auto* f = r.frequency("sandwich_holds");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->successes, f->trials);

  auto full = small(ExperimentKind::Sandwich);
  full.p_grid = {1.0};
  full.trials = 2;
  const auto k = run_experiment(full);
  for (const auto& rec : k.records) {
    EXPECT_EQ(rec["i"], std::to_string((full.n + 1) / 2) + "/1");
    EXPECT_NEAR(rec["lambda2"].get<double>(), full.n, 1e-9);
    EXPECT_NEAR(rec["upper"].get<double>(), std::sqrt(double(full.n) * (2.0 * (full.n - 1) - full.n)), 1e-7);
  }
}

TEST(Sandwich, SparseGridRecordsDisconnectedSkips) {
  auto cfg = small(ExperimentKind::Sandwich);
  cfg.p_grid = {0.15};
  cfg.trials = 10;
  const auto r = run_experiment(cfg);
  std::uint64_t skipped = 0;
  for (const auto& rec : r.records) skipped += rec["disconnected_skipped"].get<std::uint64_t>();
  EXPECT_GT(skipped, 0u);
  cfg.max_attempts = 1;
  cfg.trials = 50;
  EXPECT_THROW(run_experiment(cfg), ResourceError);
}

TEST(Claims, EdgelessAndNormalRuns) {
  const auto r = run_experiment(small(ExperimentKind::Claims));
  EXPECT_NE(r.frequency("claim1_small_set_separated"), nullptr);
  EXPECT_NE(r.frequency("claim2_sparse_small_subgraphs"), nullptr);
  EXPECT_NE(r.frequency("lemma3_large_sets_expand"), nullptr);
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec["claim2_at_m_d"].get<bool>(), rec["density_violator_at_m_d"].is_null());
  }
}

}  // namespace
}  // namespace isolab
