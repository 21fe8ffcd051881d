#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cyclespec/formulas.hpp"
#include "cyclespec/mc.hpp"
#include "cyclespec/rng.hpp"

using namespace cyclespec;

namespace {

bool reports_equal(const SimReport& a, const SimReport& b) {
  if (a.series.size() != b.series.size()) return false;
  for (std::size_t i = 0; i < a.series.size(); ++i) {
    if (a.series[i].name != b.series[i].name) return false;
    if (a.series[i].mean != b.series[i].mean) return false;
    if (a.series[i].std_error != b.series[i].std_error) return false;
  }
  return true;
}

const ObservableSeries& find_series(const SimReport& r, const std::string& name) {
  for (const auto& s : r.series) {
    if (s.name == name) return s;
  }
  REQUIRE(false);
  return r.series.front();
}

}  // namespace

TEST_CASE("cycle decomposition of explicit permutations") {
  auto id5 = cycle_observables({0, 1, 2, 3, 4});
  CHECK(id5.counts == std::vector<std::int64_t>{5, 0, 0, 0, 0});
  CHECK(id5.origin_cycle_length == 1);
  CHECK(id5.total_cycles == 5);

  auto five_cycle = cycle_observables({1, 2, 3, 4, 0});
  CHECK(five_cycle.counts == std::vector<std::int64_t>{0, 0, 0, 0, 1});
  CHECK(five_cycle.origin_cycle_length == 5);
  CHECK(five_cycle.total_cycles == 1);

  // (0 1)(2 3 4)
  auto mixed = cycle_observables({1, 0, 3, 4, 2});
  CHECK(mixed.counts == std::vector<std::int64_t>{0, 1, 1, 0, 0});
  CHECK(mixed.origin_cycle_length == 2);
  CHECK(mixed.total_cycles == 2);

  CHECK_THROWS_AS(cycle_observables({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(cycle_observables({0, 3}), DomainError);
  CHECK_THROWS_AS(cycle_observables({}), DomainError);
}

TEST_CASE("transpositions merge or split exactly one pair of cycles") {
  SplitMix64 rng(99);
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  for (int step = 0; step < 400; ++step) {
    auto before = cycle_observables(perm);
    int i = static_cast<int>(rng.next() % 8);
    int j = static_cast<int>(rng.next() % 8);
    if (i == j) continue;
    // same cycle iff chasing from i reaches j before returning to i
    bool same = false;
    for (int p = perm[i]; p != i; p = perm[p]) {
      if (p == j) {
        same = true;
        break;
      }
    }
    std::swap(perm[i], perm[j]);
    auto after = cycle_observables(perm);
    CHECK(after.total_cycles == before.total_cycles + (same ? 1 : -1));
    std::int64_t mass = 0;
    for (int k = 1; k <= 8; ++k) mass += k * after.counts[k - 1];
    CHECK(mass == 8);
  }
}

TEST_CASE("checkpoint at zero reports the identity exactly") {
  SimConfig cfg;
  cfg.graph = WeightedGraph::complete(5);
  cfg.checkpoints = make_time_grid({0.0, 0.3});
  cfg.replicas = 500;
  cfg.master_seed = 11;
  cfg.observables.cycle_counts = {1, 2, 3, 4, 5};
  cfg.observables.full_cycle = true;
  cfg.observables.origin_cycle_length = true;
  cfg.observables.total_cycles = true;

  auto report = run_simulation(cfg);
  CHECK(find_series(report, "s_1").mean[0] == 5.0);
  CHECK(find_series(report, "s_1").std_error[0] == 0.0);
  for (int k = 2; k <= 5; ++k) {
    CHECK(find_series(report, "s_" + std::to_string(k)).mean[0] == 0.0);
  }
  CHECK(find_series(report, "full_cycle").mean[0] == 0.0);
  CHECK(find_series(report, "origin_cycle_length").mean[0] == 1.0);
  CHECK(find_series(report, "total_cycles").mean[0] == 5.0);

  // conservation at the later checkpoint: sum_k k E s_k = n
  double mass = 0.0;
  for (int k = 1; k <= 5; ++k) {
    mass += k * find_series(report, "s_" + std::to_string(k)).mean[1];
  }
  CHECK(mass == doctest::Approx(5.0).epsilon(1e-12));

  // indicator means stay in [0, 1]
  for (double v : find_series(report, "full_cycle").mean) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("estimates agree with the exact formulas") {
  SimConfig cfg;
  cfg.graph = WeightedGraph::complete(4);
  cfg.checkpoints = make_time_grid({1.0});
  cfg.replicas = 20000;
  cfg.master_seed = 2026;
  cfg.observables.full_cycle = true;
  cfg.observables.cycle_counts = {2};

  auto report = run_simulation(cfg);
  const auto& full = find_series(report, "full_cycle");
  double exact = prob_full_cycle(cfg.graph, 1.0);
  CHECK(std::abs(full.mean[0] - exact) < 4.0 * full.std_error[0]);

  const auto& s2 = find_series(report, "s_2");
  double exact2 = expected_k_cycles(cfg.graph, 2, 1.0);
  CHECK(std::abs(s2.mean[0] - exact2) < 4.0 * s2.std_error[0]);

  cfg.graph = WeightedGraph::path(4);
  report = run_simulation(cfg);
  const auto& ps2 = find_series(report, "s_2");
  double pexact = expected_k_cycles(cfg.graph, 2, 1.0);
  CHECK(std::abs(ps2.mean[0] - pexact) < 4.0 * ps2.std_error[0]);

  // unequal weights exercise the alias table
  auto wk3 = WeightedGraph::from_edges(
      3, {{0, 1, 1.0}, {0, 2, 2.0}, {1, 2, 3.0}});
  cfg.graph = wk3;
  cfg.checkpoints = make_time_grid({0.7});
  report = run_simulation(cfg);
  const auto& wfull = find_series(report, "full_cycle");
  double wexact = prob_full_cycle(wk3, 0.7);
  CHECK(wfull.std_error[0] > 0.0);
  CHECK(std::abs(wfull.mean[0] - wexact) < 4.0 * wfull.std_error[0]);
}

TEST_CASE("reports are bit-identical across runs and thread counts") {
  SimConfig cfg;
  cfg.graph = WeightedGraph::hypercube(3);
  cfg.checkpoints = make_time_grid({0.2, 0.8, 2.0});
  cfg.replicas = 4096;
  cfg.master_seed = 777;
  cfg.observables.cycle_counts = {1, 2, 8};
  cfg.observables.full_cycle = true;
  cfg.observables.magnetization_weight = true;

  auto r1 = run_simulation(cfg, 1);
  auto r2 = run_simulation(cfg, 4);
  auto r3 = run_simulation(cfg, 4);
  CHECK(reports_equal(r1, r2));
  CHECK(reports_equal(r2, r3));

  auto m1 = magnetization_estimator(cfg, 4, 1);
  auto m4 = magnetization_estimator(cfg, 4, 4);
  REQUIRE(m1.points.size() == m4.points.size());
  for (std::size_t i = 0; i < m1.points.size(); ++i) {
    CHECK(m1.points[i].magnetization == m4.points[i].magnetization);
    CHECK(m1.points[i].magnetization_se == m4.points[i].magnetization_se);
    CHECK(m1.points[i].weight_mean == m4.points[i].weight_mean);
  }

  // a different master seed must actually change the data
  cfg.master_seed = 778;
  auto r4 = run_simulation(cfg, 1);
  CHECK(!reports_equal(r1, r4));
}

TEST_CASE("magnetization estimator at time zero") {
  SimConfig cfg;
  cfg.graph = WeightedGraph::complete(6);
  cfg.checkpoints = make_time_grid({0.0});
  cfg.replicas = 300;
  cfg.master_seed = 5;

  auto rep = magnetization_estimator(cfg, 2);
  REQUIRE(rep.points.size() == 1);
  const auto& pt = rep.points[0];
  CHECK(pt.magnetization == 0.0);
  CHECK(pt.magnetization_se == 0.0);
  CHECK(pt.prob_long_origin == 0.0);
  CHECK(pt.weight_mean == 64.0);  // identity has 6 cycles -> weight 2^6
  CHECK(!pt.indeterminate);

  CHECK_THROWS_AS(magnetization_estimator(cfg, 6), DomainError);
  CHECK_THROWS_AS(magnetization_estimator(cfg, -1), DomainError);
}

TEST_CASE("magnetization on a small torus is seed-stable") {
  SimConfig cfg;
  cfg.graph = WeightedGraph::torus(3, 3);
  cfg.checkpoints = make_time_grid({0.5, 2.0});
  cfg.replicas = 10000;
  cfg.master_seed = 101;
  const int threshold = 13;

  auto a = magnetization_estimator(cfg, threshold);
  cfg.master_seed = 202;
  auto b = magnetization_estimator(cfg, threshold);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(!a.points[i].indeterminate);
    CHECK(!b.points[i].indeterminate);
    CHECK(std::isfinite(a.points[i].magnetization));
    CHECK(a.points[i].magnetization_se > 0.0);
    double gap = std::abs(a.points[i].magnetization - b.points[i].magnetization);
    double sigma = std::hypot(a.points[i].magnetization_se,
                              b.points[i].magnetization_se);
    CHECK(gap <= 3.0 * sigma);
    double pgap =
        std::abs(a.points[i].prob_long_origin - b.points[i].prob_long_origin);
    double psigma = std::hypot(a.points[i].prob_long_origin_se,
                               b.points[i].prob_long_origin_se);
    CHECK(pgap <= 3.0 * psigma);
  }
}

TEST_CASE("configuration validation") {
  SimConfig cfg;
  cfg.graph = WeightedGraph::complete(4);
  cfg.checkpoints = make_time_grid({1.0});
  cfg.replicas = 0;
  CHECK_THROWS_AS(run_simulation(cfg), DomainError);

  cfg.replicas = 10;
  cfg.observables.cycle_counts = {5};
  CHECK_THROWS_AS(run_simulation(cfg), DomainError);

  cfg.observables.cycle_counts = {1};
  cfg.checkpoints.times.clear();
  CHECK_THROWS_AS(run_simulation(cfg), DomainError);

  cfg.checkpoints = make_time_grid({1.0});
  cfg.graph = WeightedGraph::from_edges(3, {});
  CHECK_THROWS_AS(run_simulation(cfg), DomainError);
}
