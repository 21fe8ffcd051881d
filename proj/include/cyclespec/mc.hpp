#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclespec/formulas.hpp"
#include "cyclespec/graph.hpp"

namespace cyclespec {

/// Cycle statistics of one permutation state.
struct CycleStats {
  std::vector<std::int64_t> counts;  // counts[k-1] = number of k-cycles
  int origin_cycle_length = 0;       // length of the cycle containing vertex 0
  int total_cycles = 0;
};

/// Cycle decomposition by index-chasing.  `perm` must be a permutation of
/// {0, ..., n-1}; anything else raises DomainError.
CycleStats cycle_observables(const std::vector<int>& perm);

/// Which per-state observables run_simulation records at each checkpoint.
struct ObservableSelection {
  std::vector<int> cycle_counts;       // track s_k for these k (1-based)
  bool full_cycle = false;             // indicator {state is one n-cycle}
  bool origin_cycle_length = false;
  bool total_cycles = false;
  bool magnetization_weight = false;   // 2^{total cycle count}
};

struct SimConfig {
  WeightedGraph graph;
  TimeGrid checkpoints;        // strictly increasing, nonempty
  std::int64_t replicas = 1;
  std::uint64_t master_seed = 0;
  ObservableSelection observables;
};

/// One observable tracked across the checkpoint grid.
struct ObservableSeries {
  std::string name;               // "s_2", "full_cycle", ...
  std::vector<double> mean;       // one entry per checkpoint
  std::vector<double> std_error;  // sample stdev / sqrt(replicas)
};

struct SimReport {
  SimConfig config;  // echo of the resolved configuration
  std::vector<ObservableSeries> series;
};

/// Event-driven continuous-time simulation: a single aggregate exponential
/// clock with total rate W = sum of edge weights, edge choice by an alias
/// table, one transposition per event.  Replica r draws from an independent
/// stream seeded by mix_seed(master_seed, r), so the report is bit-identical
/// for any `threads` (0 = hardware default).  Observables are recorded at
/// every checkpoint the next event time crosses.
SimReport run_simulation(const SimConfig& config, int threads = 0);

/// One checkpoint of the magnetization estimate.
struct MagnetizationPoint {
  double t = 0.0;
  double magnetization = 0.0;      // (1/2) E[1{c(0) > thr} 2^C] / E[2^C]
  double magnetization_se = 0.0;   // delta-method standard error
  double prob_long_origin = 0.0;   // plain P(c(0) > thr), no reweighting
  double prob_long_origin_se = 0.0;
  double weight_mean = 0.0;        // E[2^C]; 2^n exactly at t = 0
  bool indeterminate = false;      // denominator estimate vanished
};

struct MagnetizationReport {
  int threshold = 0;
  std::int64_t replicas = 0;
  std::uint64_t master_seed = 0;
  std::vector<MagnetizationPoint> points;
};

/// Spontaneous-magnetization ratio estimator, with the cycle-count weights
/// 2^C handled as exact powers of two rescaled by the running per-chunk
/// maximum (no overflow for any graph size).  Also reports the unweighted
/// long-origin-cycle probability alongside.  Requires 0 <= threshold < n.
MagnetizationReport magnetization_estimator(const SimConfig& config,
                                            int threshold, int threads = 0);

}  // namespace cyclespec
