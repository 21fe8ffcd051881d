#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclespec/graph.hpp"
#include "cyclespec/partition.hpp"

namespace cyclespec {

/// Checkpoint / evaluation times: finite, nonnegative, strictly increasing.
struct TimeGrid {
  std::vector<double> times;
};

/// Validates and wraps a list of times.
TimeGrid make_time_grid(std::vector<double> times);

/// P(the state is one n-cycle at time t): (1/n) prod_{i>=1} (1 - e^{-lambda_i t}),
/// evaluated in log domain.  Disconnected graphs give 0.
double prob_full_cycle(const WeightedGraph& g, double t);

/// E[number of k-cycles at time t] = (1/k) sum_rho a_rho sum_j e^{-t lambda_j(rho)}.
/// Hook shapes use the subset-sum shortcut (elementary symmetric polynomials
/// in e^{-t lambda_i}); only the O(k) non-hook shapes need a YOR eigensolve,
/// subject to dim_cap.
double expected_k_cycles(const WeightedGraph& g, int k, double t,
                         std::int64_t dim_cap = 5000);

/// Upper bound |E s_k(t) - 1/k| <= (3^n / k) e^{-t lambda_1}.
double chuk_bound(int n, int k, double t, double lambda1);

struct MatrixTreeResult {
  double spectral = 0.0;                // (1/n) prod lambda_i
  std::optional<double> tree_sum;       // sum over spanning trees of prod w(e)
};

/// Both sides of the tree/spectrum identity; the brute-force side is only
/// attempted for n <= brute_cap (absent otherwise).
MatrixTreeResult matrix_tree_check(const WeightedGraph& g, int brute_cap = 9);

/// log P(full cycle) for the d-dimensional hypercube from the closed-form
/// spectrum {2k with multiplicity binom(d,k)}; stable for d up to 40.
std::vector<double> hypercube_log_prob_profile(int d, const TimeGrid& grid);

/// exp of the above.
std::vector<double> hypercube_prob_profile(int d, const TimeGrid& grid);

/// Closed-form Laplacian spectrum of the side^dim torus with unit weights:
/// sums over axes of 2(1 - cos(2 pi xi_j / side)), all xi in {0..side-1}^dim,
/// sorted ascending.
std::vector<double> torus_eigenvalues(int side, int dim);

/// min{ t : prob_full_cycle(g, t) >= threshold_fraction / n }, by bisection
/// to relative precision 1e-6.  Infinity for disconnected graphs.
double equilibration_time(const WeightedGraph& g,
                          double threshold_fraction = 0.5);

/// Same, straight from a positive-part spectrum (n = eigs.size() + 1).
double equilibration_time_from_eigenvalues(const std::vector<double>& positive_eigs,
                                           double threshold_fraction = 0.5);

/// Equilibration time of the side^dim unit torus via its closed-form
/// spectrum (no dense eigensolve).
double torus_equilibration_time(int side, int dim,
                                double threshold_fraction = 0.5);

}  // namespace cyclespec
