#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cyclespec/graph.hpp"
#include "cyclespec/partition.hpp"

namespace cyclespec {

/// Eigenvalues of the continuous-time Laplacian, sorted ascending; entries
/// within 1e-10 * lambda_max of zero are clamped to exactly 0 (so the first
/// one is always 0).
std::vector<double> laplacian_eigenvalues(const WeightedGraph& g);

/// The strictly "positive part" convention: everything after the leading 0,
/// i.e. lambda_1..lambda_{n-1} (some may still be 0 if g is disconnected).
std::vector<double> positive_laplacian_eigenvalues(const WeightedGraph& g);

/// Young's orthogonal form data for one shape: standard tableaux in
/// row-reading lexicographic order plus the adjacent-transposition matrices.
struct YorBasis {
  Partition rho;
  int dim = 0;
  // tableaux[t] = row-reading word; positions[t][v-1] = (row, col) of value v
  std::vector<std::vector<int>> tableaux;
  std::vector<std::vector<std::pair<int, int>>> positions;
  // adjacent[p-1] represents the transposition of values (p, p+1), p = 1..n-1
  std::vector<Eigen::MatrixXd> adjacent;
};

/// Shared, idempotently-filled per-shape cache of the YOR basis.
std::shared_ptr<const YorBasis> yor_basis(const Partition& rho);

/// Orthogonal matrix of the transposition of values (i, j), 1 <= i < j <= n,
/// as the standard product of 2(j-i)-1 adjacent transpositions.
Eigen::MatrixXd yor_transposition(const Partition& rho, int i, int j);

/// The image of the Laplacian in the irrep rho:
/// sum over edges of a_{u,v} (I - U_rho((u+1, v+1))); symmetric PSD.
Eigen::MatrixXd irrep_laplacian(const WeightedGraph& g, const Partition& rho);

struct IrrepSpectrum {
  Partition rho;
  std::vector<double> eigenvalues;  // ascending, clamped at 0
};

/// Symmetric eigensolve of irrep_laplacian; dimension(rho) must not exceed
/// dim_cap (capability error otherwise).
IrrepSpectrum irrep_laplacian_eigenvalues(const WeightedGraph& g,
                                          const Partition& rho,
                                          std::int64_t dim_cap = 5000);

/// All sums of i distinct entries of graph_eigs (the positive part of the
/// spectrum); size binom(len, i); i = 0 gives {0}.  This is the hook-shape
/// spectrum shortcut.
std::vector<double> hook_eigenvalues_bacher(const std::vector<double>& graph_eigs,
                                            int i);

/// Spectrum of the Laplacian acting on the coset basis of the permutation
/// module V_lambda (the colored exclusion process on multiset colorings).
/// Independent oracle for the irrep spectra via Young's rule.
std::vector<double> permutation_module_spectrum(const Partition& lambda,
                                                const WeightedGraph& g,
                                                std::int64_t coset_cap = 20000);

struct IsospectralPair {
  WeightedGraph first;
  WeightedGraph second;
  std::uint64_t attempts_used = 0;
};

/// Random search for two 4-vertex weighted graphs with equal Laplacian
/// spectra (<= 1e-9 per entry) whose [2,2] irrep spectra differ by > 1e-3.
/// Draws per attempt, in order: 6 edge weights U[0.5,1.5) for K_4 in edge
/// order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3), then a rotation vector
/// U[-0.15,0.15)^3 exponentiated in the hyperplane orthogonal to (1,1,1,1).
/// Returns nullopt if all attempts get rejected.
std::optional<IsospectralPair> isospectral_pair_search(int n,
                                                       std::uint64_t seed,
                                                       std::uint64_t attempts);

}  // namespace cyclespec
