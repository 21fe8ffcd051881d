#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cyclespec/errors.hpp"

namespace cyclespec {

struct Edge {
  int u = 0;  // u < v, 0-based
  int v = 0;
  double w = 0.0;
};

/// Undirected graph with symmetric nonnegative edge weights a_{i,j};
/// absent edge = weight 0.  No self-loops.  Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Builds from an edge list; duplicate {i,j} entries accumulate.
  /// Zero-weight edges are dropped, negative weights rejected.
  static WeightedGraph from_edges(int n, const std::vector<Edge>& edges);

  static WeightedGraph complete(int n, double w = 1.0);
  static WeightedGraph hypercube(int d);
  static WeightedGraph torus(int side, int dim);
  static WeightedGraph path(int n);
  static WeightedGraph cycle(int n);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  double weight(int i, int j) const;
  double total_weight() const;  // sum over i<j of a_{i,j}
  bool connected() const;

  /// Continuous-time Laplacian: L[i][j] = -a_{i,j}, L[i][i] = sum_j a_{i,j}.
  Eigen::MatrixXd laplacian() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // u < v, sorted by (u, v), strictly positive w
};

/// Edge-list text format: one edge per line "i j w"; '#' starts a comment;
/// optional first line "n <count>" pins the vertex count (otherwise
/// 1 + max index).
WeightedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const WeightedGraph& g);

/// Complete topology with weights uniform in [wmin, wmax), reproducible
/// from the seed.  Used by the verification suites.
WeightedGraph random_weighted_complete(int n, std::uint64_t seed,
                                       double wmin = 0.25, double wmax = 2.0);

/// Random connected sparse graph: a random spanning tree plus `extra` random
/// edges, weights uniform in [wmin, wmax).
WeightedGraph random_weighted_connected(int n, std::uint64_t seed, int extra,
                                        double wmin = 0.25, double wmax = 2.0);

}  // namespace cyclespec
