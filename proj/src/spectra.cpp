#include "cyclespec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "cyclespec/rng.hpp"

namespace cyclespec {

namespace {

// Eigenvalues of a symmetric matrix, ascending, with near-zero entries
// snapped to exactly 0 (threshold 1e-10 relative to the largest magnitude).
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.compute(m, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  double scale = 0.0;
  for (double e : out) scale = std::max(scale, std::abs(e));
  double tol = 1e-10 * scale;
  for (double& e : out) {
    if (std::abs(e) < tol) e = 0.0;
  }
  return out;
}

}  // namespace

std::vector<double> laplacian_eigenvalues(const WeightedGraph& g) {
  return symmetric_eigenvalues(g.laplacian());
}

std::vector<double> positive_laplacian_eigenvalues(const WeightedGraph& g) {
  auto eigs = laplacian_eigenvalues(g);
  return std::vector<double>(eigs.begin() + 1, eigs.end());
}

namespace {

// All standard Young tableaux of `shape`, as row lists.
void enumerate_syt(const std::vector<int>& shape, int n,
                   std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<std::vector<int>> rows(shape.size());
  std::vector<int> fill(shape.size(), 0);
  auto rec = [&](auto&& self, int value) -> void {
    if (value > n) {
      out.push_back(rows);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      bool row_has_room = fill[r] < shape[r];
      bool column_ok = (r == 0) || fill[r - 1] > fill[r];
      if (row_has_room && column_ok) {
        rows[r].push_back(value);
        ++fill[r];
        self(self, value + 1);
        --fill[r];
        rows[r].pop_back();
      }
    }
  };
  rec(rec, 1);
}

std::shared_ptr<const YorBasis> build_yor_basis(const Partition& rho) {
  auto basis = std::make_shared<YorBasis>();
  basis->rho = rho;
  const int n = rho.n();

  std::vector<std::vector<std::vector<int>>> tableaux;
  enumerate_syt(rho.parts(), n, tableaux);

  // canonical order: row-reading word, lexicographic
  std::vector<std::vector<int>> words(tableaux.size());
  for (std::size_t t = 0; t < tableaux.size(); ++t) {
    for (const auto& row : tableaux[t]) {
      words[t].insert(words[t].end(), row.begin(), row.end());
    }
  }
  std::vector<std::size_t> order(tableaux.size());
  for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return words[a] < words[b];
  });

  basis->dim = static_cast<int>(tableaux.size());
  basis->tableaux.reserve(tableaux.size());
  basis->positions.reserve(tableaux.size());
  std::map<std::vector<int>, int> index_of;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto& tab = tableaux[order[rank]];
    basis->tableaux.push_back(words[order[rank]]);
    index_of.emplace(words[order[rank]], static_cast<int>(rank));
    std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < tab.size(); ++r) {
      for (std::size_t c = 0; c < tab[r].size(); ++c) {
        pos[static_cast<std::size_t>(tab[r][c] - 1)] = {static_cast<int>(r),
                                                        static_cast<int>(c)};
      }
    }
    basis->positions.push_back(std::move(pos));
  }

  // Adjacent transposition matrices from axial distances
  // d = content(p+1) - content(p), content = col - row:
  //   diagonal 1/d, off-diagonal sqrt(1 - 1/d^2) towards the swapped tableau.
  const int dim = basis->dim;
  basis->adjacent.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int p = 1; p <= n - 1; ++p) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
    for (int t = 0; t < dim; ++t) {
      auto [r1, c1] = basis->positions[static_cast<std::size_t>(t)]
                                      [static_cast<std::size_t>(p - 1)];
      auto [r2, c2] = basis->positions[static_cast<std::size_t>(t)]
                                      [static_cast<std::size_t>(p)];
      double d = static_cast<double>((c2 - r2) - (c1 - r1));
      M(t, t) = 1.0 / d;
      if (std::abs(d) >= 2.0) {
        std::vector<int> swapped = basis->tableaux[static_cast<std::size_t>(t)];
        for (int& v : swapped) {
          if (v == p) {
            v = p + 1;
          } else if (v == p + 1) {
            v = p;
          }
        }
        int t2 = index_of.at(swapped);
        M(t, t2) = std::sqrt(1.0 - 1.0 / (d * d));
      }
    }
    basis->adjacent.push_back(std::move(M));
  }
  return basis;
}

}  // namespace

std::shared_ptr<const YorBasis> yor_basis(const Partition& rho) {
  static std::mutex mu;
  static std::map<Partition, std::shared_ptr<const YorBasis>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(rho); it != cache.end()) return it->second;
  }
  auto basis = build_yor_basis(rho);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(rho, std::move(basis)).first->second;
}

Eigen::MatrixXd yor_transposition(const Partition& rho, int i, int j) {
  if (i < 1 || j <= i || j > rho.n()) {
    throw DomainError("yor_transposition needs 1 <= i < j <= n");
  }
  auto basis = yor_basis(rho);
  // (i j) = s_{j-1} ... s_{i+1} s_i s_{i+1} ... s_{j-1}
  Eigen::MatrixXd u = basis->adjacent[static_cast<std::size_t>(i - 1)];
  for (int p = i + 1; p <= j - 1; ++p) {
    const Eigen::MatrixXd& s = basis->adjacent[static_cast<std::size_t>(p - 1)];
    u = s * u * s;
  }
  return u;
}

Eigen::MatrixXd irrep_laplacian(const WeightedGraph& g, const Partition& rho) {
  if (rho.n() != g.n()) {
    throw DomainError("irrep_laplacian requires rho.n == graph.n");
  }
  auto basis = yor_basis(rho);
  const int dim = basis->dim;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(dim, dim);
  double wsum = 0.0;
  for (const Edge& e : g.edges()) {
    L -= e.w * yor_transposition(rho, e.u + 1, e.v + 1);
    wsum += e.w;
  }
  L += wsum * Eigen::MatrixXd::Identity(dim, dim);
  // kill the tiny float asymmetry accumulated by the chain products
  return 0.5 * (L + L.transpose());
}

IrrepSpectrum irrep_laplacian_eigenvalues(const WeightedGraph& g,
                                          const Partition& rho,
                                          std::int64_t dim_cap) {
  if (rho.n() != g.n()) {
    throw DomainError("irrep spectrum requires rho.n == graph.n");
  }
  if (dimension(rho) > dim_cap) {
    throw CapabilityError("irrep dimension cap exceeded (" +
                          std::to_string(dimension(rho)) + " > " +
                          std::to_string(dim_cap) + ")");
  }
  IrrepSpectrum out;
  out.rho = rho;
  out.eigenvalues = symmetric_eigenvalues(irrep_laplacian(g, rho));
  return out;
}

std::vector<double> hook_eigenvalues_bacher(const std::vector<double>& graph_eigs,
                                            int i) {
  const int len = static_cast<int>(graph_eigs.size());
  if (i < 0 || i > len) {
    throw DomainError("hook_eigenvalues_bacher needs 0 <= i <= len");
  }
  std::vector<double> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start, double sum) -> void {
    if (static_cast<int>(pick.size()) == i) {
      out.push_back(sum);
      return;
    }
    int need = i - static_cast<int>(pick.size());
    for (int j = start; j <= len - need; ++j) {
      pick.push_back(j);
      self(self, j + 1, sum + graph_eigs[static_cast<std::size_t>(j)]);
      pick.pop_back();
    }
  };
  rec(rec, 0, 0.0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> permutation_module_spectrum(const Partition& lambda,
                                                const WeightedGraph& g,
                                                std::int64_t coset_cap) {
  if (lambda.n() != g.n()) {
    throw DomainError("permutation module requires lambda.n == graph.n");
  }
  std::int64_t cosets = factorial(lambda.n());
  for (int p : lambda.parts()) cosets /= factorial(p);
  if (cosets > coset_cap) {
    throw CapabilityError("coset count cap exceeded (" +
                          std::to_string(cosets) + " > " +
                          std::to_string(coset_cap) + ")");
  }
  // Basis: colorings of the n vertices with lambda_c vertices of color c.
  const int n = g.n();
  std::vector<int> coloring;
  coloring.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < lambda.rows(); ++c) {
    for (int q = 0; q < lambda.part(c); ++q) coloring.push_back(c);
  }
  std::sort(coloring.begin(), coloring.end());
  std::map<std::vector<int>, int> index_of;
  std::vector<std::vector<int>> basis;
  do {
    index_of.emplace(coloring, static_cast<int>(basis.size()));
    basis.push_back(coloring);
  } while (std::next_permutation(coloring.begin(), coloring.end()));

  const int dim = static_cast<int>(basis.size());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(dim, dim);
  for (int x = 0; x < dim; ++x) {
    for (const Edge& e : g.edges()) {
      const auto& col = basis[static_cast<std::size_t>(x)];
      if (col[static_cast<std::size_t>(e.u)] ==
          col[static_cast<std::size_t>(e.v)]) {
        continue;  // swap acts trivially; I - U vanishes on this pair
      }
      std::vector<int> swapped = col;
      std::swap(swapped[static_cast<std::size_t>(e.u)],
                swapped[static_cast<std::size_t>(e.v)]);
      int y = index_of.at(swapped);
      L(x, x) += e.w;
      L(x, y) -= e.w;
    }
  }
  return symmetric_eigenvalues(L);
}

namespace {

Eigen::Matrix3d rodrigues(const Eigen::Vector3d& w) {
  double theta = w.norm();
  if (theta < 1e-12) return Eigen::Matrix3d::Identity();
  Eigen::Vector3d axis = w / theta;
  Eigen::Matrix3d K;
  K << 0, -axis.z(), axis.y(), axis.z(), 0, -axis.x(), -axis.y(), axis.x(), 0;
  return Eigen::Matrix3d::Identity() + std::sin(theta) * K +
         (1.0 - std::cos(theta)) * K * K;
}

}  // namespace

std::optional<IsospectralPair> isospectral_pair_search(int n,
                                                       std::uint64_t seed,
                                                       std::uint64_t attempts) {
  if (n != 4) throw DomainError("isospectral search supports n == 4 only");
  // Fixed orthonormal basis of the hyperplane orthogonal to (1,1,1,1).
  Eigen::Matrix<double, 4, 3> B;
  B.col(0) << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0, 0.0;
  B.col(1) << 1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0),
      -2.0 / std::sqrt(6.0), 0.0;
  B.col(2) << 1.0 / std::sqrt(12.0), 1.0 / std::sqrt(12.0),
      1.0 / std::sqrt(12.0), -3.0 / std::sqrt(12.0);

  SplitMix64 rng(seed);
  const std::pair<int, int> edge_order[6] = {{0, 1}, {0, 2}, {0, 3},
                                             {1, 2}, {1, 3}, {2, 3}};
  for (std::uint64_t trial = 1; trial <= attempts; ++trial) {
    std::vector<Edge> es;
    for (const auto& [u, v] : edge_order) {
      es.push_back({u, v, rng.next_in(0.5, 1.5)});
    }
    Eigen::Vector3d w(rng.next_in(-0.15, 0.15), rng.next_in(-0.15, 0.15),
                      rng.next_in(-0.15, 0.15));
    WeightedGraph a1 = WeightedGraph::from_edges(4, es);
    Eigen::Matrix4d q = Eigen::Matrix4d::Constant(0.25) +
                        B * rodrigues(w) * B.transpose();
    Eigen::Matrix4d l2 = q * a1.laplacian() * q.transpose();

    bool laplacian_shape = true;
    std::vector<Edge> es2;
    for (int i = 0; i < 4 && laplacian_shape; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (l2(i, j) > 1e-12) {
          laplacian_shape = false;  // positive off-diagonal: not a Laplacian
          break;
        }
        double wij = std::max(0.0, -l2(i, j));
        if (wij > 0.0) es2.push_back({i, j, wij});
      }
    }
    if (!laplacian_shape) continue;
    WeightedGraph a2 = WeightedGraph::from_edges(4, es2);

    auto s1 = laplacian_eigenvalues(a1);
    auto s2 = laplacian_eigenvalues(a2);
    bool spectra_match = true;
    for (std::size_t i = 0; i < s1.size(); ++i) {
      if (std::abs(s1[i] - s2[i]) > 1e-9) {
        spectra_match = false;
        break;
      }
    }
    if (!spectra_match) continue;

    Partition two_two({2, 2});
    auto r1 = irrep_laplacian_eigenvalues(a1, two_two).eigenvalues;
    auto r2 = irrep_laplacian_eigenvalues(a2, two_two).eigenvalues;
    double max_diff = 0.0;
    for (std::size_t i = 0; i < r1.size(); ++i) {
      max_diff = std::max(max_diff, std::abs(r1[i] - r2[i]));
    }
    if (max_diff <= 1e-3) continue;

    return IsospectralPair{std::move(a1), std::move(a2), trial};
  }
  return std::nullopt;
}

}  // namespace cyclespec
