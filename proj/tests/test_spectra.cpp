#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "cyclespec/characters.hpp"
#include "cyclespec/spectra.hpp"
#include "cyclespec/symfun.hpp"

using namespace cyclespec;

namespace {

std::vector<WeightedGraph> test_graphs() {
  return {
      WeightedGraph::complete(4),
      WeightedGraph::complete(5, 0.7),
      WeightedGraph::path(4),
      WeightedGraph::path(6),
      WeightedGraph::cycle(5),
      WeightedGraph::hypercube(2),
      random_weighted_complete(5, 11),
      random_weighted_connected(6, 22, 4),
      random_weighted_connected(7, 33, 5),
  };
}

}  // namespace

TEST_CASE("builders") {
  auto k4 = WeightedGraph::complete(4);
  CHECK(k4.n() == 4);
  CHECK(k4.edges().size() == 6);
  for (const auto& e : k4.edges()) CHECK(e.w == 1.0);

  auto h3 = WeightedGraph::hypercube(3);
  CHECK(h3.n() == 8);
  CHECK(h3.edges().size() == 12);
  for (int v = 0; v < 8; ++v) {
    int deg = 0;
    for (const auto& e : h3.edges()) deg += (e.u == v) + (e.v == v);
    CHECK(deg == 3);
  }

  auto t32 = WeightedGraph::torus(3, 2);
  CHECK(t32.n() == 9);
  CHECK(t32.edges().size() == 18);
  for (int v = 0; v < 9; ++v) {
    int deg = 0;
    for (const auto& e : t32.edges()) deg += (e.u == v) + (e.v == v);
    CHECK(deg == 4);
  }

  // side-2 torus folds the double edge into one: it is the hypercube
  auto t23 = WeightedGraph::torus(2, 3);
  REQUIRE(t23.edges().size() == h3.edges().size());
  for (std::size_t i = 0; i < t23.edges().size(); ++i) {
    CHECK(t23.edges()[i].u == h3.edges()[i].u);
    CHECK(t23.edges()[i].v == h3.edges()[i].v);
    CHECK(t23.edges()[i].w == 1.0);
  }

  CHECK(WeightedGraph::path(5).edges().size() == 4);
  CHECK(WeightedGraph::cycle(3).edges().size() == 3);
  CHECK_THROWS_AS(WeightedGraph::complete(1), DomainError);
  CHECK_THROWS_AS(WeightedGraph::torus(1, 3), DomainError);
  CHECK_THROWS_AS(WeightedGraph::cycle(2), DomainError);

  CHECK_THROWS_AS(WeightedGraph::from_edges(3, {{0, 0, 1.0}}), DomainError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(3, {{0, 3, 1.0}}), DomainError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(3, {{0, 1, -1.0}}), DomainError);
  // duplicates accumulate, zero edges drop
  auto g = WeightedGraph::from_edges(3, {{0, 1, 1.0}, {1, 0, 2.0}, {1, 2, 0.0}});
  CHECK(g.edges().size() == 1);
  CHECK(g.weight(0, 1) == 3.0);
  CHECK(g.weight(1, 2) == 0.0);
  CHECK(!g.connected());
  CHECK(WeightedGraph::path(4).connected());
}

TEST_CASE("graph file round trip") {
  std::istringstream in(
      "# weighted triangle with an isolated vertex\n"
      "n 4\n"
      "0 1 1.0\n"
      "0 2 0.5  # trailing comment\n"
      "\n"
      "1 2 2.25\n");
  auto g = read_graph(in);
  CHECK(g.n() == 4);
  CHECK(g.edges().size() == 3);
  CHECK(g.weight(0, 2) == 0.5);

  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in2(out.str());
  auto g2 = read_graph(in2);
  CHECK(g2.n() == g.n());
  REQUIRE(g2.edges().size() == g.edges().size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    CHECK(g2.edges()[i].w == g.edges()[i].w);
  }

  std::istringstream noheader("0 1 1.0\n2 3 1.0\n");
  CHECK(read_graph(noheader).n() == 4);

  std::istringstream bad("0 x 1.0\n");
  CHECK_THROWS_AS(read_graph(bad), DomainError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_graph(empty), DomainError);
}

TEST_CASE("laplacian spectra of known graphs") {
  auto pair_eigs =
      laplacian_eigenvalues(WeightedGraph::from_edges(2, {{0, 1, 1.7}}));
  REQUIRE(pair_eigs.size() == 2);
  CHECK(pair_eigs[0] == 0.0);
  CHECK(pair_eigs[1] == doctest::Approx(3.4).epsilon(1e-12));

  for (int n : {3, 4, 6}) {
    auto eigs = laplacian_eigenvalues(WeightedGraph::complete(n));
    CHECK(eigs[0] == 0.0);
    for (int i = 1; i < n; ++i) {
      CHECK(eigs[static_cast<std::size_t>(i)] ==
            doctest::Approx(n).epsilon(1e-10));
    }
  }

  for (int d : {2, 3, 4}) {
    auto eigs = laplacian_eigenvalues(WeightedGraph::hypercube(d));
    std::map<int, int> mult;
    for (double e : eigs) {
      int rounded = static_cast<int>(std::lround(e));
      CHECK(std::abs(e - rounded) < 1e-8);
      mult[rounded]++;
    }
    std::int64_t binom = 1;
    for (int k = 0; k <= d; ++k) {
      CHECK(mult[2 * k] == binom);
      binom = binom * (d - k) / (k + 1);
    }
  }
}

TEST_CASE("YOR matrices are orthogonal involutions") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& rho : enumerate_partitions(n)) {
      auto basis = yor_basis(rho);
      CHECK(basis->dim == dimension(rho));
      for (const auto& m : basis->adjacent) {
        Eigen::MatrixXd id = Eigen::MatrixXd::Identity(basis->dim, basis->dim);
        CHECK((m.transpose() * m - id).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((m * m - id).cwiseAbs().maxCoeff() < 1e-10);
      }
      // a couple of non-adjacent transpositions
      for (auto [i, j] : {std::pair<int, int>{1, n}, {1, n - 1}}) {
        if (j <= i) continue;
        Eigen::MatrixXd u = yor_transposition(rho, i, j);
        Eigen::MatrixXd id = Eigen::MatrixXd::Identity(basis->dim, basis->dim);
        CHECK((u.transpose() * u - id).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((u * u - id).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("YOR traces match the exact character table") {
  // trace of any transposition matrix = character on the 2,1,...,1 class
  for (int n = 3; n <= 6; ++n) {
    std::vector<int> type{2};
    for (int i = 2; i < n; ++i) type.push_back(1);
    Partition transposition_class = Partition::from_unsorted(type);
    for (const auto& rho : enumerate_partitions(n)) {
      std::int64_t exact = mn_character(rho, transposition_class);
      CHECK(yor_transposition(rho, 1, 2).trace() ==
            doctest::Approx(static_cast<double>(exact)).epsilon(1e-10));
      CHECK(yor_transposition(rho, 1, n).trace() ==
            doctest::Approx(static_cast<double>(exact)).epsilon(1e-10));
    }
  }
}

TEST_CASE("irrep spectra special shapes") {
  for (const auto& g : test_graphs()) {
    int n = g.n();
    auto triv = irrep_laplacian_eigenvalues(g, Partition({n}));
    REQUIRE(triv.eigenvalues.size() == 1);
    CHECK(std::abs(triv.eigenvalues[0]) < 1e-8);

    auto sign =
        irrep_laplacian_eigenvalues(g, Partition::from_unsorted(
                                           std::vector<int>(n, 1)));
    REQUIRE(sign.eigenvalues.size() == 1);
    CHECK(sign.eigenvalues[0] ==
          doctest::Approx(2.0 * g.total_weight()).epsilon(1e-10));

    auto std_rep = irrep_laplacian_eigenvalues(g, Partition::two_row_hook(
                                                      n - 1, 1, 0));
    auto graph_eigs = positive_laplacian_eigenvalues(g);
    REQUIRE(std_rep.eigenvalues.size() == graph_eigs.size());
    for (std::size_t i = 0; i < graph_eigs.size(); ++i) {
      CHECK(std::abs(std_rep.eigenvalues[i] - graph_eigs[i]) <= 1e-8);
    }
  }
  CHECK_THROWS_AS(
      irrep_laplacian_eigenvalues(WeightedGraph::complete(4), Partition({3})),
      DomainError);
  CHECK_THROWS_AS(irrep_laplacian_eigenvalues(WeightedGraph::complete(8),
                                              Partition({4, 2, 1, 1}), 10),
                  CapabilityError);
}

TEST_CASE("hook spectra via subset sums") {
  CHECK(hook_eigenvalues_bacher({1.0, 2.0, 3.0}, 0) ==
        std::vector<double>{0.0});
  CHECK(hook_eigenvalues_bacher({1.0, 2.0, 3.0}, 1) ==
        std::vector<double>({1.0, 2.0, 3.0}));

  auto k4_pairs = hook_eigenvalues_bacher(
      positive_laplacian_eigenvalues(WeightedGraph::complete(4)), 2);
  REQUIRE(k4_pairs.size() == 3);
  for (double e : k4_pairs) CHECK(e == doctest::Approx(8.0).epsilon(1e-10));

  for (const auto& g : test_graphs()) {
    int n = g.n();
    auto graph_eigs = positive_laplacian_eigenvalues(g);
    for (int i = 0; i < n; ++i) {
      auto bacher = hook_eigenvalues_bacher(graph_eigs, i);
      auto direct =
          irrep_laplacian_eigenvalues(g, Partition::hook(n - i, i));
      REQUIRE(bacher.size() == direct.eigenvalues.size());
      for (std::size_t q = 0; q < bacher.size(); ++q) {
        CHECK(std::abs(bacher[q] - direct.eigenvalues[q]) <= 1e-8);
      }
    }
  }
}

TEST_CASE("permutation modules and Young's rule") {
  auto g = random_weighted_complete(5, 44);
  CHECK(permutation_module_spectrum(Partition({5}), g) ==
        std::vector<double>{0.0});

  auto single = permutation_module_spectrum(Partition({4, 1}), g);
  auto expect = laplacian_eigenvalues(g);
  REQUIRE(single.size() == expect.size());
  for (std::size_t i = 0; i < single.size(); ++i) {
    CHECK(std::abs(single[i] - expect[i]) <= 1e-8);
  }

  auto regular = permutation_module_spectrum(
      Partition::from_unsorted(std::vector<int>(4, 1)),
      WeightedGraph::complete(4));
  CHECK(regular.size() == 24);

  for (int n = 3; n <= 5; ++n) {
    auto gr = random_weighted_connected(n, 55 + static_cast<unsigned>(n), 2);
    for (const auto& lam : enumerate_partitions(n)) {
      auto module_spec = permutation_module_spectrum(lam, gr);
      std::vector<double> young;
      for (const auto& mu : enumerate_partitions(n)) {
        std::int64_t mult = kostka(mu, lam);
        if (mult == 0) continue;
        auto irr = irrep_laplacian_eigenvalues(gr, mu);
        for (std::int64_t c = 0; c < mult; ++c) {
          young.insert(young.end(), irr.eigenvalues.begin(),
                       irr.eigenvalues.end());
        }
      }
      std::sort(young.begin(), young.end());
      REQUIRE(module_spec.size() == young.size());
      for (std::size_t i = 0; i < young.size(); ++i) {
        CHECK(std::abs(module_spec[i] - young[i]) <= 1e-8);
      }
    }
  }

  CHECK_THROWS_AS(permutation_module_spectrum(
                      Partition::from_unsorted(std::vector<int>(8, 1)),
                      WeightedGraph::complete(8)),
                  CapabilityError);
}

TEST_CASE("CLR lower bound on random graphs") {
  for (int n = 3; n <= 7; ++n) {
    for (std::uint64_t s = 0; s < 3; ++s) {
      auto g = random_weighted_complete(n, 100 + 10 * s + static_cast<unsigned>(n));
      double gap = positive_laplacian_eigenvalues(g)[0];
      for (const auto& rho : enumerate_partitions(n)) {
        if (rho == Partition({n})) continue;
        auto spec = irrep_laplacian_eigenvalues(g, rho);
        CHECK(spec.eigenvalues.front() >= gap - 1e-8);
      }
    }
  }
}

TEST_CASE("trace identity for the standard representation") {
  for (const auto& g : test_graphs()) {
    auto eigs = positive_laplacian_eigenvalues(g);
    double sum = 0.0;
    for (double e : eigs) sum += e;
    CHECK(sum == doctest::Approx(2.0 * g.total_weight()).epsilon(1e-8));
  }
}

TEST_CASE("isospectral pair search") {
  CHECK_THROWS_AS(isospectral_pair_search(5, 1, 10), DomainError);

  auto found = isospectral_pair_search(4, 20260815, 1000);
  REQUIRE(found.has_value());
  auto s1 = laplacian_eigenvalues(found->first);
  auto s2 = laplacian_eigenvalues(found->second);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    CHECK(std::abs(s1[i] - s2[i]) <= 1e-9);
  }
  auto r1 = irrep_laplacian_eigenvalues(found->first, Partition({2, 2}));
  auto r2 = irrep_laplacian_eigenvalues(found->second, Partition({2, 2}));
  double max_diff = 0.0;
  for (std::size_t i = 0; i < r1.eigenvalues.size(); ++i) {
    max_diff = std::max(max_diff,
                        std::abs(r1.eigenvalues[i] - r2.eigenvalues[i]));
  }
  CHECK(max_diff > 1e-3);

  // determinism: same seed, same outcome
  auto again = isospectral_pair_search(4, 20260815, 1000);
  REQUIRE(again.has_value());
  CHECK(again->attempts_used == found->attempts_used);
  REQUIRE(again->first.edges().size() == found->first.edges().size());
  for (std::size_t i = 0; i < found->first.edges().size(); ++i) {
    CHECK(again->first.edges()[i].w == found->first.edges()[i].w);
  }
}
