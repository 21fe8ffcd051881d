#include "cyclespec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

#include "cyclespec/characters.hpp"
#include "cyclespec/formulas.hpp"
#include "cyclespec/mc.hpp"
#include "cyclespec/partition.hpp"
#include "cyclespec/spectra.hpp"
#include "cyclespec/symfun.hpp"

namespace cyclespec {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

// Partition counts by the pentagonal-number recurrence, independent of the
// enumeration code.
std::vector<std::int64_t> partition_counts(int n_max) {
  std::vector<std::int64_t> p(n_max + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  }
  return p;
}

std::vector<WeightedGraph> verify_graphs(int n_cap) {
  std::vector<WeightedGraph> gs;
  for (int n = 2; n <= n_cap; ++n) gs.push_back(WeightedGraph::complete(n));
  for (int n = 3; n <= n_cap; ++n) gs.push_back(WeightedGraph::path(n));
  for (int n = 3; n <= n_cap; ++n) gs.push_back(WeightedGraph::cycle(n));
  for (int n = 4; n <= n_cap; ++n) gs.push_back(random_weighted_complete(n, 31 + n));
  return gs;
}


void check_partition_enumeration(int n_max, CheckResult& out) {
  const auto expected = partition_counts(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const auto all = enumerate_partitions(n);
    if (static_cast<std::int64_t>(all.size()) != expected[n]) {
      out.detail = "count mismatch at n = " + std::to_string(n);
      return;
    }
    // enumeration order: [n] first, strictly decreasing in the order key
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (!(all[i] < all[i + 1])) {
        out.detail = "enumeration order violated at n = " + std::to_string(n);
        return;
      }
    }
    for (const auto& lam : all) {
      if (lam.conjugate().conjugate() != lam) {
        out.detail = "conjugate not involutive at n = " + std::to_string(n);
        return;
      }
    }
  }
  out.pass = true;
  out.detail = "p(n) matches the pentagonal recurrence through n = " +
               std::to_string(n_max);
}

void check_dimension_identities(int n_max, CheckResult& out) {
  for (int n = 1; n <= n_max; ++n) {
    __int128 sum = 0;
    for (const auto& lam : enumerate_partitions(n)) {
      const std::int64_t d = dimension(lam);
      sum += static_cast<__int128>(d) * d;
      if (lam.is_hook() && lam.rows() >= 2) {
        // [a, 1^c] viewed as [a, b=1, 1^{c-1}]
        const std::int64_t via_formula =
            hook_dimension_formula(lam.part(0), 1, lam.rows() - 2);
        if (via_formula != d) {
          out.detail = "hook formula mismatch at n = " + std::to_string(n);
          return;
        }
      }
    }
    if (sum != static_cast<__int128>(factorial(n))) {
      out.detail = "sum of dim^2 != n! at n = " + std::to_string(n);
      return;
    }
  }
  out.pass = true;
  out.detail = "sum of squared dimensions equals n! through n = " +
               std::to_string(n_max);
}

void check_kostka_triangularity(int n_max, CheckResult& out) {
  const int cap = std::min(n_max, 8);
  for (int n = 1; n <= cap; ++n) {
    const auto all = enumerate_partitions(n);
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = 0; b < all.size(); ++b) {
        const std::int64_t K = kostka(all[a], all[b]);
        if (a == b && K != 1) {
          out.detail = "diagonal Kostka != 1 at n = " + std::to_string(n);
          return;
        }
        if (a > b && K != 0) {
          out.detail = "Kostka not triangular at n = " + std::to_string(n);
          return;
        }
        if (K < 0) {
          out.detail = "negative Kostka number";
          return;
        }
        // K_{mu lambda} > 0 exactly when mu dominates lambda
        if ((K > 0) != dominates(all[a], all[b])) {
          out.detail = "Kostka positivity vs dominance failed at n = " +
                       std::to_string(n);
          return;
        }
      }
    }
  }
  out.pass = true;
  out.detail = "unitriangular with dominance support through n = " +
               std::to_string(cap);
}

void check_schur_round_trip(int n_max, CheckResult& out) {
  const int cap = std::min(n_max, 7);
  for (int n = 1; n <= cap; ++n) {
    for (const auto& lam : enumerate_partitions(n)) {
      SchurExpansion s;
      s.n = n;
      s.coeffs[lam] = Rat(1);
      const SchurExpansion back = monomial_to_schur(schur_to_monomial(s));
      if (back.coeffs.size() != 1 || back.coeffs.count(lam) == 0 ||
          !(back.coeffs.at(lam) == Rat(1))) {
        out.detail = "round trip failed at n = " + std::to_string(n);
        return;
      }
    }
  }
  out.pass = true;
  out.detail = "schur -> monomial -> schur is the identity through n = " +
               std::to_string(cap);
}

void check_character_orthogonality(int n_max, CheckResult& out) {
  const int cap = std::min(n_max, 7);
  for (int n = 1; n <= cap; ++n) {
    const auto& table = character_table(n);
    for (std::size_t a = 0; a < table.shapes.size(); ++a) {
      const ClassFunction fa = irreducible_character(table.shapes[a]);
      for (std::size_t b = a; b < table.shapes.size(); ++b) {
        const ClassFunction fb = irreducible_character(table.shapes[b]);
        const Rat ip = inner_product(fa, fb);
        if (!(ip == Rat(a == b ? 1 : 0))) {
          out.detail = "orthogonality failed at n = " + std::to_string(n);
          return;
        }
      }
      // the identity class [1^n] is the last column in enumeration order
      if (table.chi[a].back() != dimension(table.shapes[a])) {
        out.detail = "degree != dimension at n = " + std::to_string(n);
        return;
      }
    }
  }
  out.pass = true;
  out.detail = "<chi_a, chi_b> = delta_ab and deg = dim through n = " +
               std::to_string(cap);
}

void check_coefficient_routes(int n_max, CheckResult& out) {
  const int cap = std::min(n_max, 8);
  for (int n = 2; n <= cap; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto closed = a_rho_closed_form(n, k);
      // brute force: exact inner products of k * alpha_k
      const ClassFunction f = alpha_k(n, k);
      std::map<Partition, Rat> brute;
      for (const auto& [rho, c] : decompose(f)) brute[rho] = c * Rat(k);
      // Pieri route on the Schur side
      const SchurExpansion pieri = derive_a_rho_via_pieri(n, k);

      if (closed.size() != brute.size() || closed.size() != pieri.coeffs.size()) {
        out.detail = "support mismatch at n = " + std::to_string(n) +
                     ", k = " + std::to_string(k);
        return;
      }
      for (const auto& [rho, a] : closed) {
        const auto itb = brute.find(rho);
        const auto itp = pieri.coeffs.find(rho);
        if (itb == brute.end() || itp == pieri.coeffs.end() ||
            !(itb->second == Rat(a)) || !(itp->second == Rat(a))) {
          out.detail = "entry mismatch at n = " + std::to_string(n) +
                       ", k = " + std::to_string(k);
          return;
        }
      }
    }
  }
  out.pass = true;
  out.detail = "closed form == brute force == Pieri route through n = " +
               std::to_string(cap);
}

void check_yor_representation(int n_max, CheckResult& out) {
  const int cap = std::min(n_max, 6);
  double worst = 0.0;
  for (int n = 2; n <= cap; ++n) {
    for (const auto& rho : enumerate_partitions(n)) {
      for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const Eigen::MatrixXd u = yor_transposition(rho, i, j);
          const int d = static_cast<int>(u.rows());
          const double inv =
              (u * u - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
          const double sym = (u - u.transpose()).cwiseAbs().maxCoeff();
          worst = std::max({worst, inv, sym});
          // trace of any transposition image = chi_rho([2, 1^{n-2}])
          const double tr = u.trace();
          std::vector<int> two{2};
          two.insert(two.end(), n - 2, 1);
          const double chi =
              static_cast<double>(mn_character(rho, Partition(two)));
          worst = std::max(worst, std::abs(tr - chi));
        }
      }
    }
  }
  out.pass = worst < 1e-10;
  out.detail = "max deviation " + fmt("%.3e", worst) + " through n = " +
               std::to_string(cap);
}

void check_hook_spectra(int n_max, CheckResult& out) {
  const int cap = std::min(n_max, 6);
  double worst = 0.0;
  for (const auto& g : verify_graphs(cap)) {
    const int n = g.n();
    const auto eigs = positive_laplacian_eigenvalues(g);
    for (int i = 1; i < n; ++i) {
      std::vector<int> parts{n - i};
      parts.insert(parts.end(), i, 1);
      const auto direct = irrep_laplacian_eigenvalues(g, Partition(parts));
      auto shortcut = hook_eigenvalues_bacher(eigs, i);
      if (direct.eigenvalues.size() != shortcut.size()) {
        out.detail = "hook spectrum size mismatch";
        return;
      }
      for (std::size_t a = 0; a < shortcut.size(); ++a) {
        worst = std::max(worst,
                         std::abs(direct.eigenvalues[a] - shortcut[a]));
      }
    }
  }
  out.pass = worst < 1e-8;
  out.detail = "max |YOR - subset sums| = " + fmt("%.3e", worst);
}

void check_young_rule(int n_max, CheckResult& out) {
  const int cap = std::min(n_max, 5);
  double worst = 0.0;
  for (int n = 4; n <= cap; ++n) {
    const WeightedGraph g = random_weighted_complete(n, 17);
    for (const auto& lam : enumerate_partitions(n)) {
      auto module_spec = permutation_module_spectrum(lam, g);
      std::vector<double> rebuilt;
      for (const auto& mu : enumerate_partitions(n)) {
        const std::int64_t mult = kostka(mu, lam);
        if (mult == 0) continue;
        const auto irr = irrep_laplacian_eigenvalues(g, mu);
        for (std::int64_t c = 0; c < mult; ++c) {
          rebuilt.insert(rebuilt.end(), irr.eigenvalues.begin(),
                         irr.eigenvalues.end());
        }
      }
      std::sort(rebuilt.begin(), rebuilt.end());
      if (rebuilt.size() != module_spec.size()) {
        out.detail = "multiset size mismatch at n = " + std::to_string(n);
        return;
      }
      for (std::size_t a = 0; a < rebuilt.size(); ++a) {
        worst = std::max(worst, std::abs(rebuilt[a] - module_spec[a]));
      }
    }
  }
  out.pass = worst < 1e-8;
  out.detail = "max multiset deviation " + fmt("%.3e", worst);
}

void check_product_formula(int n_max, CheckResult& out) {
  const int cap = std::min(n_max, 8);
  double worst = 0.0;
  for (const auto& g : verify_graphs(cap)) {
    const int n = g.n();
    const auto eigs = positive_laplacian_eigenvalues(g);
    for (double t : {0.1, 1.0, 10.0}) {
      const double p = prob_full_cycle(g, t);
      const double via_expect = expected_k_cycles(g, n, t);
      double hook_sum = 0.0;
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (double lam : hook_eigenvalues_bacher(eigs, i)) {
          s += std::exp(-t * lam);
        }
        hook_sum += (i % 2 == 0 ? 1.0 : -1.0) * s;
      }
      worst = std::max({worst, std::abs(p - via_expect),
                        std::abs(p - hook_sum / n)});
    }
  }
  out.pass = worst < 1e-10;
  out.detail = "max |product - replay| = " + fmt("%.3e", worst);
}

void check_coupling_bound(int n_max, CheckResult& out) {
  const int cap = std::min(n_max, 8);
  for (const auto& g : verify_graphs(cap)) {
    const int n = g.n();
    const double lambda1 = positive_laplacian_eigenvalues(g).front();
    for (int k = 1; k <= std::min(n, 3); ++k) {
      for (double t : {0.1, 0.5, 2.0, 8.0}) {
        const double err = std::abs(expected_k_cycles(g, k, t) - 1.0 / k);
        if (err > chuk_bound(n, k, t, lambda1) + 1e-12) {
          out.detail = "bound violated on an n = " + std::to_string(n) +
                       " graph";
          return;
        }
      }
    }
  }
  out.pass = true;
  out.detail = "|E s_k - 1/k| within the exponential bound on all cells";
}

void check_matrix_tree(int n_max, CheckResult& out) {
  const int cap = std::min(n_max, 6);
  double worst = 0.0;
  for (const auto& g : verify_graphs(cap)) {
    const auto r = matrix_tree_check(g);
    if (!r.tree_sum.has_value()) {
      out.detail = "brute force unexpectedly skipped";
      return;
    }
    worst = std::max(worst,
                     std::abs(r.spectral - *r.tree_sum) / std::abs(*r.tree_sum));
  }
  out.pass = worst < 1e-9;
  out.detail = "max relative gap " + fmt("%.3e", worst);
}

void check_mc_exactness(int /*n_max*/, CheckResult& out) {
  SimConfig cfg;
  cfg.graph = WeightedGraph::complete(5);
  cfg.checkpoints = make_time_grid({0.0, 0.7});
  cfg.replicas = 2000;
  cfg.master_seed = 424242;
  cfg.observables.cycle_counts = {1, 2, 3, 4, 5};
  const SimReport rep = run_simulation(cfg);
  if (rep.series[0].mean[0] != 5.0) {
    out.detail = "t = 0 state is not the identity";
    return;
  }
  for (std::size_t cp = 0; cp < 2; ++cp) {
    double mass = 0.0;
    for (int k = 1; k <= 5; ++k) mass += k * rep.series[k - 1].mean[cp];
    if (std::abs(mass - 5.0) > 1e-9) {
      out.detail = "cycle mass not conserved";
      return;
    }
  }
  out.pass = true;
  out.detail = "identity at t = 0; sum_k k s_k = n at every checkpoint";
}

void check_mc_determinism(int /*n_max*/, CheckResult& out) {
  SimConfig cfg;
  cfg.graph = WeightedGraph::path(5);
  cfg.checkpoints = make_time_grid({0.4, 1.6});
  cfg.replicas = 3000;
  cfg.master_seed = 7;
  cfg.observables.full_cycle = true;
  cfg.observables.cycle_counts = {2};
  const SimReport a = run_simulation(cfg, 1);
  const SimReport b = run_simulation(cfg, 3);
  for (std::size_t s = 0; s < a.series.size(); ++s) {
    if (a.series[s].mean != b.series[s].mean ||
        a.series[s].std_error != b.series[s].std_error) {
      out.detail = "thread counts 1 and 3 disagree";
      return;
    }
  }
  out.pass = true;
  out.detail = "bit-identical report for 1 and 3 worker threads";
}

void check_mc_agreement(int /*n_max*/, CheckResult& out) {
  int cells = 0, hits = 0;
  double worst_z = 0.0;
  for (const auto& g : {WeightedGraph::complete(4), WeightedGraph::path(4)}) {
    SimConfig cfg;
    cfg.graph = g;
    cfg.checkpoints = make_time_grid({0.5, 1.0, 2.0});
    cfg.replicas = 10000;
    cfg.master_seed = 99;
    cfg.observables.full_cycle = true;
    cfg.observables.cycle_counts = {2};
    const SimReport rep = run_simulation(cfg);
    for (std::size_t cp = 0; cp < 3; ++cp) {
      const double t = cfg.checkpoints.times[cp];
      for (const auto& series : rep.series) {
        const double exact = series.name == "full_cycle"
                                 ? prob_full_cycle(g, t)
                                 : expected_k_cycles(g, 2, t);
        const double se = series.std_error[cp];
        const double z = se > 0.0 ? std::abs(series.mean[cp] - exact) / se
                                  : (series.mean[cp] == exact ? 0.0 : 1e9);
        worst_z = std::max(worst_z, z);
        ++cells;
        if (z < 4.0) ++hits;
      }
    }
  }
  out.pass = hits * 100 >= cells * 95;
  out.detail = std::to_string(hits) + "/" + std::to_string(cells) +
               " cells inside 4 standard errors (worst z = " +
               fmt("%.2f", worst_z) + ")";
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(int n_max) {
  if (n_max < 2) throw DomainError("n_max must be >= 2");
  if (n_max > 8) {
    throw CapabilityError(
        "invariant suite needs exact character tables, capped at n = 8");
  }
  struct Entry {
    const char* name;
    void (*fn)(int, CheckResult&);
  };
  const Entry entries[] = {
      {"partition enumeration", check_partition_enumeration},
      {"dimension identities", check_dimension_identities},
      {"kostka triangularity", check_kostka_triangularity},
      {"schur round trip", check_schur_round_trip},
      {"character orthogonality", check_character_orthogonality},
      {"coefficient table routes", check_coefficient_routes},
      {"yor representation", check_yor_representation},
      {"hook spectra shortcut", check_hook_spectra},
      {"young rule multisets", check_young_rule},
      {"product formula replay", check_product_formula},
      {"coupling bound", check_coupling_bound},
      {"matrix tree identity", check_matrix_tree},
      {"mc exact checkpoints", check_mc_exactness},
      {"mc determinism", check_mc_determinism},
      {"mc statistical agreement", check_mc_agreement},
  };
  std::vector<CheckResult> results;
  for (const Entry& e : entries) {
    CheckResult r;
    r.name = e.name;
    e.fn(n_max, r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace cyclespec
