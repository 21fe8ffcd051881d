#include "cyclespec/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclespec/characters.hpp"
#include "cyclespec/spectra.hpp"

namespace cyclespec {

TimeGrid make_time_grid(std::vector<double> times) {
  if (times.empty()) throw DomainError("time grid must be nonempty");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || times[i] < 0.0) {
      throw DomainError("times must be finite and >= 0");
    }
    if (i > 0 && times[i] <= times[i - 1]) {
      throw DomainError("times must be strictly increasing");
    }
  }
  TimeGrid g;
  g.times = std::move(times);
  return g;
}

namespace {

// log prod (1 - e^{-lambda t}) over a positive-part spectrum; -inf when any
// factor vanishes.
double log_cycle_product(const std::vector<double>& eigs, double t) {
  double sum = 0.0;
  for (double lam : eigs) {
    double x = lam * t;
    if (x <= 0.0) return -std::numeric_limits<double>::infinity();
    sum += std::log1p(-std::exp(-x));
  }
  return sum;
}

}  // namespace

double prob_full_cycle(const WeightedGraph& g, double t) {
  if (t < 0.0 || !std::isfinite(t)) throw DomainError("t must be >= 0");
  auto eigs = positive_laplacian_eigenvalues(g);
  double lp = log_cycle_product(eigs, t) - std::log(g.n());
  return std::exp(lp);
}

double expected_k_cycles(const WeightedGraph& g, int k, double t,
                         std::int64_t dim_cap) {
  const int n = g.n();
  if (k < 1 || k > n) throw DomainError("expected_k_cycles needs 1 <= k <= n");
  if (t < 0.0 || !std::isfinite(t)) throw DomainError("t must be >= 0");
  auto table = a_rho_closed_form(n, k);
  auto eigs = positive_laplacian_eigenvalues(g);
  std::vector<double> y(eigs.size());
  for (std::size_t i = 0; i < eigs.size(); ++i) y[i] = std::exp(-t * eigs[i]);

  // elementary symmetric polynomials e_0..e_{n-1} of the y_i: the sum of
  // exponentials over the hook [n-i, 1^i] spectrum is exactly e_i(y)
  std::vector<double> esym(static_cast<std::size_t>(n), 0.0);
  esym[0] = 1.0;
  for (double yi : y) {
    for (std::size_t j = esym.size() - 1; j >= 1; --j) {
      esym[j] += yi * esym[j - 1];
    }
  }

  double total = 0.0;
  for (const auto& [rho, a] : table) {
    double term;
    if (rho.rows() == 1) {
      term = 1.0;  // trivial representation
    } else if (rho.is_hook()) {
      term = esym[static_cast<std::size_t>(rho.rows() - 1)];
    } else {
      auto spec = irrep_laplacian_eigenvalues(g, rho, dim_cap);
      term = 0.0;
      for (double lam : spec.eigenvalues) term += std::exp(-t * lam);
    }
    total += a * term;
  }
  return total / k;
}

double chuk_bound(int n, int k, double t, double lambda1) {
  if (n < 1 || k < 1 || lambda1 <= 0.0 || t < 0.0) {
    throw DomainError("chuk_bound needs n,k >= 1, lambda1 > 0, t >= 0");
  }
  return std::pow(3.0, n) / k * std::exp(-t * lambda1);
}

namespace {

double spanning_tree_sum(const WeightedGraph& g) {
  const int n = g.n();
  const auto& edges = g.edges();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  double total = 0.0;
  auto rec = [&](auto&& self, std::size_t idx, int chosen, double prod) -> void {
    if (chosen == n - 1) {
      total += prod;
      return;
    }
    if (idx >= edges.size()) return;
    if (edges.size() - idx < static_cast<std::size_t>(n - 1 - chosen)) return;
    const Edge& e = edges[idx];
    int ru = find(e.u), rv = find(e.v);
    if (ru != rv) {
      parent[static_cast<std::size_t>(ru)] = rv;
      self(self, idx + 1, chosen + 1, prod * e.w);
      parent[static_cast<std::size_t>(ru)] = ru;
    }
    self(self, idx + 1, chosen, prod);
  };
  rec(rec, 0, 0, 1.0);
  return total;
}

}  // namespace

MatrixTreeResult matrix_tree_check(const WeightedGraph& g, int brute_cap) {
  MatrixTreeResult out;
  auto eigs = positive_laplacian_eigenvalues(g);
  double prod = 1.0;
  for (double lam : eigs) prod *= lam;
  out.spectral = prod / g.n();
  if (g.n() <= brute_cap) out.tree_sum = spanning_tree_sum(g);
  return out;
}

std::vector<double> hypercube_log_prob_profile(int d, const TimeGrid& grid) {
  if (d < 1 || d > 40) throw DomainError("hypercube profile supports 1 <= d <= 40");
  // binomials fit doubles exactly through d = 40 (max ~1.4e11 < 2^53)
  std::vector<double> binom(static_cast<std::size_t>(d) + 1, 1.0);
  for (int k = 1; k <= d; ++k) {
    binom[static_cast<std::size_t>(k)] =
        binom[static_cast<std::size_t>(k - 1)] * (d - k + 1) / k;
  }
  std::vector<double> out;
  out.reserve(grid.times.size());
  for (double t : grid.times) {
    double lp = -d * std::log(2.0);
    for (int k = 1; k <= d; ++k) {
      double x = 2.0 * k * t;
      if (x <= 0.0) {
        lp = -std::numeric_limits<double>::infinity();
        break;
      }
      lp += binom[static_cast<std::size_t>(k)] * std::log1p(-std::exp(-x));
    }
    out.push_back(lp);
  }
  return out;
}

std::vector<double> hypercube_prob_profile(int d, const TimeGrid& grid) {
  auto lp = hypercube_log_prob_profile(d, grid);
  for (double& v : lp) v = std::exp(v);
  return lp;
}

std::vector<double> torus_eigenvalues(int side, int dim) {
  if (side < 2 || dim < 1) throw DomainError("torus needs side >= 2, dim >= 1");
  long long size = 1;
  for (int j = 0; j < dim; ++j) {
    size *= side;
    if (size > 100000) throw DomainError("torus spectrum capped at 100000 vertices");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(size));
  const double tau = 2.0 * std::acos(-1.0) / side;
  // At side == 2 the two cycle neighbours coincide, leaving a single edge
  // per axis, so each axis contributes half the generic cycle eigenvalue.
  const double axis_scale = (side == 2) ? 0.5 : 1.0;
  for (long long code = 0; code < size; ++code) {
    long long rem = code;
    double lam = 0.0;
    for (int j = 0; j < dim; ++j) {
      int c = static_cast<int>(rem % side);
      rem /= side;
      lam += axis_scale * 2.0 * (1.0 - std::cos(tau * c));
    }
    out.push_back(lam);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double equilibration_time_from_eigenvalues(const std::vector<double>& positive_eigs,
                                           double threshold_fraction) {
  if (!(threshold_fraction > 0.0 && threshold_fraction < 1.0)) {
    throw DomainError("threshold fraction must be in (0, 1)");
  }
  const double n = static_cast<double>(positive_eigs.size()) + 1.0;
  double lambda1 = positive_eigs.empty() ? 0.0 : positive_eigs.front();
  if (lambda1 <= 0.0) return std::numeric_limits<double>::infinity();
  const double log_threshold = std::log(threshold_fraction) - std::log(n);
  auto log_prob = [&](double t) {
    return log_cycle_product(positive_eigs, t) - std::log(n);
  };
  double hi = 64.0 / lambda1;
  int guard = 0;
  while (log_prob(hi) < log_threshold) {
    hi *= 2.0;
    if (++guard > 200) return std::numeric_limits<double>::infinity();
  }
  double lo = 0.0;
  // invariant: log_prob(lo) < threshold <= log_prob(hi); bisect to 1e-6 rel
  for (int it = 0; it < 100 && (hi - lo) > 1e-6 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    if (log_prob(mid) >= log_threshold) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double equilibration_time(const WeightedGraph& g, double threshold_fraction) {
  return equilibration_time_from_eigenvalues(positive_laplacian_eigenvalues(g),
                                             threshold_fraction);
}

double torus_equilibration_time(int side, int dim, double threshold_fraction) {
  auto eigs = torus_eigenvalues(side, dim);
  return equilibration_time_from_eigenvalues(
      std::vector<double>(eigs.begin() + 1, eigs.end()), threshold_fraction);
}

}  // namespace cyclespec
