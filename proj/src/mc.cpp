#include "cyclespec/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <thread>
#include <utility>

#include "cyclespec/rng.hpp"

namespace cyclespec {

namespace {

struct ScanScratch {
  std::vector<std::int64_t> counts;
  std::vector<char> visited;
};

struct ScanResult {
  int origin_len = 0;
  int total = 0;
};

// Index-chasing cycle decomposition; fills scratch.counts with s_k.
ScanResult cycle_scan(const std::vector<int>& perm, ScanScratch& s) {
  const int n = static_cast<int>(perm.size());
  s.counts.assign(n, 0);
  s.visited.assign(n, 0);
  ScanResult r;
  for (int i = 0; i < n; ++i) {
    if (s.visited[i]) continue;
    int len = 0;
    int j = i;
    while (!s.visited[j]) {
      s.visited[j] = 1;
      j = perm[j];
      ++len;
    }
    ++s.counts[len - 1];
    ++r.total;
    if (i == 0) r.origin_len = len;
  }
  return r;
}

// Vose alias table over the edge list; sample() consumes one uniform
// draw from (0, 1] and returns an edge index with probability w_e / W.
class AliasTable {
 public:
  explicit AliasTable(const std::vector<Edge>& edges) {
    const int m = static_cast<int>(edges.size());
    prob_.assign(m, 1.0);
    alias_.resize(m);
    double total = 0.0;
    for (const Edge& e : edges) total += e.w;
    std::vector<double> scaled(m);
    std::vector<int> small, large;
    for (int i = 0; i < m; ++i) {
      alias_[i] = i;
      scaled[i] = edges[i].w * m / total;
      (scaled[i] < 1.0 ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
      const int s = small.back();
      small.pop_back();
      const int l = large.back();
      large.pop_back();
      prob_[s] = scaled[s];
      alias_[s] = l;
      scaled[l] -= 1.0 - scaled[s];
      (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    // Whatever remains on either worklist is a full bucket up to rounding;
    // it keeps the initial prob 1 / self-alias entries.
  }

  int sample(double u) const {
    const int m = static_cast<int>(prob_.size());
    const double pos = u * m;
    const int idx = std::min(static_cast<int>(pos), m - 1);
    const double frac = pos - idx;
    return frac < prob_[idx] ? idx : alias_[idx];
  }

 private:
  std::vector<double> prob_;
  std::vector<int> alias_;
};

// One replica trajectory.  The aggregate clock rings at rate W; each ring
// picks an edge via the alias table and swaps its endpoints.  Checkpoints
// crossed by the next ring time see the pre-ring state, so a checkpoint at
// t = 0 always reports the identity.  Draw order per event: waiting time
// first, then (only if another checkpoint is still ahead) the edge choice.
template <class Sink>
void walk_replica(int n, const std::vector<Edge>& edges, double total_rate,
                  const AliasTable& alias, const std::vector<double>& cps,
                  SplitMix64 rng, std::vector<int>& perm, Sink&& sink) {
  perm.resize(n);
  std::iota(perm.begin(), perm.end(), 0);
  double now = 0.0;
  std::size_t cp = 0;
  while (cp < cps.size()) {
    const double t_next = now - std::log(rng.next_double()) / total_rate;
    while (cp < cps.size() && cps[cp] <= t_next) {
      sink(cp, perm);
      ++cp;
    }
    if (cp >= cps.size()) break;
    const Edge& e = edges[alias.sample(rng.next_double())];
    std::swap(perm[e.u], perm[e.v]);
    now = t_next;
  }
}

constexpr std::int64_t kChunk = 1024;

// Workers pull chunk indices from a shared counter; every chunk is a fixed
// replica range processed sequentially, so the per-chunk partials -- and
// therefore the chunk-ordered reduction -- are identical for any thread
// count.
template <class ChunkFn>
void run_chunks(std::int64_t n_chunks, int threads, ChunkFn&& fn) {
  int t = threads > 0 ? threads
                      : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  t = static_cast<int>(std::min<std::int64_t>(t, n_chunks));
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::int64_t c = next.fetch_add(1);
      if (c >= n_chunks) break;
      fn(c);
    }
  };
  if (t == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
}

void validate_config(const SimConfig& config) {
  if (config.replicas < 1) throw DomainError("replicas must be >= 1");
  make_time_grid(config.checkpoints.times);
  if (!(config.graph.total_weight() > 0.0)) {
    throw DomainError("zero total rate: no positive-weight edges");
  }
  for (int k : config.observables.cycle_counts) {
    if (k < 1 || k > config.graph.n()) {
      throw DomainError("cycle-count observable k out of range");
    }
  }
}

double stderr_from_sums(std::int64_t count, double sum, double sumsq) {
  if (count < 2) return 0.0;
  const double mean = sum / count;
  double var = (sumsq - count * mean * mean) / (count - 1);
  if (!(var > 0.0)) var = 0.0;
  return std::sqrt(var / count);
}

}  // namespace

CycleStats cycle_observables(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  if (n == 0) throw DomainError("empty permutation");
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) {
      throw DomainError("not a permutation of {0, ..., n-1}");
    }
    seen[v] = 1;
  }
  ScanScratch scratch;
  const ScanResult r = cycle_scan(perm, scratch);
  CycleStats out;
  out.counts = std::move(scratch.counts);
  out.origin_cycle_length = r.origin_len;
  out.total_cycles = r.total;
  return out;
}

SimReport run_simulation(const SimConfig& config, int threads) {
  validate_config(config);
  const int n = config.graph.n();

  struct Spec {
    enum Kind { kCount, kFull, kOrigin, kTotal, kWeight } kind;
    int k;
    std::string name;
  };
  std::vector<Spec> specs;
  for (int k : config.observables.cycle_counts) {
    specs.push_back({Spec::kCount, k, "s_" + std::to_string(k)});
  }
  if (config.observables.full_cycle) {
    specs.push_back({Spec::kFull, 0, "full_cycle"});
  }
  if (config.observables.origin_cycle_length) {
    specs.push_back({Spec::kOrigin, 0, "origin_cycle_length"});
  }
  if (config.observables.total_cycles) {
    specs.push_back({Spec::kTotal, 0, "total_cycles"});
  }
  if (config.observables.magnetization_weight) {
    specs.push_back({Spec::kWeight, 0, "magnetization_weight"});
  }

  const std::vector<double>& cps = config.checkpoints.times;
  const std::size_t n_cp = cps.size();
  const std::size_t n_series = specs.size();
  const std::int64_t replicas = config.replicas;
  const std::int64_t n_chunks = (replicas + kChunk - 1) / kChunk;
  const double total_rate = config.graph.total_weight();
  const AliasTable alias(config.graph.edges());

  struct Partial {
    std::vector<double> sum, sumsq;
  };
  std::vector<Partial> partials(n_chunks);

  run_chunks(n_chunks, threads, [&](std::int64_t c) {
    Partial p;
    p.sum.assign(n_series * n_cp, 0.0);
    p.sumsq.assign(n_series * n_cp, 0.0);
    ScanScratch scratch;
    std::vector<int> perm;
    const std::int64_t lo = c * kChunk;
    const std::int64_t hi = std::min(replicas, lo + kChunk);
    for (std::int64_t r = lo; r < hi; ++r) {
      SplitMix64 rng(mix_seed(config.master_seed, static_cast<std::uint64_t>(r)));
      walk_replica(n, config.graph.edges(), total_rate, alias, cps, rng, perm,
                   [&](std::size_t cp, const std::vector<int>& state) {
                     const ScanResult sr = cycle_scan(state, scratch);
                     for (std::size_t s = 0; s < n_series; ++s) {
                       double x = 0.0;
                       switch (specs[s].kind) {
                         case Spec::kCount:
                           x = static_cast<double>(scratch.counts[specs[s].k - 1]);
                           break;
                         case Spec::kFull:
                           x = static_cast<double>(scratch.counts[n - 1]);
                           break;
                         case Spec::kOrigin:
                           x = sr.origin_len;
                           break;
                         case Spec::kTotal:
                           x = sr.total;
                           break;
                         case Spec::kWeight:
                           x = std::ldexp(1.0, sr.total);
                           break;
                       }
                       p.sum[s * n_cp + cp] += x;
                       p.sumsq[s * n_cp + cp] += x * x;
                     }
                   });
    }
    partials[c] = std::move(p);
  });

  std::vector<double> sum(n_series * n_cp, 0.0), sumsq(n_series * n_cp, 0.0);
  for (const Partial& p : partials) {
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += p.sum[i];
      sumsq[i] += p.sumsq[i];
    }
  }

  SimReport report;
  report.config = config;
  for (std::size_t s = 0; s < n_series; ++s) {
    ObservableSeries series;
    series.name = specs[s].name;
    series.mean.resize(n_cp);
    series.std_error.resize(n_cp);
    for (std::size_t cp = 0; cp < n_cp; ++cp) {
      const double sx = sum[s * n_cp + cp];
      series.mean[cp] = sx / replicas;
      series.std_error[cp] = stderr_from_sums(replicas, sx, sumsq[s * n_cp + cp]);
    }
    report.series.push_back(std::move(series));
  }
  return report;
}

MagnetizationReport magnetization_estimator(const SimConfig& config,
                                            int threshold, int threads) {
  validate_config(config);
  const int n = config.graph.n();
  if (threshold < 0 || threshold >= n) {
    throw DomainError("threshold must satisfy 0 <= threshold < n");
  }

  const std::vector<double>& cps = config.checkpoints.times;
  const std::size_t n_cp = cps.size();
  const std::int64_t replicas = config.replicas;
  const std::int64_t n_chunks = (replicas + kChunk - 1) / kChunk;
  const double total_rate = config.graph.total_weight();
  const AliasTable alias(config.graph.edges());

  // Weighted moments are kept relative to 2^{max C seen so far in the
  // chunk}; rescaling multiplies by exact powers of two, so the partials
  // do not depend on when the maximum shows up relative to thread timing.
  struct Partial {
    std::vector<int> max_c;
    std::vector<double> sx, sy, sxx, syy, sxy, si;
  };
  std::vector<Partial> partials(n_chunks);

  run_chunks(n_chunks, threads, [&](std::int64_t c) {
    Partial p;
    p.max_c.assign(n_cp, -1);
    p.sx.assign(n_cp, 0.0);
    p.sy.assign(n_cp, 0.0);
    p.sxx.assign(n_cp, 0.0);
    p.syy.assign(n_cp, 0.0);
    p.sxy.assign(n_cp, 0.0);
    p.si.assign(n_cp, 0.0);
    ScanScratch scratch;
    std::vector<int> perm;
    const std::int64_t lo = c * kChunk;
    const std::int64_t hi = std::min(replicas, lo + kChunk);
    for (std::int64_t r = lo; r < hi; ++r) {
      SplitMix64 rng(mix_seed(config.master_seed, static_cast<std::uint64_t>(r)));
      walk_replica(n, config.graph.edges(), total_rate, alias, cps, rng, perm,
                   [&](std::size_t cp, const std::vector<int>& state) {
                     const ScanResult sr = cycle_scan(state, scratch);
                     const int cyc = sr.total;
                     const double ind =
                         sr.origin_len > threshold ? 1.0 : 0.0;
                     int& m = p.max_c[cp];
                     if (cyc > m) {
                       const double f = std::ldexp(1.0, m - cyc);
                       const double f2 = f * f;
                       p.sx[cp] *= f;
                       p.sy[cp] *= f;
                       p.sxx[cp] *= f2;
                       p.syy[cp] *= f2;
                       p.sxy[cp] *= f2;
                       m = cyc;
                     }
                     const double y = std::ldexp(1.0, cyc - m);
                     const double x = ind * y;
                     p.sx[cp] += x;
                     p.sy[cp] += y;
                     p.sxx[cp] += x * x;
                     p.syy[cp] += y * y;
                     p.sxy[cp] += x * y;
                     p.si[cp] += ind;
                   });
    }
    partials[c] = std::move(p);
  });

  MagnetizationReport report;
  report.threshold = threshold;
  report.replicas = replicas;
  report.master_seed = config.master_seed;
  report.points.resize(n_cp);

  for (std::size_t cp = 0; cp < n_cp; ++cp) {
    int global_max = -1;
    for (const Partial& p : partials) global_max = std::max(global_max, p.max_c[cp]);
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0, si = 0;
    for (const Partial& p : partials) {
      const double f = std::ldexp(1.0, p.max_c[cp] - global_max);
      const double f2 = f * f;
      sx += p.sx[cp] * f;
      sy += p.sy[cp] * f;
      sxx += p.sxx[cp] * f2;
      syy += p.syy[cp] * f2;
      sxy += p.sxy[cp] * f2;
      si += p.si[cp];
    }

    MagnetizationPoint& pt = report.points[cp];
    pt.t = cps[cp];
    const double ybar = sy / replicas;
    const double xbar = sx / replicas;
    pt.weight_mean = std::ldexp(ybar, global_max);
    if (!(ybar > 0.0)) {
      pt.indeterminate = true;
      continue;
    }
    const double ratio = xbar / ybar;
    pt.magnetization = 0.5 * ratio;
    if (replicas >= 2) {
      // Delta method on the (numerator, denominator) sample means; the
      // common 2^{-global_max} scale cancels between the covariance terms
      // and ybar^2.
      const double cxx = (sxx - replicas * xbar * xbar) / (replicas - 1);
      const double cyy = (syy - replicas * ybar * ybar) / (replicas - 1);
      const double cxy = (sxy - replicas * xbar * ybar) / (replicas - 1);
      double var_ratio =
          (cxx - 2.0 * ratio * cxy + ratio * ratio * cyy) /
          (replicas * ybar * ybar);
      if (!(var_ratio > 0.0)) var_ratio = 0.0;
      pt.magnetization_se = 0.5 * std::sqrt(var_ratio);
    }
    pt.prob_long_origin = si / replicas;
    pt.prob_long_origin_se = stderr_from_sums(replicas, si, si);
    if (!std::isfinite(pt.magnetization)) pt.indeterminate = true;
  }
  return report;
}

}  // namespace cyclespec
