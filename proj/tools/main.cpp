// Command-line surface: every verb maps onto library calls and emits data on
// stdout (text, json, or csv) with the resolved configuration echoed on
// stderr.  Exit codes: 0 ok, 1 verification failure, 2 usage/domain error,
// 3 capability cap.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cyclespec/characters.hpp"
#include "cyclespec/formulas.hpp"
#include "cyclespec/graph.hpp"
#include "cyclespec/mc.hpp"
#include "cyclespec/spectra.hpp"
#include "cyclespec/symfun.hpp"
#include "cyclespec/verify.hpp"

using nlohmann::ordered_json;
using namespace cyclespec;

namespace {

// ---------------------------------------------------------------- helpers

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + s + "'");
  }
}

std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DomainError("not an integer: '" + s + "'");
  }
}

// grammar: "a,b,c" explicit values, or "lin:start:stop:count",
// or "log:start:stop:count"
TimeGrid parse_time_grid(const std::string& spec) {
  std::vector<double> ts;
  if (spec.rfind("lin:", 0) == 0 || spec.rfind("log:", 0) == 0) {
    const auto f = split(spec, ':');
    if (f.size() != 4) {
      throw DomainError("grid spec must be " + f[0] + ":start:stop:count");
    }
    const double a = parse_double(f[1]);
    const double b = parse_double(f[2]);
    const std::int64_t count = parse_int(f[3]);
    if (count < 1 || count > 1000000) {
      throw DomainError("grid count must be in 1..1000000");
    }
    const bool logspace = f[0] == "log";
    if (logspace && (!(a > 0.0) || !(b > 0.0))) {
      throw DomainError("log grid endpoints must be positive");
    }
    for (std::int64_t i = 0; i < count; ++i) {
      const double frac =
          count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
      ts.push_back(logspace ? a * std::pow(b / a, frac) : a + (b - a) * frac);
    }
  } else {
    for (const std::string& f : split(spec, ',')) ts.push_back(parse_double(f));
  }
  return make_time_grid(ts);
}

// builder grammar: complete:N[:w] | hypercube:D | torus:SIDE:DIM |
// path:N | cycle:N
WeightedGraph build_graph(const std::string& spec) {
  const auto f = split(spec, ':');
  const std::string& kind = f[0];
  const auto want = [&](std::size_t lo, std::size_t hi) {
    if (f.size() - 1 < lo || f.size() - 1 > hi) {
      throw DomainError("builder '" + kind + "' takes " + std::to_string(lo) +
                        (hi > lo ? " to " + std::to_string(hi) : "") +
                        " argument(s)");
    }
  };
  if (kind == "complete") {
    want(1, 2);
    const int n = static_cast<int>(parse_int(f[1]));
    return f.size() == 3 ? WeightedGraph::complete(n, parse_double(f[2]))
                         : WeightedGraph::complete(n);
  }
  if (kind == "hypercube") {
    want(1, 1);
    return WeightedGraph::hypercube(static_cast<int>(parse_int(f[1])));
  }
  if (kind == "torus") {
    want(2, 2);
    return WeightedGraph::torus(static_cast<int>(parse_int(f[1])),
                                static_cast<int>(parse_int(f[2])));
  }
  if (kind == "path") {
    want(1, 1);
    return WeightedGraph::path(static_cast<int>(parse_int(f[1])));
  }
  if (kind == "cycle") {
    want(1, 1);
    return WeightedGraph::cycle(static_cast<int>(parse_int(f[1])));
  }
  throw DomainError("unknown builder '" + kind +
                    "' (want complete|hypercube|torus|path|cycle)");
}

WeightedGraph resolve_graph(const std::string& file, const std::string& builder) {
  if (!file.empty() && !builder.empty()) {
    throw DomainError("--graph and --builder are mutually exclusive");
  }
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw DomainError("cannot open graph file: " + file);
    return read_graph(in);
  }
  if (builder.empty()) throw DomainError("need --graph FILE or --builder SPEC");
  return build_graph(builder);
}

std::string graph_label(const std::string& file, const std::string& builder) {
  return file.empty() ? "builder=" + builder : "graph=" + file;
}

int env_threads() {
  const char* s = std::getenv("CYCLESPEC_THREADS");
  if (s == nullptr || *s == '\0') return 0;  // library picks
  const std::int64_t t = parse_int(s);
  if (t < 1 || t > 4096) throw DomainError("CYCLESPEC_THREADS must be in 1..4096");
  return static_cast<int>(t);
}

void echo_config(const std::string& line) {
  std::fprintf(stderr, "[cyclespec] %s\n", line.c_str());
}

ordered_json graph_json(const WeightedGraph& g) {
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.w});
  return ordered_json{{"n", g.n()}, {"edges", edges}};
}

ordered_json rat_json(const Rat& r) {
  if (r.den() == 1) return r.num();
  return r.str();
}

void emit_json(const ordered_json& j) { std::printf("%s\n", j.dump(2).c_str()); }

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// Shared emitter for verbs whose data is a named-column table over a time
// grid.  Text gets %.12g, csv %.17g, json native doubles.
void emit_grid_table(const std::string& format, const std::string& json_name,
                     const ordered_json& json_meta,
                     const std::vector<std::string>& columns,
                     const std::vector<double>& times,
                     const std::vector<std::vector<double>>& rows) {
  if (format == "json") {
    ordered_json out = json_meta;
    ordered_json values = ordered_json::array();
    for (std::size_t i = 0; i < times.size(); ++i) {
      ordered_json row{{"t", times[i]}};
      for (std::size_t c = 0; c < columns.size(); ++c) row[columns[c]] = rows[i][c];
      values.push_back(row);
    }
    out[json_name] = values;
    emit_json(out);
  } else if (format == "csv") {
    std::printf("t");
    for (const auto& c : columns) std::printf(",%s", c.c_str());
    std::printf("\n");
    for (std::size_t i = 0; i < times.size(); ++i) {
      std::printf("%s", num17(times[i]).c_str());
      for (double v : rows[i]) std::printf(",%s", num17(v).c_str());
      std::printf("\n");
    }
  } else {
    std::printf("%-16s", "t");
    for (const auto& c : columns) std::printf(" %-16s", c.c_str());
    std::printf("\n");
    for (std::size_t i = 0; i < times.size(); ++i) {
      std::printf("%-16s", num(times[i]).c_str());
      for (double v : rows[i]) std::printf(" %-16s", num(v).c_str());
      std::printf("\n");
    }
  }
}

// ------------------------------------------------------------------ verbs

int run_decompose(int n, int k, const std::string& format) {
  echo_config("verb=decompose n=" + std::to_string(n) +
              " k=" + std::to_string(k) + " format=" + format);
  const std::map<Partition, int> closed = a_rho_closed_form(n, k);
  std::map<Partition, Rat> brute;
  for (const auto& [rho, c] : decompose(alpha_k(n, k))) {
    brute[rho] = c * Rat(k);
  }

  std::map<Partition, std::pair<std::optional<int>, std::optional<Rat>>> rows;
  for (const auto& [rho, a] : closed) rows[rho].first = a;
  for (const auto& [rho, c] : brute) rows[rho].second = c;
  bool agree = true;
  for (const auto& [rho, entry] : rows) {
    agree = agree && entry.first.has_value() && entry.second.has_value() &&
            *entry.second == Rat(*entry.first);
  }
  const char* verdict = agree ? "PASS" : "FAIL";

  if (format == "json") {
    ordered_json entries = ordered_json::array();
    for (const auto& [rho, entry] : rows) {
      entries.push_back(
          {{"partition", rho.parts()},
           {"closed", entry.first ? ordered_json(*entry.first) : ordered_json()},
           {"brute", entry.second ? rat_json(*entry.second) : ordered_json()}});
    }
    emit_json({{"n", n}, {"k", k}, {"entries", entries}, {"verdict", verdict}});
  } else if (format == "csv") {
    std::printf("partition,closed,brute\n");
    for (const auto& [rho, entry] : rows) {
      std::printf("%s,%s,%s\n", csv_quote(rho.str()).c_str(),
                  entry.first ? std::to_string(*entry.first).c_str() : "",
                  entry.second ? entry.second->str().c_str() : "");
    }
  } else {
    std::printf("%-16s %8s %8s\n", "rho", "closed", "brute");
    for (const auto& [rho, entry] : rows) {
      std::printf("%-16s %8s %8s\n", rho.str().c_str(),
                  entry.first ? std::to_string(*entry.first).c_str() : "-",
                  entry.second ? entry.second->str().c_str() : "-");
    }
    std::printf("verdict: %s\n", verdict);
  }
  return agree ? 0 : 1;
}

int run_coeffs(int n, int k, const std::string& via, const std::string& format) {
  echo_config("verb=coeffs n=" + std::to_string(n) + " k=" + std::to_string(k) +
              " via=" + via + " format=" + format);
  std::map<Partition, Rat> table;
  if (via == "closed") {
    for (const auto& [rho, a] : a_rho_closed_form(n, k)) table[rho] = Rat(a);
  } else {
    table = derive_a_rho_via_pieri(n, k).coeffs;
  }

  if (format == "csv") {
    std::printf("partition,a_rho\n");
    for (const auto& [rho, a] : table) {
      std::printf("%s,%s\n", csv_quote(rho.str()).c_str(), a.str().c_str());
    }
  } else if (format == "text") {
    std::printf("%-16s %8s\n", "rho", "a_rho");
    for (const auto& [rho, a] : table) {
      std::printf("%-16s %8s\n", rho.str().c_str(), a.str().c_str());
    }
  } else {
    ordered_json entries = ordered_json::array();
    for (const auto& [rho, a] : table) {
      entries.push_back({{"partition", rho.parts()}, {"a_rho", rat_json(a)}});
    }
    emit_json({{"n", n}, {"k", k}, {"via", via}, {"coeffs", entries}});
  }
  return 0;
}

int run_prob(const std::string& file, const std::string& builder,
             const std::string& grid_spec, const std::string& format) {
  const WeightedGraph g = resolve_graph(file, builder);
  const TimeGrid grid = parse_time_grid(grid_spec);
  echo_config("verb=prob-n-cycle " + graph_label(file, builder) + " n=" +
              std::to_string(g.n()) + " t-grid=" + grid_spec +
              " format=" + format);
  std::vector<std::vector<double>> rows;
  for (double t : grid.times) rows.push_back({prob_full_cycle(g, t)});
  emit_grid_table(format, "values",
                  {{"verb", "prob-n-cycle"}, {"graph", graph_json(g)}},
                  {"prob"}, grid.times, rows);
  return 0;
}

int run_expect(const std::string& file, const std::string& builder, int k,
               const std::string& grid_spec, const std::string& format) {
  const WeightedGraph g = resolve_graph(file, builder);
  const TimeGrid grid = parse_time_grid(grid_spec);
  echo_config("verb=expect " + graph_label(file, builder) + " n=" +
              std::to_string(g.n()) + " k=" + std::to_string(k) + " t-grid=" +
              grid_spec + " format=" + format);
  const double lambda1 = positive_laplacian_eigenvalues(g).front();
  std::vector<std::vector<double>> rows;
  for (double t : grid.times) {
    const double e = expected_k_cycles(g, k, t);
    const double bound = lambda1 > 0.0
                             ? chuk_bound(g.n(), k, t, lambda1)
                             : std::numeric_limits<double>::infinity();
    rows.push_back({e, bound});
  }
  emit_grid_table(format, "values",
                  {{"verb", "expect"}, {"graph", graph_json(g)}, {"k", k}},
                  {"expect", "bound"}, grid.times, rows);
  return 0;
}

int run_bound(const std::string& file, const std::string& builder, int n,
              double lambda1, int k, const std::string& grid_spec,
              const std::string& format) {
  if (!file.empty() || !builder.empty()) {
    const WeightedGraph g = resolve_graph(file, builder);
    n = g.n();
    lambda1 = positive_laplacian_eigenvalues(g).front();
  } else if (n <= 0 || !(lambda1 > 0.0)) {
    throw DomainError("need --graph/--builder or both --n and --lambda1");
  }
  const TimeGrid grid = parse_time_grid(grid_spec);
  echo_config("verb=bound n=" + std::to_string(n) + " k=" + std::to_string(k) +
              " lambda1=" + num(lambda1) + " t-grid=" + grid_spec +
              " format=" + format);
  std::vector<std::vector<double>> rows;
  for (double t : grid.times) rows.push_back({chuk_bound(n, k, t, lambda1)});
  emit_grid_table(format, "values",
                  {{"verb", "bound"}, {"n", n}, {"k", k}, {"lambda1", lambda1}},
                  {"bound"}, grid.times, rows);
  return 0;
}

int run_simulate(const std::string& file, const std::string& builder,
                 const std::string& checkpoints_spec, std::int64_t replicas,
                 std::uint64_t seed, const std::string& k_list, bool origin,
                 bool total, bool mag_weight, int mag_threshold,
                 const std::string& format) {
  SimConfig cfg;
  cfg.graph = resolve_graph(file, builder);
  cfg.checkpoints = parse_time_grid(checkpoints_spec);
  cfg.replicas = replicas;
  cfg.master_seed = seed;
  cfg.observables.full_cycle = true;
  if (!k_list.empty()) {
    for (const std::string& f : split(k_list, ',')) {
      cfg.observables.cycle_counts.push_back(static_cast<int>(parse_int(f)));
    }
  }
  cfg.observables.origin_cycle_length = origin;
  cfg.observables.total_cycles = total;
  cfg.observables.magnetization_weight = mag_weight;
  const int threads = env_threads();

  std::string obs = "full_cycle";
  for (int k : cfg.observables.cycle_counts) obs += ",s_" + std::to_string(k);
  if (origin) obs += ",origin_cycle_length";
  if (total) obs += ",total_cycles";
  if (mag_weight) obs += ",magnetization_weight";
  echo_config("verb=simulate " + graph_label(file, builder) + " n=" +
              std::to_string(cfg.graph.n()) + " checkpoints=" +
              checkpoints_spec + " replicas=" + std::to_string(replicas) +
              " seed=" + std::to_string(seed) + " observables=" + obs +
              " magnetization-threshold=" + std::to_string(mag_threshold) +
              " threads=" + std::to_string(threads) + " format=" + format);

  const SimReport report = run_simulation(cfg, threads);

  // z-scores against the exact formulas where the exact side is computable
  const auto exact_for = [&](const std::string& name,
                             double t) -> std::optional<double> {
    try {
      if (name == "full_cycle") return prob_full_cycle(cfg.graph, t);
      if (name.rfind("s_", 0) == 0) {
        return expected_k_cycles(cfg.graph,
                                 static_cast<int>(parse_int(name.substr(2))), t);
      }
    } catch (const std::exception&) {
      return std::nullopt;  // capability caps, oversized partitions, ...
    }
    return std::nullopt;
  };
  const auto z_score = [](double mean, double se,
                          double exact) -> std::optional<double> {
    if (se > 0.0) return (mean - exact) / se;
    if (mean == exact) return 0.0;
    return std::nullopt;
  };

  std::optional<MagnetizationReport> mag;
  if (mag_threshold >= 0) {
    mag = magnetization_estimator(cfg, mag_threshold, threads);
  }

  if (format == "json") {
    ordered_json out{{"verb", "simulate"},
                     {"config",
                      {{"graph", graph_json(cfg.graph)},
                       {"checkpoints", cfg.checkpoints.times},
                       {"replicas", cfg.replicas},
                       {"master_seed", cfg.master_seed},
                       {"observables", split(obs, ',')},
                       {"threads", threads}}}};
    ordered_json series = ordered_json::array();
    for (const auto& s : report.series) {
      ordered_json points = ordered_json::array();
      for (std::size_t cp = 0; cp < cfg.checkpoints.times.size(); ++cp) {
        const double t = cfg.checkpoints.times[cp];
        ordered_json point{
            {"t", t}, {"mean", s.mean[cp]}, {"stderr", s.std_error[cp]}};
        const auto exact = exact_for(s.name, t);
        if (exact) {
          point["exact"] = *exact;
          const auto z = z_score(s.mean[cp], s.std_error[cp], *exact);
          point["z"] = z ? ordered_json(*z) : ordered_json();
        }
        points.push_back(point);
      }
      series.push_back({{"name", s.name}, {"points", points}});
    }
    out["series"] = series;
    if (mag) {
      ordered_json pts = ordered_json::array();
      for (const auto& p : mag->points) {
        pts.push_back({{"t", p.t},
                       {"magnetization", p.magnetization},
                       {"magnetization_stderr", p.magnetization_se},
                       {"prob_long_origin", p.prob_long_origin},
                       {"prob_long_origin_stderr", p.prob_long_origin_se},
                       {"weight_mean", p.weight_mean},
                       {"indeterminate", p.indeterminate}});
      }
      out["magnetization"] = {{"threshold", mag->threshold}, {"points", pts}};
    }
    emit_json(out);
  } else if (format == "csv") {
    std::printf("observable,t,mean,stderr,replicas\n");
    for (const auto& s : report.series) {
      for (std::size_t cp = 0; cp < cfg.checkpoints.times.size(); ++cp) {
        std::printf("%s,%s,%s,%s,%lld\n", s.name.c_str(),
                    num17(cfg.checkpoints.times[cp]).c_str(),
                    num17(s.mean[cp]).c_str(), num17(s.std_error[cp]).c_str(),
                    static_cast<long long>(cfg.replicas));
      }
    }
    if (mag) {
      for (const auto& p : mag->points) {
        std::printf("magnetization,%s,%s,%s,%lld\n", num17(p.t).c_str(),
                    num17(p.magnetization).c_str(),
                    num17(p.magnetization_se).c_str(),
                    static_cast<long long>(cfg.replicas));
        std::printf("prob_long_origin,%s,%s,%s,%lld\n", num17(p.t).c_str(),
                    num17(p.prob_long_origin).c_str(),
                    num17(p.prob_long_origin_se).c_str(),
                    static_cast<long long>(cfg.replicas));
      }
    }
  } else {
    std::printf("%-22s %-14s %-14s %-14s %-10s\n", "observable", "t", "mean",
                "stderr", "z_exact");
    for (const auto& s : report.series) {
      for (std::size_t cp = 0; cp < cfg.checkpoints.times.size(); ++cp) {
        const double t = cfg.checkpoints.times[cp];
        std::string zcol = "-";
        if (const auto exact = exact_for(s.name, t)) {
          if (const auto z = z_score(s.mean[cp], s.std_error[cp], *exact)) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%+.3f", *z);
            zcol = buf;
          }
        }
        std::printf("%-22s %-14s %-14s %-14s %-10s\n", s.name.c_str(),
                    num(t).c_str(), num(s.mean[cp]).c_str(),
                    num(s.std_error[cp]).c_str(), zcol.c_str());
      }
    }
    if (mag) {
      std::printf("\nmagnetization (threshold %d):\n", mag->threshold);
      std::printf("%-14s %-14s %-14s %-14s %-14s %-14s\n", "t", "ratio",
                  "stderr", "p_long", "p_stderr", "weight_mean");
      for (const auto& p : mag->points) {
        std::printf("%-14s %-14s %-14s %-14s %-14s %-14s%s\n", num(p.t).c_str(),
                    num(p.magnetization).c_str(),
                    num(p.magnetization_se).c_str(),
                    num(p.prob_long_origin).c_str(),
                    num(p.prob_long_origin_se).c_str(),
                    num(p.weight_mean).c_str(),
                    p.indeterminate ? "  (indeterminate)" : "");
      }
    }
  }
  return 0;
}

int run_matrix_tree(const std::string& file, const std::string& builder,
                    const std::string& format) {
  const WeightedGraph g = resolve_graph(file, builder);
  echo_config("verb=matrix-tree " + graph_label(file, builder) + " n=" +
              std::to_string(g.n()) + " format=" + format);
  const MatrixTreeResult r = matrix_tree_check(g);
  if (format == "json") {
    emit_json({{"verb", "matrix-tree"},
               {"graph", graph_json(g)},
               {"spectral", r.spectral},
               {"tree_sum", r.tree_sum ? ordered_json(*r.tree_sum)
                                       : ordered_json()}});
  } else if (format == "csv") {
    std::printf("quantity,value\n");
    std::printf("spectral,%s\n", num17(r.spectral).c_str());
    std::printf("tree_sum,%s\n",
                r.tree_sum ? num17(*r.tree_sum).c_str() : "");
  } else {
    std::printf("spectral=%s tree_sum=%s\n", num(r.spectral).c_str(),
                r.tree_sum ? num(*r.tree_sum).c_str() : "skipped");
  }
  return 0;
}

int run_hypercube(int d, const std::string& grid_spec,
                  const std::string& format) {
  const TimeGrid grid = parse_time_grid(grid_spec);
  echo_config("verb=hypercube d=" + std::to_string(d) + " t-grid=" + grid_spec +
              " format=" + format);
  const std::vector<double> lp = hypercube_log_prob_profile(d, grid);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < grid.times.size(); ++i) {
    const double scaled = std::exp(lp[i] + d * std::log(2.0));
    rows.push_back({std::exp(lp[i]), scaled, lp[i]});
  }
  emit_grid_table(format, "values", {{"verb", "hypercube"}, {"d", d}},
                  {"prob", "prob_times_2d", "log_prob"}, grid.times, rows);
  return 0;
}

int run_torus(int dim, const std::string& sides_list, double threshold,
              const std::string& format) {
  std::vector<int> sides;
  for (const std::string& f : split(sides_list, ',')) {
    sides.push_back(static_cast<int>(parse_int(f)));
  }
  if (sides.empty()) throw DomainError("need --sides m1,m2,...");
  echo_config("verb=torus-equilibration dim=" + std::to_string(dim) +
              " sides=" + sides_list + " threshold=" + num(threshold) +
              " format=" + format);

  std::vector<double> ts;
  for (int m : sides) ts.push_back(torus_equilibration_time(m, dim, threshold));

  if (format == "json") {
    ordered_json values = ordered_json::array();
    for (std::size_t i = 0; i < sides.size(); ++i) {
      values.push_back({{"side", sides[i]},
                        {"T", ts[i]},
                        {"T_over_side_sq", ts[i] / (double(sides[i]) * sides[i])}});
    }
    emit_json({{"verb", "torus-equilibration"},
               {"dim", dim},
               {"threshold", threshold},
               {"values", values}});
  } else if (format == "csv") {
    std::printf("side,T,T_over_side_sq\n");
    for (std::size_t i = 0; i < sides.size(); ++i) {
      std::printf("%d,%s,%s\n", sides[i], num17(ts[i]).c_str(),
                  num17(ts[i] / (double(sides[i]) * sides[i])).c_str());
    }
  } else {
    std::printf("%-8s %-16s %-16s\n", "side", "T", "T/side^2");
    for (std::size_t i = 0; i < sides.size(); ++i) {
      std::printf("%-8d %-16s %-16s\n", sides[i], num(ts[i]).c_str(),
                  num(ts[i] / (double(sides[i]) * sides[i])).c_str());
    }
  }
  return 0;
}

int run_isospectral(std::uint64_t seed, std::uint64_t attempts,
                    const std::string& format) {
  echo_config("verb=isospectral seed=" + std::to_string(seed) +
              " attempts=" + std::to_string(attempts) + " format=" + format);
  const auto pair = isospectral_pair_search(4, seed, attempts);
  if (!pair) {
    std::fprintf(stderr, "no isospectral pair found within %llu attempts\n",
                 static_cast<unsigned long long>(attempts));
    return 1;
  }
  const auto spec_a = laplacian_eigenvalues(pair->first);
  const auto spec_b = laplacian_eigenvalues(pair->second);
  const Partition two_two({2, 2});
  const auto sub_a = irrep_laplacian_eigenvalues(pair->first, two_two);
  const auto sub_b = irrep_laplacian_eigenvalues(pair->second, two_two);
  double spec_gap = 0.0;
  for (std::size_t i = 0; i < spec_a.size(); ++i) {
    spec_gap = std::max(spec_gap, std::abs(spec_a[i] - spec_b[i]));
  }
  double sub_gap = 0.0;
  for (std::size_t i = 0; i < sub_a.eigenvalues.size(); ++i) {
    sub_gap = std::max(sub_gap, std::abs(sub_a.eigenvalues[i] -
                                         sub_b.eigenvalues[i]));
  }
  const double e3_a = expected_k_cycles(pair->first, 3, 1.0);
  const double e3_b = expected_k_cycles(pair->second, 3, 1.0);

  if (format == "json") {
    emit_json({{"verb", "isospectral"},
               {"attempts_used", pair->attempts_used},
               {"first", graph_json(pair->first)},
               {"second", graph_json(pair->second)},
               {"laplacian_spectrum_first", spec_a},
               {"laplacian_spectrum_second", spec_b},
               {"max_laplacian_gap", spec_gap},
               {"spectrum_2_2_first", sub_a.eigenvalues},
               {"spectrum_2_2_second", sub_b.eigenvalues},
               {"max_2_2_gap", sub_gap},
               {"expected_3_cycles_at_t1", {e3_a, e3_b}},
               {"expected_3_cycles_gap", std::abs(e3_a - e3_b)}});
  } else if (format == "csv") {
    std::printf("quantity,value\n");
    std::printf("attempts_used,%llu\n",
                static_cast<unsigned long long>(pair->attempts_used));
    std::printf("max_laplacian_gap,%s\n", num17(spec_gap).c_str());
    std::printf("max_2_2_gap,%s\n", num17(sub_gap).c_str());
    std::printf("expected_3_cycles_gap,%s\n", num17(std::abs(e3_a - e3_b)).c_str());
  } else {
    std::ostringstream ga, gb;
    write_graph(ga, pair->first);
    write_graph(gb, pair->second);
    std::printf("found after %llu attempts\n",
                static_cast<unsigned long long>(pair->attempts_used));
    std::printf("-- first --\n%s", ga.str().c_str());
    std::printf("-- second --\n%s", gb.str().c_str());
    std::printf("laplacian spectra (max gap %s):\n", num(spec_gap).c_str());
    std::printf("  first: ");
    for (double v : spec_a) std::printf(" %s", num(v).c_str());
    std::printf("\n  second:");
    for (double v : spec_b) std::printf(" %s", num(v).c_str());
    std::printf("\n[2,2] spectra (max gap %s):\n", num(sub_gap).c_str());
    std::printf("  first: ");
    for (double v : sub_a.eigenvalues) std::printf(" %s", num(v).c_str());
    std::printf("\n  second:");
    for (double v : sub_b.eigenvalues) std::printf(" %s", num(v).c_str());
    std::printf("\nE s_3(t=1): first %s, second %s, gap %s\n", num(e3_a).c_str(),
                num(e3_b).c_str(), num(std::abs(e3_a - e3_b)).c_str());
  }
  return 0;
}

int run_verify(int n_max, const std::string& format) {
  echo_config("verb=verify n-max=" + std::to_string(n_max) +
              " format=" + format);
  const auto results = run_invariant_suite(n_max);
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;

  if (format == "json") {
    ordered_json checks = ordered_json::array();
    for (const auto& r : results) {
      checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    emit_json({{"verb", "verify"},
               {"n_max", n_max},
               {"checks", checks},
               {"all_pass", all_pass}});
  } else if (format == "csv") {
    std::printf("check,pass,detail\n");
    for (const auto& r : results) {
      std::printf("%s,%d,%s\n", csv_quote(r.name).c_str(), r.pass ? 1 : 0,
                  csv_quote(r.detail).c_str());
    }
  } else {
    for (const auto& r : results) {
      std::printf("%-28s %s  %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                  r.detail.c_str());
    }
    std::printf("overall: %s\n", all_pass ? "PASS" : "FAIL");
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle statistics of the interchange process on weighted graphs"};
  app.require_subcommand(1);
  int rc = 0;

  // shared option storage; each verb reads only what it registered
  std::string format = "text", graph_file, builder, grid_spec, checkpoints_spec;
  std::string via = "closed", k_list, sides = "5,7,9";
  int n = 0, k = 1, d = 10, dim = 3, n_max = 6, mag_threshold = -1;
  double lambda1 = 0.0, threshold = 0.5;
  std::int64_t replicas = 10000;
  std::uint64_t seed = 1, attempts = 1000000;
  bool origin = false, total = false, mag_weight = false;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format on stdout")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  const auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", graph_file, "edge-list file (i j w lines)");
    sub->add_option("--builder", builder,
                    "complete:N[:w] | hypercube:D | torus:SIDE:DIM | path:N | "
                    "cycle:N");
  };

  CLI::App* c_decompose =
      app.add_subcommand("decompose", "closed form vs brute force for k*alpha_k");
  c_decompose->add_option("--n", n, "degree of the symmetric group")->required();
  c_decompose->add_option("--k", k, "cycle length")->required();
  c_decompose->callback([&] { rc = run_decompose(n, k, format); });

  CLI::App* c_coeffs =
      app.add_subcommand("coeffs", "a_rho coefficient table via one route");
  c_coeffs->add_option("--n", n, "degree of the symmetric group")->required();
  c_coeffs->add_option("--k", k, "cycle length")->required();
  c_coeffs->add_option("--via", via, "closed | pieri")
      ->check(CLI::IsMember({"closed", "pieri"}));
  c_coeffs->callback([&] {
    // this verb's table is JSON by default
    rc = run_coeffs(n, k, via,
                    c_coeffs->count("--format") ? format : "json");
  });

  CLI::App* c_prob =
      app.add_subcommand("prob-n-cycle", "P(state is one n-cycle) on a t grid");
  add_graph(c_prob);
  c_prob->add_option("--t-grid", grid_spec, "a,b,c | lin:s:e:c | log:s:e:c")
      ->required();
  c_prob->callback([&] { rc = run_prob(graph_file, builder, grid_spec, format); });

  CLI::App* c_expect =
      app.add_subcommand("expect", "E s_k(t) with the exponential bound column");
  add_graph(c_expect);
  c_expect->add_option("--k", k, "cycle length")->required();
  c_expect->add_option("--t-grid", grid_spec, "a,b,c | lin:s:e:c | log:s:e:c")
      ->required();
  c_expect->callback(
      [&] { rc = run_expect(graph_file, builder, k, grid_spec, format); });

  CLI::App* c_bound =
      app.add_subcommand("bound", "(3^n/k) exp(-t lambda_1) on a t grid");
  add_graph(c_bound);
  c_bound->add_option("--n", n, "number of vertices (with --lambda1)");
  c_bound->add_option("--lambda1", lambda1, "spectral gap (with --n)");
  c_bound->add_option("--k", k, "cycle length")->required();
  c_bound->add_option("--t-grid", grid_spec, "a,b,c | lin:s:e:c | log:s:e:c")
      ->required();
  c_bound->callback([&] {
    rc = run_bound(graph_file, builder, n, lambda1, k, grid_spec, format);
  });

  CLI::App* c_sim = app.add_subcommand(
      "simulate", "event-driven Monte Carlo with per-checkpoint observables");
  add_graph(c_sim);
  c_sim->add_option("--checkpoints", checkpoints_spec,
                    "a,b,c | lin:s:e:c | log:s:e:c")
      ->required();
  c_sim->add_option("--replicas", replicas, "independent replicas");
  c_sim->add_option("--seed", seed, "master seed");
  c_sim->add_option("--k", k_list, "comma list of cycle lengths to track");
  c_sim->add_flag("--origin", origin, "track the origin's cycle length");
  c_sim->add_flag("--total-cycles", total, "track the total cycle count");
  c_sim->add_flag("--mag-weight", mag_weight, "track 2^{total cycles}");
  c_sim->add_option("--magnetization-threshold", mag_threshold,
                    "also run the weighted ratio estimator with this threshold");
  c_sim->callback([&] {
    rc = run_simulate(graph_file, builder, checkpoints_spec, replicas, seed,
                      k_list, origin, total, mag_weight, mag_threshold, format);
  });

  CLI::App* c_tree =
      app.add_subcommand("matrix-tree", "spectral product vs spanning-tree sum");
  add_graph(c_tree);
  c_tree->callback([&] { rc = run_matrix_tree(graph_file, builder, format); });

  CLI::App* c_hyper = app.add_subcommand(
      "hypercube", "closed-form full-cycle profile of the d-dimensional cube");
  c_hyper->add_option("--d", d, "hypercube dimension")->required();
  c_hyper->add_option("--t-grid", grid_spec, "a,b,c | lin:s:e:c | log:s:e:c")
      ->required();
  c_hyper->callback([&] { rc = run_hypercube(d, grid_spec, format); });

  CLI::App* c_torus = app.add_subcommand(
      "torus-equilibration", "equilibration time table for d-dim tori");
  c_torus->add_option("--dim", dim, "torus dimension");
  c_torus->add_option("--sides", sides, "comma list of side lengths");
  c_torus->add_option("--threshold", threshold,
                      "probability fraction defining equilibration");
  c_torus->callback([&] { rc = run_torus(dim, sides, threshold, format); });

  CLI::App* c_iso = app.add_subcommand(
      "isospectral", "search for a 4-vertex isospectral non-isomorphic pair");
  c_iso->add_option("--seed", seed, "search seed");
  c_iso->add_option("--attempts", attempts, "max attempts");
  c_iso->callback([&] { rc = run_isospectral(seed, attempts, format); });

  CLI::App* c_verify =
      app.add_subcommand("verify", "run the cross-module invariant suite");
  c_verify->add_option("--n-max", n_max, "largest symmetric-group degree");
  c_verify->callback([&] { rc = run_verify(n_max, format); });

  for (CLI::App* sub :
       {c_decompose, c_coeffs, c_prob, c_expect, c_bound, c_sim, c_tree,
        c_hyper, c_torus, c_iso, c_verify}) {
    add_format(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const CapabilityError& e) {
    std::fprintf(stderr, "capability: %s\n", e.what());
    return 3;
  } catch (const std::overflow_error& e) {
    std::fprintf(stderr, "capability: exact arithmetic overflow: %s\n", e.what());
    return 3;
  } catch (const std::bad_alloc&) {
    std::fprintf(stderr, "capability: problem size exceeds available memory\n");
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return rc;
}
