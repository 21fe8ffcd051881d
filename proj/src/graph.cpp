#include "cyclespec/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "cyclespec/rng.hpp"

namespace cyclespec {

WeightedGraph WeightedGraph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 1) throw DomainError("graph needs at least one vertex");
  std::map<std::pair<int, int>, double> acc;
  for (const Edge& e : edges) {
    int u = e.u, v = e.v;
    if (u == v) throw DomainError("self-loops are not allowed");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw DomainError("edge endpoint out of range");
    }
    if (!(e.w >= 0.0)) throw DomainError("edge weights must be >= 0");
    if (u > v) std::swap(u, v);
    acc[{u, v}] += e.w;
  }
  WeightedGraph g;
  g.n_ = n;
  for (const auto& [key, w] : acc) {
    if (w > 0.0) g.edges_.push_back({key.first, key.second, w});
  }
  return g;
}

WeightedGraph WeightedGraph::complete(int n, double w) {
  if (n < 2) throw DomainError("complete graph needs n >= 2");
  if (!(w > 0.0)) throw DomainError("complete graph weight must be > 0");
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) es.push_back({i, j, w});
  }
  return from_edges(n, es);
}

WeightedGraph WeightedGraph::hypercube(int d) {
  if (d < 1 || d > 16) throw DomainError("hypercube builder supports 1 <= d <= 16");
  int n = 1 << d;
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(n) * d / 2);
  for (int x = 0; x < n; ++x) {
    for (int b = 0; b < d; ++b) {
      int y = x ^ (1 << b);
      if (x < y) es.push_back({x, y, 1.0});
    }
  }
  return from_edges(n, es);
}

WeightedGraph WeightedGraph::torus(int side, int dim) {
  if (side < 2 || dim < 1) throw DomainError("torus needs side >= 2, dim >= 1");
  long long size = 1;
  for (int j = 0; j < dim; ++j) {
    size *= side;
    if (size > 100000) throw DomainError("torus builder capped at 100000 vertices");
  }
  int n = static_cast<int>(size);
  // Collect {x, x+1 mod side} per axis as a set: when side == 2 the +1 and
  // -1 neighbours coincide and must yield a single unit edge.
  std::map<std::pair<int, int>, double> uniq;
  for (int x = 0; x < n; ++x) {
    int rem = x;
    int stride = 1;
    for (int j = 0; j < dim; ++j) {
      int coord = rem % side;
      rem /= side;
      int up = x + ((coord + 1) % side - coord) * stride;
      uniq[{std::min(x, up), std::max(x, up)}] = 1.0;
      stride *= side;
    }
  }
  std::vector<Edge> es;
  es.reserve(uniq.size());
  for (const auto& [key, w] : uniq) es.push_back({key.first, key.second, w});
  return from_edges(n, es);
}

WeightedGraph WeightedGraph::path(int n) {
  if (n < 2) throw DomainError("path needs n >= 2");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 1.0});
  return from_edges(n, es);
}

WeightedGraph WeightedGraph::cycle(int n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({std::min(i, (i + 1) % n),
                                            std::max(i, (i + 1) % n), 1.0});
  return from_edges(n, es);
}

double WeightedGraph::weight(int i, int j) const {
  if (i == j) return 0.0;
  if (i > j) std::swap(i, j);
  for (const Edge& e : edges_) {
    if (e.u == i && e.v == j) return e.w;
  }
  return 0.0;
}

double WeightedGraph::total_weight() const {
  double w = 0.0;
  for (const Edge& e : edges_) w += e.w;
  return w;
}

bool WeightedGraph::connected() const {
  if (n_ <= 1) return true;
  std::vector<int> stack{0};
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Edge& e : edges_) {
      int other = -1;
      if (e.u == x) other = e.v;
      if (e.v == x) other = e.u;
      if (other >= 0 && !seen[static_cast<std::size_t>(other)]) {
        seen[static_cast<std::size_t>(other)] = true;
        ++count;
        stack.push_back(other);
      }
    }
  }
  return count == n_;
}

Eigen::MatrixXd WeightedGraph::laplacian() const {
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n_, n_);
  for (const Edge& e : edges_) {
    L(e.u, e.v) -= e.w;
    L(e.v, e.u) -= e.w;
    L(e.u, e.u) += e.w;
    L(e.v, e.v) += e.w;
  }
  return L;
}

WeightedGraph read_graph(std::istream& in) {
  std::vector<Edge> edges;
  int n_declared = -1;
  int max_index = -1;
  std::string line;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank
    if (first_content_line && tok == "n") {
      if (!(ls >> n_declared) || n_declared < 1) {
        throw DomainError("bad vertex-count header");
      }
      first_content_line = false;
      continue;
    }
    first_content_line = false;
    int i, j;
    double w;
    try {
      i = std::stoi(tok);
    } catch (const std::exception&) {
      throw DomainError("bad edge line: " + line);
    }
    if (!(ls >> j >> w)) throw DomainError("bad edge line: " + line);
    edges.push_back({i, j, w});
    max_index = std::max({max_index, i, j});
  }
  int n = n_declared > 0 ? n_declared : max_index + 1;
  if (n < 1) throw DomainError("graph file contains no vertices");
  return WeightedGraph::from_edges(n, edges);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << "n " << g.n() << "\n";
  for (const Edge& e : g.edges()) {
    out << e.u << " " << e.v << " " << e.w << "\n";
  }
}

WeightedGraph random_weighted_complete(int n, std::uint64_t seed, double wmin,
                                       double wmax) {
  if (n < 2) throw DomainError("random graph needs n >= 2");
  SplitMix64 rng(seed);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      es.push_back({i, j, rng.next_in(wmin, wmax)});
    }
  }
  return WeightedGraph::from_edges(n, es);
}

WeightedGraph random_weighted_connected(int n, std::uint64_t seed, int extra,
                                        double wmin, double wmax) {
  if (n < 2) throw DomainError("random graph needs n >= 2");
  SplitMix64 rng(seed);
  std::vector<Edge> es;
  // random recursive tree keeps the graph connected
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.next() % static_cast<std::uint64_t>(v));
    es.push_back({u, v, rng.next_in(wmin, wmax)});
  }
  for (int k = 0; k < extra; ++k) {
    int u = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
    int v = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
    if (u == v) continue;
    es.push_back({std::min(u, v), std::max(u, v), rng.next_in(wmin, wmax)});
  }
  return WeightedGraph::from_edges(n, es);
}

}  // namespace cyclespec
