#include "cyclespec/characters.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <utility>

namespace cyclespec {

ClassFunction alpha_k(int n, int k) {
  if (k < 1 || k > n) throw DomainError("alpha_k requires 1 <= k <= n");
  ClassFunction f;
  f.n = n;
  for (const auto& mu : enumerate_partitions(n)) {
    f.values.emplace(mu, Rat(mu.multiplicity(k)));
  }
  return f;
}

ClassFunction constant_class_function(int n, const Rat& v) {
  ClassFunction f;
  f.n = n;
  for (const auto& mu : enumerate_partitions(n)) f.values.emplace(mu, v);
  return f;
}

ClassFunction irreducible_character(const Partition& rho) {
  ClassFunction f;
  f.n = rho.n();
  for (const auto& mu : enumerate_partitions(rho.n())) {
    f.values.emplace(mu, Rat(mn_character(rho, mu)));
  }
  return f;
}

namespace {

using Shape = std::vector<int>;

// Beta numbers b_i = shape_i + (rows-1-i), strictly decreasing.  Removing a
// border strip of size s is moving one bead down by s without landing on
// another; the strip height is the number of beads jumped over.
struct MnMemo {
  std::map<std::pair<Shape, int>, std::int64_t> table;
};

std::int64_t mn_rec(const Shape& shape, int level, const Partition& mu,
                    MnMemo& memo) {
  if (shape.empty()) return 1;  // level == 0 too, since sizes match
  auto key = std::make_pair(shape, level);
  if (auto it = memo.table.find(key); it != memo.table.end()) {
    return it->second;
  }
  const int s = mu.part(level);
  const int rows = static_cast<int>(shape.size());
  std::vector<int> beta(shape.size());
  for (int i = 0; i < rows; ++i) {
    beta[static_cast<std::size_t>(i)] =
        shape[static_cast<std::size_t>(i)] + (rows - 1 - i);
  }
  std::int64_t total = 0;
  for (int i = 0; i < rows; ++i) {
    int target = beta[static_cast<std::size_t>(i)] - s;
    if (target < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < rows; ++j) {
      if (j == i) continue;
      int b = beta[static_cast<std::size_t>(j)];
      if (b == target) {
        occupied = true;
        break;
      }
      if (b > target && b < beta[static_cast<std::size_t>(i)]) ++height;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    Shape next(nb.size());
    for (int j = 0; j < rows; ++j) {
      next[static_cast<std::size_t>(j)] =
          nb[static_cast<std::size_t>(j)] - (rows - 1 - j);
    }
    while (!next.empty() && next.back() == 0) next.pop_back();
    std::int64_t sub = mn_rec(next, level + 1, mu, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo.table.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& rho, const Partition& mu) {
  if (rho.n() != mu.n()) {
    throw DomainError("mn_character requires partitions of the same n");
  }
  MnMemo memo;
  return mn_rec(rho.parts(), 0, mu, memo);
}

const CharacterTable& character_table(int n) {
  constexpr int kTableCap = 8;
  if (n < 1) throw DomainError("character_table requires n >= 1");
  if (n > kTableCap) {
    throw CapabilityError("character table cache capped at n = 8");
  }
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto table = std::make_unique<CharacterTable>();
  table->n = n;
  table->shapes = enumerate_partitions(n);
  table->classes = table->shapes;
  table->chi.resize(table->shapes.size());
  for (std::size_t r = 0; r < table->shapes.size(); ++r) {
    table->chi[r].reserve(table->classes.size());
    for (const auto& cls : table->classes) {
      table->chi[r].push_back(mn_character(table->shapes[r], cls));
    }
  }
  return *cache.emplace(n, std::move(table)).first->second;
}

Rat inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.n != g.n) throw DomainError("inner_product requires equal degrees");
  Rat sum;
  for (const auto& mu : enumerate_partitions(f.n)) {
    sum += Rat(class_size(mu)) * f.at(mu) * g.at(mu);
  }
  return sum / Rat(factorial(f.n));
}

Rat psi_inner_product(const ClassFunction& f, const Partition& lambda) {
  if (f.n != lambda.n()) {
    throw DomainError("psi_inner_product requires equal degrees");
  }
  // Joint cycle-type distribution of S_{lambda_1} x ... x S_{lambda_r}:
  // counts of Young-subgroup elements per merged cycle type.
  std::map<Partition, std::int64_t> dist;
  dist.emplace(Partition(), 1);
  for (int a : lambda.parts()) {
    std::map<Partition, std::int64_t> next;
    for (const auto& nu : enumerate_partitions(a)) {
      std::int64_t cnt_nu = class_size(nu);
      for (const auto& [type, cnt] : dist) {
        std::vector<int> merged = type.parts();
        merged.insert(merged.end(), nu.parts().begin(), nu.parts().end());
        next[Partition::from_unsorted(std::move(merged))] += cnt * cnt_nu;
      }
    }
    dist = std::move(next);
  }
  std::int64_t order = 1;
  for (int a : lambda.parts()) order *= factorial(a);
  Rat sum;
  for (const auto& [type, cnt] : dist) sum += Rat(cnt) * f.at(type);
  return sum / Rat(order);
}

std::map<Partition, Rat> decompose(const ClassFunction& f) {
  const CharacterTable& table = character_table(f.n);
  std::map<Partition, Rat> out;
  Rat inv_order(1, factorial(f.n));
  for (std::size_t r = 0; r < table.shapes.size(); ++r) {
    Rat c;
    for (std::size_t m = 0; m < table.classes.size(); ++m) {
      const Partition& mu = table.classes[m];
      c += Rat(class_size(mu)) * f.at(mu) * Rat(table.chi[r][m]);
    }
    c *= inv_order;
    if (!c.is_zero()) out.emplace(table.shapes[r], c);
  }
  return out;
}

ClassFunction reconstruct(int n, const std::map<Partition, Rat>& coeffs) {
  ClassFunction f;
  f.n = n;
  for (const auto& mu : enumerate_partitions(n)) {
    Rat v;
    for (const auto& [rho, c] : coeffs) v += c * Rat(mn_character(rho, mu));
    f.values.emplace(mu, v);
  }
  return f;
}

std::map<Partition, int> a_rho_closed_form(int n, int k) {
  if (k < 1 || k > n) {
    throw DomainError("a_rho_closed_form requires 1 <= k <= n");
  }
  std::map<Partition, int> out;
  out.emplace(Partition({n}), 1);
  for (int i = 0; i <= 2 * k - n - 2; ++i) {
    out.emplace(Partition::two_row_hook(k - i - 1, n - k + 1, i),
                (i % 2 == 0) ? -1 : 1);
  }
  // For k == n this range starts at k and is empty, as required.
  for (int i = std::max(2 * k - n, 0); i <= k - 1; ++i) {
    out.emplace(Partition::two_row_hook(n - k, k - i, i),
                (i % 2 == 0) ? 1 : -1);
  }
  return out;
}

}  // namespace cyclespec
