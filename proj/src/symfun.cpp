#include "cyclespec/symfun.hpp"

#include <algorithm>
#include <utility>

namespace cyclespec {

void add_coeff(std::map<Partition, Rat>& m, const Partition& key,
               const Rat& v) {
  if (v.is_zero()) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) m.erase(it);
}

namespace {

using Shape = std::vector<int>;

// Enumerates all sub-shapes nu of `shape` such that shape/nu is a horizontal
// strip of size `strip`, i.e. shape[i+1] <= nu[i] <= shape[i] per row.
// Calls fn(nu) for each (nu has trailing zeros stripped).
template <typename Fn>
void for_each_strip_removal(const Shape& shape, int strip, Fn&& fn) {
  const int rows = static_cast<int>(shape.size());
  Shape nu(shape.size());
  // suffix_max_removal[i]: most boxes removable from rows i..end.
  std::vector<int> suffix(static_cast<std::size_t>(rows) + 1, 0);
  for (int i = rows - 1; i >= 0; --i) {
    int below = i + 1 < rows ? shape[static_cast<std::size_t>(i) + 1] : 0;
    suffix[static_cast<std::size_t>(i)] =
        suffix[static_cast<std::size_t>(i) + 1] +
        (shape[static_cast<std::size_t>(i)] - below);
  }
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == rows) {
      if (remaining == 0) {
        Shape trimmed = nu;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        fn(trimmed);
      }
      return;
    }
    if (remaining > suffix[static_cast<std::size_t>(row)]) return;
    int hi = shape[static_cast<std::size_t>(row)];
    int lo = row + 1 < rows ? shape[static_cast<std::size_t>(row) + 1] : 0;
    for (int keep = hi; keep >= lo; --keep) {
      int removed = hi - keep;
      if (removed > remaining) break;
      nu[static_cast<std::size_t>(row)] = keep;
      self(self, row + 1, remaining - removed);
    }
  };
  rec(rec, 0, strip);
}

struct KostkaMemo {
  std::map<std::pair<Shape, int>, std::int64_t> table;
};

// Number of SSYT of `shape` filled with content lambda[0..level).
std::int64_t kostka_rec(const Shape& shape, int level, const Partition& lambda,
                        KostkaMemo& memo) {
  if (level == 0) return shape.empty() ? 1 : 0;
  auto key = std::make_pair(shape, level);
  auto it = memo.table.find(key);
  if (it != memo.table.end()) return it->second;
  std::int64_t total = 0;
  // Cells holding the largest remaining value form a horizontal strip.
  for_each_strip_removal(shape, lambda.part(level - 1), [&](const Shape& nu) {
    total += kostka_rec(nu, level - 1, lambda, memo);
  });
  memo.table.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t kostka(const Partition& mu, const Partition& lambda) {
  if (mu.n() != lambda.n()) {
    throw DomainError("kostka requires partitions of the same n");
  }
  KostkaMemo memo;
  return kostka_rec(mu.parts(), lambda.rows(), lambda, memo);
}

MonomialExpansion schur_to_monomial(const SchurExpansion& e) {
  MonomialExpansion out;
  out.n = e.n;
  if (e.coeffs.empty()) return out;
  auto all = enumerate_partitions(e.n);
  for (const auto& [mu, c] : e.coeffs) {
    for (const auto& lam : all) {
      std::int64_t k = kostka(mu, lam);
      if (k != 0) add_coeff(out.coeffs, lam, c * Rat(k));
    }
  }
  return out;
}

SchurExpansion monomial_to_schur(const MonomialExpansion& e) {
  SchurExpansion out;
  out.n = e.n;
  if (e.coeffs.empty()) return out;
  // c_lambda = sum_mu d_mu K_{mu lambda}; K is triangular with unit diagonal
  // in enumeration order, so solve front-to-back.
  auto all = enumerate_partitions(e.n);
  std::map<Partition, Rat> solved;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Partition& lam = all[i];
    Rat c;
    if (auto it = e.coeffs.find(lam); it != e.coeffs.end()) c = it->second;
    for (std::size_t j = 0; j < i; ++j) {
      const Partition& mu = all[j];
      auto it = solved.find(mu);
      if (it == solved.end()) continue;
      std::int64_t k = kostka(mu, lam);
      if (k != 0) c -= it->second * Rat(k);
    }
    if (!c.is_zero()) solved.emplace(lam, c);
  }
  out.coeffs = std::move(solved);
  return out;
}

SchurExpansion pieri_multiply(const Partition& lambda, int m) {
  if (m < 1) throw DomainError("pieri_multiply requires m >= 1");
  SchurExpansion out;
  out.n = lambda.n() + m;
  if (out.n > Partition::kMaxN) throw DomainError("partitions support n <= 20");
  const int rows = lambda.rows();
  std::vector<int> grown(static_cast<std::size_t>(rows) + 1, 0);
  // Row i of the product shape interlaces lambda: lambda_i <= grown_i <=
  // lambda_{i-1}, with one extra row allowed at the bottom.
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == rows + 1) {
      if (remaining == 0) {
        std::vector<int> parts = grown;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        add_coeff(out.coeffs, Partition(std::move(parts)), Rat(1));
      }
      return;
    }
    int lo = lambda.part(row);
    int hi = row == 0 ? lambda.part(0) + remaining
                      : std::min(lambda.part(row - 1), lo + remaining);
    for (int v = lo; v <= hi; ++v) {
      grown[static_cast<std::size_t>(row)] = v;
      self(self, row + 1, remaining - (v - lo));
    }
  };
  rec(rec, 0, m);
  return out;
}

MonomialExpansion monomial_multiply_by_h(const MonomialExpansion& f, int m) {
  if (m < 1) throw DomainError("monomial_multiply_by_h requires m >= 1");
  MonomialExpansion out;
  out.n = f.n + m;
  if (out.n > Partition::kMaxN) throw DomainError("partitions support n <= 20");
  if (f.coeffs.empty()) return out;
  for (const auto& nu : enumerate_partitions(out.n)) {
    // coeff of x^nu in f*H_m: sum of f's monomial coefficients over all
    // delta <= nu componentwise with |delta| = f.n (H_m supplies nu - delta).
    Rat total;
    const int rows = nu.rows();
    std::vector<int> delta(static_cast<std::size_t>(rows), 0);
    auto rec = [&](auto&& self, int row, int remaining) -> void {
      if (row == rows) {
        if (remaining == 0) {
          auto key = Partition::from_unsorted(delta);
          if (auto it = f.coeffs.find(key); it != f.coeffs.end()) {
            total += it->second;
          }
        }
        return;
      }
      int hi = std::min(nu.part(row), remaining);
      for (int v = 0; v <= hi; ++v) {
        delta[static_cast<std::size_t>(row)] = v;
        self(self, row + 1, remaining - v);
      }
    };
    rec(rec, 0, f.n);
    add_coeff(out.coeffs, nu, total);
  }
  return out;
}

MonomialExpansion ch_alpha_k(int n, int k) {
  if (k < 1 || k > n) throw DomainError("ch_alpha_k requires 1 <= k <= n");
  MonomialExpansion out;
  out.n = n;
  for (const auto& lam : enumerate_partitions(n)) {
    int beta = 0;
    for (int p : lam.parts()) {
      if (p >= k) ++beta;
    }
    if (beta != 0) out.coeffs.emplace(lam, Rat(beta, k));
  }
  return out;
}

SchurExpansion derive_a_rho_via_pieri(int n, int k) {
  if (k < 1 || k > n) {
    throw DomainError("derive_a_rho_via_pieri requires 1 <= k <= n");
  }
  SchurExpansion out;
  out.n = n;
  for (int i = 0; i < k; ++i) {
    Partition hook = Partition::hook(k - i, i);
    Rat sign((i % 2 == 0) ? 1 : -1);
    if (n == k) {
      add_coeff(out.coeffs, hook, sign);
    } else {
      SchurExpansion prod = pieri_multiply(hook, n - k);
      for (const auto& [shape, c] : prod.coeffs) {
        add_coeff(out.coeffs, shape, sign * c);
      }
    }
  }
  return out;
}

}  // namespace cyclespec
