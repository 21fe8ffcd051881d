#include "cyclespec/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cyclespec/rational.hpp"

namespace cyclespec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  int sum = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be >= 1");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be non-increasing");
    }
    sum += parts_[i];
  }
  if (sum > kMaxN) throw DomainError("partitions support n <= 20");
  n_ = sum;
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

Partition Partition::hook(int a, int c) {
  if (a < 1 || c < 0) throw DomainError("hook [a,1^c] needs a >= 1, c >= 0");
  std::vector<int> p;
  p.reserve(static_cast<std::size_t>(c) + 1);
  p.push_back(a);
  p.insert(p.end(), static_cast<std::size_t>(c), 1);
  return Partition(std::move(p));
}

Partition Partition::two_row_hook(int a, int b, int c) {
  if (a < b || b < 1 || c < 0) {
    throw DomainError("shape [a,b,1^c] needs a >= b >= 1, c >= 0");
  }
  std::vector<int> p;
  p.reserve(static_cast<std::size_t>(c) + 2);
  p.push_back(a);
  p.push_back(b);
  p.insert(p.end(), static_cast<std::size_t>(c), 1);
  return Partition(std::move(p));
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  conj.reserve(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]));
  for (int col = 1; col <= (parts_.empty() ? 0 : parts_[0]); ++col) {
    int rows_with_col = 0;
    for (int p : parts_) {
      if (p >= col) ++rows_with_col;
    }
    conj.push_back(rows_with_col);
  }
  return Partition(std::move(conj));
}

bool Partition::is_hook() const {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] != 1) return false;
  }
  return !parts_.empty();
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.str();
}

namespace {

// Reverse-lexicographic enumeration: pick the first part largest-first,
// then recurse with the cap "no part may exceed the one before it".
void enumerate_rec(int remaining, int cap, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int first = std::min(cap, remaining); first >= 1; --first) {
    prefix.push_back(first);
    enumerate_rec(remaining - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1 || n > Partition::kMaxN) {
    throw DomainError("enumerate_partitions requires 1 <= n <= 20");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_rec(n, n, prefix, out);
  return out;
}

std::int64_t partition_count(int n) {
  return static_cast<std::int64_t>(enumerate_partitions(n).size());
}

bool dominates(const Partition& sigma, const Partition& rho) {
  if (sigma.n() != rho.n()) {
    throw DomainError("dominates requires partitions of the same n");
  }
  int rows = std::max(sigma.rows(), rho.rows());
  int ps = 0, pr = 0;
  for (int i = 0; i < rows; ++i) {
    ps += sigma.part(i);
    pr += rho.part(i);
    if (ps < pr) return false;
  }
  return true;
}

std::int64_t factorial(int n) {
  if (n < 0 || n > Partition::kMaxN) {
    throw DomainError("factorial supports 0 <= n <= 20");
  }
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;  // 20! < 2^63
  return f;
}

std::int64_t dimension(const Partition& lambda) {
  if (lambda.empty()) return 1;
  const auto& parts = lambda.parts();
  Partition conj = lambda.conjugate();
  int128 hooks = 1;
  for (int i = 0; i < lambda.rows(); ++i) {
    for (int j = 0; j < parts[static_cast<std::size_t>(i)]; ++j) {
      int h = (parts[static_cast<std::size_t>(i)] - j) + (conj.part(j) - i) - 1;
      hooks *= h;
    }
  }
  int128 num = factorial(lambda.n());
  // Hook-length product always divides n! exactly.
  return detail::narrow_checked(num / hooks, "dimension");
}

std::int64_t hook_dimension_formula(int a, int b, int c) {
  if (a < b || b < 1 || c < 0) {
    throw DomainError("hook_dimension_formula needs a >= b >= 1, c >= 0");
  }
  int n = a + b + c;
  if (n > Partition::kMaxN) throw DomainError("partitions support n <= 20");
  int128 num = static_cast<int128>(b) * (a - b + 1) * factorial(n);
  int128 den = static_cast<int128>(b + c) * (a + c + 1) * factorial(a) *
               factorial(b) * factorial(c);
  if (num % den != 0) throw DomainError("hook dimension formula not integral");
  return detail::narrow_checked(num / den, "hook_dimension_formula");
}

std::int64_t class_size(const Partition& mu) {
  if (mu.empty()) return 1;
  // den = prod_j j^{m_j} * m_j!; mu is non-increasing, so equal parts are
  // adjacent and each run gives one (j, m_j) pair.
  int128 den = 1;
  int i = 0;
  while (i < mu.rows()) {
    int j = mu.part(i);
    int m = 0;
    while (i < mu.rows() && mu.part(i) == j) {
      ++m;
      ++i;
    }
    for (int r = 0; r < m; ++r) den *= j;
    den *= factorial(m);
  }
  int128 num = factorial(mu.n());
  return detail::narrow_checked(num / den, "class_size");
}

}  // namespace cyclespec
