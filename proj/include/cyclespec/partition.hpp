#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclespec/errors.hpp"

namespace cyclespec {

/// Integer partition / Young diagram in canonical form: non-increasing
/// positive parts, no trailing zeros.  Also used as a cycle type.
/// Exact arithmetic elsewhere caps the practical degree, so construction
/// rejects n > 20.
class Partition {
 public:
  static constexpr int kMaxN = 20;

  Partition() = default;  // the empty partition of 0

  /// Validating constructor: parts must already be canonical.
  explicit Partition(std::vector<int> parts);

  /// Sorts a bag of nonnegative entries into canonical form (zeros dropped).
  static Partition from_unsorted(std::vector<int> parts);

  /// Hook [a, 1^c].
  static Partition hook(int a, int c);

  /// Two-row hook [a, b, 1^c] with a >= b >= 1, c >= 0 (b may equal a).
  static Partition two_row_hook(int a, int b, int c);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// i-th part, 0-based; parts beyond the last read as 0.
  int part(int i) const {
    return (i >= 0 && i < rows()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  /// Multiplicity of a given part size.
  int multiplicity(int k) const;

  /// Conjugate (transpose) diagram.
  Partition conjugate() const;

  bool is_hook() const;  // [a] or [a,1^c]

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }
  /// operator< orders partitions of equal n in the canonical enumeration
  /// (reverse-lexicographic) order: [n] first, [1^n] last.  Partitions of
  /// smaller n sort first.  This makes std::map iterate in enumeration order.
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.parts_ > b.parts_;  // lexicographically larger parts come first
  }

  std::string str() const;  // e.g. "[3,2,1]"
  friend std::ostream& operator<<(std::ostream& os, const Partition& p);

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order ([n] first, [1^n] last).
std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions of n (length of the enumeration).
std::int64_t partition_count(int n);

/// Dominance (majorization) order: every prefix sum of sigma >= that of rho.
bool dominates(const Partition& sigma, const Partition& rho);

/// Dimension of the irreducible S_n-representation indexed by lambda,
/// by the hook-length product.
std::int64_t dimension(const Partition& lambda);

/// Closed form for dim U_[a,b,1^c]: b(a-b+1)/((b+c)(a+c+1)) * n!/(a!b!c!).
std::int64_t hook_dimension_formula(int a, int b, int c);

/// Size of the conjugacy class of cycle type mu: n! / prod_j j^{m_j} m_j!.
std::int64_t class_size(const Partition& mu);

/// n! as a checked 64-bit value (n <= 20).
std::int64_t factorial(int n);

}  // namespace cyclespec
