#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "cyclespec/errors.hpp"

namespace cyclespec {

using int128 = __int128;

namespace detail {

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline std::int64_t narrow_checked(int128 v, const char* what) {
  if (v > static_cast<int128>(std::numeric_limits<std::int64_t>::max()) ||
      v < static_cast<int128>(std::numeric_limits<std::int64_t>::min())) {
    throw std::overflow_error(std::string("rational overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Exact rational number.  Stored reduced with positive denominator on
/// 64-bit words; every operation runs its intermediates in 128 bits and
/// throws std::overflow_error if the reduced result no longer fits.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  Rat(std::int64_t value) : num_(value), den_(1) {}  // implicit on purpose
  Rat(std::int64_t num, std::int64_t den) { *this = make(num, den); }

  /// Reduce a 128-bit fraction and narrow it to 64-bit storage.
  static Rat make(int128 num, int128 den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int128 g = detail::gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    Rat r;
    r.num_ = detail::narrow_checked(num, "numerator");
    r.den_ = detail::narrow_checked(den, "denominator");
    return r;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(static_cast<int128>(a.num_) * b.den_ +
                    static_cast<int128>(b.num_) * a.den_,
                static_cast<int128>(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(static_cast<int128>(a.num_) * b.den_ -
                    static_cast<int128>(b.num_) * a.den_,
                static_cast<int128>(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(static_cast<int128>(a.num_) * b.num_,
                static_cast<int128>(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return make(static_cast<int128>(a.num_) * b.den_,
                static_cast<int128>(a.den_) * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<int128>(a.num_) * b.den_ <
           static_cast<int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace cyclespec
