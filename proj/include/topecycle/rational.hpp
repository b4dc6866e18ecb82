#pragma once

#include <cstdint>
#include <string>

#include "topecycle/errors.hpp"

namespace topecycle {

// Exact rational number.  Values whose reduced numerator and denominator fit
// in int64 are stored inline; anything larger is transparently promoted to a
// heap-allocated GMP rational and demoted back once it fits again.  All
// arithmetic is exact; denominators are always positive and fractions always
// reduced, so equal values have equal representations.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n);
  Rat(long n) : Rat(static_cast<long long>(n)) {}
  Rat(int n) : num_(n), den_(1) {}
  Rat(long long num, long long den);

  Rat(const Rat& o);
  Rat(Rat&& o) noexcept : num_(o.num_), den_(o.den_) {
    o.num_ = 0;
    o.den_ = 1;
  }
  Rat& operator=(const Rat& o);
  Rat& operator=(Rat&& o) noexcept;
  ~Rat();

  bool is_zero() const { return den_ != 0 ? num_ == 0 : false; }
  bool is_one() const { return den_ == 1 && num_ == 1; }
  int sign() const;

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const; // throws ZeroDenominator on o == 0

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat reciprocal() const;

  // Three-way exact comparison.
  int cmp(const Rat& o) const;
  bool operator==(const Rat& o) const { return cmp(o) == 0; }
  bool operator!=(const Rat& o) const { return cmp(o) != 0; }
  bool operator<(const Rat& o) const { return cmp(o) < 0; }
  bool operator<=(const Rat& o) const { return cmp(o) <= 0; }
  bool operator>(const Rat& o) const { return cmp(o) > 0; }
  bool operator>=(const Rat& o) const { return cmp(o) >= 0; }

  // Canonical "p" or "p/q" form; the unique representation of the value.
  std::string str() const;
  static Rat parse(const std::string& s); // accepts "p" and "p/q"

  double to_double() const;

  bool is_promoted() const { return den_ == 0; }

  // gcd of |a| and |b| as nonnegative rationals (gcd of numerators over lcm of
  // denominators); gcd(0, x) = |x|.  Used to clear common content of vectors.
  static Rat content_gcd(const Rat& a, const Rat& b);

  // True if the value is an integer n with |n| <= bound (bound as int64).
  bool fits_small_int(long long bound) const {
    return den_ == 1 && num_ >= -bound && num_ <= bound;
  }
  // Only valid when den_ == 1 and not promoted.
  long long small_int() const { return num_; }

private:
  // den_ > 0: inline value num_/den_, reduced.
  // den_ == 0: num_ is a pointer to the promoted GMP value.
  long long num_;
  long long den_;

  struct Big; // holds an mpq_class
  Big* big() const { return reinterpret_cast<Big*>(num_); }
  void set_big(Big* b) {
    num_ = reinterpret_cast<long long>(b);
    den_ = 0;
  }
  static Rat from_i128(__int128 num, __int128 den);
  static Rat from_big(Big* b); // takes ownership, demotes if possible
  friend struct RatOps;
};

inline Rat abs(const Rat& r) { return r.abs(); }

} // namespace topecycle
