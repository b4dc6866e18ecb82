#pragma once

#include <string>

#include "topecycle/rational.hpp"

namespace topecycle {

// Element of Q or of a real quadratic field Q(sqrt(d)), d a square-free
// integer >= 2.  Stored as a + b*sqrt(d); b == 0 normalizes d to 0, so a
// rational value has a unique representation and compares equal to the same
// value built inside any quadratic field.  Mixing two different irrational
// parts is a construction error (FieldMismatch).
class Scalar {
public:
  Scalar() : d_(0) {}
  Scalar(Rat a) : a_(std::move(a)), d_(0) {}
  Scalar(long long n) : a_(n), d_(0) {}
  Scalar(int n) : a_(n), d_(0) {}
  Scalar(Rat a, Rat b, long long d);

  const Rat& rational_part() const { return a_; }
  const Rat& sqrt_coeff() const { return b_; }
  long long field_d() const { return d_; } // 0 when the value is rational
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return d_ == 0 && a_.is_one(); }

  // Exact sign in {-1, 0, +1}.  For a + b*sqrt(d) with mixed signs of a and b
  // the sign is resolved by comparing a^2 with b^2*d.
  int sign() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  int cmp(const Scalar& o) const { return (*this - o).sign(); }
  bool operator==(const Scalar& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return cmp(o) < 0; }
  bool operator>(const Scalar& o) const { return cmp(o) > 0; }
  bool operator<=(const Scalar& o) const { return cmp(o) <= 0; }
  bool operator>=(const Scalar& o) const { return cmp(o) >= 0; }

  // Canonical text form: "p/q" or "p/q+r/s*sqrt" / "p/q-r/s*sqrt" (the d is
  // carried by the arrangement header, not by every coefficient).
  std::string str() const;
  static Scalar parse(const std::string& s, long long field_d);

  double to_double() const;

  static bool is_square_free(long long d);

private:
  Rat a_, b_;
  long long d_;

  static long long unify_d(const Scalar& x, const Scalar& y);
};

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

} // namespace topecycle
