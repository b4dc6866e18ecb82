#include "topecycle/scalar.hpp"

#include <cassert>
#include <cmath>

namespace topecycle {

Scalar::Scalar(Rat a, Rat b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (b_.is_zero()) {
    d_ = 0;
    return;
  }
  if (d_ < 2) fail(Errc::UnsupportedField, "sqrt argument must be >= 2");
  if (!is_square_free(d_)) fail(Errc::UnsupportedField, "sqrt argument must be square-free");
}

bool Scalar::is_square_free(long long d) {
  if (d < 1) return false;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

long long Scalar::unify_d(const Scalar& x, const Scalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  fail(Errc::FieldMismatch, "mixing sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                                std::to_string(y.d_) + ")");
}

int Scalar::sign() const {
  if (b_.is_zero()) return a_.sign();
  if (a_.is_zero()) return b_.sign();
  int sa = a_.sign(), sb = b_.sign();
  if (sa == sb) return sa;
  // a and b have opposite signs: compare a^2 against b^2*d exactly.
  int c = (a_ * a_ - b_ * b_ * Rat(d_)).sign();
  // a^2 == b^2*d would make sqrt(d) rational; impossible for square-free d >= 2.
  assert(c != 0);
  return sa > 0 ? c : -c;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.d_ = d_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  long long d = unify_d(*this, o);
  return Scalar(a_ + o.a_, b_ + o.b_, d == 0 ? 2 : d);
}

Scalar Scalar::operator-(const Scalar& o) const {
  long long d = unify_d(*this, o);
  return Scalar(a_ - o.a_, b_ - o.b_, d == 0 ? 2 : d);
}

Scalar Scalar::operator*(const Scalar& o) const {
  long long d = unify_d(*this, o);
  Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d);
  Rat b = a_ * o.b_ + b_ * o.a_;
  return Scalar(std::move(a), std::move(b), d == 0 ? 2 : d);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) fail(Errc::ZeroDenominator, "division by zero scalar");
  long long d = unify_d(*this, o);
  // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
  // for nonzero elements since sqrt(d) is irrational.
  Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * Rat(d);
  Scalar conj;
  conj.a_ = o.a_ / norm;
  conj.b_ = -(o.b_ / norm);
  conj.d_ = conj.b_.is_zero() ? 0 : d;
  return *this * conj;
}

std::string Scalar::str() const {
  if (b_.is_zero()) return a_.str();
  std::string out = a_.str();
  if (b_.sign() < 0) {
    out += "-" + (-b_).str() + "*sqrt";
  } else {
    out += "+" + b_.str() + "*sqrt";
  }
  return out;
}

Scalar Scalar::parse(const std::string& s, long long field_d) {
  size_t star = s.find("*sqrt");
  if (star == std::string::npos) {
    if (s.find("sqrt") != std::string::npos)
      fail(Errc::ParseError, "bad coefficient '" + s + "' (use r/s*sqrt)");
    return Scalar(Rat::parse(s));
  }
  if (s.substr(star) != "*sqrt")
    fail(Errc::ParseError, "trailing characters after sqrt in '" + s + "'");
  if (field_d == 0)
    fail(Errc::UnsupportedField, "sqrt coefficient in a rational-field arrangement");
  // Split "<a><sep><b>*sqrt" at the sign separating the two parts: the last
  // '+' or '-' before the b-part that is not a leading sign or an exponent.
  std::string head = s.substr(0, star);
  size_t sep = std::string::npos;
  for (size_t i = 1; i < head.size(); ++i) {
    if (head[i] == '+' || head[i] == '-') {
      if (head[i - 1] == '/' || head[i - 1] == '+' || head[i - 1] == '-') continue;
      sep = i;
    }
  }
  Rat a, b;
  if (sep == std::string::npos) {
    b = Rat::parse(head); // pure "r/s*sqrt"
  } else {
    a = Rat::parse(head.substr(0, sep));
    std::string bs = head.substr(sep);
    if (bs[0] == '+') bs = bs.substr(1);
    b = Rat::parse(bs);
  }
  return Scalar(std::move(a), std::move(b), field_d);
}

double Scalar::to_double() const {
  if (b_.is_zero()) return a_.to_double();
  return a_.to_double() + b_.to_double() * std::sqrt(double(d_));
}

} // namespace topecycle
