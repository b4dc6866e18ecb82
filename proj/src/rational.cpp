#include "topecycle/rational.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <limits>

namespace topecycle {

struct Rat::Big {
  mpq_class v;
};

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 u128_abs(i128 x) { return x < 0 ? u128(0) - u128(x) : u128(x); }

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Symmetric range so negation of a stored value never overflows.
bool fits_i64(i128 x) {
  return x >= -i128(std::numeric_limits<long long>::max()) &&
         x <= i128(std::numeric_limits<long long>::max());
}

void mpz_set_i128(mpz_class& z, i128 x) {
  u128 mag = u128_abs(x);
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  mpz_class lo(static_cast<unsigned long>(mag & 0xffffffffffffffffULL));
  z = (hi << 64) + lo;
  if (x < 0) z = -z;
}

mpq_class mpq_from_i128(i128 num, i128 den) {
  mpz_class n, d;
  mpz_set_i128(n, num);
  mpz_set_i128(d, den);
  mpq_class q(n);
  q /= mpq_class(d);
  return q;
}

} // namespace

Rat Rat::from_big(Big* b) {
  // b is canonical (reduced, positive denominator); demote when it fits.
  if (mpz_fits_slong_p(b->v.get_num().get_mpz_t()) &&
      mpz_fits_slong_p(b->v.get_den().get_mpz_t())) {
    Rat r;
    r.num_ = mpz_get_si(b->v.get_num().get_mpz_t());
    r.den_ = mpz_get_si(b->v.get_den().get_mpz_t());
    delete b;
    return r;
  }
  Rat r;
  r.set_big(b);
  return r;
}

Rat Rat::from_i128(i128 num, i128 den) {
  if (den == 0) fail(Errc::ZeroDenominator, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rat();
  u128 g = gcd_u128(u128_abs(num), u128(den));
  num /= i128(g);
  den /= i128(g);
  if (fits_i64(num) && fits_i64(den)) {
    Rat r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }
  Big* b = new Big{mpq_from_i128(num, den)};
  return from_big(b);
}

Rat::Rat(long long num, long long den) : num_(0), den_(1) { *this = from_i128(num, den); }

Rat::Rat(long long n) : num_(0), den_(1) { *this = from_i128(n, 1); }

Rat::Rat(const Rat& o) : num_(o.num_), den_(o.den_) {
  if (o.is_promoted()) set_big(new Big{o.big()->v});
}

Rat& Rat::operator=(const Rat& o) {
  if (this == &o) return *this;
  Rat tmp(o);
  *this = std::move(tmp);
  return *this;
}

Rat& Rat::operator=(Rat&& o) noexcept {
  if (this == &o) return *this;
  if (is_promoted()) delete big();
  num_ = o.num_;
  den_ = o.den_;
  o.num_ = 0;
  o.den_ = 1;
  return *this;
}

Rat::~Rat() {
  if (is_promoted()) delete big();
}

int Rat::sign() const {
  if (!is_promoted()) return (num_ > 0) - (num_ < 0);
  return mpq_sgn(big()->v.get_mpq_t());
}

Rat Rat::operator-() const {
  if (!is_promoted()) {
    Rat r;
    r.num_ = -num_; // |num_| <= INT64_MAX by construction, safe to negate
    r.den_ = den_;
    return r;
  }
  return from_big(new Big{-big()->v});
}

struct RatOps {
  static mpq_class as_mpq(const Rat& r) {
    if (r.is_promoted()) return r.big()->v;
    mpq_class q(mpz_class(static_cast<long>(r.num_)), mpz_class(static_cast<long>(r.den_)));
    q.canonicalize(); // inputs are already reduced, but stay safe
    return q;
  }
  static Rat wrap(mpq_class v) { return Rat::from_big(new Rat::Big{std::move(v)}); }
  static bool small(const Rat& r) { return !r.is_promoted(); }
  static long long n(const Rat& r) { return r.num_; }
  static long long d(const Rat& r) { return r.den_; }
};

Rat Rat::operator+(const Rat& o) const {
  if (!is_promoted() && !o.is_promoted()) {
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    return from_i128(n, d);
  }
  return RatOps::wrap(RatOps::as_mpq(*this) + RatOps::as_mpq(o));
}

Rat Rat::operator-(const Rat& o) const {
  if (!is_promoted() && !o.is_promoted()) {
    i128 n = i128(num_) * o.den_ - i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    return from_i128(n, d);
  }
  return RatOps::wrap(RatOps::as_mpq(*this) - RatOps::as_mpq(o));
}

Rat Rat::operator*(const Rat& o) const {
  if (!is_promoted() && !o.is_promoted()) {
    i128 n = i128(num_) * o.num_;
    i128 d = i128(den_) * o.den_;
    return from_i128(n, d);
  }
  return RatOps::wrap(RatOps::as_mpq(*this) * RatOps::as_mpq(o));
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) fail(Errc::ZeroDenominator, "division by zero");
  if (!is_promoted() && !o.is_promoted()) {
    i128 n = i128(num_) * o.den_;
    i128 d = i128(den_) * o.num_;
    return from_i128(n, d);
  }
  return RatOps::wrap(RatOps::as_mpq(*this) / RatOps::as_mpq(o));
}

Rat Rat::reciprocal() const {
  if (is_zero()) fail(Errc::ZeroDenominator, "reciprocal of zero");
  if (!is_promoted()) return from_i128(den_, num_);
  return RatOps::wrap(1 / big()->v);
}

int Rat::cmp(const Rat& o) const {
  if (!is_promoted() && !o.is_promoted()) {
    i128 l = i128(num_) * o.den_;
    i128 r = i128(o.num_) * den_;
    return (l > r) - (l < r);
  }
  mpq_class a = RatOps::as_mpq(*this), b = RatOps::as_mpq(o);
  return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
}

std::string Rat::str() const {
  if (!is_promoted()) {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }
  return big()->v.get_str();
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) fail(Errc::ParseError, "empty rational");
  size_t slash = s.find('/');
  try {
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash), 10);
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1), 10);
    if (den == 0) fail(Errc::ZeroDenominator, "zero denominator in '" + s + "'");
    mpq_class q(num);
    q /= mpq_class(den);
    return RatOps::wrap(std::move(q));
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "bad rational '" + s + "'");
  }
}

double Rat::to_double() const {
  if (!is_promoted()) return double(num_) / double(den_);
  return big()->v.get_d();
}

Rat Rat::content_gcd(const Rat& a, const Rat& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  if (!a.is_promoted() && !b.is_promoted()) {
    // gcd(p1/q1, p2/q2) = gcd(p1*q2, p2*q1) / (q1*q2)
    i128 x = i128(a.num_) * b.den_;
    i128 y = i128(b.num_) * a.den_;
    u128 g = gcd_u128(u128_abs(x), u128_abs(y));
    return from_i128(i128(g), i128(a.den_) * b.den_);
  }
  mpq_class qa = RatOps::as_mpq(a), qb = RatOps::as_mpq(b);
  mpz_class num_g, den_l;
  mpz_gcd(num_g.get_mpz_t(), qa.get_num().get_mpz_t(), qb.get_num().get_mpz_t());
  mpz_lcm(den_l.get_mpz_t(), qa.get_den().get_mpz_t(), qb.get_den().get_mpz_t());
  mpq_class q(num_g);
  q /= mpq_class(den_l);
  q.canonicalize();
  return RatOps::wrap(std::move(q));
}

} // namespace topecycle
