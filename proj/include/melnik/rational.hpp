#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace melnik {

// Arbitrary-precision rational, kept canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1.
class Rational {
 public:
  Rational() noexcept { mpq_init(q_); }
  Rational(long n) { // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long n, long d);
  explicit Rational(const std::string& text);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_si(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  Rational numerator() const;
  Rational denominator() const;

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  Rational inverse() const;
  static Rational pow(const Rational& base, long e);

  // gcd(n1,n2)/lcm(d1,d2); used for polynomial contents. gcd(0,x) = |x|.
  static Rational content_gcd(const Rational& a, const Rational& b);

  double to_double() const { return mpq_get_d(q_); }
  // "p" or "p/q"
  std::string str() const;

  mpq_srcptr raw() const { return q_; }
  mpq_ptr raw() { return q_; }

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace melnik
