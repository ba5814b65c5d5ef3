#include "melnik/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace melnik {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, n, 1);
  mpq_t den;
  mpq_init(den);
  mpq_set_si(den, d, 1);
  mpq_div(q_, q_, den);
  mpq_clear(den);
}

Rational::Rational(const std::string& text) {
  mpq_init(q_);
  if (mpq_set_str(q_, text.c_str(), 10) != 0) {
    mpq_clear(q_);
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q_)) == 0) {
    mpq_clear(q_);
    throw std::invalid_argument("Rational: zero denominator in '" + text +
                                "'");
  }
  mpq_canonicalize(q_);
}

Rational Rational::numerator() const {
  Rational r;
  mpq_set_z(r.q_, mpq_numref(q_));
  return r;
}

Rational Rational::denominator() const {
  Rational r;
  mpq_set_z(r.q_, mpq_denref(q_));
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational Rational::pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e < 0 ? base.inverse() : base;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(b.q_), n);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(b.q_), n);
  return r;
}

Rational Rational::content_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  Rational r;
  mpz_gcd(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
  mpz_lcm(mpq_denref(r.q_), mpq_denref(a.q_), mpq_denref(b.q_));
  mpq_canonicalize(r.q_);
  return r;
}

std::string Rational::str() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace melnik
