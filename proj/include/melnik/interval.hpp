#pragma once

#include <map>

#include "melnik/poly.hpp"
#include "melnik/ratfunc.hpp"

namespace melnik {

// Closed interval with exact rational endpoints.
struct Interval {
  Rational lo, hi;

  Interval() : lo(0), hi(0) {}
  Interval(Rational a, Rational b);
  static Interval point(Rational v) { return Interval(v, v); }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) * Rational(1, 2); }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool strictly_contains(const Interval& o) const {
    return lo < o.lo && o.hi < hi;
  }
  bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }
  int sign() const {  // +1 strictly positive, -1 strictly negative, 0 mixed
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }

  Interval operator-() const { return Interval(-hi, -lo); }
  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
  }
  friend Interval operator*(const Interval& a, const Interval& b);
  // Throws when the divisor contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval pow(int e) const;
  friend Interval intersect(const Interval& a, const Interval& b);
};

// Interval evaluation; every variable appearing in p must be boxed.
Interval interval_eval(const MPoly& p, const std::map<int, Interval>& box);
// Enclosure of num/den; throws if the denominator's enclosure contains zero.
Interval interval_eval(const RatFunc& f, const std::map<int, Interval>& box);

}  // namespace melnik
