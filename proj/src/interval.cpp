#include "melnik/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace melnik {

Interval::Interval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
  if (hi < lo) throw std::invalid_argument("Interval: hi < lo");
}

Interval operator*(const Interval& a, const Interval& b) {
  Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo,
           c4 = a.hi * b.hi;
  Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
  Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero())
    throw std::domain_error("Interval: division by interval containing zero");
  Rational c1 = a.lo / b.lo, c2 = a.lo / b.hi, c3 = a.hi / b.lo,
           c4 = a.hi / b.hi;
  Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
  Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Interval::pow: negative exponent");
  if (e == 0) return point(Rational(1));
  Rational plo = Rational::pow(lo, e), phi = Rational::pow(hi, e);
  if (e % 2 == 1) return Interval(plo, phi);
  if (lo.sign() >= 0) return Interval(plo, phi);
  if (hi.sign() <= 0) return Interval(phi, plo);
  return Interval(Rational(0), std::max(plo, phi));
}

Interval intersect(const Interval& a, const Interval& b) {
  Rational lo = std::max(a.lo, b.lo);
  Rational hi = std::min(a.hi, b.hi);
  if (hi < lo) throw std::domain_error("Interval: empty intersection");
  return Interval(std::move(lo), std::move(hi));
}

Interval interval_eval(const MPoly& p, const std::map<int, Interval>& box) {
  Interval acc = Interval::point(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    Interval term = Interval::point(c);
    for (int v = 0; v < p.ctx()->size(); ++v) {
      if (e[v] == 0) continue;
      auto it = box.find(v);
      if (it == box.end())
        throw std::invalid_argument("interval_eval: unboxed variable " +
                                    p.ctx()->name(v));
      term = term * it->second.pow(e[v]);
    }
    acc = acc + term;
  }
  return acc;
}

Interval interval_eval(const RatFunc& f, const std::map<int, Interval>& box) {
  Interval n = interval_eval(f.num(), box);
  Interval d = interval_eval(f.den(), box);
  return n / d;
}

}  // namespace melnik
