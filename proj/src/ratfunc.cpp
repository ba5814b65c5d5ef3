#include "melnik/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace melnik {

RatFunc::RatFunc(MPoly num) : num_(std::move(num)) {
  den_ = MPoly::constant(num_.ctx(), Rational(1));
}

RatFunc::RatFunc(MPoly num, MPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.ctx() ? num_.ctx() : den_.ctx(), Rational(1));
    return;
  }
  Rational dc;
  if (!den_.is_rational_constant(&dc)) {
    MPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *poly_exact_div(num_, g);
      den_ = *poly_exact_div(den_, g);
    }
  }
  // Move the rational scale of the denominator into the numerator and make
  // the denominator primitive with positive leading coefficient.
  MPoly pp = den_.primitive_part();
  Rational k = den_.leading_coeff(MonomialOrder::grevlex()) /
               pp.leading_coeff(MonomialOrder::grevlex());
  num_ *= k.inverse();
  den_ = std::move(pp);
}

bool RatFunc::is_rational_constant(Rational* out) const {
  if (!num_.is_constant() || !den_.is_constant()) return false;
  if (out) {
    Rational n = num_.constant_term();
    Rational d = den_.constant_term();
    *out = n / d;
  }
  return true;
}

MPoly RatFunc::as_poly() const {
  Rational d;
  if (!den_.is_rational_constant(&d))
    throw std::invalid_argument("RatFunc::as_poly: denominator is not constant");
  MPoly p = num_;
  p *= d.inverse();
  return p;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (!num_.ctx()) return *this = o;
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  MPoly n = num_ * o.den_ + o.num_ * den_;
  MPoly d = den_ * o.den_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    num_ = MPoly(num_.ctx());
    den_ = MPoly::constant(num_.ctx(), Rational(1));
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
  if (is_zero()) return *this;
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator*=(const Rational& c) {
  if (c.is_zero()) {
    num_ = MPoly(num_.ctx());
    den_ = MPoly::constant(num_.ctx(), Rational(1));
  } else {
    num_ *= c;
  }
  return *this;
}

bool RatFunc::equals(const RatFunc& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RatFunc RatFunc::diff(int var) const {
  MPoly n = num_.diff(var) * den_ - num_ * den_.diff(var);
  MPoly d = den_ * den_;
  return RatFunc(std::move(n), std::move(d));
}

RatFunc RatFunc::subst(int var, const RatFunc& value) const {
  RatFunc n = ratfunc_subst(num_, var, value);
  RatFunc d = ratfunc_subst(den_, var, value);
  return n / d;
}

double RatFunc::eval_double(const std::vector<double>& point) const {
  return num_.eval_double(point) / den_.eval_double(point);
}

std::string RatFunc::str(const MonomialOrder& ord) const {
  if (is_polynomial()) return as_poly().str(ord);
  return "(" + num_.str(ord) + ") / (" + den_.str(ord) + ")";
}

RatFunc ratfunc_subst(const MPoly& p, int var, const RatFunc& value) {
  if (!p.depends_on(var)) return RatFunc(p);
  auto coeffs = p.univariate_in(var);
  RatFunc acc;
  int top = coeffs.rbegin()->first;
  for (int d = top; d >= 0; --d) {
    acc = acc * value;
    auto it = coeffs.find(d);
    if (it != coeffs.end()) acc += RatFunc(it->second);
  }
  return acc;
}

RatFunc ratfunc_subst_all(const MPoly& p,
                          const std::map<int, RatFunc>& values) {
  RatFunc acc(p);
  for (const auto& [var, val] : values) {
    RatFunc n = ratfunc_subst(acc.num(), var, val);
    RatFunc d = ratfunc_subst(acc.den(), var, val);
    acc = n / d;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  return os << f.str();
}

}  // namespace melnik
