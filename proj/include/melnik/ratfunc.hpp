#pragma once

#include <map>
#include <string>

#include "melnik/poly.hpp"
#include "melnik/polygcd.hpp"

namespace melnik {

// Rational function num/den over the polynomial ring of a context.
// Normalized: den != 0, common polynomial factors cancelled, den primitive
// with positive leading (grevlex) coefficient. Equality tests always go
// through cross-multiplication, which is exact regardless of normalization.
class RatFunc {
 public:
  RatFunc() = default;  // zero over a null context
  RatFunc(MPoly num);   // NOLINT: polynomial promotes implicitly
  RatFunc(MPoly num, MPoly den);

  static RatFunc constant(const Ctx& ctx, Rational c) {
    return RatFunc(MPoly::constant(ctx, std::move(c)));
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const Ctx& ctx() const { return num_.ctx(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_rational_constant(Rational* out = nullptr) const;
  // Throws unless den is constant.
  MPoly as_poly() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  RatFunc& operator*=(const Rational& c);

  bool equals(const RatFunc& o) const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.equals(b);
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !a.equals(b);
  }

  RatFunc diff(int var) const;
  RatFunc subst(int var, const RatFunc& value) const;
  double eval_double(const std::vector<double>& point) const;

  std::string str(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

 private:
  void normalize();
  MPoly num_, den_;
};

// Horner substitution of a rational function into a polynomial.
RatFunc ratfunc_subst(const MPoly& p, int var, const RatFunc& value);
// Applies substitutions in ascending variable-index order.
RatFunc ratfunc_subst_all(const MPoly& p,
                          const std::map<int, RatFunc>& values);

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace melnik
