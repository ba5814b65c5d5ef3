#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "melnik/rational.hpp"
#include "melnik/varcontext.hpp"

namespace melnik {

using Exps = std::vector<int>;

enum class OrderKind { Lex, GrevLex };

// Total monomial order compatible with multiplication. `perm` lists variable
// indices by decreasing significance; empty means the context order.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::vector<int> perm;

  static MonomialOrder grevlex() { return {OrderKind::GrevLex, {}}; }
  static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
  static MonomialOrder lex(std::vector<int> priority) {
    return {OrderKind::Lex, std::move(priority)};
  }
  static MonomialOrder grevlex(std::vector<int> priority) {
    return {OrderKind::GrevLex, std::move(priority)};
  }

  // a < b
  bool less(const Exps& a, const Exps& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored coefficient is zero; zero is the empty term map.
class MPoly {
 public:
  MPoly() = default;  // zero over a null context; usable as placeholder
  explicit MPoly(Ctx ctx) : ctx_(std::move(ctx)) {}

  static MPoly zero(Ctx ctx) { return MPoly(std::move(ctx)); }
  static MPoly constant(Ctx ctx, Rational c);
  static MPoly variable(Ctx ctx, int var, int power = 1);
  static MPoly variable(const Ctx& ctx, const std::string& name,
                        int power = 1) {
    return variable(ctx, ctx->index(name), power);
  }
  static MPoly monomial(Ctx ctx, Exps e, Rational c);

  const Ctx& ctx() const { return ctx_; }
  const std::map<Exps, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (coefficient of the unit monomial).
  Rational constant_term() const;
  bool is_rational_constant(Rational* out = nullptr) const;
  size_t term_count() const { return terms_.size(); }

  int total_degree() const;  // -1 for the zero polynomial
  int degree(int var) const;
  bool depends_on(int var) const { return degree(var) > 0; }

  Rational coeff(const Exps& e) const;
  void add_term(const Exps& e, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly operator-() const;
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const Rational& c);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly pow(int e) const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly diff(int var) const;
  MPoly diff(const std::string& name) const { return diff(ctx_->index(name)); }

  // Partial evaluation; assigned variables drop out of the support.
  MPoly eval_partial(const std::map<int, Rational>& assignment) const;
  Rational eval_all(const std::vector<Rational>& point) const;
  double eval_double(const std::vector<double>& point) const;

  // Substitute a polynomial for a variable (Horner in that variable).
  MPoly subst(int var, const MPoly& value) const;

  // View as univariate in `var` with MPoly coefficients.
  std::map<int, MPoly> univariate_in(int var) const;
  static MPoly from_univariate(const Ctx& ctx, int var,
                               const std::map<int, MPoly>& coeffs);

  // Leading data under an order. Throws on zero polynomial.
  const Exps& leading_monomial(const MonomialOrder& ord) const;
  const Rational& leading_coeff(const MonomialOrder& ord) const;

  // gcd of coefficients (positive); zero polynomial has content 0.
  Rational content() const;
  // this / content, sign-normalized so the leading grevlex coefficient > 0.
  MPoly primitive_part() const;
  int lead_sign(const MonomialOrder& ord) const;

  // Canonical text: terms sorted descending by `ord`, "c * x^2 * y" joined
  // with " + " / " - ", rationals as p/q.
  std::string str(const MonomialOrder& ord = MonomialOrder::grevlex()) const;
  static MPoly parse(const Ctx& ctx, const std::string& text);

 private:
  void check_same_ctx(const MPoly& o) const;
  Ctx ctx_;
  std::map<Exps, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

struct DivRemResult {
  std::vector<MPoly> quotients;
  MPoly remainder;
};

// Multivariate division: p = sum q_i d_i + rem, no remainder monomial
// divisible by any divisor's leading monomial under `ord`.
DivRemResult poly_divrem(const MPoly& p, const std::vector<MPoly>& divisors,
                         const MonomialOrder& ord);

// Exact division; returns nullopt when q does not divide p.
std::optional<MPoly> poly_exact_div(const MPoly& p, const MPoly& q);

// p == c*q for some nonzero rational c; returns c.
std::optional<Rational> unit_multiple_of(const MPoly& p, const MPoly& q);

}  // namespace melnik
