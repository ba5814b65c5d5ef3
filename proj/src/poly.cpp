#include "melnik/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace melnik {

namespace {
int exp_total(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }
}  // namespace

bool MonomialOrder::less(const Exps& a, const Exps& b) const {
  const int n = static_cast<int>(a.size());
  auto at = [&](const Exps& e, int k) {
    int idx = perm.empty() ? k : perm[k];
    return e[idx];
  };
  if (kind == OrderKind::Lex) {
    for (int k = 0; k < n; ++k) {
      if (at(a, k) != at(b, k)) return at(a, k) < at(b, k);
    }
    return false;
  }
  // grevlex: compare total degree, then the last differing position wins
  // for the *smaller* exponent.
  int da = exp_total(a), db = exp_total(b);
  if (da != db) return da < db;
  for (int k = n - 1; k >= 0; --k) {
    if (at(a, k) != at(b, k)) return at(a, k) > at(b, k);
  }
  return false;
}

MPoly MPoly::constant(Ctx ctx, Rational c) {
  MPoly p(std::move(ctx));
  if (!c.is_zero()) p.terms_.emplace(Exps(p.ctx_->size(), 0), std::move(c));
  return p;
}

MPoly MPoly::variable(Ctx ctx, int var, int power) {
  if (var < 0 || var >= ctx->size())
    throw std::invalid_argument("MPoly::variable: index out of range");
  if (power < 0) throw std::invalid_argument("MPoly::variable: negative power");
  MPoly p(std::move(ctx));
  Exps e(p.ctx_->size(), 0);
  e[var] = power;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MPoly MPoly::monomial(Ctx ctx, Exps e, Rational c) {
  MPoly p(std::move(ctx));
  if (static_cast<int>(e.size()) != p.ctx_->size())
    throw std::invalid_argument("MPoly::monomial: exponent size mismatch");
  for (int v : e)
    if (v < 0) throw std::invalid_argument("MPoly::monomial: negative exponent");
  if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && exp_total(terms_.begin()->first) == 0;
}

Rational MPoly::constant_term() const {
  if (!ctx_) return Rational(0);
  auto it = terms_.find(Exps(ctx_->size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MPoly::is_rational_constant(Rational* out) const {
  if (!is_constant()) return false;
  if (out) *out = terms_.empty() ? Rational(0) : terms_.begin()->second;
  return true;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_total(e));
  return d;
}

int MPoly::degree(int var) const {
  int d = 0;
  bool seen = false;
  for (const auto& [e, c] : terms_) {
    seen = true;
    d = std::max(d, e[var]);
  }
  return seen ? d : 0;
}

Rational MPoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exps& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::check_same_ctx(const MPoly& o) const {
  if (!same_context(ctx_, o.ctx_))
    throw std::invalid_argument("MPoly: context mismatch");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (!ctx_) {
    *this = o;
    return *this;
  }
  if (o.is_zero()) return *this;
  check_same_ctx(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (!ctx_) {
    *this = -o;
    return *this;
  }
  if (o.is_zero()) return *this;
  check_same_ctx(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (!a.ctx_) return a;
  if (!b.ctx_) return b;
  a.check_same_ctx(b);
  MPoly r(a.ctx_);
  if (a.is_zero() || b.is_zero()) return r;
  const int n = a.ctx_->size();
  Exps e(n);
  // Iterate the smaller operand outside.
  const MPoly& outer = a.terms_.size() <= b.terms_.size() ? a : b;
  const MPoly& inner = a.terms_.size() <= b.terms_.size() ? b : a;
  for (const auto& [ea, ca] : outer.terms_) {
    for (const auto& [eb, cb] : inner.terms_) {
      for (int k = 0; k < n; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly r = MPoly::constant(ctx_, Rational(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MPoly MPoly::diff(int var) const {
  if (var < 0 || var >= ctx_->size())
    throw std::invalid_argument("MPoly::diff: unknown variable");
  MPoly r(ctx_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exps d = e;
    d[var] -= 1;
    r.add_term(d, c * Rational(e[var]));
  }
  return r;
}

MPoly MPoly::eval_partial(const std::map<int, Rational>& assignment) const {
  MPoly r(ctx_);
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    Exps d = e;
    for (const auto& [var, val] : assignment) {
      if (var < 0 || var >= ctx_->size())
        throw std::invalid_argument("MPoly::eval_partial: unknown variable");
      if (d[var] != 0) {
        v *= Rational::pow(val, d[var]);
        d[var] = 0;
      }
    }
    r.add_term(d, v);
  }
  return r;
}

Rational MPoly::eval_all(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != ctx_->size())
    throw std::invalid_argument("MPoly::eval_all: point size mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (int k = 0; k < ctx_->size(); ++k)
      if (e[k]) v *= Rational::pow(point[k], e[k]);
    acc += v;
  }
  return acc;
}

double MPoly::eval_double(const std::vector<double>& point) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double v = c.to_double();
    for (int k = 0; k < ctx_->size(); ++k) {
      for (int t = 0; t < e[k]; ++t) v *= point[k];
    }
    acc += v;
  }
  return acc;
}

MPoly MPoly::subst(int var, const MPoly& value) const {
  auto coeffs = univariate_in(var);
  MPoly acc(ctx_);
  if (coeffs.empty()) return acc;
  int top = coeffs.rbegin()->first;
  for (int d = top; d >= 0; --d) {
    acc = acc * value;
    auto it = coeffs.find(d);
    if (it != coeffs.end()) acc += it->second;
  }
  return acc;
}

std::map<int, MPoly> MPoly::univariate_in(int var) const {
  std::map<int, MPoly> out;
  for (const auto& [e, c] : terms_) {
    Exps d = e;
    int k = d[var];
    d[var] = 0;
    auto [it, inserted] = out.try_emplace(k, ctx_);
    it->second.add_term(d, c);
  }
  return out;
}

MPoly MPoly::from_univariate(const Ctx& ctx, int var,
                             const std::map<int, MPoly>& coeffs) {
  MPoly r(ctx);
  for (const auto& [k, p] : coeffs) {
    MPoly xk = MPoly::variable(ctx, var, k);
    r += p * xk;
  }
  return r;
}

const Exps& MPoly::leading_monomial(const MonomialOrder& ord) const {
  if (terms_.empty())
    throw std::invalid_argument("MPoly: leading term of zero polynomial");
  const Exps* best = &terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    if (ord.less(*best, e)) best = &e;
  return *best;
}

const Rational& MPoly::leading_coeff(const MonomialOrder& ord) const {
  return terms_.at(leading_monomial(ord));
}

Rational MPoly::content() const {
  Rational g(0);
  for (const auto& [e, c] : terms_) g = Rational::content_gcd(g, c);
  return g;
}

int MPoly::lead_sign(const MonomialOrder& ord) const {
  if (terms_.empty()) return 0;
  return leading_coeff(ord).sign();
}

MPoly MPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational g = content();
  if (lead_sign(MonomialOrder::grevlex()) < 0) g = -g;
  MPoly r = *this;
  r *= g.inverse();
  return r;
}

DivRemResult poly_divrem(const MPoly& p, const std::vector<MPoly>& divisors,
                         const MonomialOrder& ord) {
  if (divisors.empty())
    throw std::invalid_argument("poly_divrem: no divisors");
  for (const auto& d : divisors) {
    if (d.is_zero()) throw std::invalid_argument("poly_divrem: zero divisor");
    if (!same_context(d.ctx(), p.ctx()))
      throw std::invalid_argument("poly_divrem: context mismatch");
  }
  const int n = p.ctx()->size();
  struct Lead {
    Exps mono;
    Rational coef;
  };
  std::vector<Lead> leads;
  leads.reserve(divisors.size());
  for (const auto& d : divisors)
    leads.push_back({d.leading_monomial(ord), d.leading_coeff(ord)});

  DivRemResult res;
  res.quotients.assign(divisors.size(), MPoly(p.ctx()));
  res.remainder = MPoly(p.ctx());
  MPoly work = p;
  Exps q(n);
  while (!work.is_zero()) {
    const Exps& lm = work.leading_monomial(ord);
    const Rational lc = work.terms().at(lm);
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      bool divides = true;
      for (int k = 0; k < n; ++k) {
        if (lm[k] < leads[i].mono[k]) {
          divides = false;
          break;
        }
      }
      if (!divides) continue;
      for (int k = 0; k < n; ++k) q[k] = lm[k] - leads[i].mono[k];
      Rational qc = lc / leads[i].coef;
      MPoly qm = MPoly::monomial(p.ctx(), q, qc);
      res.quotients[i] += qm;
      work -= qm * divisors[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder.add_term(lm, lc);
      MPoly lt = MPoly::monomial(p.ctx(), lm, lc);
      work -= lt;
    }
  }
  return res;
}

std::optional<MPoly> poly_exact_div(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return MPoly::zero(p.ctx());
  auto dr = poly_divrem(p, {q}, MonomialOrder::grevlex());
  if (!dr.remainder.is_zero()) return std::nullopt;
  return dr.quotients[0];
}

std::optional<Rational> unit_multiple_of(const MPoly& p, const MPoly& q) {
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  if (p.terms().size() != q.terms().size()) return std::nullopt;
  auto ord = MonomialOrder::grevlex();
  Rational c = p.leading_coeff(ord) / q.leading_coeff(ord);
  MPoly diff = p;
  MPoly scaled = q;
  scaled *= c;
  diff -= scaled;
  if (!diff.is_zero()) return std::nullopt;
  return c;
}

}  // namespace melnik
