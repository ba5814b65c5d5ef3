#include "melnik/realroots.hpp"

#include <stdexcept>

namespace melnik {

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  for (size_t k = 1; k < c.size(); ++k)
    d.c.push_back(c[k] * Rational(static_cast<long>(k)));
  d.trim();
  return d;
}

void UniPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

UniPoly to_unipoly(const MPoly& p, int var) {
  UniPoly u;
  if (p.is_zero()) return u;
  u.c.assign(p.degree(var) + 1, Rational(0));
  for (const auto& [e, coef] : p.terms()) {
    for (int v = 0; v < p.ctx()->size(); ++v) {
      if (v != var && e[v] != 0)
        throw std::invalid_argument("to_unipoly: polynomial is not univariate");
    }
    u.c[e[var]] += coef;
  }
  u.trim();
  return u;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  a.trim();
  b.trim();
  auto make_monic = [](UniPoly& p) {
    if (p.is_zero()) return;
    Rational inv = p.c.back().inverse();
    for (auto& x : p.c) x *= inv;
  };
  while (!b.is_zero()) {
    // a mod b
    int db = b.degree();
    Rational lb = b.c.back();
    while (!a.is_zero() && a.degree() >= db) {
      Rational f = a.c.back() / lb;
      int shift = a.degree() - db;
      for (int k = 0; k <= db; ++k) a.c[k + shift] -= f * b.c[k];
      a.trim();
    }
    std::swap(a, b);
  }
  make_monic(a);
  return a;
}

UniPoly uni_squarefree(const UniPoly& p) {
  if (p.is_zero() || p.degree() <= 1) return p;
  UniPoly g = uni_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  // exact division p / g
  UniPoly r = p, q;
  q.c.assign(p.degree() - g.degree() + 1, Rational(0));
  Rational lg = g.c.back();
  while (!r.is_zero() && r.degree() >= g.degree()) {
    Rational f = r.c.back() / lg;
    int shift = r.degree() - g.degree();
    q.c[shift] = f;
    for (int k = 0; k <= g.degree(); ++k) r.c[k + shift] -= f * g.c[k];
    r.trim();
  }
  if (!r.is_zero()) throw std::logic_error("uni_squarefree: inexact division");
  q.trim();
  return q;
}

namespace {

// Coefficients of p(a + b t).
UniPoly compose_affine(const UniPoly& p, const Rational& a, const Rational& b) {
  UniPoly acc;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    // acc = acc*(a + b t) + coef
    UniPoly next;
    next.c.assign(acc.c.size() + 1, Rational(0));
    for (size_t k = 0; k < acc.c.size(); ++k) {
      next.c[k] += acc.c[k] * a;
      next.c[k + 1] += acc.c[k] * b;
    }
    if (next.c.empty()) next.c.push_back(Rational(0));
    next.c[0] += *it;
    next.trim();
    acc = std::move(next);
  }
  return acc;
}

int sign_variations(const std::vector<Rational>& v) {
  int count = 0, last = 0;
  for (const auto& x : v) {
    int s = x.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Descartes bound for the number of roots of p in the open interval (0,1):
// sign variations of (1+x)^n p(1/(1+x)).
int descartes01(const UniPoly& p) {
  std::vector<Rational> c(p.c.rbegin(), p.c.rend());  // x^n p(1/x)
  int n = static_cast<int>(c.size()) - 1;
  for (int i = 0; i < n; ++i)  // Taylor shift by 1
    for (int j = n - 1; j >= i; --j) c[j] += c[j + 1];
  return sign_variations(c);
}

// Recursive bisection on local coordinates; q has the roots of the original
// polynomial in (0,1) mapped onto (0,1) of the interval [lo, hi].
void vca(const UniPoly& q, const Rational& lo, const Rational& hi,
         std::vector<Interval>& out, int depth) {
  if (depth > 4000) throw std::runtime_error("root isolation: depth exceeded");
  int v = descartes01(q);
  if (v == 0) return;
  if (v == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) * Rational(1, 2);
  UniPoly left = compose_affine(q, Rational(0), Rational(1, 2));   // (0,1/2)
  UniPoly right = compose_affine(q, Rational(1, 2), Rational(1, 2));  // (1/2,1)
  if (q.eval(Rational(1, 2)).is_zero()) out.push_back(Interval::point(mid));
  // left/right keep an endpoint root at t in {0,1}; strip it so the open
  // sub-intervals are counted correctly.
  auto strip0 = [](UniPoly& p) {
    size_t k = 0;
    while (k < p.c.size() && p.c[k].is_zero()) ++k;
    p.c.erase(p.c.begin(), p.c.begin() + k);
  };
  strip0(right);  // root of `right` at t=0 corresponds to q(1/2)=0
  // root of `left` at t=1 also corresponds to q(1/2)=0
  if (left.eval(Rational(1)).is_zero()) {
    UniPoly def;
    def.c.assign(left.c.size() - 1, Rational(0));
    // synthetic division by (t-1)
    Rational carry(0);
    for (int k = left.degree(); k >= 1; --k) {
      carry = left.c[k] + carry;
      def.c[k - 1] = carry;
    }
    left = def;
    left.trim();
  }
  vca(left, lo, mid, out, depth + 1);
  vca(right, mid, hi, out, depth + 1);
}

}  // namespace

RootIsolation1D isolate_real_roots_1d(const UniPoly& p, const Interval& range) {
  if (p.is_zero())
    throw std::invalid_argument("isolate_real_roots_1d: zero polynomial");
  RootIsolation1D out;
  out.squarefree = uni_squarefree(p);
  const UniPoly& q = out.squarefree;
  if (q.degree() <= 0) return out;
  if (range.width().is_zero()) {
    if (q.eval(range.lo).is_zero()) out.roots.push_back(range);
    return out;
  }
  if (q.eval(range.lo).is_zero()) out.roots.push_back(Interval::point(range.lo));
  if (q.eval(range.hi).is_zero()) out.roots.push_back(Interval::point(range.hi));
  // Map [lo,hi] onto (0,1) and strip endpoint roots.
  UniPoly local = compose_affine(q, range.lo, range.width());
  size_t k = 0;
  while (k < local.c.size() && local.c[k].is_zero()) ++k;
  local.c.erase(local.c.begin(), local.c.begin() + k);
  if (local.eval(Rational(1)).is_zero()) {
    UniPoly def;
    def.c.assign(local.c.size() - 1, Rational(0));
    Rational carry(0);
    for (int d = local.degree(); d >= 1; --d) {
      carry = local.c[d] + carry;
      def.c[d - 1] = carry;
    }
    local = def;
    local.trim();
  }
  if (!local.is_zero() && local.degree() >= 1)
    vca(local, range.lo, range.hi, out.roots, 0);
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

Interval refine_root_1d(const UniPoly& q, Interval iv, const Rational& w) {
  if (iv.width().is_zero()) return iv;
  int slo = q.eval(iv.lo).sign();
  int shi = q.eval(iv.hi).sign();
  if (slo == 0) return Interval::point(iv.lo);
  if (shi == 0) return Interval::point(iv.hi);
  if (slo == shi)
    throw std::logic_error("refine_root_1d: interval does not bracket a root");
  while (iv.width() > w) {
    Rational m = iv.mid();
    int sm = q.eval(m).sign();
    if (sm == 0) return Interval::point(m);
    if (sm == slo)
      iv.lo = m;
    else
      iv.hi = m;
  }
  return iv;
}

}  // namespace melnik
