#include "melnik/polygcd.hpp"

#include <stdexcept>

namespace melnik {

namespace {

MPoly exact_div_checked(const MPoly& p, const MPoly& q, const char* where) {
  auto r = poly_exact_div(p, q);
  if (!r) throw std::logic_error(std::string(where) + ": inexact division");
  return *r;
}

int main_variable(const MPoly& a, const MPoly& b) {
  const Ctx& ctx = a.ctx() ? a.ctx() : b.ctx();
  for (int v = ctx->size() - 1; v >= 0; --v) {
    if (a.depends_on(v) || b.depends_on(v)) return v;
  }
  return -1;
}

}  // namespace

MPoly content_in(const MPoly& p, int var) {
  MPoly g(p.ctx());
  for (const auto& [d, c] : p.univariate_in(var)) {
    g = poly_gcd(g, c);
    Rational k;
    if (g.is_rational_constant(&k) && k.is_one()) break;
  }
  return g;
}

MPoly primitive_in(const MPoly& p, int var) {
  if (p.is_zero()) return p;
  return exact_div_checked(p, content_in(p, var), "primitive_in");
}

MPoly leading_coeff_in(const MPoly& p, int var) {
  auto u = p.univariate_in(var);
  if (u.empty()) return MPoly(p.ctx());
  return u.rbegin()->second;
}

std::pair<MPoly, MPoly> pseudo_divrem(const MPoly& p, const MPoly& q,
                                      int var) {
  if (q.is_zero()) throw std::invalid_argument("pseudo_divrem: zero divisor");
  const int dq = q.degree(var);
  MPoly lc = leading_coeff_in(q, var);
  MPoly quo(p.ctx());
  MPoly rem = p;
  int dr = rem.degree(var);
  if (p.is_zero() || dr < dq) {
    // Convention: scale so the identity holds with exponent max(dr-dq+1, 0)=0.
    return {quo, rem};
  }
  int steps = dr - dq + 1;
  while (!rem.is_zero() && (dr = rem.degree(var)) >= dq && steps > 0) {
    MPoly rl = leading_coeff_in(rem, var);
    MPoly shift = MPoly::variable(p.ctx(), var, dr - dq);
    // rem <- lc*rem - rl*shift*q ; quo <- lc*quo + rl*shift
    rem = lc * rem - rl * shift * q;
    quo = lc * quo + rl * shift;
    --steps;
  }
  // Pad remaining factors of lc so that lc^(d) * p = quo*q + rem holds with
  // the full exponent d = deg(p)-deg(q)+1.
  while (steps > 0) {
    rem = lc * rem;
    quo = lc * quo;
    --steps;
  }
  return {quo, rem};
}

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant())
    return MPoly::constant(a.ctx() ? a.ctx() : b.ctx(), Rational(1));
  int v = main_variable(a, b);
  if (v < 0) return MPoly::constant(a.ctx(), Rational(1));
  const bool av = a.depends_on(v), bv = b.depends_on(v);
  if (!av) return poly_gcd(a, content_in(b, v));
  if (!bv) return poly_gcd(content_in(a, v), b);

  MPoly ca = content_in(a, v);
  MPoly cb = content_in(b, v);
  MPoly pa = exact_div_checked(a, ca, "poly_gcd");
  MPoly pb = exact_div_checked(b, cb, "poly_gcd");
  MPoly cg = poly_gcd(ca, cb);

  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  MPoly g = MPoly::constant(a.ctx(), Rational(1));
  MPoly h = g;
  while (true) {
    int delta = pa.degree(v) - pb.degree(v);
    MPoly rem = pseudo_divrem(pa, pb, v).second;
    if (rem.is_zero()) break;
    if (rem.degree(v) == 0) {
      pb = MPoly::constant(a.ctx(), Rational(1));
      break;
    }
    pa = pb;
    MPoly divisor = g * h.pow(delta);
    pb = exact_div_checked(rem, divisor, "poly_gcd PRS");
    g = leading_coeff_in(pa, v);
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_div_checked(g.pow(delta), h.pow(delta - 1), "poly_gcd h");
    }
  }
  MPoly result = cg * primitive_in(pb, v);
  return result.primitive_part();
}

MPoly poly_lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly(a.ctx() ? a.ctx() : b.ctx());
  MPoly g = poly_gcd(a, b);
  auto q = poly_exact_div(a, g);
  if (!q) throw std::logic_error("poly_lcm: gcd does not divide");
  return (*q * b).primitive_part();
}

MPoly resultant_poly(const MPoly& A0, const MPoly& B0, int var) {
  const Ctx& ctx = A0.ctx() ? A0.ctx() : B0.ctx();
  if (A0.is_zero() || B0.is_zero()) return MPoly(ctx);
  int dA = A0.degree(var), dB = B0.degree(var);
  if (dA == 0 && dB == 0)
    throw std::invalid_argument("resultant: both inputs constant in variable");
  if (dA == 0) return A0.pow(dB);
  if (dB == 0) return B0.pow(dA);

  // Cohen, Algorithm 3.3.7 (resultant via subresultant PRS).
  MPoly A = A0, B = B0;
  Rational ca = A.content(), cb = B.content();
  A *= ca.inverse();
  B *= cb.inverse();
  Rational tscale = Rational::pow(ca, dB) * Rational::pow(cb, dA);
  int s = 1;
  if (dA < dB) {
    std::swap(A, B);
    std::swap(dA, dB);
    if ((dA % 2) == 1 && (dB % 2) == 1) s = -s;
  }
  MPoly g = MPoly::constant(ctx, Rational(1));
  MPoly h = g;
  while (true) {
    dA = A.degree(var);
    dB = B.degree(var);
    int delta = dA - dB;
    if ((dA % 2) == 1 && (dB % 2) == 1) s = -s;
    MPoly R = pseudo_divrem(A, B, var).second;
    A = B;
    MPoly divisor = g * h.pow(delta);
    B = exact_div_checked(R, divisor, "resultant PRS");
    g = leading_coeff_in(A, var);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_div_checked(g.pow(delta), h.pow(delta - 1), "resultant h");
    }
    if (B.is_zero()) return MPoly(ctx);
    if (B.degree(var) == 0) break;
  }
  int dAfin = A.degree(var);
  MPoly res;
  if (dAfin == 1) {
    res = B;
  } else {
    res = exact_div_checked(B.pow(dAfin), h.pow(dAfin - 1), "resultant final");
  }
  res *= tscale;
  if (s < 0) res = -res;
  return res;
}

MPoly squarefree_part(const MPoly& p, int var) {
  if (p.is_zero() || p.degree(var) == 0) return p;
  MPoly g = poly_gcd(p, p.diff(var));
  auto q = poly_exact_div(p, g);
  if (!q) throw std::logic_error("squarefree_part: gcd does not divide");
  return q->primitive_part();
}

}  // namespace melnik
