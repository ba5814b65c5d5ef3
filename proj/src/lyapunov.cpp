#include "melnik/lyapunov.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace melnik {

SystemSpec standard_system(const Ctx& ctx, PerturbationSpec pert, int K,
                           std::map<std::string, RatFunc> subs) {
  SystemSpec spec;
  spec.ctx = ctx;
  spec.a1 = RatFunc(MPoly::variable(ctx, "a1"));
  spec.a2 = RatFunc(MPoly::variable(ctx, "a2"));
  spec.pert = std::move(pert);
  spec.K = K;
  spec.subs = std::move(subs);
  return spec;
}

const RatFunc& FocusTable::at(int i, int j) const {
  auto it = v.find({i, j});
  if (it == v.end())
    throw std::invalid_argument("FocusTable: missing entry v_" +
                                std::to_string(i) + std::to_string(j));
  return it->second;
}

const Rational& focus_anchor() {
  // Fixed by matching the order-1 engine output against the printed
  // v_11 = (1/8)(a121 + 3 b031 + b111 - a1 b111/2 - 2 a2 b021 + 1);
  // the raw construction already reproduces it, so the anchor is 1.
  static const Rational k(1);
  return k;
}

RatFunc EngineOutput::value(int i, int j) const {
  auto it = what.find({i, j});
  if (it == what.end())
    throw std::invalid_argument("EngineOutput: missing (i,j)");
  RatFunc val(it->second, D.pow(i));
  if (j >= 1) val *= focus_anchor();
  return val;
}

FocusTable EngineOutput::table() const {
  FocusTable t;
  t.K = K;
  t.J = J;
  for (const auto& [key, w] : what) t.v.emplace(key, value(key.first, key.second));
  return t;
}

namespace {

struct FieldTerm {
  int m;       // eps order
  int p, q;    // x^p y^q
  MPoly coef;  // scaled coefficient (polynomial)
};

// Collects the scaled field: f = x' - y, g = y' + x, with stage-m
// coefficients multiplied by D^m (an eps rescaling by the unit D).
struct ScaledField {
  MPoly D;
  std::vector<FieldTerm> f, g;
};

ScaledField build_field(const SystemSpec& spec) {
  const Ctx& ctx = spec.ctx;
  int ix = ctx->index("x"), iy = ctx->index("y");
  if (!spec.a1.is_polynomial() || !spec.a2.is_polynomial())
    throw std::invalid_argument("focus engine: a1, a2 must be polynomial");
  if (spec.K < 1 || spec.K > 5)
    throw std::invalid_argument("focus engine: K must be in 1..5");
  if (spec.pert.stages() < spec.K)
    throw std::invalid_argument("focus engine: perturbation has too few stages");

  std::map<int, RatFunc> byIndex;
  for (const auto& [name, val] : spec.subs)
    byIndex.emplace(ctx->index(name), val);

  // Substituted stage coefficients and their common denominator.
  struct RawTerm {
    int m, p, q;
    RatFunc coef;
  };
  std::vector<RawTerm> rawF, rawG;
  MPoly D = MPoly::constant(ctx, Rational(1));
  auto collect = [&](const MPoly& poly, int m, std::vector<RawTerm>& dst) {
    for (const auto& [key, c] : xy_split(Hamiltonian::standard(ctx), poly)) {
      RatFunc val = ratfunc_subst_all(c.num(), byIndex);
      if (val.is_zero()) continue;
      if (val.num().depends_on(ix) || val.num().depends_on(iy) ||
          val.den().depends_on(ix) || val.den().depends_on(iy))
        throw std::invalid_argument(
            "focus engine: substitution reintroduces x or y");
      dst.push_back({m, key.first, key.second, val});
      if (!val.den().is_constant()) D = poly_lcm(D, val.den());
    }
  };
  for (int m = 1; m <= spec.K; ++m) {
    collect(spec.pert.P[m - 1], m, rawF);
    collect(spec.pert.Q[m - 1], m, rawG);
  }

  ScaledField field;
  field.D = D;
  MPoly a1p = spec.a1.as_poly(), a2p = spec.a2.as_poly();
  field.f.push_back({0, 1, 1, a1p});
  field.f.push_back({0, 0, 2, a2p});
  field.g.push_back({0, 2, 0, MPoly::constant(ctx, Rational(1))});
  field.g.push_back({0, 0, 2, a1p * Rational(-1, 2)});
  auto scale = [&](const std::vector<RawTerm>& src, std::vector<FieldTerm>& dst) {
    for (const auto& t : src) {
      RatFunc scaled = t.coef * RatFunc(D.pow(t.m));
      if (!scaled.is_polynomial())
        throw std::logic_error("focus engine: denominator does not divide D^m");
      MPoly c = scaled.as_poly();
      if (!c.is_zero()) dst.push_back({t.m, t.p, t.q, std::move(c)});
    }
  };
  scale(rawF, field.f);
  scale(rawG, field.g);
  for (const auto& t : field.f)
    if (t.p + t.q < 1 || t.p + t.q > 3)
      throw std::invalid_argument("focus engine: perturbation degree out of range");
  for (const auto& t : field.g)
    if (t.p + t.q < 1 || t.p + t.q > 3)
      throw std::invalid_argument("focus engine: perturbation degree out of range");
  return field;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

EngineOutput run_focus_engine(const SystemSpec& spec, int jMax) {
  if (jMax < 1) throw std::invalid_argument("focus engine: jMax must be >= 1");
  const Ctx& ctx = spec.ctx;
  ScaledField field = build_field(spec);
  const int K = spec.K;
  const int Dmax = 2 * jMax + 2;

  EngineOutput out;
  out.ctx = ctx;
  out.D = field.D;
  out.K = K;
  out.J = jMax;

  // V[d][m][q] = coefficient of x^(d-q) y^q at eps order m.
  // Stored as vectors indexed by q.
  std::vector<std::vector<std::vector<MPoly>>> V(Dmax + 1);
  const MPoly zero(ctx);
  for (int d = 2; d <= Dmax; ++d)
    V[d].assign(K + 1, std::vector<MPoly>(d + 1, zero));
  V[2][0][0] = MPoly::constant(ctx, Rational(1, 2));  // x^2/2
  V[2][0][2] = MPoly::constant(ctx, Rational(1, 2));  // y^2/2

  for (int d = 2; d <= Dmax; ++d) {
    for (int m = 0; m <= K; ++m) {
      if (d == 2 && m == 0) continue;  // seeded
      // contrib[q] = coefficient of x^(d-q) y^q in
      //   sum_{d'} V_{d',x} f + V_{d',y} g at eps slice m.
      std::vector<MPoly> contrib(d + 1, zero);
      auto accumulate = [&](const std::vector<FieldTerm>& terms, bool isF) {
        for (const auto& t : terms) {
          int e = t.p + t.q;
          int dp = d - e + 1;  // degree of the V factor
          if (dp < 2 || dp > Dmax) continue;
          int mu = m - t.m;
          if (mu < 0) continue;
          if (dp == d && t.m == 0) continue;  // e==1 never has m==0
          const auto& Vslice = V[dp][mu];
          for (int q = 0; q <= dp; ++q) {
            const MPoly& c = Vslice[q];
            if (c.is_zero()) continue;
            int p = dp - q;
            if (isF) {
              if (p == 0) continue;  // d/dx of y-only monomial
              int qq = q + t.q;      // resulting y-degree
              contrib[qq] += c * t.coef * Rational(p);
            } else {
              if (q == 0) continue;
              int qq = q - 1 + t.q;
              contrib[qq] += c * t.coef * Rational(q);
            }
          }
        }
      };
      accumulate(field.f, true);
      accumulate(field.g, false);

      // Solve (alpha+1) c_{alpha+1,beta-1} - (beta+1) c_{alpha-1,beta+1}
      //   = w K_beta - contrib_beta   for all beta, alpha = d - beta,
      // with K_beta = binom(d/2, beta/2) for even beta when d is even.
      std::vector<MPoly>& c = V[d][m];
      const bool even = (d % 2 == 0);
      // Chain A: even-q unknowns from odd-beta equations.
      if (even) {
        c[0] = zero;  // free direction (x^2+y^2)^{d/2}: x^d coefficient 0
        for (int beta = 1; beta + 1 <= d; beta += 2) {
          // c_{q=beta+1} = ((d-beta+1) c_{q=beta-1} - T_beta)/(beta+1), T = -contrib
          MPoly t = -contrib[beta];
          c[beta + 1] = (c[beta - 1] * Rational(d - beta + 1) - t) *
                        Rational(1, beta + 1);
        }
      } else {
        // Backward from E_d: c_{q=d-1} = T_d = -contrib[d].
        c[d - 1] = -contrib[d];
        for (int beta = d - 2; beta >= 1; beta -= 2) {
          // E_beta: (d-beta+1) c_{beta-1} - (beta+1) c_{beta+1} = -contrib[beta]
          c[beta - 1] =
              (c[beta + 1] * Rational(beta + 1) - contrib[beta]) *
              Rational(1, d - beta + 1);
        }
      }
      // Chain B: odd-q unknowns from even-beta equations.
      if (!even) {
        // Forward from E_0.
        c[1] = contrib[0];  // c_{d-1,1} = -T_0 = contrib[0]
        for (int beta = 2; beta + 1 <= d; beta += 2) {
          c[beta + 1] = (c[beta - 1] * Rational(d - beta + 1) + contrib[beta]) *
                        Rational(1, beta + 1);
        }
      } else {
        // Carry w: c_q = val_q + slope_q * w.
        std::vector<MPoly> val(d + 1, zero);
        std::vector<Rational> slope(d + 1, Rational(0));
        val[1] = contrib[0];
        slope[1] = Rational(binom(d / 2, 0));  // from -T_0 = contrib - w K_0
        // E_0: -c_1 = w K_0 - contrib_0  => c_1 = contrib_0 - w K_0
        slope[1] = -slope[1];
        for (int beta = 2; beta + 1 <= d; beta += 2) {
          // c_{beta+1} = ((d-beta+1) c_{beta-1} - w K_beta + contrib_beta)/(beta+1)
          val[beta + 1] = (val[beta - 1] * Rational(d - beta + 1) +
                           contrib[beta]) *
                          Rational(1, beta + 1);
          slope[beta + 1] =
              (slope[beta - 1] * Rational(d - beta + 1) -
               Rational(binom(d / 2, beta / 2))) *
              Rational(1, beta + 1);
        }
        // Final equation E_d: c_{d-1} = w K_d - contrib_d.
        Rational denom = Rational(binom(d / 2, d / 2)) - slope[d - 1];
        if (denom.is_zero())
          throw std::logic_error("focus engine: singular w equation");
        MPoly w = (val[d - 1] + contrib[d]) * denom.inverse();
        for (int q = 1; q < d; q += 2) c[q] = val[q] + w * slope[q];
        if (m == 0 && !w.is_zero())
          throw std::logic_error(
              "focus engine: nonzero focus value for the Hamiltonian part");
        out.what[{m, (d - 2) / 2}] = std::move(w);
      }
    }
  }
  return out;
}

FocusTable focus_values(const SystemSpec& spec, int order, int jMax) {
  if (order < 1 || order > spec.K)
    throw std::invalid_argument("focus_values: order out of range");
  EngineOutput eng = run_focus_engine(spec, jMax);
  for (int i = 1; i < order; ++i) {
    for (int j = 0; j <= jMax; ++j) {
      auto it = eng.what.find({i, j});
      if (it != eng.what.end() && !it->second.is_zero())
        throw std::invalid_argument(
            "focus_values: lower-order focus value v_" + std::to_string(i) +
            "," + std::to_string(j) + " does not vanish");
    }
  }
  FocusTable t;
  t.K = spec.K;
  t.J = jMax;
  for (int j = 0; j <= jMax; ++j) {
    auto it = eng.what.find({order, j});
    if (it != eng.what.end()) t.v.emplace(std::make_pair(order, j),
                                          eng.value(order, j));
  }
  return t;
}

RatFunc apply_subs(const RatFunc& f, const Ctx& ctx,
                   const std::map<std::string, RatFunc>& subs) {
  std::map<int, RatFunc> byIndex;
  for (const auto& [name, val] : subs) byIndex.emplace(ctx->index(name), val);
  RatFunc n = ratfunc_subst_all(f.num(), byIndex);
  RatFunc d = ratfunc_subst_all(f.den(), byIndex);
  return n / d;
}

LinearChainResult solve_linear_chain(
    const Ctx& ctx, std::vector<std::pair<RatFunc, std::string>> equations) {
  LinearChainResult res;
  for (auto& [value, unknown] : equations) {
    int uv = ctx->index(unknown);
    RatFunc v = apply_subs(value, ctx, res.solution);
    if (v.den().depends_on(uv))
      throw std::invalid_argument("solve_linear_chain: unknown '" + unknown +
                                  "' appears in a denominator");
    auto byDeg = v.num().univariate_in(uv);
    int deg = byDeg.empty() ? 0 : byDeg.rbegin()->first;
    if (deg > 1)
      throw std::invalid_argument("solve_linear_chain: unknown '" + unknown +
                                  "' appears nonlinearly");
    auto itA = byDeg.find(1);
    if (itA == byDeg.end() || itA->second.is_zero())
      throw std::invalid_argument("solve_linear_chain: coefficient of '" +
                                  unknown + "' vanishes identically");
    MPoly B = byDeg.count(0) ? byDeg.at(0) : MPoly(ctx);
    RatFunc sol = -(RatFunc(B) / RatFunc(itA->second));
    // Close the solution set: earlier solutions may mention this unknown.
    for (auto& [name, val] : res.solution)
      val = apply_subs(val, ctx, {{unknown, sol}});
    res.solution.emplace(unknown, sol);
    res.order.push_back(unknown);
  }
  return res;
}

double poincare_displacement(const SystemSpec& spec,
                             const std::map<std::string, double>& values,
                             double eps, double radius) {
  const Ctx& ctx = spec.ctx;
  int ix = ctx->index("x"), iy = ctx->index("y");
  std::vector<double> pt(ctx->size(), 0.0);
  for (const auto& [name, v] : values) pt[ctx->index(name)] = v;

  // Assemble numeric RHS: x' and y'.
  struct NumTerm {
    double c;
    int p, q;
  };
  std::vector<NumTerm> fx, fy;
  auto push = [&](const MPoly& poly, double scale, std::vector<NumTerm>& dst) {
    for (const auto& [e, coef] : poly.terms()) {
      std::vector<double> q = pt;
      q[ix] = 1.0;
      q[iy] = 1.0;
      MPoly mono = MPoly::monomial(poly.ctx(), e, coef);
      double c = mono.eval_double(q) * scale;
      if (c != 0.0) dst.push_back({c, e[ix], e[iy]});
    }
  };
  double a1 = spec.a1.eval_double(pt), a2 = spec.a2.eval_double(pt);
  fx.push_back({1.0, 0, 1});
  fx.push_back({a1, 1, 1});
  fx.push_back({a2, 0, 2});
  fy.push_back({-1.0, 1, 0});
  fy.push_back({1.0, 2, 0});
  fy.push_back({-0.5 * a1, 0, 2});
  std::map<int, RatFunc> byIndex;
  for (const auto& [name, val] : spec.subs) byIndex.emplace(ctx->index(name), val);
  double em = 1.0;
  for (int m = 1; m <= spec.K; ++m) {
    em *= eps;
    RatFunc Pm = ratfunc_subst_all(spec.pert.P[m - 1], byIndex);
    RatFunc Qm = ratfunc_subst_all(spec.pert.Q[m - 1], byIndex);
    double dp = Pm.den().eval_double(pt), dq = Qm.den().eval_double(pt);
    push(Pm.num(), em / dp, fx);
    push(Qm.num(), em / dq, fy);
  }
  auto rhs = [&](double x, double y, double& dx, double& dy) {
    dx = 0.0;
    dy = 0.0;
    for (const auto& t : fx) dx += t.c * std::pow(x, t.p) * std::pow(y, t.q);
    for (const auto& t : fy) dy += t.c * std::pow(x, t.p) * std::pow(y, t.q);
  };
  // RK4 around one clockwise revolution starting on the positive x-axis.
  double x = radius, y = 0.0;
  double h = 2e-4;
  double prevY = 0.0, prevX = x;
  int steps = 0;
  bool armed = false;
  while (steps < 2000000) {
    double k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y;
    rhs(x, y, k1x, k1y);
    rhs(x + 0.5 * h * k1x, y + 0.5 * h * k1y, k2x, k2y);
    rhs(x + 0.5 * h * k2x, y + 0.5 * h * k2y, k3x, k3y);
    rhs(x + h * k3x, y + h * k3y, k4x, k4y);
    prevX = x;
    prevY = y;
    x += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
    y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
    ++steps;
    if (y < 0.0) armed = true;  // left the section going clockwise
    if (armed && prevY < 0.0 && y >= 0.0 && x > 0.0) {
      // Linear interpolation onto y = 0.
      double t = prevY / (prevY - y);
      double xc = prevX + t * (x - prevX);
      return xc - radius;
    }
  }
  throw std::runtime_error("poincare_displacement: no return to section");
}

}  // namespace melnik
