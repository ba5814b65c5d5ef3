#include "melnik/elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace melnik {

namespace {

Exps exp_lcm(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
  return r;
}

bool exp_coprime(const Exps& a, const Exps& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

int exp_total(const Exps& e) {
  int t = 0;
  for (int v : e) t += v;
  return t;
}

MPoly make_monic(const MPoly& p, const MonomialOrder& ord) {
  MPoly r = p;
  r *= p.leading_coeff(ord).inverse();
  return r;
}

}  // namespace

GroebnerBasis groebner(std::vector<MPoly> gens, const MonomialOrder& ord) {
  std::vector<MPoly> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(make_monic(g, ord));
  if (G.empty()) throw std::invalid_argument("groebner: no nonzero generators");
  const Ctx& ctx = G.front().ctx();

  struct Pair {
    size_t i, j;
    Exps lcm;
    int deg;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](size_t jNew) {
    for (size_t i = 0; i < jNew; ++i) {
      Exps l = exp_lcm(G[i].leading_monomial(ord), G[jNew].leading_monomial(ord));
      pairs.push_back({i, jNew, l, exp_total(l)});
    }
  };
  for (size_t j = 1; j < G.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    auto best = std::min_element(
        pairs.begin(), pairs.end(),
        [&](const Pair& a, const Pair& b) { return a.deg < b.deg; });
    Pair p = *best;
    pairs.erase(best);
    const Exps& li = G[p.i].leading_monomial(ord);
    const Exps& lj = G[p.j].leading_monomial(ord);
    if (exp_coprime(li, lj)) continue;  // Buchberger's first criterion
    Exps mi(li.size()), mj(lj.size());
    for (size_t k = 0; k < li.size(); ++k) {
      mi[k] = p.lcm[k] - li[k];
      mj[k] = p.lcm[k] - lj[k];
    }
    MPoly spoly = MPoly::monomial(ctx, mi, Rational(1)) * G[p.i] -
                  MPoly::monomial(ctx, mj, Rational(1)) * G[p.j];
    if (spoly.is_zero()) continue;
    MPoly rem = poly_divrem(spoly, G, ord).remainder;
    if (rem.is_zero()) continue;
    G.push_back(make_monic(rem, ord));
    push_pairs(G.size() - 1);
  }

  // Interreduce to the reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < G.size(); ++i) {
      std::vector<MPoly> others;
      for (size_t j = 0; j < G.size(); ++j)
        if (j != i) others.push_back(G[j]);
      if (others.empty()) break;
      MPoly rem = poly_divrem(G[i], others, ord).remainder;
      if (rem.is_zero()) {
        G.erase(G.begin() + i);
        changed = true;
        break;
      }
      MPoly monic = make_monic(rem, ord);
      if (monic != G[i]) {
        G[i] = monic;
        changed = true;
      }
    }
  }
  std::sort(G.begin(), G.end(), [&](const MPoly& a, const MPoly& b) {
    return ord.less(b.leading_monomial(ord), a.leading_monomial(ord));
  });
  GroebnerBasis gb;
  gb.gens = std::move(G);
  gb.order = ord;
  gb.reduced = true;
  return gb;
}

MPoly normal_form(const MPoly& p, const GroebnerBasis& gb) {
  if (p.is_zero()) return p;
  return poly_divrem(p, gb.gens, gb.order).remainder;
}

MPoly resultant(const MPoly& p, const MPoly& q, int var) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("resultant: zero input");
  return resultant_poly(p, q, var);
}

MPoly jacobian_det(const MPoly& F, const MPoly& G, int v1, int v2) {
  return F.diff(v1) * G.diff(v2) - F.diff(v2) * G.diff(v1);
}

namespace {

struct Candidate {
  Interval b1, b2;
};

bool box_excludes(const MPoly& F, const MPoly& G, int v1, int v2,
                  const Interval& i1, const Interval& i2) {
  std::map<int, Interval> box{{v1, i1}, {v2, i2}};
  if (!interval_eval(F, box).contains_zero()) return true;
  if (!interval_eval(G, box).contains_zero()) return true;
  return false;
}

// One interval-Newton step; returns 0 = inconclusive, 1 = certified
// contraction (cand updated), -1 = no root in cand.
int newton_step(const MPoly& F, const MPoly& G, const MPoly& Fx,
                const MPoly& Fy, const MPoly& Gx, const MPoly& Gy, int v1,
                int v2, Candidate& cand) {
  std::map<int, Interval> box{{v1, cand.b1}, {v2, cand.b2}};
  Interval a = interval_eval(Fx, box), b = interval_eval(Fy, box);
  Interval c = interval_eval(Gx, box), d = interval_eval(Gy, box);
  Interval det = a * d - b * c;
  if (det.contains_zero()) return 0;
  Rational m1 = cand.b1.mid(), m2 = cand.b2.mid();
  std::vector<Rational> pt(F.ctx()->size(), Rational(0));
  pt[v1] = m1;
  pt[v2] = m2;
  Interval f1 = Interval::point(F.eval_all(pt));
  Interval f2 = Interval::point(G.eval_all(pt));
  // N = m - J^{-1} f, with J^{-1} = [d -b; -c a]/det
  Interval n1 = Interval::point(m1) - (d * f1 - b * f2) / det;
  Interval n2 = Interval::point(m2) - (a * f2 - c * f1) / det;
  if (n1.disjoint(cand.b1) || n2.disjoint(cand.b2)) return -1;
  bool contained = cand.b1.strictly_contains(n1) && cand.b2.strictly_contains(n2);
  cand.b1 = intersect(n1, cand.b1);
  cand.b2 = intersect(n2, cand.b2);
  return contained ? 1 : 0;
}

}  // namespace

std::vector<RootBox> isolate_real_roots(const MPoly& F, const MPoly& G,
                                        int var1, int var2,
                                        const SearchBox& box,
                                        const Rational& widthGoal) {
  if (F.is_zero() || G.is_zero())
    throw std::invalid_argument("isolate_real_roots: zero input");
  for (int v = 0; v < F.ctx()->size(); ++v) {
    if (v == var1 || v == var2) continue;
    if (F.depends_on(v) || G.depends_on(v))
      throw std::invalid_argument(
          "isolate_real_roots: inputs must be bivariate in the chosen "
          "variables");
  }
  MPoly R1 = resultant_poly(F, G, var2);  // univariate in var1
  MPoly R2 = resultant_poly(F, G, var1);  // univariate in var2
  if (R1.is_zero() || R2.is_zero())
    throw std::invalid_argument(
        "isolate_real_roots: system has a common curve component");
  auto iso1 = isolate_real_roots_1d(to_unipoly(R1, var1), box.b1);
  auto iso2 = isolate_real_roots_1d(to_unipoly(R2, var2), box.b2);

  // Roots exactly on the search boundary are not supported.
  for (const auto& r : iso1.roots)
    if ((r.lo == box.b1.lo && r.width().is_zero()) ||
        (r.hi == box.b1.hi && r.width().is_zero()))
      throw std::runtime_error("isolate_real_roots: root on box boundary");
  for (const auto& r : iso2.roots)
    if ((r.lo == box.b2.lo && r.width().is_zero()) ||
        (r.hi == box.b2.hi && r.width().is_zero()))
      throw std::runtime_error("isolate_real_roots: root on box boundary");

  // Pre-refine the coordinate intervals.
  Rational start = widthGoal;
  std::vector<Interval> xs, ys;
  for (auto r : iso1.roots) xs.push_back(refine_root_1d(iso1.squarefree, r, start));
  for (auto r : iso2.roots) ys.push_back(refine_root_1d(iso2.squarefree, r, start));

  MPoly Fx = F.diff(var1), Fy = F.diff(var2);
  MPoly Gx = G.diff(var1), Gy = G.diff(var2);

  std::vector<RootBox> out;
  for (auto ix : xs) {
    for (auto iy : ys) {
      Candidate cand{ix, iy};
      if (box_excludes(F, G, var1, var2, cand.b1, cand.b2)) continue;
      bool certified = false, dropped = false;
      for (int iter = 0; iter < 200 && !certified && !dropped; ++iter) {
        int st = newton_step(F, G, Fx, Fy, Gx, Gy, var1, var2, cand);
        if (st == 1) certified = true;
        if (st == -1) dropped = true;
        if (st == 0) {
          if (box_excludes(F, G, var1, var2, cand.b1, cand.b2)) {
            dropped = true;
            break;
          }
          // Tighten the coordinate enclosures via the resultant roots.
          Rational w = std::min(cand.b1.width(), cand.b2.width()) * Rational(1, 4);
          if (w.is_zero()) break;
          try {
            cand.b1 = intersect(cand.b1, refine_root_1d(iso1.squarefree, ix, w));
          } catch (const std::domain_error&) {
            dropped = true;
            break;
          }
          try {
            cand.b2 = intersect(cand.b2, refine_root_1d(iso2.squarefree, iy, w));
          } catch (const std::domain_error&) {
            dropped = true;
            break;
          }
          ix = refine_root_1d(iso1.squarefree, ix, w);
          iy = refine_root_1d(iso2.squarefree, iy, w);
        }
      }
      if (dropped) continue;
      if (!certified)
        throw std::runtime_error(
            "isolate_real_roots: certification failed at max refinement");
      // Contract to the requested width.
      for (int iter = 0;
           iter < 200 && (cand.b1.width() > widthGoal ||
                          cand.b2.width() > widthGoal);
           ++iter) {
        int st = newton_step(F, G, Fx, Fy, Gx, Gy, var1, var2, cand);
        if (st == -1)
          throw std::logic_error("isolate_real_roots: certified root lost");
        if (st == 0) break;
      }
      if (cand.b1.width() > widthGoal || cand.b2.width() > widthGoal)
        throw std::runtime_error(
            "isolate_real_roots: could not reach width goal");
      out.push_back(RootBox{var1, var2, cand.b1, cand.b2});
    }
  }
  for (size_t i = 0; i < out.size(); ++i) {
    for (size_t j = i + 1; j < out.size(); ++j) {
      if (!out[i].b1.disjoint(out[j].b1) && !out[i].b2.disjoint(out[j].b2))
        throw std::logic_error("isolate_real_roots: overlapping boxes");
    }
  }
  return out;
}

Interval jacobian_enclosure(const RatFunc& F1, const RatFunc& F2, int v1,
                            int v2, const RootBox& box) {
  RatFunc det = F1.diff(v1) * F2.diff(v2) - F1.diff(v2) * F2.diff(v1);
  return interval_eval(det, box.as_box());
}

}  // namespace melnik
