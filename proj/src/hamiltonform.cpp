#include "melnik/hamiltonform.hpp"

#include <stdexcept>

namespace melnik {

namespace {

void add_to(FormTerms& m, std::pair<int, int> key, const RatFunc& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = m.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

// Remove terms free of x and y (the constant of integration).
MPoly drop_xy_constant(const Hamiltonian& H, const MPoly& p) {
  MPoly r(p.ctx());
  for (const auto& [e, c] : p.terms()) {
    if (e[H.x] == 0 && e[H.y] == 0) continue;
    r.add_term(e, c);
  }
  return r;
}

int xy_degree(const Hamiltonian& H, const RatFunc& f) {
  int d = -1;
  for (const auto& [e, c] : f.num().terms())
    d = std::max(d, e[H.x] + e[H.y]);
  return d;
}

}  // namespace

Hamiltonian Hamiltonian::standard(const Ctx& ctx) {
  Hamiltonian H;
  H.ctx = ctx;
  H.x = ctx->index("x");
  H.y = ctx->index("y");
  H.a1 = ctx->index("a1");
  H.a2 = ctx->index("a2");
  H.h = MPoly::parse(ctx,
                     "1/2*x^2 + 1/2*y^2 - 1/3*x^3 + 1/2*a1*x*y^2 + "
                     "1/3*a2*y^3");
  H.hx = H.h.diff(H.x);
  H.hy = H.h.diff(H.y);
  return H;
}

Hamiltonian standard_hamiltonian(const Ctx& ctx) {
  return Hamiltonian::standard(ctx);
}

FormTerms xy_split(const Hamiltonian& H, const MPoly& p) {
  std::map<std::pair<int, int>, MPoly> buckets;
  for (const auto& [e, c] : p.terms()) {
    Exps rest = e;
    std::pair<int, int> key{e[H.x], e[H.y]};
    rest[H.x] = 0;
    rest[H.y] = 0;
    auto [it, inserted] = buckets.try_emplace(key, p.ctx());
    it->second.add_term(rest, c);
  }
  FormTerms out;
  for (auto& [key, poly] : buckets) out.emplace(key, RatFunc(std::move(poly)));
  return out;
}

FormTerms xy_split(const Hamiltonian& H, const RatFunc& f) {
  if (f.den().depends_on(H.x) || f.den().depends_on(H.y))
    throw std::invalid_argument(
        "xy_split: denominator must not involve x or y");
  FormTerms out = xy_split(H, f.num());
  RatFunc inv = RatFunc(MPoly::constant(f.ctx(), Rational(1)), f.den());
  for (auto& [k, v] : out) v *= inv;
  return out;
}

RatFunc xy_assemble(const Hamiltonian& H, const FormTerms& terms) {
  RatFunc acc;
  for (const auto& [key, c] : terms) {
    Exps e(H.ctx->size(), 0);
    e[H.x] = key.first;
    e[H.y] = key.second;
    acc += c * RatFunc(MPoly::monomial(H.ctx, e, Rational(1)));
  }
  if (acc.is_zero()) acc = RatFunc(MPoly(H.ctx));
  return acc;
}

OneFormReducer::OneFormReducer(Hamiltonian H) : H_(std::move(H)) {}

RatFunc OneFormReducer::coef(long num, long den) const {
  return RatFunc::constant(H_.ctx, Rational(num, den));
}

OneFormReducer::Lemma1Out OneFormReducer::lemma1_reduce(FormTerms dxTerms,
                                                        FormTerms dyTerms) const {
  Lemma1Out out;
  // Lemma 1(a): c x^i y^j dy = d(c x^i y^(j+1)/(j+1)) - (ci/(j+1)) x^(i-1) y^(j+1) dx
  for (const auto& [key, c] : dyTerms) {
    auto [i, j] = key;
    add_to(out.R, {i, j + 1}, c * coef(1, j + 1));
    if (i > 0) add_to(dxTerms, {i - 1, j + 1}, c * coef(-i, j + 1));
  }
  // Lemma 1(b): repeatedly rewrite the highest x-degree term with i >= 2.
  while (!dxTerms.empty() && dxTerms.rbegin()->first.first >= 2) {
    auto it = std::prev(dxTerms.end());
    auto [i, j] = it->first;
    RatFunc c = it->second;
    dxTerms.erase(it);
    add_to(dxTerms, {i - 1, j}, c);
    if (j - 2 * i + 4 != 0)
      add_to(dxTerms, {i - 2, j + 2}, c * a1c() * coef(j - 2 * i + 4, 2 * j + 4));
    if (i >= 3) {
      add_to(dxTerms, {i - 3, j + 2}, c * coef(-(i - 2), j + 2));
      add_to(dxTerms, {i - 3, j + 3}, c * a2c() * coef(-(i - 2), j + 3));
    }
    add_to(out.r, {i - 2, j}, -c);
    add_to(out.R, {i - 2, j + 2}, c * coef(1, j + 2));
    add_to(out.R, {i - 1, j + 2}, c * a1c() * coef(1, j + 2));
    add_to(out.R, {i - 2, j + 3}, c * a2c() * coef(1, j + 3));
  }
  // Exact forms dx = d(x) and x dx = d(x^2/2).
  if (auto it = dxTerms.find({0, 0}); it != dxTerms.end()) {
    add_to(out.R, {1, 0}, it->second);
    dxTerms.erase(it);
  }
  if (auto it = dxTerms.find({1, 0}); it != dxTerms.end()) {
    add_to(out.R, {2, 0}, it->second * coef(1, 2));
    dxTerms.erase(it);
  }
  out.alphaAll = std::move(dxTerms);
  return out;
}

const DegreeRelation& OneFormReducer::relation(int m) const {
  if (m < 0 || m % 3 == 2)
    throw std::invalid_argument("degree relation: m mod 3 must not be 2");
  std::lock_guard<std::mutex> lock(relMutex_);
  auto found = relations_.find(m);
  if (found != relations_.end()) return found->second;

  // Build all missing levels bottom-up.
  for (int level = m % 3; level <= m; level += 3) {
    if (relations_.count(level)) continue;
    DegreeRelation rel;
    rel.m = level;
    if (level == 0) {
      rel.beta[{0, 0}] = MPoly::constant(H_.ctx, Rational(1));
      rel.rTilde = MPoly(H_.ctx);
      rel.RTilde = MPoly::variable(H_.ctx, H_.x);
    } else if (level == 1) {
      rel.beta[{1, 0}] = MPoly::constant(H_.ctx, Rational(1));
      rel.rTilde = MPoly(H_.ctx);
      rel.RTilde = MPoly::variable(H_.ctx, H_.x, 2) * Rational(1, 2);
    } else {
      const DegreeRelation& prev = relations_.at(level - 3);
      // Multiply the level-(m-3) relation by H and re-reduce with Lemma 1.
      MPoly lhsA(H_.ctx);
      for (const auto& [key, b] : prev.beta) {
        Exps e(H_.ctx->size(), 0);
        e[H_.x] = key.first;
        e[H_.y] = key.second;
        lhsA += b * MPoly::monomial(H_.ctx, e, Rational(1));
      }
      lhsA = lhsA * H_.h;
      Lemma1Out red = lemma1_reduce(xy_split(H_, lhsA), {});
      for (const auto& [key, c] : red.alphaAll) {
        if (!c.is_polynomial())
          throw std::logic_error("degree relation: non-polynomial beta");
        rel.beta[key] = c.as_poly();
      }
      MPoly rAcc = xy_assemble(H_, red.r).as_poly();
      MPoly RAcc = xy_assemble(H_, red.R).as_poly();
      rel.rTilde = H_.h * prev.rTilde - prev.RTilde - rAcc;
      rel.RTilde = drop_xy_constant(H_, H_.h * prev.RTilde - RAcc);
    }
    relations_.emplace(level, std::move(rel));
  }
  return relations_.at(m);
}

ReductionResult OneFormReducer::reduce_terms(FormTerms dxTerms,
                                             FormTerms dyTerms) const {
  Lemma1Out out = lemma1_reduce(std::move(dxTerms), std::move(dyTerms));

  // Eliminate j = 0 (mod 3), j >= 3 terms through the degree relations,
  // highest (j, i) first.
  while (true) {
    std::pair<int, int> pick{-1, -1};
    for (const auto& [key, c] : out.alphaAll) {
      auto [i, j] = key;
      if (j >= 3 && j % 3 == 0) {
        if (pick.second < j || (pick.second == j && pick.first < i)) pick = key;
      }
    }
    if (pick.first < 0) break;
    auto [i, j] = pick;
    RatFunc c = out.alphaAll.at(pick);
    out.alphaAll.erase(pick);
    const DegreeRelation& rel = relation(i + j);
    auto topIt = rel.beta.find(pick);
    if (topIt == rel.beta.end() || topIt->second.is_zero())
      throw std::logic_error("reduce: degree relation lacks its top term");
    RatFunc factor = c / RatFunc(topIt->second);
    for (const auto& [key, b] : rel.beta) {
      if (key == pick) continue;
      add_to(out.alphaAll, key, -(factor * RatFunc(b)));
    }
    for (const auto& [key, v] : xy_split(H_, rel.rTilde))
      add_to(out.r, key, factor * v);
    for (const auto& [key, v] : xy_split(H_, rel.RTilde))
      add_to(out.R, key, factor * v);
  }

  // Normalize: r has no term free of x,y (such terms shift into R via
  // c dH = d(cH)); R has no constant term.
  if (auto it = out.r.find({0, 0}); it != out.r.end()) {
    RatFunc c00 = it->second;
    out.r.erase(it);
    for (const auto& [key, v] : xy_split(H_, H_.h)) add_to(out.R, key, c00 * v);
  }
  out.R.erase({0, 0});

  ReductionResult res;
  res.r = xy_assemble(H_, out.r);
  res.R = xy_assemble(H_, out.R);
  for (const auto& [key, c] : out.alphaAll) {
    BasisIndex b{key.first, key.second};
    if (!b.valid())
      throw std::logic_error("reduce: non-basis index survived reduction");
    if (!c.is_zero()) res.alpha.emplace(b, c);
  }
  return res;
}

ReductionResult OneFormReducer::reduce(const OneForm& w) const {
  return reduce_terms(xy_split(H_, w.A), xy_split(H_, w.B));
}

SigmaRewrite OneFormReducer::sigma_rewrite(int i, int j) const {
  if (i < 0 || j < 0)
    throw std::invalid_argument("sigma rewrite: indices must be nonnegative");
  SigmaRewrite rw;
  rw.i = i;
  rw.j = j;
  Exps e(H_.ctx->size(), 0);
  e[H_.x] = i;
  e[H_.y] = j + 1;
  rw.exact = MPoly::monomial(H_.ctx, e, Rational(1, j + 1));
  rw.residual = Rational(-i, j + 1);
  return rw;
}

OmegaXRewrite OneFormReducer::omega_x_rewrite(int i, int j) const {
  if (i < 2) throw std::invalid_argument("omega_x rewrite: requires i >= 2");
  if (j < 0) throw std::invalid_argument("omega_x rewrite: j must be >= 0");
  OmegaXRewrite rw;
  rw.i = i;
  rw.j = j;
  add_to(rw.omegaTerms, {i - 1, j}, coef(1, 1));
  if (j - 2 * i + 4 != 0)
    add_to(rw.omegaTerms, {i - 2, j + 2}, a1c() * coef(j - 2 * i + 4, 2 * j + 4));
  if (i >= 3) {
    add_to(rw.omegaTerms, {i - 3, j + 2}, coef(-(i - 2), j + 2));
    add_to(rw.omegaTerms, {i - 3, j + 3}, a2c() * coef(-(i - 2), j + 3));
  }
  Exps e(H_.ctx->size(), 0);
  e[H_.x] = i - 2;
  e[H_.y] = j;
  rw.rTerm = MPoly::monomial(H_.ctx, e, Rational(-1));
  MPoly a1p = MPoly::variable(H_.ctx, H_.a1);
  MPoly a2p = MPoly::variable(H_.ctx, H_.a2);
  auto mono = [&](int p, int q, Rational c) {
    Exps ee(H_.ctx->size(), 0);
    ee[H_.x] = p;
    ee[H_.y] = q;
    return MPoly::monomial(H_.ctx, ee, std::move(c));
  };
  rw.exact = mono(i - 2, j + 2, Rational(1, j + 2)) +
             a1p * mono(i - 1, j + 2, Rational(1, j + 2)) +
             a2p * mono(i - 2, j + 3, Rational(1, j + 3));
  return rw;
}

OmegaYRewrite OneFormReducer::omega_y_rewrite(int i, int j) const {
  if ((i != 0 && i != 1) || j < 3)
    throw std::invalid_argument("omega_y rewrite: requires i in {0,1}, j >= 3");
  OmegaYRewrite rw;
  rw.i = i;
  rw.j = j;
  MPoly a1p = MPoly::variable(H_.ctx, H_.a1);
  MPoly a2p = MPoly::variable(H_.ctx, H_.a2);
  if (i == 0) {
    rw.prefactor = RatFunc(MPoly::constant(H_.ctx, Rational(3 * j)),
                           a2p * Rational(j + 1));
    rw.hTerm = {0, j - 3};
    add_to(rw.bracketOmega, {1, j - 3}, coef(-1, 6));
    add_to(rw.bracketOmega, {0, j - 1},
           RatFunc(-(a1p * Rational(j - 3) +
                     MPoly::constant(H_.ctx, Rational(6 * j - 2))) *
                   Rational(1, 12 * (j - 1))));
    add_to(rw.bracketOmega, {1, j - 1},
           RatFunc(-(a1p * Rational(j + 1)) * Rational(1, 3 * (j - 1))));
  } else {
    rw.prefactor = RatFunc(MPoly::constant(H_.ctx, Rational(3 * j)),
                           a2p * Rational(j + 2));
    rw.hTerm = {1, j - 3};
    add_to(rw.bracketOmega, {0, j + 1},
           RatFunc(-(a1p * a1p) * Rational(j + 2, 6 * (j + 1))));
    add_to(rw.bracketOmega, {0, j}, RatFunc(a2p * Rational(1, 6 * j)));
    add_to(rw.bracketOmega, {1, j - 1},
           RatFunc(-(a1p * Rational(5 * j + 3) +
                     MPoly::constant(H_.ctx, Rational(6 * j + 2))) *
                   Rational(1, 12 * (j - 1))));
    add_to(rw.bracketOmega, {0, j - 1},
           RatFunc(-(a1p * Rational(j - 3) +
                     MPoly::constant(H_.ctx, Rational(-2))) *
                   Rational(1, 12 * (j - 1))));
    add_to(rw.bracketOmega, {1, j - 3}, coef(-1, 6));
  }
  // Recover the bracket's r and R by reducing
  //   Psi = (1/prefactor) w_ij - H w_hTerm - bracket
  // which the identity asserts to be r dH + dR.
  FormTerms psi;
  add_to(psi, {i, j}, RatFunc(MPoly::constant(H_.ctx, Rational(1))) / rw.prefactor);
  for (const auto& [key, v] : xy_split(H_, H_.h)) {
    add_to(psi, {key.first + rw.hTerm.first, key.second + rw.hTerm.second}, -v);
  }
  for (const auto& [key, v] : rw.bracketOmega) add_to(psi, key, -v);
  ReductionResult red = reduce_terms(psi, {});
  if (!red.alpha.empty())
    throw std::logic_error("omega_y rewrite: bracket residue is not exact");
  if (red.r.is_polynomial() && red.R.is_polynomial()) {
    rw.rSmall = red.r.as_poly();
    rw.RSmall = red.R.as_poly();
  } else {
    // Keep a certified rational representative in the small fields' place.
    rw.rSmall = red.r.num();
    rw.RSmall = red.R.num();
    throw std::logic_error("omega_y rewrite: non-polynomial certificate");
  }
  return rw;
}

bool OneFormReducer::verify_terms(const ReductionResult& res,
                                  const FormTerms& dxTerms,
                                  const FormTerms& dyTerms) const {
  RatFunc A = xy_assemble(H_, dxTerms);
  RatFunc B = xy_assemble(H_, dyTerms);
  RatFunc alphaPart;
  for (const auto& [b, c] : res.alpha) {
    Exps e(H_.ctx->size(), 0);
    e[H_.x] = b.i;
    e[H_.y] = b.j;
    alphaPart += c * RatFunc(MPoly::monomial(H_.ctx, e, Rational(1)));
  }
  RatFunc dA = A - res.r * RatFunc(H_.hx) - res.R.diff(H_.x) - alphaPart;
  RatFunc dB = B - res.r * RatFunc(H_.hy) - res.R.diff(H_.y);
  return dA.is_zero() && dB.is_zero();
}

bool OneFormReducer::verify(const ReductionResult& res, const OneForm& w) const {
  return verify_terms(res, xy_split(H_, w.A), xy_split(H_, w.B));
}

bool OneFormReducer::verify_relation(const DegreeRelation& rel) const {
  RatFunc lhs;
  for (const auto& [key, b] : rel.beta) {
    Exps e(H_.ctx->size(), 0);
    e[H_.x] = key.first;
    e[H_.y] = key.second;
    lhs += RatFunc(b * MPoly::monomial(H_.ctx, e, Rational(1)));
  }
  RatFunc dA = lhs - RatFunc(rel.rTilde) * RatFunc(H_.hx) -
               RatFunc(rel.RTilde.diff(H_.x));
  RatFunc dB = -(RatFunc(rel.rTilde) * RatFunc(H_.hy)) -
               RatFunc(rel.RTilde.diff(H_.y));
  return dA.is_zero() && dB.is_zero();
}

bool OneFormReducer::verify_omega_y(const OmegaYRewrite& rw) const {
  // prefactor * [H w_h + bracket + rSmall dH + d(RSmall)] - w_ij == 0
  FormTerms dx;
  for (const auto& [key, v] : xy_split(H_, H_.h))
    add_to(dx, {key.first + rw.hTerm.first, key.second + rw.hTerm.second}, v);
  for (const auto& [key, v] : rw.bracketOmega) add_to(dx, key, v);
  RatFunc A = xy_assemble(H_, dx);
  RatFunc rs(rw.rSmall), Rs(rw.RSmall);
  RatFunc fullA = rw.prefactor * (A + rs * RatFunc(H_.hx) + Rs.diff(H_.x));
  RatFunc fullB = rw.prefactor * (rs * RatFunc(H_.hy) + Rs.diff(H_.y));
  Exps e(H_.ctx->size(), 0);
  e[H_.x] = rw.i;
  e[H_.y] = rw.j;
  fullA -= RatFunc(MPoly::monomial(H_.ctx, e, Rational(1)));
  return fullA.is_zero() && fullB.is_zero();
}

ReductionResult reduce_oneform(const OneForm& w, const Hamiltonian& H) {
  OneFormReducer red(H);
  return red.reduce(w);
}

DegreeRelation degree_relation(const Hamiltonian& H, int m) {
  OneFormReducer red(H);
  return red.relation(m);
}

bool verify_reduction(const ReductionResult& res, const OneForm& w,
                      const Hamiltonian& H) {
  OneFormReducer red(H);
  return red.verify(res, w);
}

}  // namespace melnik
