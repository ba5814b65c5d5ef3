#include "melnik/francoise.hpp"

#include <stdexcept>

namespace melnik {

namespace {

struct TemplateTerm {
  const char* prefix;  // "a" or "b"
  int i, j;
};

// Q-side template per stage; (i,j) exponents of x^i y^j.
const std::vector<std::vector<TemplateTerm>> kQTerms = {
    {{"b", 0, 1}, {"b", 1, 1}, {"b", 0, 2}, {"b", 1, 2}, {"b", 3, 0},
     {"b", 0, 3}, {"b", 2, 1}},
    {{"b", 0, 1}, {"b", 1, 1}, {"b", 0, 2}, {"b", 1, 2}, {"b", 3, 0},
     {"b", 0, 3}},
    {{"b", 0, 1}, {"b", 1, 1}, {"b", 0, 2}, {"b", 1, 2}, {"b", 3, 0}},
    {{"b", 0, 1}, {"b", 1, 1}, {"b", 0, 2}, {"b", 1, 2}, {"b", 3, 0}},
    {{"b", 0, 1}, {"b", 1, 1}, {"b", 0, 2}, {"b", 1, 2}},
};
const std::vector<std::vector<TemplateTerm>> kPTerms = {
    {{"a", 2, 1}, {"a", 1, 2}},
    {{"a", 2, 1}, {"a", 1, 2}},
    {{"a", 2, 1}, {"a", 1, 2}},
    {},
    {},
};

std::string coeff_name(const TemplateTerm& t, int stage) {
  return std::string(t.prefix) + std::to_string(t.i) + std::to_string(t.j) +
         std::to_string(stage);
}

}  // namespace

Ctx stage_context(int upToStage) {
  if (upToStage < 1 || upToStage > 5)
    throw std::invalid_argument("stage_context: stage must be in 1..5");
  std::vector<std::string> vars = {"x", "y", "a1", "a2"};
  for (int m = 1; m <= upToStage; ++m) {
    for (const auto& t : kPTerms[m - 1]) vars.push_back(coeff_name(t, m));
    for (const auto& t : kQTerms[m - 1]) vars.push_back(coeff_name(t, m));
  }
  return VarContext::make(std::move(vars));
}

PerturbationSpec stage_polynomials(const Ctx& ctx, int upToStage) {
  if (upToStage < 1 || upToStage > 5)
    throw std::invalid_argument("stage_polynomials: stage must be in 1..5");
  PerturbationSpec spec;
  spec.ctx = ctx;
  int ix = ctx->index("x"), iy = ctx->index("y");
  for (int m = 1; m <= upToStage; ++m) {
    MPoly P(ctx), Q(ctx);
    for (const auto& t : kPTerms[m - 1]) {
      P += MPoly::variable(ctx, coeff_name(t, m)) *
           MPoly::variable(ctx, ix, t.i) * MPoly::variable(ctx, iy, t.j);
    }
    for (const auto& t : kQTerms[m - 1]) {
      Q += MPoly::variable(ctx, coeff_name(t, m)) *
           MPoly::variable(ctx, ix, t.i) * MPoly::variable(ctx, iy, t.j);
    }
    spec.P.push_back(std::move(P));
    spec.Q.push_back(std::move(Q));
  }
  return spec;
}

namespace detail {

std::pair<FormTerms, FormTerms> omega_terms(
    const PerturbationSpec& spec, const Hamiltonian& H, int m,
    const std::map<std::string, RatFunc>& subs) {
  if (m < 1 || m > spec.stages())
    throw std::invalid_argument("omega_terms: stage out of range");
  std::map<int, RatFunc> byIndex;
  for (const auto& [name, val] : subs)
    byIndex.emplace(spec.ctx->index(name), val);
  RatFunc A = ratfunc_subst_all(spec.Q[m - 1], byIndex);
  RatFunc B = -ratfunc_subst_all(spec.P[m - 1], byIndex);
  return {xy_split(H, A), xy_split(H, B)};
}

std::pair<FormTerms, FormTerms> scale_form(const Hamiltonian& H,
                                           const RatFunc& r,
                                           const FormTerms& dxT,
                                           const FormTerms& dyT) {
  RatFunc A = r * xy_assemble(H, dxT);
  RatFunc B = r * xy_assemble(H, dyT);
  return {xy_split(H, A), xy_split(H, B)};
}

}  // namespace detail

namespace {

void merge_into(FormTerms& dst, const FormTerms& src) {
  for (const auto& [k, v] : src) {
    auto [it, inserted] = dst.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

bool alpha_has_free_symbols(const std::map<BasisIndex, RatFunc>& alpha,
                            const Hamiltonian& H) {
  for (const auto& [b, c] : alpha) {
    for (int v = 0; v < H.ctx->size(); ++v) {
      if (v == H.x || v == H.y || v == H.a1 || v == H.a2) continue;
      if (c.num().depends_on(v) || c.den().depends_on(v)) return true;
    }
  }
  return false;
}

}  // namespace

MelnikovResult melnikov_chain(const PerturbationSpec& spec,
                              const Hamiltonian& H, int kMax,
                              const std::map<std::string, RatFunc>& subs) {
  if (kMax < 1 || kMax > 5)
    throw std::invalid_argument("melnikov_chain: kMax must be in 1..5");
  if (kMax > spec.stages())
    throw std::invalid_argument("melnikov_chain: spec has too few stages");
  OneFormReducer reducer(H);
  MelnikovResult res;

  std::vector<std::pair<FormTerms, FormTerms>> omegas;  // omega_1..kMax
  for (int m = 1; m <= kMax; ++m)
    omegas.push_back(detail::omega_terms(spec, H, m, subs));

  for (int m = 1; m <= kMax; ++m) {
    FormTerms dxT = omegas[m - 1].first;
    FormTerms dyT = omegas[m - 1].second;
    for (int i = 1; i < m; ++i) {
      int j = m - i;
      auto prod = detail::scale_form(H, res.rChain[i - 1],
                                     omegas[j - 1].first, omegas[j - 1].second);
      merge_into(dxT, prod.first);
      merge_into(dyT, prod.second);
    }
    ReductionResult red = reducer.reduce_terms(dxT, dyT);
    if (red.alpha.empty()) {
      res.rChain.push_back(red.r);
      res.RChain.push_back(red.R);
      res.vanishedOrders.push_back(m);
      continue;
    }
    res.k = m;
    res.alphaK = red.alpha;
    res.undetermined = alpha_has_free_symbols(red.alpha, H);
    return res;
  }
  res.vanishedAll = true;
  return res;
}

bool verify_melnikov_chain(const MelnikovResult& res,
                           const PerturbationSpec& spec, const Hamiltonian& H,
                           const std::map<std::string, RatFunc>& subs) {
  OneFormReducer reducer(H);
  std::vector<std::pair<FormTerms, FormTerms>> omegas;
  int top = res.vanishedAll ? static_cast<int>(res.rChain.size()) : res.k - 1;
  for (int m = 1; m <= std::max(top, res.k); ++m)
    omegas.push_back(detail::omega_terms(spec, H, m, subs));
  for (int m = 1; m <= top; ++m) {
    FormTerms dxT = omegas[m - 1].first;
    FormTerms dyT = omegas[m - 1].second;
    for (int i = 1; i < m; ++i) {
      int j = m - i;
      auto prod = detail::scale_form(H, res.rChain[i - 1],
                                     omegas[j - 1].first, omegas[j - 1].second);
      merge_into(dxT, prod.first);
      merge_into(dyT, prod.second);
    }
    // wTilde_m must equal r_m dH + dR_m exactly.
    RatFunc A = xy_assemble(H, dxT) - res.rChain[m - 1] * RatFunc(H.hx) -
                res.RChain[m - 1].diff(H.x);
    RatFunc B = xy_assemble(H, dyT) - res.rChain[m - 1] * RatFunc(H.hy) -
                res.RChain[m - 1].diff(H.y);
    if (!A.is_zero() || !B.is_zero()) return false;
  }
  return true;
}

}  // namespace melnik
