#pragma once

#include <map>
#include <string>
#include <vector>

#include "melnik/hamiltonform.hpp"

namespace melnik {

// Cubic perturbation data: P_m, Q_m for m = 1..stages (stored 0-based).
// Coefficient symbols follow the a_ijm / b_ijm naming, e.g. "b121" is the
// x y^2 coefficient of Q_1.
struct PerturbationSpec {
  Ctx ctx;
  std::vector<MPoly> P, Q;
  int stages() const { return static_cast<int>(P.size()); }
};

// Context with x, y, a1, a2 and every template symbol of stages 1..k.
Ctx stage_context(int upToStage);

// The chosen coefficient templates for stages 1..k:
//   P_j = a21j x^2 y + a12j x y^2 (j = 1..3), P_4 = P_5 = 0
//   Q_1 = b011 y + b111 x y + b021 y^2 + b121 x y^2 + b301 x^3 + b031 y^3
//         + b211 x^2 y
//   Q_2 = b012 y + b112 x y + b022 y^2 + b122 x y^2 + b302 x^3 + b032 y^3
//   Q_3 = b013 y + b113 x y + b023 y^2 + b123 x y^2 + b303 x^3
//   Q_4 = b014 y + b114 x y + b024 y^2 + b124 x y^2 + b304 x^3
//   Q_5 = b015 y + b115 x y + b025 y^2 + b125 x y^2
PerturbationSpec stage_polynomials(const Ctx& ctx, int upToStage);

struct MelnikovResult {
  // First order whose reduced alpha-map is not identically zero; 0 when all
  // orders through kMax vanished.
  int k = 0;
  bool vanishedAll = false;
  // The nonzero alpha entries involve free perturbation symbols, so whether
  // M_k vanishes depends on coefficient choices not yet made.
  bool undetermined = false;
  std::map<BasisIndex, RatFunc> alphaK;
  // (r_m, R_m) for each vanished order m < k, 1-based via index m-1.
  std::vector<RatFunc> rChain, RChain;
  std::vector<int> vanishedOrders;
};

// Runs the iterated decomposition: for each order m computes
// wTilde_m = w_m + sum_{i+j=m} r_i w_j, reduces it, and either records
// (r_m, R_m) when alpha vanishes identically or stops with M_m's alpha-map.
// `subs` is applied to the perturbation coefficients first (name -> value).
MelnikovResult melnikov_chain(const PerturbationSpec& spec,
                              const Hamiltonian& H, int kMax,
                              const std::map<std::string, RatFunc>& subs = {});

// Chain certificate: wTilde_m - r_m dH - dR_m == 0 for every recorded order.
bool verify_melnikov_chain(const MelnikovResult& res,
                           const PerturbationSpec& spec, const Hamiltonian& H,
                           const std::map<std::string, RatFunc>& subs = {});

namespace detail {
// Substituted omega_m = Q_m dx - P_m dy as coefficient maps.
std::pair<FormTerms, FormTerms> omega_terms(
    const PerturbationSpec& spec, const Hamiltonian& H, int m,
    const std::map<std::string, RatFunc>& subs);
// Product r * (A dx + B dy) for an x,y-polynomial r with parameter
// rational-function coefficients.
std::pair<FormTerms, FormTerms> scale_form(const Hamiltonian& H,
                                           const RatFunc& r,
                                           const FormTerms& dxT,
                                           const FormTerms& dyT);
}  // namespace detail

}  // namespace melnik
