#pragma once

#include <map>
#include <string>
#include <vector>

#include "melnik/francoise.hpp"
#include "melnik/hamiltonform.hpp"

namespace melnik {

// Perturbed quadratic Hamiltonian system
//   x' = y + a1 x y + a2 y^2 + sum_m eps^m P_m
//   y' = -x + x^2 - (1/2) a1 y^2 + sum_m eps^m Q_m
// with eps carried as a nilpotent grading truncated at order K.
struct SystemSpec {
  Ctx ctx;
  RatFunc a1, a2;  // polynomial values (symbols or rationals)
  PerturbationSpec pert;
  std::map<std::string, RatFunc> subs;  // applied to perturbation coefficients
  int K = 1;
};

SystemSpec standard_system(const Ctx& ctx, PerturbationSpec pert, int K,
                           std::map<std::string, RatFunc> subs = {});

// Exact focus values v_ij (j-th eps^i-order focus value). Entries at j = 0
// are the trace values; j >= 1 entries carry the global normalization
// anchored to the printed first-order value.
struct FocusTable {
  int K = 0, J = 0;
  std::map<std::pair<int, int>, RatFunc> v;
  const RatFunc& at(int i, int j) const;
  bool has(int i, int j) const { return v.count({i, j}) != 0; }
};

// Scaled engine output: what[(i,j)] = D^i * (unanchored) v_ij as a
// polynomial, D the common denominator of the substituted coefficients.
struct EngineOutput {
  MPoly D;
  int K = 0, J = 0;
  std::map<std::pair<int, int>, MPoly> what;
  Ctx ctx;

  RatFunc value(int i, int j) const;  // anchored v_ij
  FocusTable table() const;
};

// Formal Lyapunov-function construction: V = (x^2+y^2)/2 + sum V_d with
// dV/dt = sum_j w_j (x^2+y^2)^(j+1); v_ij is the eps^i slice of w_j.
// Computes all orders <= spec.K for j <= jMax.
EngineOutput run_focus_engine(const SystemSpec& spec, int jMax);

// Slice of order `order`; checks that every focus value of lower order
// vanishes identically under the supplied substitutions and reports the
// first offending index otherwise.
FocusTable focus_values(const SystemSpec& spec, int order, int jMax);

// Global normalization constant fixing v_11 to the printed expression.
const Rational& focus_anchor();

// Sequential linear solves: each equation must be affine in its unknown
// after the previous solutions are substituted.
struct LinearChainResult {
  std::map<std::string, RatFunc> solution;
  std::vector<std::string> order;
};
LinearChainResult solve_linear_chain(
    const Ctx& ctx, std::vector<std::pair<RatFunc, std::string>> equations);

// Substitutes a solution set into a value.
RatFunc apply_subs(const RatFunc& f, const Ctx& ctx,
                   const std::map<std::string, RatFunc>& subs);

// Double-precision first-return displacement of the system near the origin;
// section y = 0, x > 0, clockwise flow. Used for sign-level sanity checks.
// `values` assigns numbers to every parameter symbol.
double poincare_displacement(const SystemSpec& spec,
                             const std::map<std::string, double>& values,
                             double eps, double radius);

}  // namespace melnik
