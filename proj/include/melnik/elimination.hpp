#pragma once

#include <vector>

#include "melnik/interval.hpp"
#include "melnik/poly.hpp"
#include "melnik/polygcd.hpp"
#include "melnik/ratfunc.hpp"
#include "melnik/realroots.hpp"

namespace melnik {

struct GroebnerBasis {
  std::vector<MPoly> gens;
  MonomialOrder order;
  bool reduced = true;
};

// Reduced Groebner basis via Buchberger with the coprime-lead criterion and
// smallest-lcm pair selection; generators come out monic, sorted by leading
// monomial.
GroebnerBasis groebner(std::vector<MPoly> gens, const MonomialOrder& ord);

// Canonical remainder modulo the basis; zero iff p lies in the ideal.
MPoly normal_form(const MPoly& p, const GroebnerBasis& gb);

// Resultant with respect to one variable (subresultant PRS).
MPoly resultant(const MPoly& p, const MPoly& q, int var);

// det of the Jacobian of (F, G) with respect to (v1, v2).
MPoly jacobian_det(const MPoly& F, const MPoly& G, int v1, int v2);

// Certified box around one solution of F = G = 0.
struct RootBox {
  int var1, var2;
  Interval b1, b2;
  std::map<int, Interval> as_box() const { return {{var1, b1}, {var2, b2}}; }
};

struct SearchBox {
  Interval b1, b2;
};

// Certified isolation of all real solutions of the bivariate system
// F = G = 0 inside `box`: disjoint boxes, one solution each, refined to
// width <= widthGoal and certified by an interval-Newton contraction.
std::vector<RootBox> isolate_real_roots(const MPoly& F, const MPoly& G,
                                        int var1, int var2,
                                        const SearchBox& box,
                                        const Rational& widthGoal);

// Interval enclosure on a root box of det d(F1,F2)/d(v1,v2) for
// rational-function entries (used for the determinant tests at numeric
// solutions).
Interval jacobian_enclosure(const RatFunc& F1, const RatFunc& F2, int v1,
                            int v2, const RootBox& box);

}  // namespace melnik
