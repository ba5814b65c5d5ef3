#pragma once

#include <vector>

#include "melnik/interval.hpp"
#include "melnik/poly.hpp"

namespace melnik {

// Dense univariate polynomial over Q, coefficients ascending.
struct UniPoly {
  std::vector<Rational> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  void trim();
};

// Conversion; p must involve no variable other than `var`.
UniPoly to_unipoly(const MPoly& p, int var);

UniPoly uni_gcd(UniPoly a, UniPoly b);
UniPoly uni_squarefree(const UniPoly& p);

struct RootIsolation1D {
  UniPoly squarefree;
  std::vector<Interval> roots;  // disjoint; exact roots appear as points
};

// Isolating intervals for the distinct real roots of p inside `range`
// (endpoints included). Throws if p is identically zero.
RootIsolation1D isolate_real_roots_1d(const UniPoly& p, const Interval& range);

// Bisection refinement to width <= w; `iv` must bracket one simple root of
// the (square-free) polynomial, or be an exact point.
Interval refine_root_1d(const UniPoly& squarefree, Interval iv,
                        const Rational& w);

}  // namespace melnik
