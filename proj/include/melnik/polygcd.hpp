#pragma once

#include <utility>

#include "melnik/poly.hpp"

namespace melnik {

// gcd of the coefficients of p viewed as univariate in `var`.
MPoly content_in(const MPoly& p, int var);
MPoly primitive_in(const MPoly& p, int var);

// Leading coefficient of p in `var` (an MPoly in the remaining variables).
MPoly leading_coeff_in(const MPoly& p, int var);

// Pseudo-division: lc(q,var)^(deg p - deg q + 1) * p = quo*q + rem,
// deg_var(rem) < deg_var(q). Requires deg_var(p) >= deg_var(q).
std::pair<MPoly, MPoly> pseudo_divrem(const MPoly& p, const MPoly& q, int var);

// Polynomial gcd over Q via recursive subresultant PRS. Result is primitive
// with positive leading (grevlex) coefficient; gcd of units is 1.
MPoly poly_gcd(const MPoly& a, const MPoly& b);
MPoly poly_lcm(const MPoly& a, const MPoly& b);

// Resultant of a and b with respect to `var` via the subresultant PRS.
// Throws if both inputs are constant in `var`.
MPoly resultant_poly(const MPoly& a, const MPoly& b, int var);

// Univariate square-free part p / gcd(p, p') in `var`.
MPoly squarefree_part(const MPoly& p, int var);

}  // namespace melnik
