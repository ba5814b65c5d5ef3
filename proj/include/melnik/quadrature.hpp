#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "melnik/poly.hpp"

namespace melnik {

// Numeric scalar field with gradient, for level-curve tracing.
struct NumericField {
  std::function<double(double, double)> value;
  std::function<std::array<double, 2>(double, double)> gradient;
};

// H of the perturbed-quadratic family at numeric parameters.
NumericField field_quadratic_hamiltonian(double a1, double a2);
// The rational Darboux integral H0 = f1^5 / f2^4 at numeric a.
NumericField field_darboux(double a);

struct TraceOptions {
  double curveTol = 1e-12;   // Newton correction tolerance on |H - h|
  double maxStep = 0.0;      // 0: auto from curve size
  size_t maxPoints = 1000000;
};

// Closed polyline on H = h, oriented along the Hamiltonian flow
// (H_y, -H_x) (clockwise around a minimum).
struct LevelCurve {
  std::vector<std::array<double, 2>> pts;  // closed: pts.front() ~ pts.back()
  double h = 0.0;
  double closureResidual = 0.0;
};

// Traces the oval of H = h around `center`; the seed is found by walking
// from the center along +x. Throws if the curve fails to close.
LevelCurve trace_level_curve(const NumericField& field, double h,
                             std::array<double, 2> center,
                             const TraceOptions& opts = {});

// One-form with numeric coefficient evaluators; when `denom` is set the
// integrand is (A dx + B dy)/denom.
struct NumericForm {
  std::string name;
  std::function<double(double, double)> A, B;
  std::function<double(double, double)> denom;  // optional
};

// Line integral over the polyline by midpoint quadrature; the error
// estimate compares against coarse (every-other-point) integration.
double abelian_integral(const NumericForm& form, const LevelCurve& curve,
                        double* errEstimate = nullptr);

struct IntegralRow {
  std::string form;
  double h;
  double value;
  double err;
  double scale;       // normalization: max |I_{w1..w4}| at the same h
  double normalized;  // |value| / scale
};

struct IntegralReport {
  std::vector<IntegralRow> rows;
  bool all_below(double threshold) const;
};

// Evaluates |I|/scale for each form on the ovals H = h, h in hs.
// `scaleForms` defines the normalization (max |integral| per h).
IntegralReport vanish_report(const NumericField& field,
                             std::array<double, 2> center,
                             const std::vector<NumericForm>& forms,
                             const std::vector<NumericForm>& scaleForms,
                             const std::vector<double>& hs,
                             const TraceOptions& opts = {});

// Polygon (shoelace) area of a traced curve, signed.
double polygon_area(const LevelCurve& curve);

// MPoly -> numeric evaluator over (x, y) with all other context variables
// fixed (by index) to the given values.
std::function<double(double, double)> compile_xy(
    const MPoly& p, const std::map<int, double>& fixed);

}  // namespace melnik
