#include "melnik/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace melnik {

NumericField field_quadratic_hamiltonian(double a1, double a2) {
  NumericField f;
  f.value = [a1, a2](double x, double y) {
    return 0.5 * (x * x + y * y) - x * x * x / 3.0 + 0.5 * a1 * x * y * y +
           a2 * y * y * y / 3.0;
  };
  f.gradient = [a1, a2](double x, double y) {
    return std::array<double, 2>{x - x * x + 0.5 * a1 * y * y,
                                 y + a1 * x * y + a2 * y * y};
  };
  return f;
}

NumericField field_darboux(double a) {
  auto f1 = [](double x, double y) { return x * x * x * x + 4 * x * x + 4 * y; };
  auto f2 = [a](double x, double y) {
    return x * x * x * x * x + 5 * x * x * x + 5 * x * y + 2.5 * x + a;
  };
  NumericField f;
  f.value = [f1, f2](double x, double y) {
    return std::pow(f1(x, y), 5) / std::pow(f2(x, y), 4);
  };
  f.gradient = [a, f1, f2](double x, double y) {
    double v1 = f1(x, y), v2 = f2(x, y);
    double f1x = 4 * x * x * x + 8 * x, f1y = 4;
    double f2x = 5 * x * x * x * x + 15 * x * x + 5 * y + 2.5, f2y = 5 * x;
    double p1 = std::pow(v1, 4), p2 = std::pow(v2, 5);
    return std::array<double, 2>{
        p1 * (5 * f1x * v2 - 4 * v1 * f2x) / p2,
        p1 * (5 * f1y * v2 - 4 * v1 * f2y) / p2};
  };
  return f;
}

namespace {

// Newton correction along the gradient direction onto H = h.
bool correct_to_level(const NumericField& field, double h, double tol,
                      std::array<double, 2>& p) {
  for (int it = 0; it < 60; ++it) {
    double v = field.value(p[0], p[1]) - h;
    if (std::fabs(v) <= tol) return true;
    auto g = field.gradient(p[0], p[1]);
    double g2 = g[0] * g[0] + g[1] * g[1];
    if (g2 == 0.0) return false;
    p[0] -= v * g[0] / g2;
    p[1] -= v * g[1] / g2;
  }
  return std::fabs(field.value(p[0], p[1]) - h) <= 10 * tol;
}

}  // namespace

LevelCurve trace_level_curve(const NumericField& field, double h,
                             std::array<double, 2> center,
                             const TraceOptions& opts) {
  double hc = field.value(center[0], center[1]);
  if (!((hc < h) || (hc > h)))
    throw std::invalid_argument("trace_level_curve: center lies on the level");

  // Walk along +x from the center until H crosses h, then bisect.
  double lo = 0.0, hi = 0.0;
  {
    double step = 1e-3;
    bool found = false;
    for (int it = 0; it < 20000; ++it) {
      hi += step;
      double v = field.value(center[0] + hi, center[1]);
      if (std::isnan(v)) break;
      if ((v - h) * (hc - h) < 0) {
        found = true;
        break;
      }
      lo = hi;
      if (it % 100 == 99) step *= 1.5;
    }
    if (!found)
      throw std::invalid_argument(
          "trace_level_curve: no level crossing along +x from the center");
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double v = field.value(center[0] + mid, center[1]);
    if ((v - h) * (hc - h) < 0)
      hi = mid;
    else
      lo = mid;
    if (hi - lo < 1e-15 * (1.0 + hi)) break;
  }
  std::array<double, 2> start{center[0] + 0.5 * (lo + hi), center[1]};
  if (!correct_to_level(field, h, opts.curveTol, start))
    throw std::runtime_error("trace_level_curve: seed correction failed");

  double size0 = std::fabs(start[0] - center[0]);
  double maxStep = opts.maxStep > 0 ? opts.maxStep : 0.001 * size0;

  LevelCurve curve;
  curve.h = h;
  curve.pts.push_back(start);
  std::array<double, 2> p = start;
  double angle = 0.0;
  auto angle_of = [&](const std::array<double, 2>& q) {
    return std::atan2(q[1] - center[1], q[0] - center[0]);
  };
  double prevTheta = angle_of(p);
  while (curve.pts.size() < opts.maxPoints) {
    auto g = field.gradient(p[0], p[1]);
    double norm = std::hypot(g[0], g[1]);
    if (norm == 0.0)
      throw std::runtime_error("trace_level_curve: hit a critical point");
    // Tangent along the Hamiltonian flow (H_y, -H_x).
    std::array<double, 2> t{g[1] / norm, -g[0] / norm};
    double step = maxStep;
    // Curvature control: halve the step until the corrected point stays
    // close to the predictor.
    std::array<double, 2> nxt{};
    for (int tries = 0; tries < 40; ++tries) {
      nxt = {p[0] + step * t[0], p[1] + step * t[1]};
      if (correct_to_level(field, h, opts.curveTol, nxt)) {
        double drift = std::hypot(nxt[0] - p[0] - step * t[0],
                                  nxt[1] - p[1] - step * t[1]);
        if (drift < 0.1 * step) break;
      }
      step *= 0.5;
    }
    double theta = angle_of(nxt);
    double dtheta = theta - prevTheta;
    while (dtheta > M_PI) dtheta -= 2 * M_PI;
    while (dtheta < -M_PI) dtheta += 2 * M_PI;
    if (std::fabs(angle + dtheta) >= 2 * M_PI) {
      // Bisect the final step so the polyline lands on the starting ray.
      double loF = 0.0, hiF = 1.0;
      for (int it = 0; it < 60; ++it) {
        double midF = 0.5 * (loF + hiF);
        std::array<double, 2> q{p[0] + midF * step * t[0],
                                p[1] + midF * step * t[1]};
        correct_to_level(field, h, opts.curveTol, q);
        double th = angle_of(q) - prevTheta;
        while (th > M_PI) th -= 2 * M_PI;
        while (th < -M_PI) th += 2 * M_PI;
        if (std::fabs(angle + th) >= 2 * M_PI)
          hiF = midF;
        else
          loF = midF;
      }
      std::array<double, 2> q{p[0] + hiF * step * t[0],
                              p[1] + hiF * step * t[1]};
      correct_to_level(field, h, opts.curveTol, q);
      angle += 2 * M_PI;  // by construction
      curve.pts.push_back(q);
      curve.closureResidual =
          std::hypot(q[0] - start[0], q[1] - start[1]);
      curve.pts.push_back(start);
      return curve;
    }
    angle += dtheta;
    prevTheta = theta;
    curve.pts.push_back(nxt);
    p = nxt;
  }
  throw std::runtime_error("trace_level_curve: failed to close the oval");
}

double abelian_integral(const NumericForm& form, const LevelCurve& curve,
                        double* errEstimate) {
  auto integrate = [&](size_t stride) {
    double acc = 0.0;
    const auto& pts = curve.pts;
    size_t i = 0;
    while (i + stride < pts.size()) {
      size_t j = std::min(i + stride, pts.size() - 1);
      double mx = 0.5 * (pts[i][0] + pts[j][0]);
      double my = 0.5 * (pts[i][1] + pts[j][1]);
      double dx = pts[j][0] - pts[i][0];
      double dy = pts[j][1] - pts[i][1];
      double a = form.A ? form.A(mx, my) : 0.0;
      double b = form.B ? form.B(mx, my) : 0.0;
      double v = a * dx + b * dy;
      if (form.denom) {
        double d = form.denom(mx, my);
        if (std::fabs(d) < 1e-14)
          throw std::runtime_error("abelian_integral: denominator vanishes on curve");
        v /= d;
      }
      acc += v;
      i = j;
    }
    return acc;
  };
  double fine = integrate(1);
  double coarse = integrate(2);
  if (errEstimate) *errEstimate = std::fabs(fine - coarse) / 3.0;
  return fine;
}

double polygon_area(const LevelCurve& curve) {
  double acc = 0.0;
  for (size_t i = 0; i + 1 < curve.pts.size(); ++i) {
    const auto& p = curve.pts[i];
    const auto& q = curve.pts[i + 1];
    acc += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * acc;
}

bool IntegralReport::all_below(double threshold) const {
  for (const auto& r : rows)
    if (!(r.normalized < threshold)) return false;
  return true;
}

IntegralReport vanish_report(const NumericField& field,
                             std::array<double, 2> center,
                             const std::vector<NumericForm>& forms,
                             const std::vector<NumericForm>& scaleForms,
                             const std::vector<double>& hs,
                             const TraceOptions& opts) {
  IntegralReport report;
  for (double h : hs) {
    LevelCurve curve = trace_level_curve(field, h, center, opts);
    double scale = 0.0;
    for (const auto& f : scaleForms)
      scale = std::max(scale, std::fabs(abelian_integral(f, curve)));
    if (scale == 0.0)
      throw std::runtime_error("vanish_report: degenerate normalization");
    for (const auto& f : forms) {
      double err = 0.0;
      double v = abelian_integral(f, curve, &err);
      report.rows.push_back({f.name, h, v, err, scale, std::fabs(v) / scale});
    }
  }
  return report;
}

std::function<double(double, double)> compile_xy(
    const MPoly& p, const std::map<int, double>& fixed) {
  struct Term {
    double c;
    int px, py;
  };
  int ix = p.ctx()->index("x"), iy = p.ctx()->index("y");
  auto terms = std::make_shared<std::vector<Term>>();
  for (const auto& [e, c] : p.terms()) {
    double v = c.to_double();
    for (int k = 0; k < p.ctx()->size(); ++k) {
      if (k == ix || k == iy || e[k] == 0) continue;
      auto it = fixed.find(k);
      if (it == fixed.end())
        throw std::invalid_argument("compile_xy: unbound variable " +
                                    p.ctx()->name(k));
      v *= std::pow(it->second, e[k]);
    }
    terms->push_back({v, e[ix], e[iy]});
  }
  return [terms](double x, double y) {
    double acc = 0.0;
    for (const auto& t : *terms) {
      double v = t.c;
      for (int k = 0; k < t.px; ++k) v *= x;
      for (int k = 0; k < t.py; ++k) v *= y;
      acc += v;
    }
    return acc;
  };
}

}  // namespace melnik
