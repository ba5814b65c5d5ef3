#include "melnik/zoladek.hpp"

#include <cmath>
#include <stdexcept>

namespace melnik {

namespace {

Ctx zctx() {
  static Ctx ctx = VarContext::make({"x", "y", "a"});
  return ctx;
}

OneForm form(const Ctx& ctx, const std::string& A, const std::string& B) {
  return OneForm{MPoly::parse(ctx, A), MPoly::parse(ctx, B)};
}

}  // namespace

ZoladekSystem ZoladekSystem::make() {
  ZoladekSystem s;
  s.ctx = zctx();
  s.f1 = MPoly::parse(s.ctx, "x^4 + 4*x^2 + 4*y");
  s.f2 = MPoly::parse(s.ctx, "x^5 + 5*x^3 + 5*x*y + 5/2*x + a");
  s.xdot = MPoly::parse(s.ctx, "x^3 + x*y + 5/2*x + a");
  s.ydot = MPoly::parse(s.ctx,
                        "-a*x^3 + 6*x^2*y - 3*x^2 + 4*y^2 + 2*y - 2*a*x");
  return s;
}

FormLibrary FormLibrary::make() {
  FormLibrary lib;
  lib.ctx = zctx();
  const Ctx& c = lib.ctx;
  lib.omega.resize(13);
  lib.omega[1] = form(c, "1", "0");
  lib.omega[2] = form(c, "x", "0");
  lib.omega[3] = form(c, "x^2", "0");
  lib.omega[4] = form(c, "x^3", "0");
  lib.omega[5] = form(c, "18*x^2 + 18*y + 5", "0");
  lib.omega[6] = form(c, "x*y", "0");
  lib.omega[7] = form(c, "x^2*y", "0");
  lib.omega[8] = form(c, "x*y^2", "0");
  lib.omega[9] = form(c, "y^3", "0");
  lib.omega[10] = form(c, "0", "x*y^2");
  lib.omega[11] = form(c, "0", "y^3");
  lib.omega[12] = form(c, "y^2*(5 - 3*x^2)", "x*y*(x^2 + 1)");

  lib.eta.resize(11);
  lib.eta[1] = form(c, "x^3 + 2*x", "1");
  lib.eta[2] = form(c, "-3*a*x^2 + 12*x*y - 6*x - 2*a",
                    "-(3*x^2 + y + 5/2)");
  lib.eta[3] = form(c, "6*x^2 + 8*y + 2", "-x");
  lib.eta[4] = form(c, "-3*a*x^3 + 12*x^2*y - 6*x^2 - 2*a*x", "-(2*x^3 - a)");
  lib.eta[5] = form(c, "a*x^3 + 3*x^2 + 4*y^2 + 2*a*x", "-x*y");
  lib.eta[6] = form(c, "-a*x^3 + 6*x^2*y - 3*x^2 + 4*y^2 + 2*y - 2*a*x",
                    "-(x^3 + x*y + 5/2*x + a)");
  lib.eta[7] = form(c, "3*a*x^2*y - 12*x*y^2 + 6*x*y + 2*a*y",
                    "-(3*x^2*y - a*x^3 - 3*x^2 + 3*y^2 - 1/2*y - 2*a*x)");
  lib.eta[8] = form(c, "-5*x^3 - 7*x*y + 1/2*x + a", "x^2");
  lib.eta[9] = form(c, "21/2*x*y - 7*x*y^2 + a*y",
                    "2*x^2*y - 3/2*x^2 + a*x + y");
  lib.eta[10] = form(c,
                     "-29/3*a*x^3 - 8/3*y^3 - (2*a^2 - 5/2)*x^2 - 9*a*x*y + "
                     "6*y^2 + 13/6*a*x + a^2",
                     "x*y^2");

  lib.xi1 = form(c,
                 "x^2*y^2 - 1/36*a*(a^2 + 144)*x^3 + (a^2 + 3)*x^2*y"
                 " + 11/6*a*x*y^2 - 4/9*y^3"
                 " + 1/24*(3*a^4 - 28*a^2 + 46)*x^2"
                 " + 1/6*a*(6*a^2 - 7)*x*y + 1/6*(3*a^2 + 4)*y^2"
                 " + 1/72*a*(9*a^4 + 36*a^2 + 77)*x"
                 " + 1/12*(3*a^4 - 10*a^2 + 12)*y"
                 " + 1/288*(9*a^6 + 36*a^4 + 100*a^2 + 80)",
                 "0");
  lib.xi2 = form(c,
                 "1/48*a*(a^2 - 60)*x^3 - 3/2*(a^2 + 4)*x^2*y"
                 " - 19/4*a*x*y^2 + 4/3*y^3"
                 " - 1/16*(3*a^4 + 70*a^2 - 16)*x^2"
                 " - 1/2*a*(3*a^2 - 4)*x*y - (3*a^2 + 2)*y^2"
                 " + 1/48*a*(3*a^4 - 36*a^2 + 137)*x"
                 " - 1/16*(15*a^4 + 2*a^2 + 48)*y"
                 " + 1/32*a^4 + 1/48*a^2 - 5/6",
                 "x^3*y + 1/4*(a^2 + 2)*x^3 + 3/2*a*x^2*y"
                 " + 3/8*a*(a^2 + 2)*x^2 + 3/4*a^2*x*y"
                 " + 3/16*a^2*(a^2 + 2)*x + 1/8*a^3*y"
                 " + 1/32*a^3*(a^2 + 2)");
  return lib;
}

EtaIdentityReport verify_eta_identity() {
  FormLibrary lib = FormLibrary::make();
  const Ctx& c = lib.ctx;
  MPoly a = MPoly::variable(c, "a");
  Rational half(1, 2);
  auto scale = [](const OneForm& w, const MPoly& s) {
    return OneForm{w.A * s, w.B * s};
  };
  auto add = [](const OneForm& u, const OneForm& v) {
    return OneForm{u.A + v.A, u.B + v.B};
  };
  auto sub = [](const OneForm& u, const OneForm& v) {
    return OneForm{u.A - v.A, u.B - v.B};
  };
  // (3a eta1 - 5 eta3 - eta4)/2 - eta5 + eta6
  OneForm lhs = scale(lib.eta[1], a * Rational(3));
  lhs = sub(lhs, scale(lib.eta[3], MPoly::constant(c, Rational(5))));
  lhs = sub(lhs, lib.eta[4]);
  lhs = OneForm{lhs.A * half, lhs.B * half};
  lhs = sub(lhs, lib.eta[5]);
  lhs = add(lhs, lib.eta[6]);
  OneForm rhs = sub(scale(lib.omega[4], a), lib.omega[5]);
  EtaIdentityReport rep;
  rep.difference = sub(lhs, rhs);
  rep.pass = rep.difference.A.is_zero() && rep.difference.B.is_zero();
  return rep;
}

bool darboux_consistency(const std::optional<Rational>& a) {
  ZoladekSystem s = ZoladekSystem::make();
  const Ctx& c = s.ctx;
  MPoly f1 = s.f1, f2 = s.f2, xd = s.xdot, yd = s.ydot;
  if (a) {
    std::map<int, Rational> at{{c->index("a"), *a}};
    f1 = f1.eval_partial(at);
    f2 = f2.eval_partial(at);
    xd = xd.eval_partial(at);
    yd = yd.eval_partial(at);
  }
  int ix = c->index("x"), iy = c->index("y");
  // H0 = f1^5/f2^4, M = 20 f1^4 f2^{-5}:
  //   M^{-1} H0_y = xdot  <=>  5 f1_y f2 - 4 f1 f2_y == 20 xdot
  //  -M^{-1} H0_x = ydot  <=>  5 f1_x f2 - 4 f1 f2_x == -20 ydot
  MPoly lhs1 = f1.diff(iy) * f2 * Rational(5) - f1 * f2.diff(iy) * Rational(4);
  MPoly lhs2 = f1.diff(ix) * f2 * Rational(5) - f1 * f2.diff(ix) * Rational(4);
  return lhs1 == xd * Rational(20) && lhs2 == yd * Rational(-20);
}

NumericForm numeric_form(const FormLibrary& lib, const OneForm& w,
                         const std::string& name, double a,
                         bool divideByF1F2) {
  std::map<int, double> fixed{{lib.ctx->index("a"), a}};
  NumericForm f;
  f.name = name;
  f.A = compile_xy(w.A, fixed);
  f.B = compile_xy(w.B, fixed);
  if (divideByF1F2) {
    ZoladekSystem s = ZoladekSystem::make();
    auto f1 = compile_xy(s.f1, fixed);
    auto f2 = compile_xy(s.f2, fixed);
    f.denom = [f1, f2](double x, double y) { return f1(x, y) * f2(x, y); };
  }
  return f;
}

IntegralReport zoladek_vanishing_suite(double a, const std::vector<double>& dhs,
                                       const ZoladekSuiteOptions& opts) {
  if (!(a < -std::pow(2.0, 1.25)))
    throw std::invalid_argument(
        "zoladek_vanishing_suite: requires a < -2^(5/4)");
  FormLibrary lib = FormLibrary::make();
  NumericField field = field_darboux(a);
  auto center = ZoladekSystem::center(a);
  double h0 = ZoladekSystem::h0(a);

  std::vector<NumericForm> forms;
  if (opts.runEtaChecks) {
    for (int j = 1; j <= 10; ++j)
      forms.push_back(
          numeric_form(lib, lib.eta[j], "eta" + std::to_string(j), a));
  }
  if (opts.runXiChecks) {
    forms.push_back(numeric_form(lib, lib.xi1, "xi1", a));
    forms.push_back(numeric_form(lib, lib.xi2, "xi2", a));
  }
  // a*w4 - w5
  OneForm combo{lib.omega[4].A * MPoly::variable(lib.ctx, "a") -
                    lib.omega[5].A,
                MPoly(lib.ctx)};
  forms.push_back(numeric_form(lib, combo, "a*w4-w5", a));
  // Control: w2 must stay order-one.
  forms.push_back(numeric_form(lib, lib.omega[2], "control:w2", a));

  std::vector<NumericForm> scaleForms;
  for (int k = 1; k <= 4; ++k)
    scaleForms.push_back(
        numeric_form(lib, lib.omega[k], "w" + std::to_string(k), a));

  std::vector<double> hs;
  for (double dh : dhs) hs.push_back(h0 + dh);
  return vanish_report(field, center, forms, scaleForms, hs, opts.trace);
}

CorrectedCountReport corrected_count(const CorrectedCountOptions& opts) {
  CorrectedCountReport rep;
  rep.identityPass = verify_eta_identity().pass;
  rep.darbouxPass = darboux_consistency();
  ZoladekSuiteOptions sopts;
  sopts.threshold = opts.threshold;
  sopts.runXiChecks = opts.runXiChecks;
  IntegralReport report = zoladek_vanishing_suite(opts.a, opts.dhs, sopts);
  rep.etaVanishing = true;
  rep.xiVanishing = opts.runXiChecks;
  rep.controlNonzero = true;
  for (const auto& row : report.rows) {
    bool isControl = row.form.rfind("control:", 0) == 0;
    if (isControl) {
      if (!(row.normalized > 1e-2)) rep.controlNonzero = false;
    } else if (row.form.rfind("eta", 0) == 0 || row.form == "a*w4-w5") {
      if (!(row.normalized < opts.threshold)) rep.etaVanishing = false;
    } else if (row.form.rfind("xi", 0) == 0) {
      if (!(row.normalized < opts.threshold)) rep.xiVanishing = false;
    }
  }
  rep.basisSize = rep.candidateIntegrals;
  if (!rep.identityPass || !rep.darbouxPass || !rep.etaVanishing ||
      !rep.controlNonzero) {
    throw std::runtime_error(
        "corrected_count: prerequisite checks failed; ledger not emitted");
  }
  // I_{w5} = a I_{w4}: linearly dependent via the eta identity.
  rep.removed.push_back("w5 (eta identity: a I4 - I5 = 0)");
  rep.basisSize -= 1;
  if (opts.runXiChecks && rep.xiVanishing) {
    // I_{w12} reduces through xi1, xi2 to integrals of degree <= 3.
    rep.removed.push_back("w12 (xi1, xi2 reductions)");
    rep.basisSize -= 1;
    rep.complete = true;
    rep.cycleCount = rep.basisSize - 1;
  } else {
    rep.complete = false;
    rep.cycleCount = rep.basisSize - 1;
    rep.note = "xi checks disabled or failed: w12 not removable; ledger incomplete";
  }
  return rep;
}

}  // namespace melnik
