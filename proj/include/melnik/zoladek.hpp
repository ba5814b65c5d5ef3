#pragma once

#include <optional>
#include <string>
#include <vector>

#include "melnik/hamiltonform.hpp"
#include "melnik/quadrature.hpp"

namespace melnik {

// The cubic system with rational Darboux integral H0 = f1^5/f2^4 and
// integrating factor M = 20 f1^4 f2^{-5}; context (x, y, a).
struct ZoladekSystem {
  Ctx ctx;
  MPoly f1, f2;
  MPoly xdot, ydot;
  static ZoladekSystem make();
  // Center C0 = (-a/2, -a^2/4 - 1/2) and h0 = H0(C0) = -2/a at numeric a.
  static std::array<double, 2> center(double a) {
    return {-a / 2, -a * a / 4 - 0.5};
  }
  static double h0(double a) { return -2.0 / a; }
};

// The catalogued one-forms: w1..w12, eta1..eta10, xi1, xi2, stored exactly
// with symbolic a.
struct FormLibrary {
  Ctx ctx;  // (x, y, a)
  std::vector<OneForm> omega;  // [0] unused; omega[k] = w_k
  std::vector<OneForm> eta;    // [0] unused; eta[j]
  OneForm xi1, xi2;
  static FormLibrary make();
};

struct EtaIdentityReport {
  bool pass = false;
  OneForm difference;  // LHS - RHS, identically zero on success
};

// (3a eta1 - 5 eta3 - eta4)/2 - eta5 + eta6 == a w4 - w5, exactly.
EtaIdentityReport verify_eta_identity();

// Cross-multiplied identities: 20 (f2 - x f1) == 5 f1_y f2 - 4 f1 f2_y and
// the matching x-derivative relation, i.e. M^{-1} H0_y = xdot and
// -M^{-1} H0_x = ydot. Checked over Q[a] (or at a rational a).
bool darboux_consistency(const std::optional<Rational>& a = std::nullopt);

struct ZoladekSuiteOptions {
  double threshold = 1e-6;
  bool runEtaChecks = true;
  bool runXiChecks = true;
  TraceOptions trace;
};

// Numeric vanishing report for {eta_1..eta_10, xi_1, xi_2, a w4 - w5}
// against the ovals H0 = h0 + dh, with the control integral w2 included.
IntegralReport zoladek_vanishing_suite(double a, const std::vector<double>& dhs,
                                       const ZoladekSuiteOptions& opts = {});

struct CorrectedCountReport {
  bool identityPass = false;
  bool darbouxPass = false;
  bool etaVanishing = false;
  bool xiVanishing = false;
  bool controlNonzero = false;
  bool complete = false;  // all gates passed
  int candidateIntegrals = 12;
  std::vector<std::string> removed;
  int basisSize = 0;   // candidate integrals left after removals
  int cycleCount = 0;  // basisSize - 1 when complete
  std::string note;
};

struct CorrectedCountOptions {
  double a = -3.0;
  std::vector<double> dhs = {0.005, 0.01, 0.02};
  double threshold = 1e-6;
  bool runXiChecks = true;  // disabling leaves w12 in place (ledger stops at 11)
};

// The dependency ledger: 12 candidate integrals, minus I_{w5} (eta-identity)
// and minus I_{w12} (xi reductions), leaving 10 and the count 9.
CorrectedCountReport corrected_count(const CorrectedCountOptions& opts = {});

// Numeric evaluators for a library form divided by f1 f2 at parameter a.
NumericForm numeric_form(const FormLibrary& lib, const OneForm& w,
                         const std::string& name, double a,
                         bool divideByF1F2 = true);

}  // namespace melnik
