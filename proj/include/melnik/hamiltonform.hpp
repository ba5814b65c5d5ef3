#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "melnik/poly.hpp"
#include "melnik/ratfunc.hpp"

namespace melnik {

// The cubic Hamiltonian (1/2)(x^2+y^2) - (1/3)x^3 + (1/2)a1 x y^2
// + (1/3)a2 y^3 over a context containing x, y, a1, a2.
struct Hamiltonian {
  Ctx ctx;
  int x = -1, y = -1, a1 = -1, a2 = -1;
  MPoly h, hx, hy;

  static Hamiltonian standard(const Ctx& ctx);
};

// A dx + B dy with polynomial entries.
struct OneForm {
  MPoly A, B;
  int degree() const {
    return std::max(A.total_degree(), B.total_degree());
  }
};

// Index of a basis one-form x^i y^j dx: i in {0,1}, j >= 1, j mod 3 != 0.
struct BasisIndex {
  int i = 0, j = 0;
  bool valid() const { return (i == 0 || i == 1) && j >= 1 && j % 3 != 0; }
  friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
  friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
    return a.i == b.i && a.j == b.j;
  }
};

// Certified decomposition w = r dH + dR + sum alpha_ij x^i y^j dx.
struct ReductionResult {
  RatFunc r, R;
  std::map<BasisIndex, RatFunc> alpha;
};

// sum beta_ij w_ij = rTilde dH + d(RTilde), coefficients in Q[a1,a2].
struct DegreeRelation {
  int m = 0;
  std::map<std::pair<int, int>, MPoly> beta;
  MPoly rTilde, RTilde;
};

// Coefficient map of a one-form's dx (or dy) part over x^i y^j monomials.
using FormTerms = std::map<std::pair<int, int>, RatFunc>;

FormTerms xy_split(const Hamiltonian& H, const MPoly& p);
FormTerms xy_split(const Hamiltonian& H, const RatFunc& f);
RatFunc xy_assemble(const Hamiltonian& H, const FormTerms& terms);

// Rewrite records mirroring the three families of identities used by the
// reducer; each re-expands exactly to the rewritten form.
struct SigmaRewrite {
  int i, j;
  MPoly exact;           // sigma_ij = d(exact) + residual * x^(i-1) y^(j+1) dx
  Rational residual;     // -i/(j+1); zero when i = 0
};

struct OmegaXRewrite {
  int i, j;
  FormTerms omegaTerms;  // residual omega terms
  MPoly rTerm;           // -x^(i-2) y^j (the r dH part)
  MPoly exact;
};

struct OmegaYRewrite {
  int i, j;
  RatFunc prefactor;        // 3j/(a2(j+1)) for i=0, 3j/(a2(j+2)) for i=1
  std::pair<int, int> hTerm;  // H * omega_{i,j-3} inside the bracket
  FormTerms bracketOmega;     // remaining omega terms inside the bracket
  MPoly rSmall, RSmall;       // bracket's r_{i,j}, R_{i,j}
};

class OneFormReducer {
 public:
  explicit OneFormReducer(Hamiltonian H);

  const Hamiltonian& hamiltonian() const { return H_; }

  ReductionResult reduce(const OneForm& w) const;
  ReductionResult reduce_terms(FormTerms dxTerms, FormTerms dyTerms) const;

  // Lemma-2 relation for admissible m (m mod 3 != 2), cached.
  const DegreeRelation& relation(int m) const;

  SigmaRewrite sigma_rewrite(int i, int j) const;
  OmegaXRewrite omega_x_rewrite(int i, int j) const;
  OmegaYRewrite omega_y_rewrite(int i, int j) const;

  bool verify(const ReductionResult& res, const OneForm& w) const;
  bool verify_terms(const ReductionResult& res, const FormTerms& dxTerms,
                    const FormTerms& dyTerms) const;
  bool verify_relation(const DegreeRelation& rel) const;
  bool verify_omega_y(const OmegaYRewrite& rw) const;

 private:
  struct Lemma1Out {
    FormTerms alphaAll;  // surviving x^i y^j dx with i <= 1 (any j >= 1)
    FormTerms r, R;
  };
  // Eliminates the dy part and all x-degrees >= 2 using only Lemma 1 (a),(b)
  // plus the exact forms d(x), d(x^2/2).
  Lemma1Out lemma1_reduce(FormTerms dxTerms, FormTerms dyTerms) const;

  RatFunc coef(long num, long den) const;
  RatFunc a1c() const { return RatFunc(MPoly::variable(H_.ctx, H_.a1)); }
  RatFunc a2c() const { return RatFunc(MPoly::variable(H_.ctx, H_.a2)); }

  Hamiltonian H_;
  mutable std::mutex relMutex_;
  mutable std::map<int, DegreeRelation> relations_;
};

Hamiltonian standard_hamiltonian(const Ctx& ctx);

ReductionResult reduce_oneform(const OneForm& w, const Hamiltonian& H);
DegreeRelation degree_relation(const Hamiltonian& H, int m);
bool verify_reduction(const ReductionResult& res, const OneForm& w,
                      const Hamiltonian& H);

}  // namespace melnik
