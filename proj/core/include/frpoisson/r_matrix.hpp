// Quasitriangular r-matrices: CYB checking, the cobracket δ_r, Mix^n, the
// power r-matrices r^(ε,n) with their antisymmetric parts, diagonal
// embeddings, and the exact verification suite for those identities.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frpoisson/tensor.hpp"

namespace frp {

struct RMatrix {
  AlgebraPtr alg;
  Tensor<Rat> full;         // r = s + ι(Λ)
  Tensor<Rat> sym;          // s, symmetric and ad-invariant
  AltTensor<Rat> antisym;   // Λ

  // From the symmetric and antisymmetric parts. Verifies that s is symmetric
  // and ad-invariant. Quasitriangularity is a property (see cyb_check), not a
  // construction requirement, so corrupted controls can be represented.
  static RMatrix from_parts(const Tensor<Rat>& s, const AltTensor<Rat>& lambda);
  // Splits a full 2-tensor into its parts; same validation.
  static RMatrix from_full(const Tensor<Rat>& r);

  // s - Λ: quasitriangular exactly when *this is.
  RMatrix bar() const { return from_parts(sym, -antisym); }

  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.full == b.full && a.sym == b.sym && a.antisym == b.antisym;
  }
};

// Named built-ins: "sl2_standard" (e⊗f + h⊗h/4 on sl2), "sl2_standard_bar",
// "gl2_standard" (sl2_standard under sl2 ⊂ gl2, plus I⊗I/2).
RMatrix builtin_rmatrix(const std::string& name);

struct CybResult {
  bool ok;
  AltTensor<Rat> defect;  // [Λ,Λ] + φ_s ∈ ∧³g
};

// Classical Yang-Baxter equation, exact. Requires sym ad-invariant (enforced
// at construction).
CybResult cyb_check(const RMatrix& r);

struct Cobracket {
  AlgebraPtr alg;
  std::vector<AltTensor<Rat>> images;  // δ(e_i) per basis vector

  AltTensor<Rat> operator()(const AltTensor<Rat>& x) const;  // extend linearly, deg 1 -> 2
  bool cocycle_holds() const;
  friend bool operator==(const Cobracket& a, const Cobracket& b) { return a.images == b.images; }
};

// δ_r(x) = Σ_i [x,x_i]⊗y_i + x_i⊗[x,y_i]. Throws when the result is not
// antisymmetric (which signals a non-ad-invariant symmetric part).
Cobracket delta_r(const RMatrix& r);

using SignFunction = std::vector<int>;  // entries ±1

// Mix^n(t) = Σ_{j<k} Σ_i (y_i)_j ∧ (x_i)_k over g^n, for t = Σ_i x_i⊗y_i.
AltTensor<Rat> mix_n(const Tensor<Rat>& t, const DirectSum& power);
AltTensor<Rat> mix_n(const RMatrix& r, int n);

// r^(ε,n) = (ε(1)s,…,ε(n)s) + (Λ,…,Λ) − Mix^n(r) on g^n.
RMatrix r_power(const RMatrix& r, const SignFunction& eps, const DirectSum& power);
RMatrix r_power(const RMatrix& r, const SignFunction& eps, int n);

// Antisymmetric part of r^(ε,n): (Λ,…,Λ) − Mix^n(r), independent of ε.
AltTensor<Rat> lambda_r_n(const RMatrix& r, int n);

// diag_n(x) = (x,…,x), extended slot-wise to (alternating) tensors.
Tensor<Rat> diag_n(const Tensor<Rat>& t, int n);
AltTensor<Rat> diag_n(const AltTensor<Rat>& t, int n);

// Exact verification of the section-2 identities, n = 1..n_max over all 2^n
// sign functions:
//  (a) r^(ε,n) passes cyb_check;
//  (b) δ_{r^(ε,n)} does not depend on ε;
//  (c) Λ_r^(n) − diag_n(Λ) = −Mix^n(s);
//  (d) (Λ_r^(m), Λ_r^(n)) − (diag_m,diag_n)(Mix²(r)) = Λ_r^(m+n), m+n ≤ n_max;
//  (e) δ^(n)(diag_n(x)) = (diag_n ⊗ diag_n)(δ_r(x)) for every basis x.
struct Section2Failure {
  int n;
  SignFunction eps;
  std::string clause;
  std::string detail;
};
struct Section2Report {
  bool ok = true;
  int n_max = 0;
  int checks_run = 0;
  std::vector<Section2Failure> failures;
};
Section2Report verify_section2(const RMatrix& r, int n_max);

}  // namespace frp
