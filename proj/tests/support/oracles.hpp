// Independent oracles used to pin expected values before trusting the library
// paths. These deliberately avoid the wedge/Schouten machinery: everything is
// computed in the plain tensor representation.
#pragma once

#include <frpoisson/r_matrix.hpp>

namespace frp::oracle {

// [t12, t13] + [t12, t23] + [t13, t23] in g⊗g⊗g, the tensor form of the
// classical Yang-Baxter expression. For r with ad-invariant symmetric part
// this vanishes exactly when [Λ,Λ] + φ_s does, so it cross-checks every
// wedge-normalization convention in one shot.
inline Tensor<Rat> cybe_tensor(const Tensor<Rat>& r) {
  const LieAlgebra& g = *r.alg;
  Tensor<Rat> out(r.alg, 3);
  for (const auto& [m1, c1] : r.coeff)
    for (const auto& [m2, c2] : r.coeff) {
      Rat w(c1 * c2);
      int a1 = m1[0], b1 = m1[1], a2 = m2[0], b2 = m2[1];
      // [r12, r13] = Σ [a1,a2] ⊗ b1 ⊗ b2
      for (const auto& [k, c] : g.bracket(a1, a2)) out.add(MultiIndex{k, b1, b2}, Rat(w * c));
      // [r12, r23] = Σ a1 ⊗ [b1,a2] ⊗ b2
      for (const auto& [k, c] : g.bracket(b1, a2)) out.add(MultiIndex{a1, k, b2}, Rat(w * c));
      // [r13, r23] = Σ a1 ⊗ a2 ⊗ [b1,b2]
      for (const auto& [k, c] : g.bracket(b1, b2)) out.add(MultiIndex{a1, a2, k}, Rat(w * c));
    }
  return out;
}

// φ_s evaluated as a trilinear form on dual basis triples, straight from the
// defining formula; returns the full table including non-increasing triples so
// tests can confirm alternation independently of storage conventions.
inline Rat phi_form_entry(const Tensor<Rat>& s, int a, int b, int c) {
  const LieAlgebra& g = *s.alg;
  SparseVec sb, sc;
  for (const auto& [m, v] : s.coeff) {
    if (m[0] == b) sb.emplace_back(m[1], v);
    if (m[0] == c) sc.emplace_back(m[1], v);
  }
  Rat out(0);
  for (const auto& [k, v] : bracket_vec(g, sb, sc))
    if (k == a) out += 2 * v;
  return out;
}

// δ_r(x) computed in the tensor representation: Σ_i [x,x_i]⊗y_i + x_i⊗[x,y_i]
// for a basis vector x, left as a raw 2-tensor.
inline Tensor<Rat> delta_r_tensor(const Tensor<Rat>& r, int x) {
  const LieAlgebra& g = *r.alg;
  Tensor<Rat> out(r.alg, 2);
  for (const auto& [m, v] : r.coeff) {
    for (const auto& [k, c] : g.bracket(x, m[0])) out.add(MultiIndex{k, m[1]}, Rat(v * c));
    for (const auto& [k, c] : g.bracket(x, m[1])) out.add(MultiIndex{m[0], k}, Rat(v * c));
  }
  return out;
}

// The standard sl2 test data in the (h, e, f) basis.
struct Sl2Standard {
  AlgebraPtr g = sl2_algebra();
  Tensor<Rat> r_full{g, 2};
  Tensor<Rat> s{g, 2};
  AltTensor<Rat> lambda{g, 2};

  Sl2Standard() {
    r_full.add(MultiIndex{1, 2}, rat(1));     // e⊗f
    r_full.add(MultiIndex{0, 0}, rat(1, 4));  // h⊗h/4
    s.add(MultiIndex{1, 2}, rat(1, 2));
    s.add(MultiIndex{2, 1}, rat(1, 2));
    s.add(MultiIndex{0, 0}, rat(1, 4));
    lambda.add(MultiIndex{1, 2}, rat(1, 2));  // ½ e∧f
  }
};

}  // namespace frp::oracle
