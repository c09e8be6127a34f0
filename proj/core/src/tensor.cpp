#include "frpoisson/tensor.hpp"

namespace frp {

AltTensor<Rat> schouten(const AltTensor<Rat>& a, const AltTensor<Rat>& b) {
  detail::require_same_algebra(a.alg, b.alg);
  const LieAlgebra& g = *a.alg;
  if (a.deg == 0 || b.deg == 0) return AltTensor<Rat>(a.alg, std::max(a.deg + b.deg - 1, 0));
  AltTensor<Rat> out(a.alg, a.deg + b.deg - 1);
  for (const auto& [ma, va] : a.coeff)
    for (const auto& [mb, vb] : b.coeff) {
      Rat w(va * vb);
      for (int p = 0; p < ma.size(); ++p) {
        MultiIndex rest_a = erase_at(ma, p);
        for (int q = 0; q < mb.size(); ++q) {
          const SparseVec& br = g.bracket(ma[p], mb[q]);
          if (br.empty()) continue;
          // (−1)^{p+q} with 1-based positions = (−1)^{p+q} with 0-based ones
          bool neg = (p + q) % 2 != 0;
          MultiIndex rest = concat(rest_a, erase_at(mb, q));
          for (const auto& [k, c] : br) {
            MultiIndex full;
            full.push_back(k);
            for (int t = 0; t < rest.size(); ++t) full.push_back(rest[t]);
            out.add(full, neg ? Rat(-w * c) : Rat(w * c));
          }
        }
      }
    }
  return out;
}

AltTensor<Rat> bracket(const AltTensor<Rat>& x, const AltTensor<Rat>& y) {
  if (x.deg != 1 || y.deg != 1) throw std::invalid_argument("bracket expects degree-1 operands");
  return schouten(x, y);
}

Tensor<Rat> ad_basis(const Tensor<Rat>& t, int i) {
  const LieAlgebra& g = *t.alg;
  Tensor<Rat> out(t.alg, t.deg);
  for (const auto& [m, v] : t.coeff)
    for (int slot = 0; slot < m.size(); ++slot)
      for (const auto& [k, c] : g.bracket(i, m[slot])) {
        MultiIndex q = m;
        q.ix[slot] = static_cast<std::uint8_t>(k);
        out.add(q, Rat(v * c));
      }
  return out;
}

bool ad_invariant(const Tensor<Rat>& t) {
  for (int i = 0; i < t.alg->dim(); ++i)
    if (!ad_basis(t, i).zero()) return false;
  return true;
}

bool ad_invariant(const AltTensor<Rat>& t) {
  for (int i = 0; i < t.alg->dim(); ++i)
    if (!schouten(basis_vector(t.alg, i), t).zero()) return false;
  return true;
}

AltTensor<Rat> phi_s(const Tensor<Rat>& s) {
  if (s.deg != 2) throw std::invalid_argument("phi_s expects a degree-2 tensor");
  if (!is_symmetric2(s)) throw std::invalid_argument("phi_s: s is not symmetric");
  if (!ad_invariant(s)) throw std::invalid_argument("phi_s: s is not ad-invariant");
  const LieAlgebra& g = *s.alg;
  int n = g.dim();
  // s#(ξ_b) = Σ_j s^{bj} e_j. The coefficient on e_a∧e_b∧e_c (a<b<c) equals
  // φ_s(ξ_a,ξ_b,ξ_c) = 2⟨ξ_a, [s#ξ_b, s#ξ_c]⟩; ad-invariance of s makes the
  // form alternating, so the increasing triples determine everything.
  std::vector<SparseVec> sharp(n);
  for (const auto& [m, v] : s.coeff) sharp[m[0]].emplace_back(m[1], v);
  AltTensor<Rat> out(s.alg, 3);
  for (int b = 0; b < n; ++b)
    for (int c = b + 1; c < n; ++c)
      for (const auto& [a, v] : bracket_vec(g, sharp[b], sharp[c]))
        if (a < b) out.add(MultiIndex{a, b, c}, Rat(2 * v));
  return out;
}

}  // namespace frp
