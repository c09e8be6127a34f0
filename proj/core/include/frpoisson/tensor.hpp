// Sparse tensors and alternating tensors over a Lie algebra, the Schouten
// bracket, the Cartan trivector phi_s, and ad-invariance tests. Coefficients
// are exact rationals in the algebraic layer and doubles in the evaluated
// (pointwise) layer; the same containers serve both.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "frpoisson/lie_algebra.hpp"
#include "frpoisson/multi_index.hpp"
#include "frpoisson/rational.hpp"

namespace frp {

namespace detail {
inline void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->structurally_equal(*b))
    throw std::invalid_argument("operands live over different algebras");
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Tensor: element of g^{⊗k}, sparse over ordered multi-indices.

template <class T>
struct Tensor {
  AlgebraPtr alg;
  int deg = 0;
  std::map<MultiIndex, T> coeff;

  Tensor() = default;
  Tensor(AlgebraPtr a, int k) : alg(std::move(a)), deg(k) {}

  bool zero() const { return coeff.empty(); }

  void add(const MultiIndex& m, const T& v) {
    if (is_zero(v)) return;
    if (m.size() != deg) throw std::invalid_argument("tensor degree mismatch");
    auto [it, inserted] = coeff.emplace(m, v);
    if (!inserted) {
      it->second += v;
      if (is_zero(it->second)) coeff.erase(it);
    }
  }

  T at(const MultiIndex& m) const {
    auto it = coeff.find(m);
    return it == coeff.end() ? T(0) : it->second;
  }

  Tensor& operator+=(const Tensor& o) {
    detail::require_same_algebra(alg, o.alg);
    if (deg != o.deg) throw std::invalid_argument("tensor degree mismatch");
    for (const auto& [m, v] : o.coeff) add(m, v);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    detail::require_same_algebra(alg, o.alg);
    if (deg != o.deg) throw std::invalid_argument("tensor degree mismatch");
    for (const auto& [m, v] : o.coeff) add(m, T(-v));
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const T& s, Tensor a) {
    if (is_zero(s)) return Tensor(a.alg, a.deg);
    for (auto& [m, v] : a.coeff) v *= s;
    return a;
  }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.deg == b.deg && a.coeff == b.coeff;
  }
};

// ---------------------------------------------------------------------------
// AltTensor: element of ∧^k g over strictly increasing multi-indices. The
// embedding into g^{⊗k} sends e_{i1}∧…∧e_{ik} to Σ_σ sgn(σ) e_{iσ(1)}⊗…⊗e_{iσ(k)}
// (determinant convention, no 1/k!), so for bivectors x∧y = x⊗y − y⊗x.

template <class T>
struct AltTensor {
  AlgebraPtr alg;
  int deg = 0;
  std::map<MultiIndex, T> coeff;

  AltTensor() = default;
  AltTensor(AlgebraPtr a, int k) : alg(std::move(a)), deg(k) {}

  bool zero() const { return coeff.empty(); }

  // Adds v·e_m, sorting m and applying the permutation sign; drops repeats.
  void add(MultiIndex m, const T& v) {
    if (is_zero(v)) return;
    if (m.size() != deg) throw std::invalid_argument("wedge degree mismatch");
    int sign = sort_wedge(m);
    if (sign == 0) return;
    T val = sign > 0 ? v : T(-v);
    auto [it, inserted] = coeff.emplace(m, val);
    if (!inserted) {
      it->second += val;
      if (is_zero(it->second)) coeff.erase(it);
    }
  }

  T at(const MultiIndex& m) const {
    auto it = coeff.find(m);
    return it == coeff.end() ? T(0) : it->second;
  }

  AltTensor& operator+=(const AltTensor& o) {
    detail::require_same_algebra(alg, o.alg);
    if (deg != o.deg) throw std::invalid_argument("wedge degree mismatch");
    for (const auto& [m, v] : o.coeff) add(m, v);
    return *this;
  }
  AltTensor& operator-=(const AltTensor& o) {
    detail::require_same_algebra(alg, o.alg);
    if (deg != o.deg) throw std::invalid_argument("wedge degree mismatch");
    for (const auto& [m, v] : o.coeff) add(m, T(-v));
    return *this;
  }
  friend AltTensor operator+(AltTensor a, const AltTensor& b) { return a += b; }
  friend AltTensor operator-(AltTensor a, const AltTensor& b) { return a -= b; }
  friend AltTensor operator*(const T& s, AltTensor a) {
    if (is_zero(s)) return AltTensor(a.alg, a.deg);
    for (auto& [m, v] : a.coeff) v *= s;
    return a;
  }
  friend AltTensor operator-(AltTensor a) {
    for (auto& [m, v] : a.coeff) v = T(-v);
    return a;
  }
  friend bool operator==(const AltTensor& a, const AltTensor& b) {
    return a.deg == b.deg && a.coeff == b.coeff;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& [k, v] : coeff) m = std::max(m, std::abs(to_double(v)));
    return m;
  }
};

template <class T>
AltTensor<T> wedge(const AltTensor<T>& a, const AltTensor<T>& b) {
  detail::require_same_algebra(a.alg, b.alg);
  AltTensor<T> out(a.alg, a.deg + b.deg);
  for (const auto& [ma, va] : a.coeff)
    for (const auto& [mb, vb] : b.coeff) out.add(concat(ma, mb), T(va * vb));
  return out;
}

// Basis vector e_i as a degree-1 alternating tensor.
template <class T = Rat>
AltTensor<T> basis_vector(const AlgebraPtr& g, int i) {
  AltTensor<T> v(g, 1);
  v.add(MultiIndex{i}, T(1));
  return v;
}

// ι: ∧^k g -> g^{⊗k}, determinant convention.
template <class T>
Tensor<T> tensor_embed(const AltTensor<T>& a) {
  Tensor<T> out(a.alg, a.deg);
  for (const auto& [m, v] : a.coeff) {
    std::array<int, MultiIndex::kMaxDeg> p{};
    for (int k = 0; k < m.size(); ++k) p[k] = k;
    // enumerate permutations of the (strictly increasing) index set
    do {
      MultiIndex q;
      int inversions = 0;
      for (int k = 0; k < m.size(); ++k) {
        q.push_back(m[p[k]]);
        for (int l = 0; l < k; ++l) inversions += p[l] > p[k];
      }
      out.add(q, inversions % 2 == 0 ? v : T(-v));
    } while (std::next_permutation(p.begin(), p.begin() + m.size()));
  }
  return out;
}

// Antisymmetric part of a 2-tensor as a wedge: Λ_{ij} = (t_{ij} − t_{ji})/2,
// so that t = sym_part2(t) + tensor_embed(alt_part2(t)).
template <class T>
AltTensor<T> alt_part2(const Tensor<T>& t) {
  if (t.deg != 2) throw std::invalid_argument("alt_part2 expects degree 2");
  AltTensor<T> out(t.alg, 2);
  for (const auto& [m, v] : t.coeff) {
    if (m[0] == m[1]) continue;
    out.add(m, T(v / 2));
  }
  return out;
}

template <class T>
Tensor<T> sym_part2(const Tensor<T>& t) {
  if (t.deg != 2) throw std::invalid_argument("sym_part2 expects degree 2");
  Tensor<T> out(t.alg, 2);
  for (const auto& [m, v] : t.coeff) {
    out.add(m, T(v / 2));
    out.add(MultiIndex{m[1], m[0]}, T(v / 2));
  }
  return out;
}

template <class T>
bool is_symmetric2(const Tensor<T>& t) {
  if (t.deg != 2) return false;
  for (const auto& [m, v] : t.coeff)
    if (t.at(MultiIndex{m[1], m[0]}) != v) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Linear maps between algebras, applied slot-wise to tensors.

template <class T>
struct LinearMap {
  AlgebraPtr from, to;
  std::vector<std::vector<std::pair<int, T>>> cols;  // image of each source basis vector

  LinearMap() = default;
  LinearMap(AlgebraPtr f, AlgebraPtr t)
      : from(std::move(f)), to(std::move(t)), cols(from->dim()) {}

  void set(int src, int dst, const T& v) { cols.at(src).emplace_back(dst, v); }

  AltTensor<T> operator()(const AltTensor<T>& a) const {
    detail::require_same_algebra(from, a.alg);
    AltTensor<T> out(to, a.deg);
    apply(a.coeff, out);
    return out;
  }
  Tensor<T> operator()(const Tensor<T>& a) const {
    detail::require_same_algebra(from, a.alg);
    Tensor<T> out(to, a.deg);
    apply(a.coeff, out);
    return out;
  }

 private:
  template <class Out>
  void apply(const std::map<MultiIndex, T>& src, Out& out) const {
    for (const auto& [m, v] : src) expand(m, 0, MultiIndex{}, v, out);
  }
  template <class Out>
  void expand(const MultiIndex& m, int slot, MultiIndex acc, const T& v, Out& out) const {
    if (slot == m.size()) {
      out.add(acc, v);
      return;
    }
    for (const auto& [dst, c] : cols[m[slot]]) {
      MultiIndex next = acc;
      next.push_back(dst);
      expand(m, slot + 1, next, T(v * c), out);
    }
  }
};

template <class T>
LinearMap<T> compose(const LinearMap<T>& outer, const LinearMap<T>& inner) {
  detail::require_same_algebra(outer.from, inner.to);
  LinearMap<T> out(inner.from, outer.to);
  for (int i = 0; i < inner.from->dim(); ++i) {
    std::map<int, T> acc;
    for (const auto& [mid, c] : inner.cols[i])
      for (const auto& [dst, d] : outer.cols[mid]) {
        auto [it, fresh] = acc.emplace(dst, T(c * d));
        if (!fresh) it->second += T(c * d);
      }
    for (const auto& [dst, c] : acc)
      if (!is_zero(c)) out.set(i, dst, c);
  }
  return out;
}

// Embedding of component `c` of a direct sum, as a linear map.
template <class T = Rat>
LinearMap<T> embedding_map(const DirectSum& ds, int c) {
  LinearMap<T> m(ds.components.at(c), ds.algebra);
  for (int i = 0; i < ds.components[c]->dim(); ++i) m.set(i, ds.global(c, i), T(1));
  return m;
}

// x -> ((x)_1, ..., (x)_n): each basis vector goes to the sum of its copies.
template <class T = Rat>
LinearMap<T> diagonal_map(const DirectSum& ds) {
  for (const auto& part : ds.components)
    detail::require_same_algebra(part, ds.components[0]);
  LinearMap<T> m(ds.components[0], ds.algebra);
  for (int i = 0; i < ds.components[0]->dim(); ++i)
    for (size_t c = 0; c < ds.components.size(); ++c)
      m.set(i, ds.global(static_cast<int>(c), i), T(1));
  return m;
}

// Places a tensor on one component of a direct sum ((v)_γ in the paper).
template <class T>
Tensor<T> embed_tensor(const DirectSum& ds, int component, const Tensor<T>& t) {
  return embedding_map<T>(ds, component)(t);
}
template <class T>
AltTensor<T> embed_tensor(const DirectSum& ds, int component, const AltTensor<T>& t) {
  return embedding_map<T>(ds, component)(t);
}

// ---------------------------------------------------------------------------
// Schouten bracket and friends (exact coefficients only).

// [x1∧…∧xk, y1∧…∧yl] = Σ_{p,q} (−1)^{p+q} [xp, yq] ∧ x\{p} ∧ y\{q}.
// Degree-0 inputs give zero. Extends the Lie bracket as a graded biderivation
// with [a,b] = −(−1)^{(k−1)(l−1)}[b,a].
AltTensor<Rat> schouten(const AltTensor<Rat>& a, const AltTensor<Rat>& b);

// Lie bracket of degree-1 elements (thin wrapper over schouten).
AltTensor<Rat> bracket(const AltTensor<Rat>& x, const AltTensor<Rat>& y);

// Diagonal adjoint action of e_i across all slots.
Tensor<Rat> ad_basis(const Tensor<Rat>& t, int i);

bool ad_invariant(const Tensor<Rat>& t);
bool ad_invariant(const AltTensor<Rat>& t);

// Cartan trivector: φ_s(ξ,η,ζ) = 2⟨ξ, [s#η, s#ζ]⟩ with s# the coefficient
// matrix of s. Requires s symmetric and ad-invariant.
AltTensor<Rat> phi_s(const Tensor<Rat>& s);

}  // namespace frp
