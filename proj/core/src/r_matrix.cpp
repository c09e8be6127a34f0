#include "frpoisson/r_matrix.hpp"

#include <stdexcept>

namespace frp {

RMatrix RMatrix::from_parts(const Tensor<Rat>& s, const AltTensor<Rat>& lambda) {
  detail::require_same_algebra(s.alg, lambda.alg);
  if (s.deg != 2 || lambda.deg != 2)
    throw std::invalid_argument("r-matrix parts must have degree 2");
  if (!is_symmetric2(s)) throw std::invalid_argument("symmetric part is not symmetric");
  if (!ad_invariant(s)) throw std::invalid_argument("symmetric part is not ad-invariant");
  RMatrix r;
  r.alg = s.alg;
  r.sym = s;
  r.antisym = lambda;
  r.full = s + tensor_embed(lambda);
  return r;
}

RMatrix RMatrix::from_full(const Tensor<Rat>& t) {
  if (t.deg != 2) throw std::invalid_argument("r-matrix must have degree 2");
  return from_parts(sym_part2(t), alt_part2(t));
}

RMatrix builtin_rmatrix(const std::string& name) {
  if (name == "sl2_standard" || name == "sl2_standard_bar") {
    AlgebraPtr g = sl2_algebra();  // basis (h, e, f)
    Tensor<Rat> r(g, 2);
    r.add(MultiIndex{1, 2}, rat(1));      // e⊗f
    r.add(MultiIndex{0, 0}, rat(1, 4));   // h⊗h/4
    RMatrix std_r = RMatrix::from_full(r);
    return name == "sl2_standard" ? std_r : std_r.bar();
  }
  if (name == "gl2_standard") {
    AlgebraPtr g = gl_algebra(2);  // basis (E11, E12, E21, E22)
    // h = E11−E22, e = E12, f = E21, I = E11+E22; r = e⊗f + h⊗h/4 + I⊗I/2
    Tensor<Rat> r(g, 2);
    r.add(MultiIndex{1, 2}, rat(1));
    for (int a : {0, 3})
      for (int b : {0, 3}) {
        Rat q = rat((a == b) ? 1 : -1, 4);  // h⊗h/4 term
        r.add(MultiIndex{a, b}, q);
        r.add(MultiIndex{a, b}, rat(1, 2));  // I⊗I/2 term
      }
    return RMatrix::from_full(r);
  }
  throw std::invalid_argument("unknown built-in r-matrix: '" + name + "'");
}

CybResult cyb_check(const RMatrix& r) {
  AltTensor<Rat> defect = schouten(r.antisym, r.antisym) + phi_s(r.sym);
  return {defect.zero(), std::move(defect)};
}

AltTensor<Rat> Cobracket::operator()(const AltTensor<Rat>& x) const {
  if (x.deg != 1) throw std::invalid_argument("cobracket applies to degree-1 elements");
  AltTensor<Rat> out(alg, 2);
  for (const auto& [m, v] : x.coeff) out += v * images[m[0]];
  return out;
}

bool Cobracket::cocycle_holds() const {
  // δ([x,y]) = [x, δ(y)] + [δ(x), y] on all basis pairs; the adjoint action on
  // ∧² is the degree-(1,2) Schouten bracket.
  int n = alg->dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      AltTensor<Rat> ei = basis_vector(alg, i), ej = basis_vector(alg, j);
      AltTensor<Rat> lhs(alg, 2);
      for (const auto& [k, c] : alg->bracket(i, j)) lhs += c * images[k];
      AltTensor<Rat> rhs = schouten(ei, images[j]) + schouten(images[i], ej);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

Cobracket delta_r(const RMatrix& r) {
  const LieAlgebra& g = *r.alg;
  int n = g.dim();
  Cobracket out{r.alg, {}};
  out.images.reserve(n);
  for (int x = 0; x < n; ++x) {
    Tensor<Rat> raw(r.alg, 2);
    for (const auto& [m, v] : r.full.coeff) {
      // term v · e_{m0} ⊗ e_{m1}: contributes [x, e_{m0}]⊗e_{m1} + e_{m0}⊗[x, e_{m1}]
      for (const auto& [k, c] : g.bracket(x, m[0])) raw.add(MultiIndex{k, m[1]}, Rat(v * c));
      for (const auto& [k, c] : g.bracket(x, m[1])) raw.add(MultiIndex{m[0], k}, Rat(v * c));
    }
    for (const auto& [m, v] : raw.coeff)
      if (raw.at(MultiIndex{m[1], m[0]}) != -v)
        throw std::invalid_argument("delta_r image is not antisymmetric at basis vector " +
                                    g.label(x));
    out.images.push_back(alt_part2(raw));
  }
  return out;
}

AltTensor<Rat> mix_n(const Tensor<Rat>& t, const DirectSum& power) {
  if (t.deg != 2) throw std::invalid_argument("mix_n expects a degree-2 tensor");
  int n = static_cast<int>(power.components.size());
  detail::require_same_algebra(t.alg, power.components.at(0));
  AltTensor<Rat> out(power.algebra, 2);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      for (const auto& [m, v] : t.coeff)
        out.add(MultiIndex{power.global(j, m[1]), power.global(k, m[0])}, v);
  return out;
}

AltTensor<Rat> mix_n(const RMatrix& r, int n) {
  if (n < 1) throw std::invalid_argument("mix_n needs n >= 1");
  return mix_n(r.full, power_algebra(r.alg, n));
}

RMatrix r_power(const RMatrix& r, const SignFunction& eps, const DirectSum& power) {
  int n = static_cast<int>(power.components.size());
  if (static_cast<int>(eps.size()) != n)
    throw std::invalid_argument("sign function length does not match n");
  for (int s : eps)
    if (s != 1 && s != -1) throw std::invalid_argument("sign function entries must be ±1");

  Tensor<Rat> sym(power.algebra, 2);
  AltTensor<Rat> lam(power.algebra, 2);
  for (int j = 0; j < n; ++j) {
    sym += Rat(eps[j]) * embed_tensor(power, j, r.sym);
    lam += embed_tensor(power, j, r.antisym);
  }
  lam -= mix_n(r.full, power);
  return RMatrix::from_parts(sym, lam);
}

RMatrix r_power(const RMatrix& r, const SignFunction& eps, int n) {
  return r_power(r, eps, power_algebra(r.alg, n));
}

AltTensor<Rat> lambda_r_n(const RMatrix& r, int n) {
  DirectSum power = power_algebra(r.alg, n);
  AltTensor<Rat> lam(power.algebra, 2);
  for (int j = 0; j < n; ++j) lam += embed_tensor(power, j, r.antisym);
  lam -= mix_n(r.full, power);
  return lam;
}

Tensor<Rat> diag_n(const Tensor<Rat>& t, int n) {
  DirectSum power = power_algebra(t.alg, n);
  return diagonal_map<Rat>(power)(t);
}

AltTensor<Rat> diag_n(const AltTensor<Rat>& t, int n) {
  DirectSum power = power_algebra(t.alg, n);
  return diagonal_map<Rat>(power)(t);
}

namespace {

std::vector<SignFunction> all_signs(int n) {
  std::vector<SignFunction> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    SignFunction eps(n);
    for (int j = 0; j < n; ++j) eps[j] = (mask >> j) & 1 ? -1 : 1;
    out.push_back(std::move(eps));
  }
  return out;
}

std::string sign_str(const SignFunction& eps) {
  std::string s;
  for (int v : eps) s += v > 0 ? '+' : '-';
  return s;
}

}  // namespace

Section2Report verify_section2(const RMatrix& r, int n_max) {
  Section2Report rep;
  rep.n_max = n_max;
  auto fail = [&](int n, const SignFunction& eps, std::string clause, std::string detail) {
    rep.ok = false;
    rep.failures.push_back({n, eps, std::move(clause), std::move(detail)});
  };

  Cobracket base_delta = delta_r(r);
  std::vector<DirectSum> powers;  // powers[n-1] = g^n
  for (int n = 1; n <= n_max; ++n) powers.push_back(power_algebra(r.alg, n));

  for (int n = 1; n <= n_max; ++n) {
    const DirectSum& power = powers[n - 1];
    std::optional<Cobracket> first_delta;

    for (const SignFunction& eps : all_signs(n)) {
      RMatrix rn = r_power(r, eps, power);

      CybResult cyb = cyb_check(rn);
      ++rep.checks_run;
      if (!cyb.ok)
        fail(n, eps, "a:cyb", "defect has " + std::to_string(cyb.defect.coeff.size()) + " terms");

      Cobracket d = delta_r(rn);
      ++rep.checks_run;
      if (!first_delta)
        first_delta = std::move(d);
      else if (!(d == *first_delta))
        fail(n, eps, "b:delta-eps-independent", "cobracket differs from eps = " + sign_str(eps));
    }

    // (c) Λ_r^(n) − diag_n(Λ) = −Mix^n(s)
    ++rep.checks_run;
    AltTensor<Rat> lhs = lambda_r_n(r, n) - diagonal_map<Rat>(power)(r.antisym);
    AltTensor<Rat> rhs = -mix_n(r.sym, power);
    if (!(lhs == rhs)) fail(n, {}, "c:lambda-diag-mix", "identity fails at n=" + std::to_string(n));

    // (e) diag_n is a morphism of Lie bialgebras
    const Cobracket& dn = *first_delta;
    LinearMap<Rat> diag = diagonal_map<Rat>(power);
    for (int i = 0; i < r.alg->dim(); ++i) {
      ++rep.checks_run;
      if (!(dn(diag(basis_vector(r.alg, i))) == diag(base_delta.images[i]))) {
        fail(n, {}, "e:diag-bialgebra-embedding", "fails on basis vector " + r.alg->label(i));
        break;
      }
    }
  }

  // (d) (Λ_r^(m), Λ_r^(n)) − (diag_m, diag_n)(Mix²(r)) = Λ_r^(m+n)
  for (int m = 1; m + 1 <= n_max; ++m)
    for (int n = 1; m + n <= n_max; ++n) {
      ++rep.checks_run;
      const DirectSum& big = powers[m + n - 1];
      AltTensor<Rat> block(big.algebra, 2);
      // embed Λ_r^(m) into the first m slots, Λ_r^(n) into the last n
      LinearMap<Rat> first(powers[m - 1].algebra, big.algebra);
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < r.alg->dim(); ++i)
          first.set(powers[m - 1].global(j, i), big.global(j, i), rat(1));
      LinearMap<Rat> second(powers[n - 1].algebra, big.algebra);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < r.alg->dim(); ++i)
          second.set(powers[n - 1].global(j, i), big.global(m + j, i), rat(1));
      block += first(lambda_r_n(r, m));
      block += second(lambda_r_n(r, n));
      // (diag_m, diag_n): slot 1 of g² spreads over the first m copies, slot 2
      // over the last n
      DirectSum g2 = power_algebra(r.alg, 2);
      LinearMap<Rat> spread(g2.algebra, big.algebra);
      for (int i = 0; i < r.alg->dim(); ++i) {
        for (int j = 0; j < m; ++j) spread.set(g2.global(0, i), big.global(j, i), rat(1));
        for (int j = 0; j < n; ++j) spread.set(g2.global(1, i), big.global(m + j, i), rat(1));
      }
      block -= spread(mix_n(r.full, g2));
      if (!(block == lambda_r_n(r, m + n)))
        fail(m + n, {}, "d:lambda-additivity",
             "fails at (m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }

  return rep;
}

}  // namespace frp
