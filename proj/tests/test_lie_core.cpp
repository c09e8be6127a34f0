#include <doctest.h>

#include <frpoisson/numerics.hpp>
#include <frpoisson/tensor.hpp>

#include "support/oracles.hpp"

using namespace frp;

namespace {

// small random alternating tensors for the algebraic property tests
AltTensor<Rat> random_alt(const AlgebraPtr& g, int deg, SplitMix64& rng, int terms = 3) {
  AltTensor<Rat> t(g, deg);
  for (int k = 0; k < terms; ++k) {
    MultiIndex m;
    for (int s = 0; s < deg; ++s) m.push_back(static_cast<int>(rng.next() % g->dim()));
    long num = static_cast<long>(rng.next() % 7) - 3;
    long den = 1 + static_cast<long>(rng.next() % 3);
    t.add(m, rat(num, den));
  }
  return t;
}

}  // namespace

TEST_CASE("sl2 bracket matches the defining 2x2 commutators") {
  AlgebraPtr g = sl2_algebra();
  auto h = basis_vector(g, 0), e = basis_vector(g, 1), f = basis_vector(g, 2);
  CHECK(bracket(e, f) == h);
  CHECK(bracket(h, e) == rat(2) * e);
  CHECK(bracket(h, f) == rat(-2) * f);

  SplitMix64 rng(11);
  for (int it = 0; it < 20; ++it) {
    AltTensor<Rat> x = random_alt(g, 1, rng);
    CHECK(bracket(x, x).zero());
  }
}

TEST_CASE("abelian algebra has zero bracket and trivial invariants") {
  AlgebraPtr g = abelian_algebra(3);
  SplitMix64 rng(5);
  AltTensor<Rat> x = random_alt(g, 1, rng), y = random_alt(g, 1, rng);
  CHECK(bracket(x, y).zero());
  CHECK(schouten(random_alt(g, 2, rng), random_alt(g, 2, rng)).zero());
  Tensor<Rat> t(g, 2);
  t.add(MultiIndex{0, 2}, rat(5));
  CHECK(ad_invariant(t));
}

TEST_CASE("structure constant validation rejects bad input") {
  // antisymmetry violation
  std::map<std::pair<int, int>, SparseVec> bad;
  bad[{0, 1}] = {{0, rat(1)}};
  bad[{1, 0}] = {{0, rat(1)}};
  CHECK_THROWS(LieAlgebra("bad", {"x", "y"}, bad));

  // Jacobi violation: [x,y]=z, [y,z]=x, [x,z]=x  is not a Lie algebra
  std::map<std::pair<int, int>, SparseVec> nj;
  nj[{0, 1}] = {{2, rat(1)}};
  nj[{1, 2}] = {{0, rat(1)}};
  nj[{0, 2}] = {{0, rat(1)}};
  CHECK_THROWS(LieAlgebra("nj", {"x", "y", "z"}, nj));

  // wrong representation
  std::map<std::pair<int, int>, SparseVec> ab;
  std::vector<RatMatrix> rep = {{{rat(0), rat(1)}, {rat(0), rat(0)}},
                                {{rat(0), rat(0)}, {rat(1), rat(0)}}};
  CHECK_THROWS(LieAlgebra("ab-bad-rep", {"x", "y"}, ab, rep));  // [E12,E21] != 0

  // non-injective representation
  std::vector<RatMatrix> rep2 = {{{rat(0), rat(1)}, {rat(0), rat(0)}},
                                 {{rat(0), rat(2)}, {rat(0), rat(0)}}};
  CHECK_THROWS(LieAlgebra("ab-dep-rep", {"x", "y"}, ab, rep2));
}

TEST_CASE("schouten bracket: degree-1 inputs, graded antisymmetry, graded Jacobi") {
  DirectSum two = power_algebra(sl2_algebra(), 2);  // dim 6 playground
  AlgebraPtr g = two.algebra;
  SplitMix64 rng(23);

  for (int it = 0; it < 15; ++it) {
    int ka = 1 + static_cast<int>(rng.next() % 3);
    int kb = 1 + static_cast<int>(rng.next() % std::min(3, 5 - ka));  // keep [a,b] within deg 4
    AltTensor<Rat> a = random_alt(g, ka, rng), b = random_alt(g, kb, rng);

    // graded antisymmetry [a,b] = −(−1)^{(k−1)(l−1)} [b,a]
    AltTensor<Rat> lhs = schouten(a, b);
    AltTensor<Rat> rhs = schouten(b, a);
    int sign = ((ka - 1) * (kb - 1)) % 2 == 0 ? -1 : 1;
    CHECK(lhs == Rat(sign) * rhs);

    // graded Jacobi [a,[b,c]] = [[a,b],c] + (−1)^{(k−1)(l−1)} [b,[a,c]]
    int kc = 1 + static_cast<int>(rng.next() % 2);
    AltTensor<Rat> c = random_alt(g, kc, rng, 2);
    if (ka + kb + kc - 2 <= 4) {
      AltTensor<Rat> j1 = schouten(a, schouten(b, c));
      AltTensor<Rat> j2 = schouten(schouten(a, b), c);
      AltTensor<Rat> j3 = schouten(b, schouten(a, c));
      int s2 = ((ka - 1) * (kb - 1)) % 2 == 0 ? 1 : -1;
      CHECK(j1 == j2 + Rat(s2) * j3);
    }
  }

  // biderivation rule on decomposables: [x, y∧z] = [x,y]∧z + y∧[x,z]
  for (int it = 0; it < 10; ++it) {
    AltTensor<Rat> x = random_alt(g, 1, rng, 2);
    AltTensor<Rat> y = random_alt(g, 1, rng, 2);
    AltTensor<Rat> z = random_alt(g, 1, rng, 2);
    CHECK(schouten(x, wedge(y, z)) == wedge(bracket(x, y), z) + wedge(y, bracket(x, z)));
  }
}

TEST_CASE("phi_s for the standard sl2 pairing, frozen from the defining formula") {
  oracle::Sl2Standard d;

  // oracle: the full form table, checked alternating
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(oracle::phi_form_entry(d.s, a, a, b) == 0);
      for (int c = 0; c < 3; ++c) {
        CHECK(oracle::phi_form_entry(d.s, a, b, c) == -oracle::phi_form_entry(d.s, b, a, c));
        CHECK(oracle::phi_form_entry(d.s, a, b, c) == -oracle::phi_form_entry(d.s, a, c, b));
      }
    }
  // φ(h*,e*,f*) = 2⟨h*, [s#e*, s#f*]⟩ = 2⟨h*, [f/2, e/2]⟩ = −1/2
  CHECK(oracle::phi_form_entry(d.s, 0, 1, 2) == rat(-1, 2));

  AltTensor<Rat> phi = phi_s(d.s);
  AltTensor<Rat> expected(d.g, 3);
  expected.add(MultiIndex{0, 1, 2}, rat(-1, 2));  // −½ h∧e∧f
  CHECK(phi == expected);
  CHECK(ad_invariant(phi));

  // abelian and zero-s cases are identically zero
  CHECK(phi_s(Tensor<Rat>(d.g, 2)).zero());
  AlgebraPtr ab = abelian_algebra(2);
  Tensor<Rat> s_ab(ab, 2);
  s_ab.add(MultiIndex{0, 1}, rat(1));
  s_ab.add(MultiIndex{1, 0}, rat(1));
  CHECK(phi_s(s_ab).zero());

  // rejects non-invariant or non-symmetric input
  Tensor<Rat> ee(d.g, 2);
  ee.add(MultiIndex{1, 1}, rat(1));
  CHECK_THROWS(phi_s(ee));  // symmetric but ad_h(e⊗e) = 4e⊗e ≠ 0
  Tensor<Rat> ns(d.g, 2);
  ns.add(MultiIndex{1, 2}, rat(1));
  CHECK_THROWS(phi_s(ns));
}

TEST_CASE("CYB identity for the standard sl2 r-matrix, oracle-first") {
  oracle::Sl2Standard d;

  // tensor-form CYBE vanishes (independent route, no wedge conventions)
  CHECK(oracle::cybe_tensor(d.r_full).zero());

  // wedge route: [Λ,Λ] = ½ h∧e∧f = −φ_s
  AltTensor<Rat> ll = schouten(d.lambda, d.lambda);
  AltTensor<Rat> expected(d.g, 3);
  expected.add(MultiIndex{0, 1, 2}, rat(1, 2));
  CHECK(ll == expected);
  CHECK((ll + phi_s(d.s)).zero());

  // unnormalized wedge: [e∧f, e∧f] = 2 h∧e∧f
  AltTensor<Rat> ef(d.g, 2);
  ef.add(MultiIndex{1, 2}, rat(1));
  AltTensor<Rat> two_hef(d.g, 3);
  two_hef.add(MultiIndex{0, 1, 2}, rat(2));
  CHECK(schouten(ef, ef) == two_hef);
}

TEST_CASE("ad_invariant distinguishes the Casimir pairing from e⊗e") {
  oracle::Sl2Standard d;
  CHECK(ad_invariant(d.s));
  Tensor<Rat> ee(d.g, 2);
  ee.add(MultiIndex{1, 1}, rat(1));
  CHECK_FALSE(ad_invariant(ee));
  CHECK(ad_basis(ee, 0) == rat(4) * ee);  // ad_h(e⊗e) = 4 e⊗e
}

TEST_CASE("direct sums: block structure, embeddings, tensor functoriality") {
  AlgebraPtr g = sl2_algebra();
  DirectSum ds = power_algebra(g, 2);
  CHECK(ds.algebra->dim() == 6);  // construction already asserted Jacobi

  auto in0 = embedding_map<Rat>(ds, 0), in1 = embedding_map<Rat>(ds, 1);
  SplitMix64 rng(31);
  for (int it = 0; it < 10; ++it) {
    AltTensor<Rat> x = random_alt(g, 1, rng), y = random_alt(g, 1, rng);
    // cross-component brackets vanish
    CHECK(bracket(in0(x), in1(y)).zero());
    // embeddings are morphisms
    CHECK(bracket(in0(x), in0(y)) == in0(bracket(x, y)));

    // embed_tensor commutes with schouten on same-component inputs
    AltTensor<Rat> a = random_alt(g, 2, rng), b = random_alt(g, 2, rng);
    CHECK(schouten(embed_tensor(ds, 1, a), embed_tensor(ds, 1, b)) ==
          embed_tensor(ds, 1, schouten(a, b)));
    CHECK(schouten(embed_tensor(ds, 0, a), embed_tensor(ds, 1, b)).zero());

    // diag_n is a morphism in degree 1
    CHECK(bracket(diag_n(x, 3), diag_n(y, 3)) == diag_n(bracket(x, y), 3));
  }

  // single-component sum is the identity construction
  DirectSum one = power_algebra(g, 1);
  CHECK(one.algebra->dim() == 3);
  CHECK(one.algebra->bracket(1, 2) == g->bracket(1, 2));
}

TEST_CASE("opposite algebra negates brackets and keeps Jacobi") {
  AlgebraPtr g = sl2_algebra();
  AlgebraPtr opp = opposite_algebra(g);
  auto e = basis_vector(opp, 1), f = basis_vector(opp, 2), h = basis_vector(opp, 0);
  CHECK(bracket(e, f) == rat(-1) * h);
}

TEST_CASE("gl and sl builders produce valid algebras of the right dimension") {
  CHECK(gl_algebra(2)->dim() == 4);
  CHECK(gl_algebra(3)->dim() == 9);
  CHECK(sl_algebra(3)->dim() == 8);
  CHECK(builtin_algebra("abelian(2)")->dim() == 2);
  CHECK(builtin_algebra("sl2")->dim() == 3);
  CHECK(builtin_algebra("gl2")->dim() == 4);
  CHECK(builtin_algebra("sl(3)")->dim() == 8);
  CHECK_THROWS(builtin_algebra("so3"));

  // gl2: [E12, E21] = E11 − E22
  AlgebraPtr g = gl_algebra(2);
  auto br = g->bracket(1, 2);
  REQUIRE(br.size() == 2);
  CHECK(br[0] == std::pair<int, Rat>{0, rat(1)});
  CHECK(br[1] == std::pair<int, Rat>{3, rat(-1)});
}
