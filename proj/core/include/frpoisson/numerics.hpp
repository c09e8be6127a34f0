// Float-mode evaluation of invariant multivectors at points of G^{Γ_1} for a
// matrix group: random sampling, holonomy along groupoid words, gauge
// transformations, pushforwards under skeleton changes, and the pointwise
// field-zero verdicts all exact-mode identities delegate to.
//
// Tangent spaces are left-trivialized: an L-slot element evaluates to itself,
// an R-slot element on edge γ evaluates to Ad_{g_γ^{-1}}(x).
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frpoisson/invariant.hpp"

namespace frp {

// Double-precision realization of the algebra's matrix representation, with a
// precomputed least-squares solver to re-expand Ad images in the basis.
class Rep {
 public:
  explicit Rep(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  int matrix_size() const { return n_; }
  const Eigen::MatrixXd& matrix(int basis_index) const { return mats_[basis_index]; }

  // Matrix of a sparse algebra element.
  Eigen::MatrixXd matrix_of(const std::vector<std::pair<int, double>>& coeffs) const;
  // Basis coordinates of a matrix in the representation span; `residual` (when
  // non-null) receives the least-squares residual, a health check on Ad
  // closure.
  Eigen::VectorXd coords_of(const Eigen::MatrixXd& mat, double* residual = nullptr) const;
  // Ad_g(e_i) re-expanded in the basis, as a dim × dim matrix acting on
  // coordinates. Throws when the re-expansion residual exceeds `tol`.
  Eigen::MatrixXd ad_matrix(const Eigen::MatrixXd& g, double tol = 1e-6) const;

 private:
  AlgebraPtr alg_;
  int n_;
  std::vector<Eigen::MatrixXd> mats_;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> solver_;
};

struct GroupPoint {
  std::map<std::string, Eigen::MatrixXd> g;  // edge id -> invertible matrix

  const Eigen::MatrixXd& at(const std::string& edge_id) const { return g.at(edge_id); }
};

// Deterministic splittable RNG used everywhere randomness is needed.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  double uniform();                    // [0, 1)
  double symmetric(double scale);      // [-scale, scale)
  SplitMix64 split(std::uint64_t salt);
};

// g = exp(X1)·exp(X2) with X1, X2 random algebra elements of coefficient
// magnitude ≤ scale.
Eigen::MatrixXd random_group_matrix(const Rep& rep, SplitMix64& rng, double scale);

// One such element per edge. Resamples any edge whose condition number exceeds
// `cond_cap`. Deterministic under seed.
GroupPoint random_point(const Moduli& m, const Rep& rep, std::uint64_t seed, double scale,
                        double cond_cap = 1e6);
GroupPoint identity_point(const Moduli& m, const Rep& rep);
// Componentwise product (the group law of G^{Γ_1}).
GroupPoint point_product(const GroupPoint& a, const GroupPoint& b);

// Left-trivialized evaluation at p, producing a (alternating) tensor over
// g^{Γ_1} with double coefficients.
AltTensor<double> evaluate(const Moduli& m, const Rep& rep, const AltTensor<Rat>& mv,
                           const GroupPoint& p);
Tensor<double> evaluate(const Moduli& m, const Rep& rep, const Tensor<Rat>& mv,
                        const GroupPoint& p);

struct FieldVerdict {
  bool zero;
  double witness;  // max abs evaluated coefficient over all samples
  int samples;
};
FieldVerdict field_is_zero(const Moduli& m, const Rep& rep, const AltTensor<Rat>& mv, int samples,
                           double tol, std::uint64_t seed, double scale = 0.5);
FieldVerdict field_is_zero(const Moduli& m, const Rep& rep, const Tensor<Rat>& mv, int samples,
                           double tol, std::uint64_t seed, double scale = 0.5);

// Groupoid words in oriented edges.
struct PathStep {
  std::string edge_id;
  bool forward = true;
};
using PathWord = std::vector<PathStep>;

std::string step_tail(const Moduli& m, const PathStep& s);  // θ of one step
std::string step_head(const Moduli& m, const PathStep& s);  // τ of one step
// Validates composability; returns (θ, τ) of the whole word. A word may be
// empty only when `base_vertex` names where it sits.
std::pair<std::string, std::string> word_endpoints(const Moduli& m, const PathWord& w,
                                                   const std::string& base_vertex = "");

Eigen::MatrixXd ev_word(const Moduli& m, const Rep& rep, const GroupPoint& p, const PathWord& w);

// σ_Γ at group level: g_γ ↦ h_{θ(γ)}^{-1} g_γ h_{τ(γ)} for h ∈ G^V.
GroupPoint gauge_transform(const Moduli& m, const GroupPoint& p,
                           const std::map<std::string, Eigen::MatrixXd>& h);

// Random composable word of length ≤ max_len (may retrace edges).
PathWord random_word(const Moduli& m, std::uint64_t seed, int max_len);

// --- pushforwards under skeleton changes (left-trivialized differentials) ---

// Edge reversal g ↦ g^{-1}: tangents map by v ↦ −Ad_{g}(v) on that edge.
GroupPoint point_reverse(const Moduli& m, const Rep& rep, const GroupPoint& p,
                         const std::string& edge_id);
AltTensor<double> pushforward_reverse(const Moduli& m, const Rep& rep,
                                      const AltTensor<double>& ev, const GroupPoint& p,
                                      const std::string& edge_id);

// Local move (g1, g2) ↦ (g1·g2, g2): tangents map by (v1, v2) ↦
// (Ad_{g2^{-1}} v1 + v2, v2); spectator edges untouched.
GroupPoint point_local_move(const Moduli& m, const GroupPoint& p, const LocalMoveRecord& rec);
AltTensor<double> pushforward_local_move(const Moduli& m, const Rep& rep,
                                         const AltTensor<double>& ev, const GroupPoint& p,
                                         const LocalMoveRecord& rec);

// Pairs the bivector with differentials of the matrix-entry observables
// f = ev_{w}(·)_{i,j}.
double poisson_bracket_entries(const Moduli& m, const Rep& rep, const AltTensor<Rat>& pi,
                               const GroupPoint& p, const PathWord& w1, int i1, int j1,
                               const PathWord& w2, int i2, int j2);
// Same contraction against precomputed entry differentials; d1, d2 are
// (dim of g^{Γ_1})-vectors.
double contract_bivector(const AltTensor<double>& ev, const Eigen::VectorXd& d1,
                         const Eigen::VectorXd& d2);
// Left-trivialized differential of ev_w(·)_{i,j} at p.
Eigen::VectorXd entry_differential(const Moduli& m, const Rep& rep, const GroupPoint& p,
                                   const PathWord& w, int i, int j);

// Residual of the multiplicativity identity π(pq) = L_{p*}π(q) + R_{q*}π(p)
// at one pair of points (all edges evaluated in left trivialization).
double multiplicativity_residual(const Moduli& m, const Rep& rep, const AltTensor<Rat>& pi,
                                 const GroupPoint& p, const GroupPoint& q);

}  // namespace frp
