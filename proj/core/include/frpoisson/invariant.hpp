// Exact calculus of invariant multivector fields on G^{Γ_1}: the gauge-shift
// action σ_Γ, the graph r-matrix r_Γ, the Fock-Rosly bivector π_Γ, the gauge
// action of g^V, fusion of Poisson spaces, and the quasi-Poisson converters.
//
// Invariant fields live in the "edge double" D^E, one copy of g_L ⊕ g_R per
// edge, with [x_L,y_L] = [x,y]_L, [x_R,y_R] = −[x,y]_R, [x_L,y_R] = 0 and
// distinct edges commuting. An element of ∧^k(D^E) stands for the invariant
// k-vector field it generates; the map to fields is not injective, which is
// why several identities below are exact while others only hold pointwise
// (see numerics.hpp for the pointwise verdicts).
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "frpoisson/graph.hpp"
#include "frpoisson/r_matrix.hpp"

namespace frp {

struct Moduli {
  CiliatedGraph graph;
  Orientation orient;
  AlgebraPtr base;

  DirectSum gauge;  // g^{Γ_{1/2}}, slots keyed by half-edge
  std::vector<std::string> gauge_slots;        // half-edge id per slot
  std::map<std::string, int> gauge_slot_of;    // half-edge id -> slot

  DirectSum dbl;  // D^E; per edge slot 2e is L, slot 2e+1 is R
  DirectSum verts;  // g^V, slots keyed by vertex in graph order
  std::map<std::string, int> vert_slot_of;
  DirectSum edge_power;  // g^{Γ_1}, the left-trivialized tangent model

  LinearMap<Rat> sigma;  // gauge -> dbl: source half-edge ↦ −x_R, end ↦ +x_L
  LinearMap<Rat> diag;   // verts -> gauge: x at v ↦ Σ_{α∈Γ_v} (x)_α
  LinearMap<Rat> rho;    // sigma ∘ diag: the gauge action of g^V

  int l_slot(int edge_index) const { return 2 * edge_index; }
  int r_slot(int edge_index) const { return 2 * edge_index + 1; }
};

using ModuliPtr = std::shared_ptr<const Moduli>;

ModuliPtr make_moduli(const CiliatedGraph& g, const Orientation& o, const AlgebraPtr& base);

// An invariant multivector is an alternating tensor over the edge double of a
// Moduli context.
using InvariantMultivector = AltTensor<Rat>;

using RAssign = std::map<std::string, RMatrix>;  // vertex -> r_v

// Checks that all assigned r-matrices live over m.base and share their
// symmetric part; returns that common s. Vertices without half-edges may be
// omitted from the assignment.
Tensor<Rat> common_symmetric_part(const Moduli& m, const RAssign& assign);

// r_Γ = Σ_v (r_v^{(ε_v, Γ_v)})_v over the gauge algebra, with ε_v = +1 on
// source half-edges and −1 on end half-edges, slots ordered by the cilium.
RMatrix r_gamma(const Moduli& m, const RAssign& assign);

// π_Γ = σ_Γ(Λ_Γ), the canonical antisymmetric representative of σ_Γ(r_Γ).
InvariantMultivector pi_gamma(const Moduli& m, const RAssign& assign);

// σ_Γ(s_Γ) as a symmetric 2-tensor over the edge double; zero as a field but
// not as an element (the "kernel" part of π_Γ's full pushforward).
Tensor<Rat> sigma_of_s_gamma(const Moduli& m, const RAssign& assign);

// The block r-matrix Σ_v (r_v)_v on g^V and its Lie bialgebra cobracket.
RMatrix vertex_rmatrix(const Moduli& m, const RAssign& assign);
Cobracket vertex_cobracket(const Moduli& m, const RAssign& assign);

// Per-basis-vector defects [ρ(x), π] − ρ(δ(x)) over g^V; each is expected to
// be zero as a field when π = π_Γ, δ = δ_r. The action and cobracket are
// explicit parameters so corrupted controls can be formed.
std::vector<InvariantMultivector> poisson_action_defect(const Moduli& m,
                                                        const InvariantMultivector& pi,
                                                        const LinearMap<Rat>& action,
                                                        const Cobracket& delta);

// A named-slot right action of ⊕_slots g on G^{Γ_1} (the gauge action and its
// fusions).
struct ActionSpace {
  std::vector<std::string> slot_names;
  DirectSum acting;       // ⊕ g, one copy per named slot
  LinearMap<Rat> map;     // acting -> edge double

  int slot_of(const std::string& name) const;
};

// ρ_V with one slot per vertex.
ActionSpace gauge_action(const Moduli& m);

// Fusion at the named slots: π' = π − map(Mix^n(r) in those slots), and the
// action contracts the fused slots to a single diagonal slot named
// "s1=s2=...". Slot order follows `fused_slots`.
struct FusionResult {
  InvariantMultivector pi;
  ActionSpace action;
};
FusionResult fuse_poisson(const InvariantMultivector& pi, const ActionSpace& act,
                          const std::vector<std::string>& fused_slots, const RMatrix& r);

using LambdaAssign = std::map<std::string, AltTensor<Rat>>;  // slot -> Λ over base

// Q = π − ρ(Σ_v (Λ_v)_v) and its inverse; mutually inverse by construction.
// When `validate` is set, each s + Λ_v must pass cyb_check for the supplied s.
InvariantMultivector quasi_from_poisson(const InvariantMultivector& pi, const ActionSpace& act,
                                        const LambdaAssign& lambdas,
                                        const Tensor<Rat>* validate_s = nullptr);
InvariantMultivector poisson_from_quasi(const InvariantMultivector& q, const ActionSpace& act,
                                        const LambdaAssign& lambdas,
                                        const Tensor<Rat>* validate_s = nullptr);

// Q_s = −σ_Γ(Σ_v (Mix^{Γ_v}(s))_v); equals quasi_from_poisson(π_Γ, ρ_V, {Λ_v})
// exactly for every admissible Λ-assignment. Requires s symmetric ad-invariant.
InvariantMultivector q_s(const Moduli& m, const Tensor<Rat>& s);

// φ_s placed blockwise at each vertex of g^V (the Cartan element of the block
// r-matrix's symmetric part).
AltTensor<Rat> vertex_phi_s(const Moduli& m, const Tensor<Rat>& s);

}  // namespace frp
