// Finite-dimensional Lie algebras given by exact structure constants, with an
// optional faithful matrix representation used by the numeric layer.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frpoisson/rational.hpp"

namespace frp {

using RatMatrix = std::vector<std::vector<Rat>>;  // square, row major
using SparseVec = std::vector<std::pair<int, Rat>>;  // basis index -> coefficient

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

class LieAlgebra {
 public:
  // `brackets` lists c_{ij}^k for any set of pairs; the (j,i) mirror is filled
  // in automatically and conflicting duplicates are rejected. Throws
  // std::invalid_argument when antisymmetry, Jacobi, or the representation
  // checks fail.
  LieAlgebra(std::string name, std::vector<std::string> basis_labels,
             const std::map<std::pair<int, int>, SparseVec>& brackets,
             std::optional<std::vector<RatMatrix>> rep = std::nullopt);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::string& label(int i) const { return basis_[i]; }

  // [e_i, e_j] as a sparse vector; empty when the bracket vanishes.
  const SparseVec& bracket(int i, int j) const;
  // All stored pairs (i, j), i < j, with nonzero bracket.
  const std::vector<std::pair<int, int>>& nonzero_pairs() const { return pairs_; }

  bool has_rep() const { return rep_.has_value(); }
  const std::vector<RatMatrix>& rep() const { return *rep_; }
  int rep_size() const { return rep_ ? static_cast<int>((*rep_)[0].size()) : 0; }

  bool structurally_equal(const LieAlgebra& other) const;

 private:
  std::string name_;
  int dim_;
  std::vector<std::string> basis_;
  std::map<std::pair<int, int>, SparseVec> table_;  // both orientations
  std::vector<std::pair<int, int>> pairs_;          // i < j only
  std::optional<std::vector<RatMatrix>> rep_;

  void check_jacobi() const;
  void check_rep() const;
};

// [x, y] for sparse degree-1 coefficient vectors over `g`.
SparseVec bracket_vec(const LieAlgebra& g, const SparseVec& x, const SparseVec& y);

// Built-in algebras. sl2 uses the basis (h, e, f).
AlgebraPtr abelian_algebra(int n);
AlgebraPtr sl2_algebra();
AlgebraPtr gl_algebra(int n);
AlgebraPtr sl_algebra(int n);
// Resolves "abelian(2)", "sl2", "gl2", "gl(3)", "sl(3)", ...
AlgebraPtr builtin_algebra(const std::string& name);

// Direct sums. Components keep their own bracket tables; cross brackets are
// zero. Basis labels are prefixed with the supplied slot labels, and reps
// concatenate block-diagonally (present only when every component has one).
struct DirectSum {
  AlgebraPtr algebra;
  std::vector<AlgebraPtr> components;
  std::vector<int> offsets;  // basis offset of each component

  int offset(int component) const { return offsets.at(component); }
  // Global basis index of local index `i` in `component`.
  int global(int component, int i) const { return offsets.at(component) + i; }
};

DirectSum direct_sum(const std::vector<AlgebraPtr>& parts,
                     const std::vector<std::string>& slot_labels, std::string name = "");
// n copies of g with slot labels "1", ..., "n".
DirectSum power_algebra(const AlgebraPtr& g, int n);

// Same underlying space with bracket negated; still a Lie algebra. Used for
// the right-invariant-field copy inside the edge double.
AlgebraPtr opposite_algebra(const AlgebraPtr& g);

}  // namespace frp
