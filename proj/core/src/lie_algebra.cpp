#include "frpoisson/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace frp {

namespace {

const SparseVec kEmpty;

SparseVec normalize(SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [k, c] : v) {
    if (!out.empty() && out.back().first == k)
      out.back().second += c;
    else
      out.emplace_back(k, c);
  }
  std::erase_if(out, [](const auto& e) { return is_zero(e.second); });
  return out;
}

SparseVec negated(const SparseVec& v) {
  SparseVec out = v;
  for (auto& [k, c] : out) c = -c;
  return out;
}

SparseVec scaled_add(const SparseVec& a, const SparseVec& b) {
  SparseVec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return normalize(std::move(out));
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels,
                       const std::map<std::pair<int, int>, SparseVec>& brackets,
                       std::optional<std::vector<RatMatrix>> rep)
    : name_(std::move(name)),
      dim_(static_cast<int>(basis_labels.size())),
      basis_(std::move(basis_labels)),
      rep_(std::move(rep)) {
  if (dim_ <= 0) throw std::invalid_argument("Lie algebra must have positive dimension");
  if (dim_ > 255) throw std::invalid_argument("Lie algebra dimension exceeds index range");

  for (const auto& [pair, entries] : brackets) {
    auto [i, j] = pair;
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
      throw std::invalid_argument("structure constant index out of range");
    SparseVec v = normalize(entries);
    for (const auto& [k, c] : v)
      if (k < 0 || k >= dim_) throw std::invalid_argument("structure constant target out of range");
    if (v.empty()) continue;
    if (i == j) throw std::invalid_argument("nonzero bracket [e_i, e_i]: antisymmetry violated");
    auto it = table_.find(pair);
    if (it != table_.end()) {
      if (it->second != v) throw std::invalid_argument("conflicting structure constants");
      continue;
    }
    auto mirror = table_.find({j, i});
    if (mirror != table_.end()) {
      if (mirror->second != negated(v))
        throw std::invalid_argument("structure constants violate antisymmetry");
    } else {
      table_[{j, i}] = negated(v);
    }
    table_[pair] = std::move(v);
  }
  for (const auto& [pair, v] : table_)
    if (pair.first < pair.second && !v.empty()) pairs_.push_back(pair);

  check_jacobi();
  if (rep_) check_rep();
}

const SparseVec& LieAlgebra::bracket(int i, int j) const {
  auto it = table_.find({i, j});
  return it == table_.end() ? kEmpty : it->second;
}

SparseVec bracket_vec(const LieAlgebra& g, const SparseVec& x, const SparseVec& y) {
  SparseVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      for (const auto& [k, c] : g.bracket(i, j)) out.emplace_back(k, Rat(a * b * c));
  return normalize(std::move(out));
}

void LieAlgebra::check_jacobi() const {
  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0. Only triples where
  // at least one inner bracket is nonzero can fail, so iterate stored pairs.
  auto inner = [&](int i, int j, int k) {
    SparseVec out;
    for (const auto& [m, c] : bracket(i, j))
      for (const auto& [l, d] : bracket(m, k)) out.emplace_back(l, Rat(c * d));
    return normalize(std::move(out));
  };
  for (const auto& [i, j] : pairs_) {
    for (int k = 0; k < dim_; ++k) {
      SparseVec total = scaled_add(scaled_add(inner(i, j, k), inner(j, k, i)), inner(k, i, j));
      if (!total.empty())
        throw std::invalid_argument("Jacobi identity fails on basis triple (" + basis_[i] + "," +
                                    basis_[j] + "," + basis_[k] + ") of " + name_);
    }
  }
}

void LieAlgebra::check_rep() const {
  const auto& mats = *rep_;
  if (static_cast<int>(mats.size()) != dim_)
    throw std::invalid_argument("representation must supply one matrix per basis vector");
  size_t n = mats[0].size();
  for (const auto& m : mats) {
    if (m.size() != n) throw std::invalid_argument("representation matrices differ in size");
    for (const auto& row : m)
      if (row.size() != n) throw std::invalid_argument("representation matrix not square");
  }

  auto mat_mul = [n](const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (is_zero(a[i][k])) continue;
        for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
      }
    return out;
  };

  // [rep(e_i), rep(e_j)] = Σ_k c_{ij}^k rep(e_k), checked exactly.
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      RatMatrix lhs = mat_mul(mats[i], mats[j]);
      RatMatrix ji = mat_mul(mats[j], mats[i]);
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) lhs[r][c] -= ji[r][c];
      for (const auto& [k, coef] : bracket(i, j))
        for (size_t r = 0; r < n; ++r)
          for (size_t c = 0; c < n; ++c) lhs[r][c] -= coef * mats[k][r][c];
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
          if (!is_zero(lhs[r][c]))
            throw std::invalid_argument("representation does not realize the bracket [" +
                                        basis_[i] + "," + basis_[j] + "]");
    }

  // Injectivity on the basis span: the flattened matrices must be linearly
  // independent. Gaussian elimination over the rationals, rank must be dim.
  std::vector<std::vector<Rat>> rows(dim_, std::vector<Rat>(n * n, Rat(0)));
  for (int i = 0; i < dim_; ++i)
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) rows[i][r * n + c] = mats[i][r][c];
  int rank = 0;
  for (size_t col = 0; col < n * n && rank < dim_; ++col) {
    int pivot = -1;
    for (int r = rank; r < dim_; ++r)
      if (!is_zero(rows[r][col])) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < dim_; ++r) {
      if (is_zero(rows[r][col])) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (size_t k = col; k < n * n; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  if (rank < dim_)
    throw std::invalid_argument("representation is not injective on the basis span");
}

bool LieAlgebra::structurally_equal(const LieAlgebra& other) const {
  return dim_ == other.dim_ && table_ == other.table_;
}

DirectSum direct_sum(const std::vector<AlgebraPtr>& parts,
                     const std::vector<std::string>& slot_labels, std::string name) {
  if (parts.empty()) throw std::invalid_argument("direct sum of zero algebras");
  if (slot_labels.size() != parts.size())
    throw std::invalid_argument("one slot label per component required");

  std::vector<std::string> labels;
  std::map<std::pair<int, int>, SparseVec> table;
  std::vector<int> offsets;
  int off = 0;
  bool all_reps = true;
  size_t rep_size = 0;
  for (size_t c = 0; c < parts.size(); ++c) {
    offsets.push_back(off);
    const LieAlgebra& g = *parts[c];
    for (int i = 0; i < g.dim(); ++i) labels.push_back(slot_labels[c] + "." + g.label(i));
    for (const auto& pr : g.nonzero_pairs()) {
      SparseVec v = g.bracket(pr.first, pr.second);
      for (auto& [k, coef] : v) k += off;
      table[{pr.first + off, pr.second + off}] = std::move(v);
    }
    if (g.has_rep())
      rep_size += g.rep_size();
    else
      all_reps = false;
    off += g.dim();
  }

  std::optional<std::vector<RatMatrix>> rep;
  if (all_reps) {
    std::vector<RatMatrix> mats;
    size_t block = 0;
    for (const auto& part : parts) {
      size_t n = part->rep_size();
      for (int i = 0; i < part->dim(); ++i) {
        RatMatrix m(rep_size, std::vector<Rat>(rep_size, Rat(0)));
        for (size_t r = 0; r < n; ++r)
          for (size_t cc = 0; cc < n; ++cc) m[block + r][block + cc] = part->rep()[i][r][cc];
        mats.push_back(std::move(m));
      }
      block += n;
    }
    rep = std::move(mats);
  }

  if (name.empty()) {
    name = parts[0]->name();
    for (size_t c = 1; c < parts.size(); ++c) name += "+" + parts[c]->name();
  }
  DirectSum ds;
  ds.algebra = std::make_shared<LieAlgebra>(std::move(name), std::move(labels), table, std::move(rep));
  ds.components = parts;
  ds.offsets = std::move(offsets);
  return ds;
}

DirectSum power_algebra(const AlgebraPtr& g, int n) {
  if (n < 1) throw std::invalid_argument("power_algebra needs n >= 1");
  std::vector<AlgebraPtr> parts(n, g);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return direct_sum(parts, labels, g->name() + "^" + std::to_string(n));
}

AlgebraPtr opposite_algebra(const AlgebraPtr& g) {
  std::map<std::pair<int, int>, SparseVec> table;
  for (const auto& pr : g->nonzero_pairs()) {
    SparseVec v = g->bracket(pr.first, pr.second);
    for (auto& [k, c] : v) c = -c;
    table[pr] = std::move(v);
  }
  std::optional<std::vector<RatMatrix>> rep;  // the negated bracket has no use for it
  return std::make_shared<LieAlgebra>(g->name() + "~", g->basis(), table, rep);
}

}  // namespace frp
