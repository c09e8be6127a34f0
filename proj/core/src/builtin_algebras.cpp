#include <regex>
#include <stdexcept>

#include "frpoisson/lie_algebra.hpp"

namespace frp {

namespace {

RatMatrix zero_matrix(int n) { return RatMatrix(n, std::vector<Rat>(n, Rat(0))); }

RatMatrix unit_matrix(int n, int r, int c) {
  RatMatrix m = zero_matrix(n);
  m[r][c] = 1;
  return m;
}

}  // namespace

AlgebraPtr abelian_algebra(int n) {
  if (n < 1) throw std::invalid_argument("abelian(n) needs n >= 1");
  std::vector<std::string> labels;
  std::vector<RatMatrix> rep;
  // commuting strictly upper first-row matrices: products vanish, exp is I + X
  for (int i = 0; i < n; ++i) {
    labels.push_back("t" + std::to_string(i + 1));
    rep.push_back(unit_matrix(n + 1, 0, i + 1));
  }
  return std::make_shared<LieAlgebra>("abelian(" + std::to_string(n) + ")", labels,
                                      std::map<std::pair<int, int>, SparseVec>{}, rep);
}

AlgebraPtr sl2_algebra() {
  // basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
  std::map<std::pair<int, int>, SparseVec> br;
  br[{0, 1}] = {{1, rat(2)}};
  br[{0, 2}] = {{2, rat(-2)}};
  br[{1, 2}] = {{0, rat(1)}};
  std::vector<RatMatrix> rep = {
      {{rat(1), rat(0)}, {rat(0), rat(-1)}},  // h
      {{rat(0), rat(1)}, {rat(0), rat(0)}},   // e
      {{rat(0), rat(0)}, {rat(1), rat(0)}},   // f
  };
  return std::make_shared<LieAlgebra>("sl2", std::vector<std::string>{"h", "e", "f"}, br, rep);
}

AlgebraPtr gl_algebra(int n) {
  if (n < 1) throw std::invalid_argument("gl(n) needs n >= 1");
  // basis E_{ab} in row-major order; [E_ab, E_cd] = δ_bc E_ad − δ_da E_cb
  auto index = [n](int a, int b) { return a * n + b; };
  std::vector<std::string> labels;
  std::vector<RatMatrix> rep;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
      rep.push_back(unit_matrix(n, a, b));
    }
  std::map<std::pair<int, int>, SparseVec> br;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int i = index(a, b), j = index(c, d);
          if (i >= j) continue;
          SparseVec v;
          if (b == c) v.emplace_back(index(a, d), rat(1));
          if (d == a) v.emplace_back(index(c, b), rat(-1));
          if (!v.empty()) br[{i, j}] = std::move(v);
        }
  return std::make_shared<LieAlgebra>("gl" + std::to_string(n), labels, br, rep);
}

AlgebraPtr sl_algebra(int n) {
  if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
  // basis: E_ab (a != b) then H_k = E_kk − E_{k+1,k+1}
  std::vector<std::pair<int, int>> offdiag;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) offdiag.emplace_back(a, b);
  int dim = static_cast<int>(offdiag.size()) + n - 1;
  auto off_index = [&](int a, int b) {
    for (size_t k = 0; k < offdiag.size(); ++k)
      if (offdiag[k] == std::make_pair(a, b)) return static_cast<int>(k);
    return -1;
  };
  int hbase = static_cast<int>(offdiag.size());

  // expands a traceless diagonal Σ t_a E_aa in the H_k basis via partial sums
  auto diag_coords = [&](const std::vector<Rat>& t) {
    SparseVec v;
    Rat acc(0);
    for (int k = 0; k < n - 1; ++k) {
      acc += t[k];
      if (!is_zero(acc)) v.emplace_back(hbase + k, acc);
    }
    return v;
  };

  std::vector<std::string> labels;
  std::vector<RatMatrix> rep;
  for (auto [a, b] : offdiag) {
    labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
    rep.push_back(unit_matrix(n, a, b));
  }
  for (int k = 0; k < n - 1; ++k) {
    labels.push_back("H" + std::to_string(k + 1));
    RatMatrix m = zero_matrix(n);
    m[k][k] = 1;
    m[k + 1][k + 1] = -1;
    rep.push_back(std::move(m));
  }

  // brackets via [E_ab, E_cd] = δ_bc E_ad − δ_da E_cb, splitting diagonal output
  auto comm_elem = [&](int a, int b, int c, int d) {
    SparseVec v;
    std::vector<Rat> diag(n, Rat(0));
    if (b == c) {
      if (a == d)
        diag[a] += 1;
      else
        v.emplace_back(off_index(a, d), rat(1));
    }
    if (d == a) {
      if (c == b)
        diag[c] -= 1;
      else
        v.emplace_back(off_index(c, b), rat(-1));
    }
    for (const auto& [k, c2] : diag_coords(diag)) v.emplace_back(k, c2);
    return v;
  };

  std::map<std::pair<int, int>, SparseVec> br;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      SparseVec v;
      auto accumulate = [&](int a, int b, int c, int d, const Rat& w) {
        for (auto& [k, coef] : comm_elem(a, b, c, d)) v.emplace_back(k, Rat(w * coef));
      };
      auto terms_of = [&](int idx) {
        std::vector<std::tuple<int, int, Rat>> t;
        if (idx < hbase) {
          t.emplace_back(offdiag[idx].first, offdiag[idx].second, rat(1));
        } else {
          int k = idx - hbase;
          t.emplace_back(k, k, rat(1));
          t.emplace_back(k + 1, k + 1, rat(-1));
        }
        return t;
      };
      for (auto& [a, b, w1] : terms_of(i))
        for (auto& [c, d, w2] : terms_of(j)) accumulate(a, b, c, d, Rat(w1 * w2));
      if (!v.empty()) br[{i, j}] = std::move(v);
    }
  return std::make_shared<LieAlgebra>("sl" + std::to_string(n), labels, br, rep);
}

AlgebraPtr builtin_algebra(const std::string& name) {
  static const std::regex with_arg(R"(^(abelian|gl|sl)\((\d+)\)$)");
  std::smatch m;
  if (name == "sl2") return sl2_algebra();
  if (name == "gl2") return gl_algebra(2);
  if (std::regex_match(name, m, with_arg)) {
    int n = std::stoi(m[2]);
    if (m[1] == "abelian") return abelian_algebra(n);
    if (m[1] == "gl") return gl_algebra(n);
    if (m[1] == "sl") return n == 2 ? sl2_algebra() : sl_algebra(n);
  }
  throw std::invalid_argument("unknown built-in algebra: '" + name + "'");
}

}  // namespace frp
