#include "frpoisson/numerics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <stdexcept>

namespace frp {

Rep::Rep(AlgebraPtr alg) : alg_(std::move(alg)) {
  if (!alg_->has_rep())
    throw std::invalid_argument("algebra '" + alg_->name() + "' has no matrix representation");
  n_ = alg_->rep_size();
  for (int i = 0; i < alg_->dim(); ++i) {
    Eigen::MatrixXd m(n_, n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) m(r, c) = to_double(alg_->rep()[i][r][c]);
    mats_.push_back(std::move(m));
  }
  Eigen::MatrixXd flat(n_ * n_, alg_->dim());
  for (int i = 0; i < alg_->dim(); ++i)
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) flat(r * n_ + c, i) = mats_[i](r, c);
  solver_.compute(flat);
}

Eigen::MatrixXd Rep::matrix_of(const std::vector<std::pair<int, double>>& coeffs) const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& [i, c] : coeffs) out += c * mats_[i];
  return out;
}

Eigen::VectorXd Rep::coords_of(const Eigen::MatrixXd& mat, double* residual) const {
  Eigen::VectorXd flat(n_ * n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) flat(r * n_ + c) = mat(r, c);
  Eigen::VectorXd x = solver_.solve(flat);
  if (residual) {
    Eigen::VectorXd back = Eigen::VectorXd::Zero(n_ * n_);
    for (int i = 0; i < alg_->dim(); ++i)
      for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) back(r * n_ + c) += x(i) * mats_[i](r, c);
    *residual = (back - flat).norm();
  }
  return x;
}

Eigen::MatrixXd Rep::ad_matrix(const Eigen::MatrixXd& g, double tol) const {
  Eigen::MatrixXd ginv = g.inverse();
  Eigen::MatrixXd out(alg_->dim(), alg_->dim());
  for (int i = 0; i < alg_->dim(); ++i) {
    double res = 0;
    out.col(i) = coords_of(g * mats_[i] * ginv, &res);
    if (res > tol)
      throw std::runtime_error("Ad image leaves the representation span (residual " +
                               std::to_string(res) + ")");
  }
  return out;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::symmetric(double scale) { return (2.0 * uniform() - 1.0) * scale; }

SplitMix64 SplitMix64::split(std::uint64_t salt) {
  SplitMix64 child(state ^ (salt * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL));
  child.next();
  return child;
}

Eigen::MatrixXd random_group_matrix(const Rep& rep, SplitMix64& rng, double scale) {
  auto sample = [&] {
    std::vector<std::pair<int, double>> coeffs;
    for (int i = 0; i < rep.algebra()->dim(); ++i) coeffs.emplace_back(i, rng.symmetric(scale));
    return rep.matrix_of(coeffs).exp().eval();
  };
  return (sample() * sample()).eval();
}

namespace {

double condition_number(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  double smin = svd.singularValues().tail(1)(0);
  if (smin == 0) return std::numeric_limits<double>::infinity();
  return svd.singularValues()(0) / smin;
}

}  // namespace

GroupPoint random_point(const Moduli& m, const Rep& rep, std::uint64_t seed, double scale,
                        double cond_cap) {
  SplitMix64 master(seed);
  GroupPoint p;
  std::uint64_t salt = 1;
  for (const Edge& e : m.graph.edges()) {
    SplitMix64 rng = master.split(salt++);
    Eigen::MatrixXd g = random_group_matrix(rep, rng, scale);
    int attempts = 0;
    while (condition_number(g) > cond_cap) {
      if (++attempts > 64) throw std::runtime_error("cannot sample a well-conditioned point");
      g = random_group_matrix(rep, rng, scale);
    }
    p.g[e.id] = std::move(g);
  }
  return p;
}

GroupPoint identity_point(const Moduli& m, const Rep& rep) {
  GroupPoint p;
  for (const Edge& e : m.graph.edges())
    p.g[e.id] = Eigen::MatrixXd::Identity(rep.matrix_size(), rep.matrix_size());
  return p;
}

GroupPoint point_product(const GroupPoint& a, const GroupPoint& b) {
  GroupPoint out;
  for (const auto& [id, ga] : a.g) out.g[id] = ga * b.g.at(id);
  return out;
}

namespace {

// The per-point evaluation map D^E -> g^{Γ_1}: L-slots are identity, R-slots
// are Ad_{g^{-1}} on their edge.
LinearMap<double> evaluation_map(const Moduli& m, const Rep& rep, const GroupPoint& p) {
  int dim = m.base->dim();
  LinearMap<double> ev(m.dbl.algebra, m.edge_power.algebra);
  for (size_t ei = 0; ei < m.graph.edges().size(); ++ei) {
    const Edge& e = m.graph.edges()[ei];
    for (int i = 0; i < dim; ++i)
      ev.set(m.dbl.global(m.l_slot(static_cast<int>(ei)), i),
             m.edge_power.global(static_cast<int>(ei), i), 1.0);
    Eigen::MatrixXd ad = rep.ad_matrix(p.at(e.id).inverse());
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (ad(j, i) != 0.0)
          ev.set(m.dbl.global(m.r_slot(static_cast<int>(ei)), i),
                 m.edge_power.global(static_cast<int>(ei), j), ad(j, i));
  }
  return ev;
}

AltTensor<double> to_double_tensor(const AltTensor<Rat>& t) {
  AltTensor<double> out(t.alg, t.deg);
  for (const auto& [k, v] : t.coeff) out.coeff[k] = to_double(v);
  return out;
}

Tensor<double> to_double_tensor(const Tensor<Rat>& t) {
  Tensor<double> out(t.alg, t.deg);
  for (const auto& [k, v] : t.coeff) out.coeff[k] = to_double(v);
  return out;
}

}  // namespace

AltTensor<double> evaluate(const Moduli& m, const Rep& rep, const AltTensor<Rat>& mv,
                           const GroupPoint& p) {
  detail::require_same_algebra(mv.alg, m.dbl.algebra);
  return evaluation_map(m, rep, p)(to_double_tensor(mv));
}

Tensor<double> evaluate(const Moduli& m, const Rep& rep, const Tensor<Rat>& mv,
                        const GroupPoint& p) {
  detail::require_same_algebra(mv.alg, m.dbl.algebra);
  return evaluation_map(m, rep, p)(to_double_tensor(mv));
}

namespace {

template <class Tens>
FieldVerdict field_is_zero_impl(const Moduli& m, const Rep& rep, const Tens& mv, int samples,
                                double tol, std::uint64_t seed, double scale) {
  if (samples < 1) throw std::invalid_argument("field_is_zero needs samples >= 1");
  double witness = 0;
  if (mv.zero()) return {true, 0.0, samples};
  SplitMix64 master(seed);
  for (int k = 0; k < samples; ++k) {
    GroupPoint p = random_point(m, rep, master.split(k + 1).state, scale);
    auto ev = evaluate(m, rep, mv, p);
    for (const auto& [idx, v] : ev.coeff) witness = std::max(witness, std::abs(v));
  }
  return {witness <= tol, witness, samples};
}

}  // namespace

FieldVerdict field_is_zero(const Moduli& m, const Rep& rep, const AltTensor<Rat>& mv, int samples,
                           double tol, std::uint64_t seed, double scale) {
  return field_is_zero_impl(m, rep, mv, samples, tol, seed, scale);
}

FieldVerdict field_is_zero(const Moduli& m, const Rep& rep, const Tensor<Rat>& mv, int samples,
                           double tol, std::uint64_t seed, double scale) {
  return field_is_zero_impl(m, rep, mv, samples, tol, seed, scale);
}

std::string step_tail(const Moduli& m, const PathStep& s) {
  const Edge& e = m.graph.edges()[m.graph.edge_index(s.edge_id)];
  const std::string& h = s.forward ? m.orient.source_of(e) : m.orient.target_of(e);
  return m.graph.vertex_of(h);
}

std::string step_head(const Moduli& m, const PathStep& s) {
  const Edge& e = m.graph.edges()[m.graph.edge_index(s.edge_id)];
  const std::string& h = s.forward ? m.orient.target_of(e) : m.orient.source_of(e);
  return m.graph.vertex_of(h);
}

std::pair<std::string, std::string> word_endpoints(const Moduli& m, const PathWord& w,
                                                   const std::string& base_vertex) {
  if (w.empty()) {
    if (base_vertex.empty())
      throw std::invalid_argument("empty word needs a base vertex");
    if (!m.graph.has_vertex(base_vertex))
      throw std::invalid_argument("unknown base vertex '" + base_vertex + "'");
    return {base_vertex, base_vertex};
  }
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (step_head(m, w[i]) != step_tail(m, w[i + 1]))
      throw std::invalid_argument("word is not composable at step " + std::to_string(i + 1));
  return {step_tail(m, w.front()), step_head(m, w.back())};
}

Eigen::MatrixXd ev_word(const Moduli& m, const Rep& rep, const GroupPoint& p, const PathWord& w) {
  word_endpoints(m, w, w.empty() ? m.graph.vertices().front() : "");
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(rep.matrix_size(), rep.matrix_size());
  for (const PathStep& s : w) {
    const Eigen::MatrixXd& g = p.at(s.edge_id);
    out = s.forward ? (out * g).eval() : (out * g.inverse()).eval();
  }
  return out;
}

GroupPoint gauge_transform(const Moduli& m, const GroupPoint& p,
                           const std::map<std::string, Eigen::MatrixXd>& h) {
  GroupPoint out;
  for (const Edge& e : m.graph.edges()) {
    const std::string& src = m.orient.source_of(e);
    const std::string& tgt = m.orient.target_of(e);
    const Eigen::MatrixXd& hs = h.at(m.graph.vertex_of(src));
    const Eigen::MatrixXd& ht = h.at(m.graph.vertex_of(tgt));
    out.g[e.id] = hs.inverse() * p.at(e.id) * ht;
  }
  return out;
}

PathWord random_word(const Moduli& m, std::uint64_t seed, int max_len) {
  SplitMix64 rng(seed);
  int len = 1 + static_cast<int>(rng.next() % max_len);
  PathWord w;
  std::string at;
  for (int k = 0; k < len; ++k) {
    // collect steps leaving `at` (any step when the word is empty)
    std::vector<PathStep> options;
    for (const Edge& e : m.graph.edges()) {
      PathStep fwd{e.id, true}, bwd{e.id, false};
      if (at.empty() || step_tail(m, fwd) == at) options.push_back(fwd);
      if (at.empty() || step_tail(m, bwd) == at) options.push_back(bwd);
    }
    if (options.empty()) break;
    PathStep pick = options[rng.next() % options.size()];
    at = step_head(m, pick);
    w.push_back(std::move(pick));
  }
  return w;
}

GroupPoint point_reverse(const Moduli& m, const Rep& rep, const GroupPoint& p,
                         const std::string& edge_id) {
  (void)m;
  (void)rep;
  GroupPoint out = p;
  out.g.at(edge_id) = p.at(edge_id).inverse();
  return out;
}

namespace {

// Applies a slot-wise linear substitution on g^{Γ_1}-tensors.
AltTensor<double> apply_edge_map(const Moduli& m, const AltTensor<double>& ev,
                                 const LinearMap<double>& f) {
  detail::require_same_algebra(ev.alg, m.edge_power.algebra);
  return f(ev);
}

}  // namespace

AltTensor<double> pushforward_reverse(const Moduli& m, const Rep& rep,
                                      const AltTensor<double>& ev, const GroupPoint& p,
                                      const std::string& edge_id) {
  int target = m.graph.edge_index(edge_id);
  int dim = m.base->dim();
  LinearMap<double> f(m.edge_power.algebra, m.edge_power.algebra);
  Eigen::MatrixXd ad = rep.ad_matrix(p.at(edge_id));
  for (size_t ei = 0; ei < m.graph.edges().size(); ++ei)
    for (int i = 0; i < dim; ++i) {
      if (static_cast<int>(ei) != target) {
        f.set(m.edge_power.global(static_cast<int>(ei), i),
              m.edge_power.global(static_cast<int>(ei), i), 1.0);
      } else {
        for (int j = 0; j < dim; ++j)
          if (ad(j, i) != 0.0)
            f.set(m.edge_power.global(static_cast<int>(ei), i),
                  m.edge_power.global(static_cast<int>(ei), j), -ad(j, i));
      }
    }
  return apply_edge_map(m, ev, f);
}

GroupPoint point_local_move(const Moduli& m, const GroupPoint& p, const LocalMoveRecord& rec) {
  (void)m;
  GroupPoint out = p;
  out.g.at(rec.moved_edge) = p.at(rec.moved_edge) * p.at(rec.via_edge);
  return out;
}

AltTensor<double> pushforward_local_move(const Moduli& m, const Rep& rep,
                                         const AltTensor<double>& ev, const GroupPoint& p,
                                         const LocalMoveRecord& rec) {
  int moved = m.graph.edge_index(rec.moved_edge);
  int via = m.graph.edge_index(rec.via_edge);
  int dim = m.base->dim();
  LinearMap<double> f(m.edge_power.algebra, m.edge_power.algebra);
  Eigen::MatrixXd ad = rep.ad_matrix(p.at(rec.via_edge).inverse());
  for (size_t ei = 0; ei < m.graph.edges().size(); ++ei)
    for (int i = 0; i < dim; ++i) {
      if (static_cast<int>(ei) == moved) {
        for (int j = 0; j < dim; ++j)
          if (ad(j, i) != 0.0)
            f.set(m.edge_power.global(moved, i), m.edge_power.global(moved, j), ad(j, i));
      } else if (static_cast<int>(ei) == via) {
        f.set(m.edge_power.global(via, i), m.edge_power.global(moved, i), 1.0);
        f.set(m.edge_power.global(via, i), m.edge_power.global(via, i), 1.0);
      } else {
        f.set(m.edge_power.global(static_cast<int>(ei), i),
              m.edge_power.global(static_cast<int>(ei), i), 1.0);
      }
    }
  return apply_edge_map(m, ev, f);
}

Eigen::VectorXd entry_differential(const Moduli& m, const Rep& rep, const GroupPoint& p,
                                   const PathWord& w, int i, int j) {
  int n = rep.matrix_size();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::out_of_range("matrix entry index out of range");
  word_endpoints(m, w, w.empty() ? m.graph.vertices().front() : "");
  int dim = m.base->dim();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(m.edge_power.algebra->dim());

  // prefix/suffix products around each step
  std::vector<Eigen::MatrixXd> step_mats;
  for (const PathStep& s : w)
    step_mats.push_back(s.forward ? p.at(s.edge_id).eval() : p.at(s.edge_id).inverse().eval());
  std::vector<Eigen::MatrixXd> prefix(w.size() + 1), suffix(w.size() + 1);
  prefix[0] = Eigen::MatrixXd::Identity(n, n);
  for (size_t k = 0; k < w.size(); ++k) prefix[k + 1] = prefix[k] * step_mats[k];
  suffix[w.size()] = Eigen::MatrixXd::Identity(n, n);
  for (size_t k = w.size(); k-- > 0;) suffix[k] = step_mats[k] * suffix[k + 1];

  for (size_t k = 0; k < w.size(); ++k) {
    const PathStep& s = w[k];
    int ei = m.graph.edge_index(s.edge_id);
    for (int b = 0; b < dim; ++b) {
      // d/dt of the k-th factor under g_e(t) = g_e·exp(t e_b)
      Eigen::MatrixXd dstep = s.forward
                                  ? (p.at(s.edge_id) * rep.matrix(b)).eval()
                                  : (-rep.matrix(b) * p.at(s.edge_id).inverse()).eval();
      double val = (prefix[k] * dstep * suffix[k + 1])(i, j);
      out(m.edge_power.global(ei, b)) += val;
    }
  }
  return out;
}

double contract_bivector(const AltTensor<double>& ev, const Eigen::VectorXd& d1,
                         const Eigen::VectorXd& d2) {
  if (ev.deg != 2) throw std::invalid_argument("contract_bivector expects degree 2");
  double out = 0;
  for (const auto& [idx, v] : ev.coeff)
    out += v * (d1(idx[0]) * d2(idx[1]) - d1(idx[1]) * d2(idx[0]));
  return out;
}

double poisson_bracket_entries(const Moduli& m, const Rep& rep, const AltTensor<Rat>& pi,
                               const GroupPoint& p, const PathWord& w1, int i1, int j1,
                               const PathWord& w2, int i2, int j2) {
  AltTensor<double> ev = evaluate(m, rep, pi, p);
  Eigen::VectorXd d1 = entry_differential(m, rep, p, w1, i1, j1);
  Eigen::VectorXd d2 = entry_differential(m, rep, p, w2, i2, j2);
  return contract_bivector(ev, d1, d2);
}

double multiplicativity_residual(const Moduli& m, const Rep& rep, const AltTensor<Rat>& pi,
                                 const GroupPoint& p, const GroupPoint& q) {
  GroupPoint pq = point_product(p, q);
  AltTensor<double> lhs = evaluate(m, rep, pi, pq);
  AltTensor<double> at_q = evaluate(m, rep, pi, q);   // L_{p*} is the identity in left triv.
  AltTensor<double> at_p = evaluate(m, rep, pi, p);   // R_{q*} is slotwise Ad_{q^{-1}}

  int dim = m.base->dim();
  LinearMap<double> rq(m.edge_power.algebra, m.edge_power.algebra);
  for (size_t ei = 0; ei < m.graph.edges().size(); ++ei) {
    Eigen::MatrixXd ad = rep.ad_matrix(q.at(m.graph.edges()[ei].id).inverse());
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (ad(j, i) != 0.0)
          rq.set(m.edge_power.global(static_cast<int>(ei), i),
                 m.edge_power.global(static_cast<int>(ei), j), ad(j, i));
  }
  AltTensor<double> rhs = at_q + rq(at_p);
  return (lhs - rhs).max_abs();
}

}  // namespace frp
