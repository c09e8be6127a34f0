#include "frpoisson/invariant.hpp"

#include <algorithm>
#include <stdexcept>

namespace frp {

ModuliPtr make_moduli(const CiliatedGraph& g, const Orientation& o, const AlgebraPtr& base) {
  validate_orientation(g, o);
  auto m = std::make_shared<Moduli>(Moduli{
      g, o, base, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}});

  // gauge algebra: slots follow vertex order, cilium order within a vertex
  std::vector<AlgebraPtr> gauge_parts;
  std::vector<std::string> gauge_labels;
  for (const auto& v : g.vertices())
    for (const auto& h : g.order_at(v)) {
      m->gauge_slot_of[h] = static_cast<int>(m->gauge_slots.size());
      m->gauge_slots.push_back(h);
      gauge_parts.push_back(base);
      gauge_labels.push_back(h);
    }
  if (gauge_parts.empty()) throw std::invalid_argument("graph has no half-edges");
  m->gauge = direct_sum(gauge_parts, gauge_labels, base->name() + "^{half-edges}");

  // edge double: L then R per edge, in edge order
  AlgebraPtr opp = opposite_algebra(base);
  std::vector<AlgebraPtr> dbl_parts;
  std::vector<std::string> dbl_labels;
  std::vector<AlgebraPtr> pow_parts;
  std::vector<std::string> pow_labels;
  for (const Edge& e : g.edges()) {
    dbl_parts.push_back(base);
    dbl_labels.push_back(e.id + ".L");
    dbl_parts.push_back(opp);
    dbl_labels.push_back(e.id + ".R");
    pow_parts.push_back(base);
    pow_labels.push_back(e.id);
  }
  m->dbl = direct_sum(dbl_parts, dbl_labels, base->name() + "-double");
  m->edge_power = direct_sum(pow_parts, pow_labels, base->name() + "^{edges}");

  // vertex algebra
  std::vector<AlgebraPtr> v_parts(g.vertices().size(), base);
  m->verts = direct_sum(v_parts, g.vertices(), base->name() + "^V");
  for (size_t i = 0; i < g.vertices().size(); ++i)
    m->vert_slot_of[g.vertices()[i]] = static_cast<int>(i);

  // σ: differentiating σ_Γ(g,h)_γ = h_{α_γ}^{-1} g_γ h_{α̌_γ} at h = e
  m->sigma = LinearMap<Rat>(m->gauge.algebra, m->dbl.algebra);
  int dim = base->dim();
  for (size_t slot = 0; slot < m->gauge_slots.size(); ++slot) {
    const std::string& h = m->gauge_slots[slot];
    const Edge& e = g.edge_of(h);
    int ei = g.edge_index(e.id);
    bool source = o.is_source(e, h);
    int target_slot = source ? m->r_slot(ei) : m->l_slot(ei);
    Rat sign = source ? rat(-1) : rat(1);
    for (int i = 0; i < dim; ++i)
      m->sigma.set(m->gauge.global(static_cast<int>(slot), i),
                   m->dbl.global(target_slot, i), sign);
  }

  // diag: x at v ↦ Σ_{α∈Γ_v} (x)_α
  m->diag = LinearMap<Rat>(m->verts.algebra, m->gauge.algebra);
  for (size_t vi = 0; vi < g.vertices().size(); ++vi)
    for (const auto& h : g.order_at(g.vertices()[vi]))
      for (int i = 0; i < dim; ++i)
        m->diag.set(m->verts.global(static_cast<int>(vi), i),
                    m->gauge.global(m->gauge_slot_of.at(h), i), rat(1));

  m->rho = compose(m->sigma, m->diag);
  return m;
}

Tensor<Rat> common_symmetric_part(const Moduli& m, const RAssign& assign) {
  const Tensor<Rat>* s = nullptr;
  for (const auto& v : m.graph.vertices()) {
    if (m.graph.order_at(v).empty()) continue;
    auto it = assign.find(v);
    if (it == assign.end())
      throw std::invalid_argument("vertex '" + v + "' has no assigned r-matrix");
    detail::require_same_algebra(it->second.alg, m.base);
    if (!s)
      s = &it->second.sym;
    else if (!(*s == it->second.sym))
      throw std::invalid_argument("assigned r-matrices do not share their symmetric part");
  }
  if (!s) throw std::invalid_argument("no r-matrices assigned");
  return *s;
}

RMatrix r_gamma(const Moduli& m, const RAssign& assign) {
  common_symmetric_part(m, assign);
  Tensor<Rat> sym(m.gauge.algebra, 2);
  AltTensor<Rat> lam(m.gauge.algebra, 2);
  for (const auto& v : m.graph.vertices()) {
    const auto& cilium = m.graph.order_at(v);
    int k = static_cast<int>(cilium.size());
    if (k == 0) continue;
    const RMatrix& rv = assign.at(v);

    SignFunction eps(k);
    DirectSum local = power_algebra(m.base, k);
    LinearMap<Rat> into_gauge(local.algebra, m.gauge.algebra);
    for (int i = 0; i < k; ++i) {
      const Edge& e = m.graph.edge_of(cilium[i]);
      eps[i] = m.orient.is_source(e, cilium[i]) ? 1 : -1;
      for (int b = 0; b < m.base->dim(); ++b)
        into_gauge.set(local.global(i, b),
                       m.gauge.global(m.gauge_slot_of.at(cilium[i]), b), rat(1));
    }
    RMatrix block = r_power(rv, eps, local);
    sym += into_gauge(block.sym);
    lam += into_gauge(block.antisym);
  }
  return RMatrix::from_parts(sym, lam);
}

InvariantMultivector pi_gamma(const Moduli& m, const RAssign& assign) {
  return m.sigma(r_gamma(m, assign).antisym);
}

Tensor<Rat> sigma_of_s_gamma(const Moduli& m, const RAssign& assign) {
  return m.sigma(r_gamma(m, assign).sym);
}

RMatrix vertex_rmatrix(const Moduli& m, const RAssign& assign) {
  common_symmetric_part(m, assign);
  Tensor<Rat> sym(m.verts.algebra, 2);
  AltTensor<Rat> lam(m.verts.algebra, 2);
  for (size_t vi = 0; vi < m.graph.vertices().size(); ++vi) {
    const auto& v = m.graph.vertices()[vi];
    if (m.graph.order_at(v).empty()) continue;
    const RMatrix& rv = assign.at(v);
    sym += embed_tensor(m.verts, static_cast<int>(vi), rv.sym);
    lam += embed_tensor(m.verts, static_cast<int>(vi), rv.antisym);
  }
  return RMatrix::from_parts(sym, lam);
}

Cobracket vertex_cobracket(const Moduli& m, const RAssign& assign) {
  return delta_r(vertex_rmatrix(m, assign));
}

std::vector<InvariantMultivector> poisson_action_defect(const Moduli& m,
                                                        const InvariantMultivector& pi,
                                                        const LinearMap<Rat>& action,
                                                        const Cobracket& delta) {
  detail::require_same_algebra(pi.alg, m.dbl.algebra);
  detail::require_same_algebra(action.from, delta.alg);
  std::vector<InvariantMultivector> out;
  for (int i = 0; i < delta.alg->dim(); ++i) {
    AltTensor<Rat> rho_x = action(basis_vector(delta.alg, i));
    out.push_back(schouten(rho_x, pi) - action(delta.images[i]));
  }
  return out;
}

int ActionSpace::slot_of(const std::string& name) const {
  for (size_t i = 0; i < slot_names.size(); ++i)
    if (slot_names[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown action slot '" + name + "'");
}

ActionSpace gauge_action(const Moduli& m) {
  return {m.graph.vertices(), m.verts, m.rho};
}

FusionResult fuse_poisson(const InvariantMultivector& pi, const ActionSpace& act,
                          const std::vector<std::string>& fused_slots, const RMatrix& r) {
  if (fused_slots.empty()) throw std::invalid_argument("fusion needs at least one slot");
  int n = static_cast<int>(fused_slots.size());
  for (const auto& name : fused_slots) {
    int s = act.slot_of(name);
    detail::require_same_algebra(act.acting.components[s], r.alg);
  }

  // π' = π − ρ(Mix^n(r) placed in the fused slots, in the given order)
  DirectSum local = power_algebra(r.alg, n);
  LinearMap<Rat> place(local.algebra, act.acting.algebra);
  for (int i = 0; i < n; ++i) {
    int s = act.slot_of(fused_slots[i]);
    for (int b = 0; b < r.alg->dim(); ++b)
      place.set(local.global(i, b), act.acting.global(s, b), rat(1));
  }
  InvariantMultivector pi2 = pi - act.map(place(mix_n(r.full, local)));

  // contracted action: fused slots collapse onto one diagonal slot
  std::string merged = fused_slots[0];
  for (int i = 1; i < n; ++i) merged += "=" + fused_slots[i];
  std::vector<std::string> new_names;
  int insert_at = -1;
  for (const auto& name : act.slot_names) {
    if (name == fused_slots[0]) {
      insert_at = static_cast<int>(new_names.size());
      new_names.push_back(merged);
      continue;
    }
    if (std::find(fused_slots.begin(), fused_slots.end(), name) != fused_slots.end()) continue;
    new_names.push_back(name);
  }
  if (insert_at < 0) throw std::logic_error("fused slot missing from action");

  std::vector<AlgebraPtr> parts;
  for (size_t i = 0; i < new_names.size(); ++i) parts.push_back(r.alg);
  DirectSum acting2 = direct_sum(parts, new_names, act.acting.algebra->name());
  LinearMap<Rat> diag2(acting2.algebra, act.acting.algebra);
  for (size_t i = 0; i < new_names.size(); ++i)
    for (int b = 0; b < r.alg->dim(); ++b) {
      if (static_cast<int>(i) == insert_at) {
        for (const auto& name : fused_slots)
          diag2.set(acting2.global(static_cast<int>(i), b),
                    act.acting.global(act.slot_of(name), b), rat(1));
      } else {
        diag2.set(acting2.global(static_cast<int>(i), b),
                  act.acting.global(act.slot_of(new_names[i]), b), rat(1));
      }
    }
  ActionSpace act2{std::move(new_names), std::move(acting2), compose(act.map, diag2)};
  return {std::move(pi2), std::move(act2)};
}

namespace {

AltTensor<Rat> lambda_block(const ActionSpace& act, const LambdaAssign& lambdas,
                            const Tensor<Rat>* validate_s) {
  AltTensor<Rat> total(act.acting.algebra, 2);
  for (size_t i = 0; i < act.slot_names.size(); ++i) {
    auto it = lambdas.find(act.slot_names[i]);
    if (it == lambdas.end())
      throw std::invalid_argument("slot '" + act.slot_names[i] + "' has no Λ assigned");
    if (validate_s) {
      RMatrix rv = RMatrix::from_parts(*validate_s, it->second);
      if (!cyb_check(rv).ok)
        throw std::invalid_argument("Λ at slot '" + act.slot_names[i] +
                                    "' is not quasitriangular for the supplied s");
    }
    total += embed_tensor(act.acting, static_cast<int>(i), it->second);
  }
  return total;
}

}  // namespace

InvariantMultivector quasi_from_poisson(const InvariantMultivector& pi, const ActionSpace& act,
                                        const LambdaAssign& lambdas,
                                        const Tensor<Rat>* validate_s) {
  return pi - act.map(lambda_block(act, lambdas, validate_s));
}

InvariantMultivector poisson_from_quasi(const InvariantMultivector& q, const ActionSpace& act,
                                        const LambdaAssign& lambdas,
                                        const Tensor<Rat>* validate_s) {
  return q + act.map(lambda_block(act, lambdas, validate_s));
}

InvariantMultivector q_s(const Moduli& m, const Tensor<Rat>& s) {
  detail::require_same_algebra(s.alg, m.base);
  if (!is_symmetric2(s)) throw std::invalid_argument("q_s: s is not symmetric");
  if (!ad_invariant(s)) throw std::invalid_argument("q_s: s is not ad-invariant");
  AltTensor<Rat> total(m.gauge.algebra, 2);
  for (const auto& v : m.graph.vertices()) {
    const auto& cilium = m.graph.order_at(v);
    int k = static_cast<int>(cilium.size());
    if (k < 2) continue;  // Mix over 0 or 1 slots vanishes
    DirectSum local = power_algebra(m.base, k);
    LinearMap<Rat> into_gauge(local.algebra, m.gauge.algebra);
    for (int i = 0; i < k; ++i)
      for (int b = 0; b < m.base->dim(); ++b)
        into_gauge.set(local.global(i, b),
                       m.gauge.global(m.gauge_slot_of.at(cilium[i]), b), rat(1));
    total += into_gauge(mix_n(s, local));
  }
  return -m.sigma(total);
}

AltTensor<Rat> vertex_phi_s(const Moduli& m, const Tensor<Rat>& s) {
  AltTensor<Rat> phi = phi_s(s);
  AltTensor<Rat> out(m.verts.algebra, 3);
  for (size_t vi = 0; vi < m.graph.vertices().size(); ++vi)
    out += embed_tensor(m.verts, static_cast<int>(vi), phi);
  return out;
}

}  // namespace frp
