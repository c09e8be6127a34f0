#include "frpoisson/checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "frpoisson/numerics.hpp"

namespace frp {

const std::vector<std::string>& check_registry() {
  static const std::vector<std::string> registry = {
      "cyb",
      "section2",
      "rgamma_cyb",
      "sgamma_symmetric_part",
      "jacobi",
      "gauge_poisson",
      "quasi",
      "qs_lambda_independence",
      "orientation_independence",
      "local_move_independence",
      "fusion_theorem",
      "polyuble_multiplicativity",
      "gauge_equivariance",
  };
  return registry;
}

namespace {

std::string first_tuple(const AltTensor<Rat>& t) {
  if (t.coeff.empty()) return "";
  const auto& [m, v] = *t.coeff.begin();
  std::string s = "(";
  for (int k = 0; k < m.size(); ++k) s += (k ? "," : "") + t.alg->label(m[k]);
  return s + ") = " + rat_str(v);
}

struct Ctx {
  const Scenario& s;
  ModuliPtr m;
  std::optional<Rep> rep;
  RAssign assign;

  explicit Ctx(const Scenario& sc) : s(sc) {
    if (s.graph) {
      m = make_moduli(s.graph->graph, s.graph->orientation, s.algebra);
      assign = s.resolved_assignment();
    }
    if (s.algebra->has_rep()) rep.emplace(s.algebra);
  }

  std::uint64_t check_seed(const std::string& name) const {
    const auto& reg = check_registry();
    auto it = std::find(reg.begin(), reg.end(), name);
    SplitMix64 rng(s.seed);
    return rng.split(static_cast<std::uint64_t>(it - reg.begin()) + 1).state;
  }
};

CheckResult check_cyb(Ctx& c) {
  CheckResult out{"cyb", "pass", 0, ""};
  for (const auto& [name, r] : c.s.rmatrices) {
    CybResult res = cyb_check(r);
    if (!res.ok) {
      out.verdict = "fail";
      out.witness = std::max(out.witness, res.defect.max_abs());
      out.detail += (out.detail.empty() ? "" : "; ") + name + ": defect " + first_tuple(res.defect);
    }
  }
  if (out.verdict == "pass") out.detail = std::to_string(c.s.rmatrices.size()) + " r-matrices, exact";
  return out;
}

CheckResult check_section2(Ctx& c) {
  CheckResult out{"section2", "pass", 0, ""};
  int total = 0;
  for (const auto& [name, r] : c.s.rmatrices) {
    Section2Report rep2 = verify_section2(r, c.s.n_max);
    total += rep2.checks_run;
    if (!rep2.ok) {
      out.verdict = "fail";
      const Section2Failure& f = rep2.failures.front();
      out.detail += (out.detail.empty() ? "" : "; ") + name + ": clause " + f.clause + " at n=" +
                    std::to_string(f.n) + " (" + f.detail + ")";
    }
  }
  if (out.verdict == "pass")
    out.detail = std::to_string(total) + " clause instances up to n_max=" +
                 std::to_string(c.s.n_max) + ", exact";
  return out;
}

CheckResult check_rgamma_cyb(Ctx& c) {
  RMatrix rg = r_gamma(*c.m, c.assign);
  CybResult res = cyb_check(rg);
  if (res.ok) return {"rgamma_cyb", "pass", 0, "exact on the gauge algebra"};
  return {"rgamma_cyb", "fail", res.defect.max_abs(), "defect " + first_tuple(res.defect)};
}

CheckResult check_sgamma(Ctx& c) {
  // exact block identity: sym(r_Γ) = Σ_γ (s)_{α_γ} − (s)_{α̌_γ}
  RMatrix rg = r_gamma(*c.m, c.assign);
  Tensor<Rat> s = common_symmetric_part(*c.m, c.assign);
  Tensor<Rat> expected(c.m->gauge.algebra, 2);
  for (const Edge& e : c.m->graph.edges()) {
    const std::string& src = c.m->orient.source_of(e);
    const std::string& tgt = c.m->orient.target_of(e);
    LinearMap<Rat> into_src(c.m->base, c.m->gauge.algebra);
    LinearMap<Rat> into_tgt(c.m->base, c.m->gauge.algebra);
    for (int b = 0; b < c.m->base->dim(); ++b) {
      into_src.set(b, c.m->gauge.global(c.m->gauge_slot_of.at(src), b), rat(1));
      into_tgt.set(b, c.m->gauge.global(c.m->gauge_slot_of.at(tgt), b), rat(1));
    }
    expected += into_src(s) - into_tgt(s);
  }
  if (!(rg.sym == expected))
    return {"sgamma_symmetric_part", "fail", 0, "sym(r_gamma) != source/end block formula"};

  FieldVerdict v = field_is_zero(*c.m, *c.rep, c.m->sigma(rg.sym), c.s.samples, c.s.tol,
                                 c.check_seed("sgamma_symmetric_part"), c.s.scale);
  return {"sgamma_symmetric_part", v.zero ? "sampled-pass" : "fail", v.witness,
          "block identity exact; sigma(s_gamma) sampled at " + std::to_string(v.samples) +
              " points"};
}

CheckResult check_jacobi(Ctx& c) {
  InvariantMultivector pi = pi_gamma(*c.m, c.assign);
  AltTensor<Rat> jac = schouten(pi, pi);
  if (jac.zero()) return {"jacobi", "pass", 0, "[pi,pi] = 0 exactly"};
  FieldVerdict v =
      field_is_zero(*c.m, *c.rep, jac, c.s.samples, c.s.tol, c.check_seed("jacobi"), c.s.scale);
  return {"jacobi", v.zero ? "sampled-pass" : "fail", v.witness,
          "[pi,pi] nonzero in the double; sampled at " + std::to_string(v.samples) + " points"};
}

CheckResult check_gauge_poisson(Ctx& c) {
  InvariantMultivector pi = pi_gamma(*c.m, c.assign);
  Cobracket delta = vertex_cobracket(*c.m, c.assign);
  std::vector<InvariantMultivector> defects = poisson_action_defect(*c.m, pi, c.m->rho, delta);
  double witness = 0;
  bool ok = true;
  std::uint64_t seed = c.check_seed("gauge_poisson");
  for (size_t i = 0; i < defects.size(); ++i) {
    if (defects[i].zero()) continue;
    FieldVerdict v = field_is_zero(*c.m, *c.rep, defects[i], c.s.samples, c.s.tol,
                                   seed + 17 * i, c.s.scale);
    witness = std::max(witness, v.witness);
    ok = ok && v.zero;
  }
  return {"gauge_poisson", ok ? "sampled-pass" : "fail", witness,
          std::to_string(defects.size()) + " basis defects sampled"};
}

CheckResult check_quasi(Ctx& c) {
  InvariantMultivector pi = pi_gamma(*c.m, c.assign);
  ActionSpace act = gauge_action(*c.m);
  LambdaAssign lambdas;
  for (const auto& v : c.m->graph.vertices())
    lambdas.emplace(v, c.assign.count(v) ? c.assign.at(v).antisym
                                         : AltTensor<Rat>(c.m->base, 2));
  InvariantMultivector q = quasi_from_poisson(pi, act, lambdas);
  if (!(poisson_from_quasi(q, act, lambdas) == pi))
    return {"quasi", "fail", 0, "round-trip is not the identity"};

  Tensor<Rat> s = common_symmetric_part(*c.m, c.assign);
  AltTensor<Rat> defect = schouten(q, q) - c.m->rho(vertex_phi_s(*c.m, s));
  std::uint64_t seed = c.check_seed("quasi");
  double witness = 0;
  bool ok = true;
  if (!defect.zero()) {
    FieldVerdict v = field_is_zero(*c.m, *c.rep, defect, c.s.samples, c.s.tol, seed, c.s.scale);
    witness = v.witness;
    ok = v.zero;
  }
  for (int i = 0; i < c.m->verts.algebra->dim(); ++i) {
    AltTensor<Rat> inv = schouten(c.m->rho(basis_vector(c.m->verts.algebra, i)), q);
    if (inv.zero()) continue;
    FieldVerdict v =
        field_is_zero(*c.m, *c.rep, inv, c.s.samples, c.s.tol, seed + 101 + i, c.s.scale);
    witness = std::max(witness, v.witness);
    ok = ok && v.zero;
  }
  return {"quasi", ok ? "sampled-pass" : "fail", witness,
          "round-trip exact; [Q,Q]-rho(phi_s) and invariance sampled"};
}

CheckResult check_qs_independence(Ctx& c) {
  Tensor<Rat> s = common_symmetric_part(*c.m, c.assign);
  InvariantMultivector qs = q_s(*c.m, s);
  ActionSpace act = gauge_action(*c.m);

  auto q_via = [&](const RAssign& assign) {
    LambdaAssign lambdas;
    for (const auto& v : c.m->graph.vertices())
      lambdas.emplace(v, assign.count(v) ? assign.at(v).antisym : AltTensor<Rat>(c.m->base, 2));
    return quasi_from_poisson(pi_gamma(*c.m, assign), act, lambdas);
  };

  RAssign bar;
  for (const auto& [v, r] : c.assign) bar.emplace(v, r.bar());
  bool ok = q_via(c.assign) == qs && q_via(bar) == qs;
  return {"qs_lambda_independence", ok ? "pass" : "fail", 0,
          ok ? "q_s equals quasi_from_poisson for Λ and -Λ, exactly"
             : "q_s differs from quasi_from_poisson"};
}

CheckResult check_orientation(Ctx& c) {
  InvariantMultivector pi = pi_gamma(*c.m, c.assign);
  SplitMix64 rng(c.check_seed("orientation_independence"));
  double witness = 0;
  for (const Edge& e : c.m->graph.edges()) {
    Orientation o2 = reverse_edge(c.m->graph, c.m->orient, e.id);
    ModuliPtr m2 = make_moduli(c.m->graph, o2, c.m->base);
    InvariantMultivector pi2 = pi_gamma(*m2, c.assign);
    for (int k = 0; k < c.s.samples; ++k) {
      GroupPoint p = random_point(*c.m, *c.rep, rng.split(k + 1).state, c.s.scale);
      AltTensor<double> pushed =
          pushforward_reverse(*c.m, *c.rep, evaluate(*c.m, *c.rep, pi, p), p, e.id);
      AltTensor<double> there =
          evaluate(*c.m, *c.rep, pi2, point_reverse(*c.m, *c.rep, p, e.id));
      witness = std::max(witness, (pushed - there).max_abs());
    }
    rng.next();
  }
  return {"orientation_independence", witness <= c.s.tol ? "sampled-pass" : "fail", witness,
          std::to_string(c.m->graph.edges().size()) + " edges reversed"};
}

CheckResult check_local_move(Ctx& c) {
  std::vector<std::pair<std::string, std::string>> pivots;
  if (c.s.pivot)
    pivots.push_back(*c.s.pivot);
  else
    pivots = local_move_pivots(c.m->graph, c.m->orient);
  if (pivots.empty())
    return {"local_move_independence", "fail", 0, "no local-move pivot in this graph"};

  InvariantMultivector pi = pi_gamma(*c.m, c.assign);
  SplitMix64 rng(c.check_seed("local_move_independence"));
  double witness = 0;
  for (const auto& [moved, via] : pivots) {
    LocalMoveResult res = local_move(c.m->graph, c.m->orient, moved, via);
    ModuliPtr m2 = make_moduli(res.graph, res.orientation, c.m->base);
    InvariantMultivector pi2 = pi_gamma(*m2, c.assign);
    for (int k = 0; k < c.s.samples; ++k) {
      GroupPoint p = random_point(*c.m, *c.rep, rng.split(k + 1).state, c.s.scale);
      AltTensor<double> pushed =
          pushforward_local_move(*c.m, *c.rep, evaluate(*c.m, *c.rep, pi, p), p, res.record);
      AltTensor<double> there =
          evaluate(*c.m, *c.rep, pi2, point_local_move(*c.m, p, res.record));
      witness = std::max(witness, (pushed - there).max_abs());
    }
    rng.next();
  }
  return {"local_move_independence", witness <= c.s.tol ? "sampled-pass" : "fail", witness,
          std::to_string(pivots.size()) + " pivots checked"};
}

bool maps_equal(const LinearMap<Rat>& a, const LinearMap<Rat>& b) {
  if (a.cols.size() != b.cols.size()) return false;
  auto norm = [](const std::vector<std::pair<int, Rat>>& col) {
    std::map<int, Rat> m;
    for (const auto& [k, v] : col) m[k] += v;
    std::erase_if(m, [](const auto& e) { return is_zero(e.second); });
    return m;
  };
  for (size_t i = 0; i < a.cols.size(); ++i)
    if (norm(a.cols[i]) != norm(b.cols[i])) return false;
  return true;
}

CheckResult check_fusion(Ctx& c) {
  std::vector<std::string> pair = c.s.fuse;
  if (pair.empty()) {
    const auto& vs = c.m->graph.vertices();
    for (size_t i = 0; i < vs.size() && pair.empty(); ++i)
      for (size_t j = 0; j < vs.size() && pair.empty(); ++j) {
        if (i == j) continue;
        if (c.assign.count(vs[i]) && c.assign.count(vs[j]) &&
            c.assign.at(vs[i]) == c.assign.at(vs[j]))
          pair = {vs[i], vs[j]};
      }
    if (pair.empty())
      return {"fusion_theorem", "fail", 0, "no vertex pair with equal r-matrices"};
  }
  const RMatrix& rv = c.assign.at(pair[0]);
  if (!(rv == c.assign.at(pair[1])))
    return {"fusion_theorem", "fail", 0, "r-matrices at the fused vertices differ"};

  FusionResult fused = fuse_poisson(pi_gamma(*c.m, c.assign), gauge_action(*c.m), pair, rv);

  CiliatedGraph g2 = fuse(c.m->graph, pair[0], pair[1]);
  ModuliPtr m2 = make_moduli(g2, c.m->orient, c.m->base);
  RAssign assign2 = c.assign;
  assign2.erase(pair[0]);
  assign2.erase(pair[1]);
  assign2.emplace(pair[0] + "=" + pair[1], rv);
  InvariantMultivector pi2 = pi_gamma(*m2, assign2);

  bool pi_ok = fused.pi.coeff == pi2.coeff;
  bool act_ok = maps_equal(fused.action.map, m2->rho) &&
                fused.action.slot_names == m2->graph.vertices();
  if (pi_ok && act_ok)
    return {"fusion_theorem", "pass", 0,
            "fuse_poisson(" + pair[0] + "," + pair[1] + ") = pi of the fused graph, exactly"};
  return {"fusion_theorem", "fail", 0,
          std::string(pi_ok ? "" : "bivectors differ; ") + (act_ok ? "" : "actions differ")};
}

CheckResult check_polyuble(Ctx& c) {
  const auto& vs = c.m->graph.vertices();
  if (vs.size() != 2)
    return {"polyuble_multiplicativity", "fail", 0, "graph must have exactly two vertices"};
  for (const Edge& e : c.m->graph.edges()) {
    if (c.m->graph.vertex_of(c.m->orient.source_of(e)) != vs[0] ||
        c.m->graph.vertex_of(c.m->orient.target_of(e)) != vs[1])
      return {"polyuble_multiplicativity", "fail", 0,
              "edges must all run from " + vs[0] + " to " + vs[1]};
  }
  AltTensor<Rat> sum = c.assign.at(vs[0]).antisym + c.assign.at(vs[1]).antisym;
  if (!sum.zero())
    return {"polyuble_multiplicativity", "fail", 0, "needs Λ_2 = −Λ_1"};

  InvariantMultivector pi = pi_gamma(*c.m, c.assign);
  SplitMix64 rng(c.check_seed("polyuble_multiplicativity"));
  double witness = 0;
  for (int k = 0; k < c.s.samples; ++k) {
    GroupPoint p = random_point(*c.m, *c.rep, rng.split(2 * k + 1).state, c.s.scale);
    GroupPoint q = random_point(*c.m, *c.rep, rng.split(2 * k + 2).state, c.s.scale);
    witness = std::max(witness, multiplicativity_residual(*c.m, *c.rep, pi, p, q));
  }
  return {"polyuble_multiplicativity", witness <= c.s.tol ? "sampled-pass" : "fail", witness,
          std::to_string(c.s.samples) + " point pairs"};
}

CheckResult check_equivariance(Ctx& c) {
  SplitMix64 rng(c.check_seed("gauge_equivariance"));
  double witness = 0;
  for (int k = 0; k < c.s.samples; ++k) {
    GroupPoint p = random_point(*c.m, *c.rep, rng.split(3 * k + 1).state, c.s.scale);
    PathWord w = random_word(*c.m, rng.split(3 * k + 2).state, 4);
    SplitMix64 hr = rng.split(3 * k + 3);
    std::map<std::string, Eigen::MatrixXd> h;
    for (const auto& v : c.m->graph.vertices()) h[v] = random_group_matrix(*c.rep, hr, c.s.scale);
    auto [theta, tau] = word_endpoints(*c.m, w);
    Eigen::MatrixXd lhs = ev_word(*c.m, *c.rep, gauge_transform(*c.m, p, h), w);
    Eigen::MatrixXd rhs = h.at(theta).inverse() * ev_word(*c.m, *c.rep, p, w) * h.at(tau);
    witness = std::max(witness, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return {"gauge_equivariance", witness <= c.s.tol ? "sampled-pass" : "fail", witness,
          std::to_string(c.s.samples) + " random words and gauges"};
}

}  // namespace

Report run_checks(const Scenario& s) {
  using Clock = std::chrono::steady_clock;
  Report report;
  report.scenario_name = s.name;
  report.seed = s.seed;
  report.tol = s.tol;
  report.samples = s.samples;
  report.checks = s.checks;

  Ctx ctx(s);
  const std::map<std::string, std::function<CheckResult(Ctx&)>> table = {
      {"cyb", check_cyb},
      {"section2", check_section2},
      {"rgamma_cyb", check_rgamma_cyb},
      {"sgamma_symmetric_part", check_sgamma},
      {"jacobi", check_jacobi},
      {"gauge_poisson", check_gauge_poisson},
      {"quasi", check_quasi},
      {"qs_lambda_independence", check_qs_independence},
      {"orientation_independence", check_orientation},
      {"local_move_independence", check_local_move},
      {"fusion_theorem", check_fusion},
      {"polyuble_multiplicativity", check_polyuble},
      {"gauge_equivariance", check_equivariance},
  };

  auto t0 = Clock::now();
  // fixed registry order regardless of the scenario's listing order
  for (const auto& name : check_registry()) {
    if (std::find(s.checks.begin(), s.checks.end(), name) == s.checks.end()) continue;
    auto it = table.find(name);
    if (it == table.end()) throw SchemaError("/checks", "unknown check '" + name + "'");
    auto c0 = Clock::now();
    CheckResult res = it->second(ctx);
    auto c1 = Clock::now();
    report.per_check_ms[name] = std::chrono::duration<double, std::milli>(c1 - c0).count();
    report.all_pass = report.all_pass && res.verdict != "fail";
    report.results.push_back(std::move(res));
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return report;
}

std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json") {
    Json body;
    body["schema_version"] = "1";
    body["scenario"] = r.scenario_name;
    body["config"] = {{"seed", r.seed}, {"tol", r.tol}, {"samples", r.samples},
                      {"checks", r.checks}};
    Json results = Json::array();
    for (const auto& res : r.results)
      results.push_back({{"check", res.check},
                         {"verdict", res.verdict},
                         {"witness", res.witness},
                         {"detail", res.detail}});
    body["results"] = std::move(results);
    body["all_pass"] = r.all_pass;
    Json envelope;
    envelope["wall_time_ms"] = r.wall_ms;
    envelope["per_check_ms"] = r.per_check_ms;
    Json doc;
    doc["report"] = std::move(body);
    doc["envelope"] = std::move(envelope);
    return doc.dump(2) + "\n";
  }
  if (format != "text") throw std::invalid_argument("unknown report format '" + format + "'");

  std::ostringstream out;
  out << "scenario: " << (r.scenario_name.empty() ? "(unnamed)" : r.scenario_name) << "  seed "
      << r.seed << "  tol " << r.tol << "  samples " << r.samples << "\n";
  for (const auto& res : r.results) {
    char witness[32];
    std::snprintf(witness, sizeof witness, "%.3e", res.witness);
    std::string verdict = res.verdict == "pass"           ? "[PASS]        "
                          : res.verdict == "sampled-pass" ? "[SAMPLED-PASS]"
                                                          : "[FAIL]        ";
    out << verdict << " " << res.check;
    for (size_t pad = res.check.size(); pad < 26; ++pad) out << ' ';
    out << " witness " << witness;
    if (!res.detail.empty()) out << "  " << res.detail;
    out << "\n";
  }
  out << (r.all_pass ? "result: ALL PASS" : "result: FAILURES") << " (" << r.results.size()
      << " checks)\n";
  return out.str();
}

}  // namespace frp
