#include "frpoisson/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace frp {

namespace {

std::string edge_id_of(const std::string& a, const std::string& b) {
  return a < b ? a + ":" + b : b + ":" + a;
}

std::string rename(const std::map<std::string, std::string>& m, const std::string& k) {
  auto it = m.find(k);
  return it == m.end() ? k : it->second;
}

// splitmix64, the portable seed splitter used across the project
std::uint64_t split_seed(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CiliatedGraph::CiliatedGraph(std::vector<std::string> vertices,
                             std::vector<std::string> half_edges,
                             std::map<std::string, std::string> involution,
                             std::map<std::string, std::string> incidence,
                             std::map<std::string, std::vector<std::string>> orders)
    : vertices_(std::move(vertices)),
      half_edges_(std::move(half_edges)),
      involution_(std::move(involution)),
      incidence_(std::move(incidence)),
      orders_(std::move(orders)) {
  validate();
  std::set<std::string> seen;
  for (const auto& h : half_edges_) {
    const std::string& mate = involution_.at(h);
    std::string id = edge_id_of(h, mate);
    if (seen.insert(id).second) {
      Edge e{id, std::min(h, mate), std::max(h, mate)};
      edges_.push_back(std::move(e));
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (size_t i = 0; i < edges_.size(); ++i) edge_index_[edges_[i].id] = static_cast<int>(i);
}

void CiliatedGraph::validate() const {
  std::set<std::string> vset(vertices_.begin(), vertices_.end());
  if (vset.size() != vertices_.size()) throw std::invalid_argument("duplicate vertex id");
  std::set<std::string> hset(half_edges_.begin(), half_edges_.end());
  if (hset.size() != half_edges_.size()) throw std::invalid_argument("duplicate half-edge id");

  for (const auto& h : half_edges_) {
    auto it = involution_.find(h);
    if (it == involution_.end())
      throw std::invalid_argument("half-edge '" + h + "' missing from involution");
    if (it->second == h)
      throw std::invalid_argument("involution fixes half-edge '" + h + "'");
    if (!hset.count(it->second))
      throw std::invalid_argument("involution of '" + h + "' is not a half-edge");
    auto back = involution_.find(it->second);
    if (back == involution_.end() || back->second != h)
      throw std::invalid_argument("involution is not an involution at '" + h + "'");
    auto inc = incidence_.find(h);
    if (inc == incidence_.end())
      throw std::invalid_argument("half-edge '" + h + "' missing from incidence");
    if (!vset.count(inc->second))
      throw std::invalid_argument("half-edge '" + h + "' attached to unknown vertex '" +
                                  inc->second + "'");
  }
  if (involution_.size() != half_edges_.size())
    throw std::invalid_argument("involution mentions unknown half-edges");
  if (incidence_.size() != half_edges_.size())
    throw std::invalid_argument("incidence mentions unknown half-edges");

  // orders partition the half-edges by incidence
  std::set<std::string> covered;
  for (const auto& v : vertices_) {
    auto it = orders_.find(v);
    if (it == orders_.end()) throw std::invalid_argument("vertex '" + v + "' has no cilium order");
    for (const auto& h : it->second) {
      if (!hset.count(h))
        throw std::invalid_argument("cilium of '" + v + "' lists unknown half-edge '" + h + "'");
      if (incidence_.at(h) != v)
        throw std::invalid_argument("cilium of '" + v + "' lists half-edge '" + h +
                                    "' incident to another vertex");
      if (!covered.insert(h).second)
        throw std::invalid_argument("half-edge '" + h + "' appears twice in cilium orders");
    }
  }
  if (covered.size() != half_edges_.size())
    throw std::invalid_argument("cilium orders do not cover all half-edges");
  if (orders_.size() != vertices_.size())
    throw std::invalid_argument("cilium orders mention unknown vertices");
}

const Edge& CiliatedGraph::edge_of(const std::string& half_edge) const {
  const std::string& mate = involution_.at(half_edge);
  return edges_[edge_index_.at(edge_id_of(half_edge, mate))];
}

int CiliatedGraph::edge_index(const std::string& edge_id) const {
  auto it = edge_index_.find(edge_id);
  if (it == edge_index_.end()) throw std::invalid_argument("unknown edge '" + edge_id + "'");
  return it->second;
}

void validate_orientation(const CiliatedGraph& g, const Orientation& o) {
  if (o.source.size() != g.edges().size())
    throw std::invalid_argument("orientation must assign a source to every edge");
  for (const Edge& e : g.edges()) {
    auto it = o.source.find(e.id);
    if (it == o.source.end())
      throw std::invalid_argument("edge '" + e.id + "' has no orientation");
    if (it->second != e.h1 && it->second != e.h2)
      throw std::invalid_argument("source of edge '" + e.id + "' is not one of its half-edges");
  }
}

CiliatedGraph fuse(const CiliatedGraph& g, const std::string& v1, const std::string& v2) {
  if (v1 == v2) throw std::invalid_argument("fusion requires two distinct vertices");
  if (!g.has_vertex(v1)) throw std::invalid_argument("unknown vertex '" + v1 + "'");
  if (!g.has_vertex(v2)) throw std::invalid_argument("unknown vertex '" + v2 + "'");

  std::string merged = v1 + "=" + v2;
  std::vector<std::string> vertices;
  for (const auto& v : g.vertices()) {
    if (v == v1)
      vertices.push_back(merged);
    else if (v != v2)
      vertices.push_back(v);
  }

  std::map<std::string, std::string> incidence = g.incidence();
  for (auto& [h, v] : incidence)
    if (v == v1 || v == v2) v = merged;

  std::map<std::string, std::vector<std::string>> orders;
  for (const auto& [v, list] : g.orders()) {
    if (v == v1 || v == v2) continue;
    orders[v] = list;
  }
  std::vector<std::string> fused_order = g.order_at(v1);
  const auto& second = g.order_at(v2);
  fused_order.insert(fused_order.end(), second.begin(), second.end());
  orders[merged] = std::move(fused_order);

  return CiliatedGraph(vertices, g.half_edges(), g.involution(), incidence, orders);
}

CiliatedGraph disjoint_union(const CiliatedGraph& a, const CiliatedGraph& b) {
  std::vector<std::string> vertices = a.vertices();
  for (const auto& v : b.vertices()) {
    if (a.has_vertex(v)) throw std::invalid_argument("vertex id collision: '" + v + "'");
    vertices.push_back(v);
  }
  std::vector<std::string> half_edges = a.half_edges();
  for (const auto& h : b.half_edges()) {
    if (a.involution().count(h)) throw std::invalid_argument("half-edge id collision: '" + h + "'");
    half_edges.push_back(h);
  }
  auto merge = [](auto m1, const auto& m2) {
    m1.insert(m2.begin(), m2.end());
    return m1;
  };
  return CiliatedGraph(vertices, half_edges, merge(a.involution(), b.involution()),
                       merge(a.incidence(), b.incidence()), merge(a.orders(), b.orders()));
}

CiliatedGraph relabel(const CiliatedGraph& g, const std::map<std::string, std::string>& vmap,
                      const std::map<std::string, std::string>& hmap) {
  std::vector<std::string> vertices, half_edges;
  for (const auto& v : g.vertices()) vertices.push_back(rename(vmap, v));
  for (const auto& h : g.half_edges()) half_edges.push_back(rename(hmap, h));
  std::map<std::string, std::string> involution, incidence;
  for (const auto& [h, m] : g.involution()) involution[rename(hmap, h)] = rename(hmap, m);
  for (const auto& [h, v] : g.incidence()) incidence[rename(hmap, h)] = rename(vmap, v);
  std::map<std::string, std::vector<std::string>> orders;
  for (const auto& [v, list] : g.orders()) {
    std::vector<std::string> renamed;
    for (const auto& h : list) renamed.push_back(rename(hmap, h));
    orders[rename(vmap, v)] = std::move(renamed);
  }
  return CiliatedGraph(vertices, half_edges, involution, incidence, orders);
}

Orientation relabel(const Orientation& o, const CiliatedGraph& relabeled_from,
                    const std::map<std::string, std::string>& hmap) {
  (void)relabeled_from;
  Orientation out;
  for (const auto& [eid, src] : o.source) {
    auto sep = eid.find(':');
    std::string h1 = rename(hmap, eid.substr(0, sep)), h2 = rename(hmap, eid.substr(sep + 1));
    out.source[edge_id_of(h1, h2)] = rename(hmap, src);
  }
  return out;
}

namespace {

// Shared pattern check: γ1 ends at v2, γ2 leaves v2, and at v2 the source of
// γ2 immediately precedes the end of γ1.
struct MovePattern {
  std::string end1;   // end half-edge of γ1 (the one that moves)
  std::string src2;   // source half-edge of γ2 at v2
  std::string end2;   // end half-edge of γ2 at v3
  std::string v1, v2, v3;
};

std::optional<MovePattern> match_pattern(const CiliatedGraph& g, const Orientation& o,
                                         const std::string& moved_edge_id,
                                         const std::string& via_edge_id) {
  if (moved_edge_id == via_edge_id) return std::nullopt;
  const Edge& e1 = g.edges()[g.edge_index(moved_edge_id)];
  const Edge& e2 = g.edges()[g.edge_index(via_edge_id)];
  MovePattern p;
  p.end1 = o.target_of(e1);
  p.src2 = o.source_of(e2);
  p.end2 = o.target_of(e2);
  p.v1 = g.vertex_of(o.source_of(e1));
  p.v2 = g.vertex_of(p.end1);
  p.v3 = g.vertex_of(p.end2);
  if (g.vertex_of(p.src2) != p.v2) return std::nullopt;
  const auto& order = g.order_at(p.v2);
  for (size_t i = 0; i + 1 < order.size(); ++i)
    if (order[i] == p.src2 && order[i + 1] == p.end1) return p;
  return std::nullopt;
}

CiliatedGraph rebase_half_edge(const CiliatedGraph& g, const std::string& h,
                               const std::string& to_vertex, const std::string& anchor,
                               bool before_anchor) {
  std::map<std::string, std::string> incidence = g.incidence();
  std::string from_vertex = incidence.at(h);
  incidence[h] = to_vertex;
  std::map<std::string, std::vector<std::string>> orders = g.orders();
  auto& src_list = orders.at(from_vertex);
  src_list.erase(std::find(src_list.begin(), src_list.end(), h));
  auto& dst_list = orders.at(to_vertex);
  auto pos = std::find(dst_list.begin(), dst_list.end(), anchor);
  dst_list.insert(before_anchor ? pos : pos + 1, h);
  return CiliatedGraph(g.vertices(), g.half_edges(), g.involution(), incidence, orders);
}

}  // namespace

LocalMoveResult local_move(const CiliatedGraph& g, const Orientation& o,
                           const std::string& moved_edge_id, const std::string& via_edge_id) {
  auto p = match_pattern(g, o, moved_edge_id, via_edge_id);
  if (!p)
    throw std::invalid_argument("edges ('" + moved_edge_id + "', '" + via_edge_id +
                                "') do not match the local move pattern");
  // slide the end of γ1 along γ2: it lands just before γ2's end half-edge
  CiliatedGraph moved = rebase_half_edge(g, p->end1, p->v3, p->end2, /*before_anchor=*/true);
  return {std::move(moved), o, {moved_edge_id, via_edge_id, p->v2, p->v3}};
}

LocalMoveResult local_move_undo(const CiliatedGraph& g, const Orientation& o,
                                const LocalMoveRecord& record) {
  const Edge& e1 = g.edges()[g.edge_index(record.moved_edge)];
  const Edge& e2 = g.edges()[g.edge_index(record.via_edge)];
  const std::string& end1 = o.target_of(e1);
  const std::string& src2 = o.source_of(e2);
  if (g.vertex_of(end1) != record.to_vertex)
    throw std::invalid_argument("record does not describe a move applied to this graph");
  CiliatedGraph moved = rebase_half_edge(g, end1, record.from_vertex, src2, /*before_anchor=*/false);
  return {std::move(moved), o, record};
}

std::vector<std::pair<std::string, std::string>> local_move_pivots(const CiliatedGraph& g,
                                                                   const Orientation& o) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Edge& e1 : g.edges())
    for (const Edge& e2 : g.edges())
      if (match_pattern(g, o, e1.id, e2.id)) out.emplace_back(e1.id, e2.id);
  return out;
}

Orientation reverse_edge(const CiliatedGraph& g, const Orientation& o,
                         const std::string& edge_id) {
  const Edge& e = g.edges()[g.edge_index(edge_id)];
  Orientation out = o;
  out.source[e.id] = o.source_of(e) == e.h1 ? e.h2 : e.h1;
  return out;
}

bool graph_equal(const CiliatedGraph& a, const CiliatedGraph& b,
                 const std::map<std::string, std::string>& vertex_map,
                 const std::map<std::string, std::string>& half_edge_map) {
  CiliatedGraph a2 = relabel(a, vertex_map, half_edge_map);
  std::set<std::string> va(a2.vertices().begin(), a2.vertices().end());
  std::set<std::string> vb(b.vertices().begin(), b.vertices().end());
  return va == vb && a2.involution() == b.involution() && a2.incidence() == b.incidence() &&
         a2.orders() == b.orders();
}

OrientedGraph disk2() {
  CiliatedGraph g({"v1", "v2"}, {"a", "b"}, {{"a", "b"}, {"b", "a"}},
                  {{"a", "v1"}, {"b", "v2"}}, {{"v1", {"a"}}, {"v2", {"b"}}});
  Orientation o;
  o.source[g.edges()[0].id] = "a";
  return {std::move(g), std::move(o)};
}

OrientedGraph sigma_n(int n) {
  if (n < 1) throw std::invalid_argument("sigma_n needs n >= 1");
  std::vector<std::string> half_edges;
  std::map<std::string, std::string> involution, incidence;
  std::vector<std::string> at_v1, at_v2;
  Orientation o;
  for (int i = 1; i <= n; ++i) {
    std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    half_edges.push_back(a);
    half_edges.push_back(b);
    involution[a] = b;
    involution[b] = a;
    incidence[a] = "v1";
    incidence[b] = "v2";
    at_v1.push_back(a);
    o.source[edge_id_of(a, b)] = a;
  }
  for (int i = n; i >= 1; --i) at_v2.push_back("b" + std::to_string(i));
  CiliatedGraph g({"v1", "v2"}, half_edges, involution, incidence,
                  {{"v1", at_v1}, {"v2", at_v2}});
  return {std::move(g), std::move(o)};
}

OrientedGraph polygon_path(int k) {
  if (k < 1) throw std::invalid_argument("polygon_path needs k >= 1");
  std::vector<std::string> vertices, half_edges;
  std::map<std::string, std::string> involution, incidence;
  std::map<std::string, std::vector<std::string>> orders;
  Orientation o;
  for (int i = 1; i <= k + 1; ++i) {
    vertices.push_back("v" + std::to_string(i));
    orders["v" + std::to_string(i)] = {};
  }
  for (int i = 1; i <= k; ++i) {
    std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    half_edges.push_back(a);
    half_edges.push_back(b);
    involution[a] = b;
    involution[b] = a;
    incidence[a] = "v" + std::to_string(i);
    incidence[b] = "v" + std::to_string(i + 1);
    orders["v" + std::to_string(i)].push_back(a);      // outgoing after incoming
    orders["v" + std::to_string(i + 1)].push_back(b);  // incoming lands first
    o.source[edge_id_of(a, b)] = a;
  }
  CiliatedGraph g(vertices, half_edges, involution, incidence, orders);
  return {std::move(g), std::move(o)};
}

OrientedGraph annulus_marked(int m) {
  if (m < 1) throw std::invalid_argument("annulus_marked needs m >= 1");
  if (m == 1) {
    auto d = disk2();
    CiliatedGraph g = fuse(d.graph, "v1", "v2");
    return {std::move(g), d.orientation};
  }
  // m disks u_i -> w_i, chained w_i = u_{i+1}, then closed at (u1, wm)
  auto disk_i = [](int i) {
    std::string u = "u" + std::to_string(i), w = "w" + std::to_string(i);
    std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    return CiliatedGraph({u, w}, {a, b}, {{a, b}, {b, a}}, {{a, u}, {b, w}},
                         {{u, {a}}, {w, {b}}});
  };
  Orientation o;
  CiliatedGraph g = disk_i(1);
  for (int i = 2; i <= m; ++i) g = disjoint_union(g, disk_i(i));
  for (int i = 1; i <= m; ++i)
    o.source[edge_id_of("a" + std::to_string(i), "b" + std::to_string(i))] =
        "a" + std::to_string(i);
  for (int i = 2; i <= m; ++i)
    g = fuse(g, "w" + std::to_string(i - 1), "u" + std::to_string(i));
  // the chain names merged vertices "w_{i-1}=u_i"; close the ring
  g = fuse(g, "u1", "w" + std::to_string(m));
  return {std::move(g), std::move(o)};
}

OrientedGraph random_graph(std::uint64_t seed, int max_vertices, int max_edges) {
  std::uint64_t state = seed;
  auto pick = [&](int n) { return static_cast<int>(split_seed(state) % n); };

  int nv = 1 + pick(max_vertices);
  int ne = 1 + pick(max_edges);
  // enough edges that the sweep below leaves no vertex isolated
  ne = std::max(ne, (nv + 1) / 2);

  std::vector<std::string> vertices;
  for (int v = 1; v <= nv; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<std::string> half_edges;
  std::map<std::string, std::string> involution, incidence;
  std::map<std::string, std::vector<std::string>> orders;
  for (const auto& v : vertices) orders[v] = {};
  Orientation o;

  for (int e = 1; e <= ne; ++e) {
    std::string a = "a" + std::to_string(e), b = "b" + std::to_string(e);
    half_edges.push_back(a);
    half_edges.push_back(b);
    involution[a] = b;
    involution[b] = a;
    // the first edges sweep the vertices so that none stays isolated
    int va = (2 * (e - 1)) % nv;
    int vb = (2 * (e - 1) + 1) % nv;
    if (2 * (e - 1) >= nv) {
      va = pick(nv);
      vb = pick(nv);
    }
    incidence[a] = vertices[va];
    incidence[b] = vertices[vb];
    auto insert_random = [&](const std::string& v, const std::string& h) {
      auto& list = orders[v];
      list.insert(list.begin() + pick(static_cast<int>(list.size()) + 1), h);
    };
    insert_random(vertices[va], a);
    insert_random(vertices[vb], b);
    o.source[edge_id_of(a, b)] = split_seed(state) % 2 == 0 ? a : b;
  }
  CiliatedGraph g(vertices, half_edges, involution, incidence, orders);
  return {std::move(g), std::move(o)};
}

}  // namespace frp
