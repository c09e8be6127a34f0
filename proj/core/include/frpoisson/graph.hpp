// Ciliated graphs: half-edge combinatorics with a linear order (cilium) at
// every vertex, edge orientations, fusion, the two-edge local move, and the
// standard builders (disk, annulus, Σ_n, path).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace frp {

struct Edge {
  std::string id;  // lexicographically sorted half-edge pair joined by ":"
  std::string h1, h2;  // h1 < h2

  friend bool operator==(const Edge& a, const Edge& b) { return a.id == b.id; }
};

class CiliatedGraph {
 public:
  CiliatedGraph(std::vector<std::string> vertices, std::vector<std::string> half_edges,
                std::map<std::string, std::string> involution,
                std::map<std::string, std::string> incidence,
                std::map<std::string, std::vector<std::string>> orders);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::string>& half_edges() const { return half_edges_; }
  const std::map<std::string, std::string>& involution() const { return involution_; }
  const std::map<std::string, std::string>& incidence() const { return incidence_; }
  const std::map<std::string, std::vector<std::string>>& orders() const { return orders_; }

  const std::string& mate(const std::string& h) const { return involution_.at(h); }
  const std::string& vertex_of(const std::string& h) const { return incidence_.at(h); }
  const std::vector<std::string>& order_at(const std::string& v) const { return orders_.at(v); }
  bool has_vertex(const std::string& v) const { return orders_.count(v) != 0; }

  // Edges as sorted half-edge pairs, listed in lexicographic id order.
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge_of(const std::string& half_edge) const;
  int edge_index(const std::string& edge_id) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> half_edges_;
  std::map<std::string, std::string> involution_;
  std::map<std::string, std::string> incidence_;
  std::map<std::string, std::vector<std::string>> orders_;
  std::vector<Edge> edges_;
  std::map<std::string, int> edge_index_;

  void validate() const;
};

struct Orientation {
  std::map<std::string, std::string> source;  // edge id -> source half-edge

  const std::string& source_of(const Edge& e) const { return source.at(e.id); }
  const std::string& target_of(const Edge& e) const {
    const std::string& s = source.at(e.id);
    return s == e.h1 ? e.h2 : e.h1;
  }
  bool is_source(const Edge& e, const std::string& h) const { return source.at(e.id) == h; }
};

// Checks that every edge has a source half-edge belonging to it.
void validate_orientation(const CiliatedGraph& g, const Orientation& o);

// Fusion at (v1, v2): the vertices are identified as "v1=v2" and the cilium of
// the fused vertex is v1's list followed by v2's list. Associative, not
// commutative.
CiliatedGraph fuse(const CiliatedGraph& g, const std::string& v1, const std::string& v2);

// Disjoint union; throws if ids collide.
CiliatedGraph disjoint_union(const CiliatedGraph& a, const CiliatedGraph& b);

// Renames vertices and/or half-edges (missing keys stay fixed).
CiliatedGraph relabel(const CiliatedGraph& g, const std::map<std::string, std::string>& vmap,
                      const std::map<std::string, std::string>& hmap);
Orientation relabel(const Orientation& o, const CiliatedGraph& relabeled_from,
                    const std::map<std::string, std::string>& hmap);

// The two-edge local move. Pattern: moved edge γ1 runs v1 -> v2, the via edge
// γ2 runs v2 -> v3, and at v2 the source half-edge of γ2 immediately precedes
// the end half-edge of γ1 in the cilium. The end half-edge of γ1 is re-based
// to v3, inserted immediately before the end half-edge of γ2. Under this move
// the coordinate change on group points is (g1, g2) -> (g1·g2, g2).
struct LocalMoveRecord {
  std::string moved_edge;  // γ1 (edge ids are stable across the move)
  std::string via_edge;    // γ2
  std::string from_vertex, to_vertex;
};
struct LocalMoveResult {
  CiliatedGraph graph;
  Orientation orientation;
  LocalMoveRecord record;
};
LocalMoveResult local_move(const CiliatedGraph& g, const Orientation& o,
                           const std::string& moved_edge_id, const std::string& via_edge_id);
// Undoes a local move (re-bases the half-edge back, inserting it immediately
// after the via edge's source half-edge).
LocalMoveResult local_move_undo(const CiliatedGraph& g, const Orientation& o,
                                const LocalMoveRecord& record);
// All (moved, via) edge id pairs where the move pattern applies.
std::vector<std::pair<std::string, std::string>> local_move_pivots(const CiliatedGraph& g,
                                                                   const Orientation& o);

Orientation reverse_edge(const CiliatedGraph& g, const Orientation& o, const std::string& edge_id);

// Structural equality under optional relabelings of vertices and half-edges.
bool graph_equal(const CiliatedGraph& a, const CiliatedGraph& b,
                 const std::map<std::string, std::string>& vertex_map = {},
                 const std::map<std::string, std::string>& half_edge_map = {});

struct OrientedGraph {
  CiliatedGraph graph;
  Orientation orientation;
};

// One edge a:b from v1 to v2.
OrientedGraph disk2();
// Two vertices, n parallel edges oriented v1 -> v2. The cilium at v1 lists the
// source half-edges in edge order; the one at v2 lists the end half-edges in
// reverse edge order, as the boundary orientation of the figure dictates.
OrientedGraph sigma_n(int n);
// Path with k edges v1 -> v2 -> ... -> v_{k+1}; interior cilia put the
// incoming end half-edge before the outgoing source half-edge (the fusion
// convention).
OrientedGraph polygon_path(int k);
// Ring of m edges built by fusing m disks; m = 1 is the one-loop graph
// obtained by fusing the two endpoints of disk2.
OrientedGraph annulus_marked(int m);

// Deterministic pseudo-random ciliated graph (no isolated vertices) together
// with an orientation; used by verification drivers.
OrientedGraph random_graph(std::uint64_t seed, int max_vertices, int max_edges);

}  // namespace frp
