#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dimerpf/error.hpp"
#include "dimerpf/geometry.hpp"
#include "dimerpf/orientation.hpp"
#include "dimerpf/rational.hpp"

namespace dimerpf {

// A face is named by one dart (u -> v) on its walk, or by an isolated vertex (to < 0).
struct FaceRef {
  int vertex = -1;
  int to = -1;
  bool is_vertex() const { return to < 0; }
  bool operator==(const FaceRef&) const = default;
};

struct EdgeRecord {
  int u = 0;
  int v = 0;
  Rational dimer = 1;
};

// Raw embedding data. Vertices are indexed 0..n-1 in increasing id order.
struct Embedding {
  std::vector<long> ids;
  std::vector<Rational> monomer;
  std::vector<Point> pos;  // empty, or one point per vertex
  std::vector<EdgeRecord> edges;
  std::vector<std::vector<int>> rotation;  // counterclockwise neighbour order
  std::vector<FaceRef> unbounded;
  std::vector<std::vector<FaceRef>> nested;  // walks sharing one bounded face
};

struct VertexSpec {
  long id = 0;
  Point pos;
  Rational monomer = 1;
};

struct EdgeSpec {
  long u = 0;
  long v = 0;
  Rational dimer = 1;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

struct Walks {
  std::vector<int> offset;  // first dart of each vertex
  std::vector<int> tail, head;
  std::map<std::pair<int, int>, int> dart_of;
  std::vector<int> next;
  std::vector<int> walk_of;
  std::vector<std::vector<int>> walks;
};

// Face walks keep the face on their left: after u -> v, continue to the
// neighbour preceding u in v's counterclockwise order.
inline Walks compute_walks(const std::vector<std::vector<int>>& rotation) {
  Walks w;
  std::size_t n = rotation.size();
  w.offset.resize(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) w.offset[v + 1] = w.offset[v] + static_cast<int>(rotation[v].size());
  int darts = w.offset[n];
  w.tail.resize(darts);
  w.head.resize(darts);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t k = 0; k < rotation[v].size(); ++k) {
      int d = w.offset[v] + static_cast<int>(k);
      w.tail[d] = static_cast<int>(v);
      w.head[d] = rotation[v][k];
      w.dart_of[{static_cast<int>(v), rotation[v][k]}] = d;
    }
  w.next.resize(darts);
  for (int d = 0; d < darts; ++d) {
    int u = w.tail[d], v = w.head[d];
    auto back = w.dart_of.find({v, u});
    if (back == w.dart_of.end()) fail(ErrorKind::InvalidGraph, "rotation system is not symmetric");
    int deg = static_cast<int>(rotation[v].size());
    int k = back->second - w.offset[v];
    w.next[d] = w.offset[v] + (k + deg - 1) % deg;
  }
  w.walk_of.assign(darts, -1);
  for (int d = 0; d < darts; ++d) {
    if (w.walk_of[d] >= 0) continue;
    int id = static_cast<int>(w.walks.size());
    w.walks.emplace_back();
    for (int cur = d; w.walk_of[cur] < 0; cur = w.next[cur]) {
      w.walk_of[cur] = id;
      w.walks.back().push_back(cur);
    }
  }
  return w;
}

}  // namespace detail

class PlanarGraph {
 public:
  PlanarGraph() : PlanarGraph(Embedding{}) {}

  explicit PlanarGraph(Embedding e) : e_(std::move(e)) { validate_and_index(); }

  static PlanarGraph from_coordinates(std::vector<VertexSpec> vertices, const std::vector<EdgeSpec>& edges);

  // ---- basic data
  int vertex_count() const { return static_cast<int>(e_.ids.size()); }
  int edge_count() const { return static_cast<int>(e_.edges.size()); }
  long id(int v) const { return e_.ids[v]; }
  std::optional<int> index_of(long id) const {
    auto it = std::lower_bound(e_.ids.begin(), e_.ids.end(), id);
    if (it == e_.ids.end() || *it != id) return std::nullopt;
    return static_cast<int>(it - e_.ids.begin());
  }
  long max_id() const { return e_.ids.empty() ? -1 : e_.ids.back(); }
  const Rational& monomer(int v) const { return e_.monomer[v]; }
  const std::vector<EdgeRecord>& edges() const { return e_.edges; }
  int edge_index(int u, int v) const {
    auto it = edge_index_.find(Orientation::key(u, v));
    return it == edge_index_.end() ? -1 : it->second;
  }
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  const Rational& dimer(int u, int v) const { return e_.edges.at(edge_index(u, v)).dimer; }
  const std::vector<int>& rotation(int v) const { return e_.rotation[v]; }
  int degree(int v) const { return static_cast<int>(e_.rotation[v].size()); }
  bool has_positions() const { return !e_.pos.empty(); }
  const Point& position(int v) const { return e_.pos.at(v); }
  const Embedding& embedding() const { return e_; }

  // ---- darts and walks
  int dart_count() const { return static_cast<int>(w_.tail.size()); }
  int dart(int u, int v) const {
    auto it = w_.dart_of.find({u, v});
    return it == w_.dart_of.end() ? -1 : it->second;
  }
  int dart_tail(int d) const { return w_.tail[d]; }
  int dart_head(int d) const { return w_.head[d]; }
  int next_in_walk(int d) const { return w_.next[d]; }
  int walk_count() const { return static_cast<int>(w_.walks.size()); }
  int walk_of(int d) const { return w_.walk_of[d]; }
  const std::vector<int>& walk(int w) const { return w_.walks[w]; }

  // ---- plane faces (walks sharing a region are one face)
  int face_count() const { return face_count_; }
  int unbounded_face() const { return unbounded_face_; }
  int face_of_dart(int d) const { return face_of_walk_[w_.walk_of[d]]; }
  int face_of_dart(int u, int v) const { return face_of_dart(dart(u, v)); }
  // Faces touching v, one per incident dart (or the face holding an isolated vertex).
  std::vector<int> faces_around(int v) const {
    if (degree(v) == 0) return {isolated_face_[v]};
    std::vector<int> out;
    for (int k = 0; k < degree(v); ++k) out.push_back(face_of_dart(w_.offset[v] + k));
    return out;
  }
  bool touches_face(int v, int face) const {
    for (int f : faces_around(v))
      if (f == face) return true;
    return false;
  }
  bool on_outer_face(int v) const { return touches_face(v, unbounded_face_); }

  // ---- components
  int component_count() const { return component_count_; }
  int component(int v) const { return component_[v]; }
  bool is_connected() const { return component_count_ <= 1; }

  // Vertex sequence (tails) of the unbounded walk of a connected graph.
  std::vector<int> outer_walk() const {
    if (vertex_count() == 0) return {};
    const FaceRef& ref = e_.unbounded.front();
    if (ref.is_vertex()) return {ref.vertex};
    std::vector<int> out;
    for (int d : w_.walks[w_.walk_of[dart(ref.vertex, ref.to)]]) out.push_back(w_.tail[d]);
    // Rotate so the walk starts at the referenced dart.
    auto start = dart(ref.vertex, ref.to);
    const auto& ws = w_.walks[w_.walk_of[start]];
    auto pos = std::find(ws.begin(), ws.end(), start) - ws.begin();
    std::rotate(out.begin(), out.begin() + pos, out.end());
    return out;
  }

  // Graph induced by kept vertices and edges; faces merge across anything removed.
  PlanarGraph restricted(const std::vector<char>& keep_vertex, const std::vector<char>& keep_edge,
                         std::vector<int>* old_to_new = nullptr) const;

  PlanarGraph without_vertices(const std::vector<int>& removed, std::vector<int>* old_to_new = nullptr) const {
    std::vector<char> keep_v(vertex_count(), 1), keep_e(edge_count(), 1);
    for (int v : removed) keep_v.at(v) = 0;
    for (int i = 0; i < edge_count(); ++i)
      if (!keep_v[e_.edges[i].u] || !keep_v[e_.edges[i].v]) keep_e[i] = 0;
    return restricted(keep_v, keep_e, old_to_new);
  }

  PlanarGraph without_edges(const std::vector<std::pair<int, int>>& removed) const {
    std::vector<char> keep_v(vertex_count(), 1), keep_e(edge_count(), 1);
    for (auto [u, v] : removed) {
      int i = edge_index(u, v);
      if (i < 0) fail(ErrorKind::InvalidArgument, "cannot remove a missing edge");
      keep_e[i] = 0;
    }
    return restricted(keep_v, keep_e);
  }

 private:
  void validate_and_index();
  int resolve(const FaceRef& ref) const;

  Embedding e_;
  std::map<std::pair<int, int>, int> edge_index_;
  detail::Walks w_;
  std::vector<int> isolated_node_;  // node index of isolated vertices, -1 otherwise
  std::vector<int> face_of_walk_;
  std::vector<int> isolated_face_;
  int face_count_ = 0;
  int unbounded_face_ = 0;
  std::vector<int> component_;
  int component_count_ = 0;
};

inline int PlanarGraph::resolve(const FaceRef& ref) const {
  if (ref.vertex < 0 || ref.vertex >= vertex_count())
    fail(ErrorKind::InvalidGraph, "face reference names a missing vertex");
  if (ref.is_vertex()) {
    if (degree(ref.vertex) != 0) fail(ErrorKind::InvalidGraph, "vertex face reference to a non-isolated vertex");
    return isolated_node_[ref.vertex];
  }
  int d = dart(ref.vertex, ref.to);
  if (d < 0) fail(ErrorKind::InvalidGraph, "face reference names a missing edge");
  return w_.walk_of[d];
}

inline void PlanarGraph::validate_and_index() {
  const int n = vertex_count();
  if (static_cast<int>(e_.monomer.size()) != n || static_cast<int>(e_.rotation.size()) != n ||
      (!e_.pos.empty() && static_cast<int>(e_.pos.size()) != n))
    fail(ErrorKind::InvalidGraph, "per-vertex arrays have inconsistent sizes");
  for (int v = 1; v < n; ++v)
    if (e_.ids[v] <= e_.ids[v - 1]) fail(ErrorKind::InvalidGraph, "vertex ids must be unique and sorted");

  std::vector<std::set<int>> nbrs(n);
  for (int i = 0; i < edge_count(); ++i) {
    auto& ed = e_.edges[i];
    if (ed.u < 0 || ed.v < 0 || ed.u >= n || ed.v >= n) fail(ErrorKind::InvalidGraph, "edge endpoint out of range");
    if (ed.u == ed.v) fail(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e_.ids[ed.u]));
    if (!edge_index_.emplace(Orientation::key(ed.u, ed.v), i).second)
      fail(ErrorKind::DuplicateEdge, "duplicate edge {" + std::to_string(e_.ids[ed.u]) + "," +
                                         std::to_string(e_.ids[ed.v]) + "}");
    nbrs[ed.u].insert(ed.v);
    nbrs[ed.v].insert(ed.u);
  }
  for (int v = 0; v < n; ++v) {
    std::set<int> listed(e_.rotation[v].begin(), e_.rotation[v].end());
    if (listed.size() != e_.rotation[v].size() || listed != nbrs[v])
      fail(ErrorKind::InvalidGraph, "rotation at vertex " + std::to_string(e_.ids[v]) + " does not match its edges");
  }

  w_ = detail::compute_walks(e_.rotation);

  detail::UnionFind comp(n);
  for (auto& ed : e_.edges) comp.unite(ed.u, ed.v);
  component_.assign(n, -1);
  std::map<int, int> comp_id;
  for (int v = 0; v < n; ++v) {
    auto [it, inserted] = comp_id.try_emplace(comp.find(v), static_cast<int>(comp_id.size()));
    component_[v] = it->second;
  }
  component_count_ = static_cast<int>(comp_id.size());

  // Euler relation per component, an isolated vertex counting as one walk.
  std::vector<long> euler(component_count_, 0);
  for (int v = 0; v < n; ++v) euler[component_[v]] += 1 + (degree(v) == 0 ? 1 : 0);
  for (auto& ed : e_.edges) euler[component_[ed.u]] -= 1;
  for (auto& walk : w_.walks) euler[component_[w_.tail[walk.front()]]] += 1;
  for (long value : euler)
    if (value != 2) fail(ErrorKind::InvalidGraph, "rotation system is not planar (Euler relation fails)");

  // Nodes: walks, then isolated vertices.
  int nodes = walk_count();
  isolated_node_.assign(n, -1);
  for (int v = 0; v < n; ++v)
    if (degree(v) == 0) isolated_node_[v] = nodes++;

  auto node_component = [&](int node) {
    if (node < walk_count()) return component_[w_.tail[w_.walks[node].front()]];
    for (int v = 0; v < n; ++v)
      if (isolated_node_[v] == node) return component_[v];
    return -1;
  };

  std::vector<char> placed(component_count_, 0), used(nodes, 0), top(component_count_, 0);
  detail::UnionFind faces(nodes);
  if (n > 0 && e_.unbounded.empty()) {
    // Isolated vertices alone need no explicit outer face.
    bool all_isolated = e_.edges.empty();
    if (!all_isolated) fail(ErrorKind::InvalidGraph, "the unbounded face must be specified");
  }
  std::vector<FaceRef> outer = e_.unbounded;
  for (int v = 0; v < n; ++v)
    if (degree(v) == 0) {
      bool mentioned = std::find(outer.begin(), outer.end(), FaceRef{v, -1}) != outer.end();
      for (auto& group : e_.nested)
        mentioned = mentioned || std::find(group.begin(), group.end(), FaceRef{v, -1}) != group.end();
      if (!mentioned) outer.push_back(FaceRef{v, -1});
    }
  int outer_root = -1;
  for (const FaceRef& ref : outer) {
    int node = resolve(ref);
    if (used[node]) fail(ErrorKind::InvalidGraph, "face listed twice");
    used[node] = 1;
    int c = node_component(node);
    if (top[c]) fail(ErrorKind::InvalidGraph, "component has two unbounded walks");
    top[c] = placed[c] = 1;
    if (outer_root >= 0) faces.unite(outer_root, node);
    outer_root = outer_root < 0 ? node : outer_root;
  }
  for (const auto& group : e_.nested) {
    if (group.size() < 2) fail(ErrorKind::InvalidGraph, "a nested face group needs at least two walks");
    int first = -1;
    for (const FaceRef& ref : group) {
      int node = resolve(ref);
      if (used[node]) fail(ErrorKind::InvalidGraph, "face listed twice");
      used[node] = 1;
      placed[node_component(node)] = 1;
      if (first >= 0) faces.unite(first, node);
      else first = node;
    }
  }
  for (int c = 0; c < component_count_; ++c)
    if (!placed[c]) fail(ErrorKind::InvalidGraph, "a component is not placed in any face");

  std::map<int, int> face_id;
  std::vector<int> face_of_node(nodes);
  for (int node = 0; node < nodes; ++node) {
    auto [it, inserted] = face_id.try_emplace(faces.find(node), static_cast<int>(face_id.size()));
    face_of_node[node] = it->second;
  }
  face_count_ = n == 0 ? 1 : static_cast<int>(face_id.size());
  unbounded_face_ = outer_root >= 0 ? face_of_node[outer_root] : 0;
  face_of_walk_.assign(face_of_node.begin(), face_of_node.begin() + walk_count());
  isolated_face_.assign(n, -1);
  for (int v = 0; v < n; ++v)
    if (isolated_node_[v] >= 0) isolated_face_[v] = face_of_node[isolated_node_[v]];
}

inline PlanarGraph PlanarGraph::restricted(const std::vector<char>& keep_vertex, const std::vector<char>& keep_edge,
                                           std::vector<int>* old_to_new) const {
  const int n = vertex_count();
  std::vector<int> map(n, -1);
  Embedding out;
  for (int v = 0; v < n; ++v)
    if (keep_vertex[v]) {
      map[v] = static_cast<int>(out.ids.size());
      out.ids.push_back(e_.ids[v]);
      out.monomer.push_back(e_.monomer[v]);
      if (has_positions()) out.pos.push_back(e_.pos[v]);
    }
  for (int i = 0; i < edge_count(); ++i) {
    const auto& ed = e_.edges[i];
    if (keep_edge[i] && keep_vertex[ed.u] && keep_vertex[ed.v]) out.edges.push_back({map[ed.u], map[ed.v], ed.dimer});
  }
  out.rotation.resize(out.ids.size());
  for (int v = 0; v < n; ++v) {
    if (!keep_vertex[v]) continue;
    for (int u : e_.rotation[v]) {
      int i = edge_index(v, u);
      if (keep_edge[i] && keep_vertex[u]) out.rotation[map[v]].push_back(map[u]);
    }
  }
  // Old faces merge across every removed edge.
  detail::UnionFind merged(face_count_);
  for (int i = 0; i < edge_count(); ++i) {
    const auto& ed = e_.edges[i];
    if (keep_edge[i] && keep_vertex[ed.u] && keep_vertex[ed.v]) continue;
    merged.unite(face_of_dart(ed.u, ed.v), face_of_dart(ed.v, ed.u));
  }
  detail::Walks nw = detail::compute_walks(out.rotation);
  std::vector<int> new_to_old(out.ids.size());
  for (int v = 0; v < n; ++v)
    if (map[v] >= 0) new_to_old[map[v]] = v;
  std::map<int, std::vector<FaceRef>> classes;
  for (const auto& walk : nw.walks) {
    int d = walk.front();
    int ou = new_to_old[nw.tail[d]], ov = new_to_old[nw.head[d]];
    classes[merged.find(face_of_dart(ou, ov))].push_back({nw.tail[d], nw.head[d]});
  }
  for (int nv = 0; nv < static_cast<int>(out.ids.size()); ++nv)
    if (out.rotation[nv].empty()) classes[merged.find(faces_around(new_to_old[nv]).front())].push_back({nv, -1});
  int outer_class = merged.find(unbounded_face_);
  for (auto& [root, refs] : classes) {
    if (root == outer_class) out.unbounded = refs;
    else if (refs.size() >= 2) out.nested.push_back(refs);
  }
  if (old_to_new) *old_to_new = map;
  return PlanarGraph(std::move(out));
}

inline PlanarGraph PlanarGraph::from_coordinates(std::vector<VertexSpec> vertices, const std::vector<EdgeSpec>& edges) {
  std::sort(vertices.begin(), vertices.end(), [](auto& a, auto& b) { return a.id < b.id; });
  Embedding e;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0 && vertices[i].id == vertices[i - 1].id)
      fail(ErrorKind::InvalidGraph, "duplicate vertex id " + std::to_string(vertices[i].id));
    e.ids.push_back(vertices[i].id);
    e.monomer.push_back(vertices[i].monomer);
    e.pos.push_back(vertices[i].pos);
  }
  const int n = static_cast<int>(e.ids.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (e.pos[a] == e.pos[b]) fail(ErrorKind::InvalidGraph, "two vertices share a position");
  auto index = [&](long id) {
    auto it = std::lower_bound(e.ids.begin(), e.ids.end(), id);
    if (it == e.ids.end() || *it != id) fail(ErrorKind::InvalidGraph, "edge names unknown vertex " + std::to_string(id));
    return static_cast<int>(it - e.ids.begin());
  };
  std::set<std::pair<int, int>> seen;
  for (const auto& spec : edges) {
    int u = index(spec.u), v = index(spec.v);
    if (u == v) fail(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(spec.u));
    if (!seen.insert(Orientation::key(u, v)).second)
      fail(ErrorKind::DuplicateEdge, "duplicate edge {" + std::to_string(spec.u) + "," + std::to_string(spec.v) + "}");
    e.edges.push_back({u, v, spec.dimer});
  }
  for (std::size_t i = 0; i < e.edges.size(); ++i)
    for (std::size_t j = i + 1; j < e.edges.size(); ++j) {
      const auto& a = e.edges[i];
      const auto& b = e.edges[j];
      if (segments_conflict(e.pos[a.u], e.pos[a.v], e.pos[b.u], e.pos[b.v]))
        fail(ErrorKind::CrossingEdges, "edges {" + std::to_string(e.ids[a.u]) + "," + std::to_string(e.ids[a.v]) +
                                           "} and {" + std::to_string(e.ids[b.u]) + "," + std::to_string(e.ids[b.v]) +
                                           "} cross");
    }
  // A vertex lying on a non-incident edge is also a crossing.
  for (const auto& ed : e.edges)
    for (int v = 0; v < n; ++v)
      if (v != ed.u && v != ed.v && on_segment(e.pos[v], e.pos[ed.u], e.pos[ed.v]))
        fail(ErrorKind::CrossingEdges, "vertex " + std::to_string(e.ids[v]) + " lies on an edge");

  e.rotation.resize(n);
  for (const auto& ed : e.edges) {
    e.rotation[ed.u].push_back(ed.v);
    e.rotation[ed.v].push_back(ed.u);
  }
  for (int v = 0; v < n; ++v) {
    auto angle = [&](int u) { return std::atan2(e.pos[u].y - e.pos[v].y, e.pos[u].x - e.pos[v].x); };
    std::sort(e.rotation[v].begin(), e.rotation[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
  }

  detail::Walks w = detail::compute_walks(e.rotation);
  detail::UnionFind comp(n);
  for (const auto& ed : e.edges) comp.unite(ed.u, ed.v);
  auto polygon = [&](int walk) {
    std::vector<Point> pts;
    for (int d : w.walks[walk]) pts.push_back(e.pos[w.tail[d]]);
    return pts;
  };
  std::vector<double> area(w.walks.size());
  std::map<int, int> outer_walk;  // component root -> walk with least signed area
  for (int k = 0; k < static_cast<int>(w.walks.size()); ++k) {
    area[k] = signed_area(polygon(k));
    int root = comp.find(w.tail[w.walks[k].front()]);
    auto it = outer_walk.find(root);
    if (it == outer_walk.end() || area[k] < area[it->second]) outer_walk[root] = k;
  }
  // Place each component in the smallest bounded walk of another component containing it.
  std::map<int, std::vector<FaceRef>> groups;  // container walk -> refs
  std::set<int> roots;
  for (int v = 0; v < n; ++v) roots.insert(comp.find(v));
  for (int root : roots) {
    int rep = root;  // smallest index in the component
    FaceRef ref = e.rotation[rep].empty() ? FaceRef{rep, -1}
                                          : FaceRef{w.tail[w.walks[outer_walk[root]].front()],
                                                    w.head[w.walks[outer_walk[root]].front()]};
    int best = -1;
    for (int k = 0; k < static_cast<int>(w.walks.size()); ++k) {
      int other = comp.find(w.tail[w.walks[k].front()]);
      if (other == root || outer_walk[other] == k) continue;
      if (winding_number(e.pos[rep], polygon(k)) == 0) continue;
      if (best < 0 || area[k] < area[best]) best = k;
    }
    if (best < 0) e.unbounded.push_back(ref);
    else groups[best].push_back(ref);
  }
  for (auto& [walk, refs] : groups) {
    std::vector<FaceRef> group{{w.tail[w.walks[walk].front()], w.head[w.walks[walk].front()]}};
    group.insert(group.end(), refs.begin(), refs.end());
    e.nested.push_back(group);
  }
  return PlanarGraph(std::move(e));
}

// ---------------------------------------------------------------- boundary

struct BoundarySubgraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;  // (u < v)
};

inline BoundarySubgraph boundary_subgraph(const PlanarGraph& g) {
  BoundarySubgraph out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.on_outer_face(v)) out.vertices.push_back(v);
  for (const auto& ed : g.edges())
    if (g.face_of_dart(ed.u, ed.v) == g.unbounded_face() || g.face_of_dart(ed.v, ed.u) == g.unbounded_face())
      out.edges.push_back(Orientation::key(ed.u, ed.v));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

// Counterclockwise boundary circuit of a connected graph whose outer walk is a simple cycle.
inline std::optional<std::vector<int>> boundary_circuit(const PlanarGraph& g) {
  if (!g.is_connected() || g.vertex_count() < 3) return std::nullopt;
  std::vector<int> walk = g.outer_walk();
  std::set<int> distinct(walk.begin(), walk.end());
  if (walk.size() < 3 || distinct.size() != walk.size()) return std::nullopt;
  std::vector<int> ccw(walk.rbegin(), walk.rend());
  std::rotate(ccw.begin(), std::min_element(ccw.begin(), ccw.end()), ccw.end());
  return ccw;
}

// ---------------------------------------------------------------- circuits

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::vector<int> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 3) fail(ErrorKind::NotACircuit, "a circuit needs at least three vertices");
    if (std::set<int>(v_.begin(), v_.end()).size() != v_.size())
      fail(ErrorKind::NotACircuit, "circuit repeats a vertex");
    std::rotate(v_.begin(), std::min_element(v_.begin(), v_.end()), v_.end());
  }

  const std::vector<int>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i % v_.size()]; }

  // Traversal pairs (v_i, v_{i+1}), closing back to v_1.
  std::vector<std::pair<int, int>> steps() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < v_.size(); ++i) out.emplace_back(v_[i], v_[(i + 1) % v_.size()]);
    return out;
  }
  std::set<std::pair<int, int>> edge_set() const {
    std::set<std::pair<int, int>> out;
    for (auto [a, b] : steps()) out.insert(Orientation::key(a, b));
    return out;
  }

  Circuit reversed() const { return Circuit(std::vector<int>(v_.rbegin(), v_.rend())); }

  auto operator<=>(const Circuit&) const = default;
  bool operator==(const Circuit&) const = default;

 private:
  std::vector<int> v_;
};

inline void require_cycle(const PlanarGraph& g, const std::vector<int>& seq) {
  if (seq.size() < 3) fail(ErrorKind::NotACircuit, "a circuit needs at least three vertices");
  if (std::set<int>(seq.begin(), seq.end()).size() != seq.size())
    fail(ErrorKind::NotACircuit, "circuit repeats a vertex");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int a = seq[i], b = seq[(i + 1) % seq.size()];
    if (a < 0 || a >= g.vertex_count() || !g.has_edge(a, b))
      fail(ErrorKind::NotACircuit, "consecutive circuit vertices are not adjacent");
  }
}

// Faces reachable from the left side of the cycle without crossing it.
inline std::vector<char> faces_left_of(const PlanarGraph& g, const std::vector<int>& seq) {
  std::set<std::pair<int, int>> on_cycle;
  for (std::size_t i = 0; i < seq.size(); ++i) on_cycle.insert(Orientation::key(seq[i], seq[(i + 1) % seq.size()]));
  std::vector<std::vector<int>> adj(g.face_count());
  for (const auto& ed : g.edges()) {
    if (on_cycle.count(Orientation::key(ed.u, ed.v))) continue;
    int a = g.face_of_dart(ed.u, ed.v), b = g.face_of_dart(ed.v, ed.u);
    if (a != b) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  std::vector<char> inside(g.face_count(), 0);
  std::vector<int> stack;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int f = g.face_of_dart(seq[i], seq[(i + 1) % seq.size()]);
    if (!inside[f]) inside[f] = 1, stack.push_back(f);
  }
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int h : adj[f])
      if (!inside[h]) inside[h] = 1, stack.push_back(h);
  }
  return inside;
}

inline bool is_counterclockwise(const PlanarGraph& g, const std::vector<int>& seq) {
  require_cycle(g, seq);
  return !faces_left_of(g, seq)[g.unbounded_face()];
}

inline Circuit make_ccw_circuit(const PlanarGraph& g, std::vector<int> seq) {
  if (!is_counterclockwise(g, seq)) std::reverse(seq.begin(), seq.end());
  return Circuit(std::move(seq));
}

// Faces on the side of the cycle away from the unbounded face.
inline std::vector<char> inside_faces(const PlanarGraph& g, const std::vector<int>& seq) {
  require_cycle(g, seq);
  auto left = faces_left_of(g, seq);
  if (!left[g.unbounded_face()]) return left;
  std::vector<int> rev(seq.rbegin(), seq.rend());
  return faces_left_of(g, rev);
}

inline std::vector<int> enclosed_vertices(const PlanarGraph& g, const std::vector<int>& seq) {
  auto inside = inside_faces(g, seq);
  std::set<int> on(seq.begin(), seq.end());
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!on.count(v) && inside[g.faces_around(v).front()]) out.push_back(v);
  return out;
}

inline int enclosed_vertex_count(const PlanarGraph& g, const Circuit& c) {
  return static_cast<int>(enclosed_vertices(g, c.vertices()).size());
}

// Edges not on the cycle that lie on its inner side.
inline std::vector<std::pair<int, int>> enclosed_edges(const PlanarGraph& g, const std::vector<int>& seq) {
  auto inside = inside_faces(g, seq);
  std::set<std::pair<int, int>> on_cycle;
  for (std::size_t i = 0; i < seq.size(); ++i) on_cycle.insert(Orientation::key(seq[i], seq[(i + 1) % seq.size()]));
  std::vector<std::pair<int, int>> out;
  for (const auto& ed : g.edges()) {
    auto k = Orientation::key(ed.u, ed.v);
    if (!on_cycle.count(k) && inside[g.face_of_dart(ed.u, ed.v)]) out.push_back(k);
  }
  return out;
}

inline int backwards_count(const Orientation& orient, const std::vector<int>& seq) {
  int back = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int a = seq[i], b = seq[(i + 1) % seq.size()];
    if (!orient.is_directed(a, b))
      fail(ErrorKind::UndirectedEdgeInCircuit, "circuit edge is not directed");
    if (orient.points(b, a)) ++back;
  }
  return back;
}

// Good: backwards count plus enclosed count is odd (traversed counterclockwise).
inline bool circuit_is_good(const PlanarGraph& g, const Orientation& orient, const Circuit& c) {
  Circuit ccw = make_ccw_circuit(g, c.vertices());
  int back = backwards_count(orient, ccw.vertices());
  return (back + enclosed_vertex_count(g, ccw)) % 2 == 1;
}

// Glues c1 = (v_1..v_{nu+1}, ...) and c2 = (v_{nu+1}..v_1, ...) along their common string.
inline Circuit merge_circuits(const Circuit& c1, const Circuit& c2) {
  const auto& a = c1.vertices();
  const auto& b = c2.vertices();
  std::size_t n1 = a.size(), n2 = b.size();
  auto pos_in_b = [&](int v) -> long {
    auto it = std::find(b.begin(), b.end(), v);
    return it == b.end() ? -1 : it - b.begin();
  };
  // Find a maximal run a[s..s+nu] that appears reversed in b.
  for (std::size_t s = 0; s < n1; ++s) {
    long pb = pos_in_b(a[s]);
    if (pb < 0) continue;
    // Start of a run: the previous vertex of c1 must not continue the reversed string.
    long prev_b = pos_in_b(a[(s + n1 - 1) % n1]);
    if (prev_b >= 0 && static_cast<std::size_t>(prev_b) == (pb + 1) % n2) continue;
    std::size_t nu = 0;
    while (nu + 1 < n1 && nu + 1 < n2 && b[(pb + n2 - (nu + 1)) % n2] == a[(s + nu + 1) % n1]) ++nu;
    if (nu == 0) continue;
    std::set<int> shared;
    for (std::size_t k = 0; k <= nu; ++k) shared.insert(a[(s + k) % n1]);
    std::vector<int> out;
    // v_{nu+1} .. v_{|c1|}, v_1 along c1
    for (std::size_t k = nu; k <= n1; ++k) out.push_back(a[(s + k) % n1]);
    // then c2 beyond the common string, from v'_{nu+2} up to v'_{|c2|}
    for (std::size_t k = 1; k + nu < n2; ++k) out.push_back(b[(pb + k) % n2]);
    std::set<int> distinct(out.begin(), out.end());
    if (distinct.size() != out.size() || out.size() < 3) fail(ErrorKind::NotMergeable, "merger is not a simple circuit");
    for (int v : out)
      if (shared.count(v) && v != a[s] && v != a[(s + nu) % n1])
        fail(ErrorKind::NotMergeable, "merger is not a simple circuit");
    return Circuit(out);
  }
  fail(ErrorKind::NotMergeable, "circuits share no reversed common string");
}

inline constexpr int kDefaultCycleCap = 16;

inline std::vector<Circuit> enumerate_simple_cycles(const PlanarGraph& g, int cap = kDefaultCycleCap) {
  const int n = g.vertex_count();
  if (n > cap) fail(ErrorKind::TooLarge, "cycle enumeration capped at " + std::to_string(cap) + " vertices");
  std::vector<Circuit> out;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  auto dfs = [&](auto&& self, int s, int v) -> void {
    for (int u : g.rotation(v)) {
      if (u == s && path.size() >= 3 && path[1] < path.back()) out.push_back(make_ccw_circuit(g, path));
      if (u <= s || on_path[u]) continue;
      on_path[u] = 1;
      path.push_back(u);
      self(self, s, u);
      path.pop_back();
      on_path[u] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dimerpf
