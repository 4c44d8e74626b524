#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimerpf/embedding.hpp"
#include "dimerpf/error.hpp"

namespace dimerpf {

enum class AugmentationTag { ComponentConnector, BoundaryCircuit, ParityGadget, EvennessPad };

inline std::string_view to_string(AugmentationTag tag) {
  switch (tag) {
    case AugmentationTag::ComponentConnector: return "component-connector";
    case AugmentationTag::BoundaryCircuit: return "boundary-circuit";
    case AugmentationTag::ParityGadget: return "parity-gadget";
    case AugmentationTag::EvennessPad: return "evenness-pad";
  }
  return "unknown";
}

struct AddedEdge {
  int u = 0;
  int v = 0;
  Rational weight = 0;
  AugmentationTag tag = AugmentationTag::ComponentConnector;
};

struct AddedVertex {
  int vertex = 0;
  AugmentationTag tag = AugmentationTag::ParityGadget;
};

// Surgeries only append vertices, so original vertex indices are kept as-is.
struct AugmentationRecord {
  int original_vertex_count = 0;
  std::vector<AddedEdge> edges;
  std::vector<AddedVertex> vertices;
  std::optional<int> pad;

  bool empty() const { return edges.empty() && vertices.empty(); }
  bool is_original(int v) const { return v < original_vertex_count; }

  void append(const AugmentationRecord& later) {
    edges.insert(edges.end(), later.edges.begin(), later.edges.end());
    vertices.insert(vertices.end(), later.vertices.begin(), later.vertices.end());
    if (later.pad) pad = later.pad;
  }
};

namespace detail {

// Inserts `added` into v's rotation immediately before `before`.
inline void insert_before(std::vector<int>& rotation, int before, int added) {
  auto it = std::find(rotation.begin(), rotation.end(), before);
  rotation.insert(it, added);
}

inline int append_vertex(Embedding& e, const Rational& monomer, std::optional<Point> pos = std::nullopt) {
  long id = e.ids.empty() ? 0 : e.ids.back() + 1;
  e.ids.push_back(id);
  e.monomer.push_back(monomer);
  e.rotation.emplace_back();
  if (!e.pos.empty()) e.pos.push_back(pos.value_or(Point{}));
  return static_cast<int>(e.ids.size()) - 1;
}

// Coordinates stop being a faithful drawing once edges are inserted combinatorially.
inline void drop_positions(Embedding& e) { e.pos.clear(); }

// Counterclockwise tour around a connected graph, one entry per outer corner.
// Corner i sits at walk[i]; a new edge there goes right before walk[i+1] in the rotation.
inline std::vector<int> ccw_tour(const PlanarGraph& g) {
  std::vector<int> walk = g.outer_walk();
  std::vector<int> tour;
  if (walk.empty()) return tour;
  tour.push_back(walk[0]);
  for (std::size_t i = walk.size(); i-- > 1;) tour.push_back(walk[i]);
  return tour;
}

}  // namespace detail

inline AugmentationRecord empty_record(const PlanarGraph& g) {
  AugmentationRecord r;
  r.original_vertex_count = g.vertex_count();
  return r;
}

// Anchor of a face reference for connecting: the smallest vertex on the walk and the
// neighbour it must be inserted before.
namespace detail {
struct Corner {
  int vertex;
  int before;  // -1 for an isolated vertex
};

inline Corner anchor(const PlanarGraph& g, const FaceRef& ref) {
  if (ref.is_vertex()) return {ref.vertex, -1};
  const auto& walk = g.walk(g.walk_of(g.dart(ref.vertex, ref.to)));
  // Choose the corner at the smallest vertex: darts x -> a then a -> y; insert before x.
  int best = -1, before = -1;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    int in = walk[i];
    int a = g.dart_head(in);
    if (best < 0 || a < best) {
      best = a;
      before = g.dart_tail(in);
    }
  }
  return {best, before};
}

inline int component_min(const PlanarGraph& g, const FaceRef& ref) {
  int c = g.component(ref.vertex);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.component(v) == c) return v;
  return ref.vertex;
}
}  // namespace detail

inline std::pair<PlanarGraph, AugmentationRecord> connect_components(const PlanarGraph& input) {
  AugmentationRecord record = empty_record(input);
  PlanarGraph g = input;
  while (!g.is_connected()) {
    Embedding e = g.embedding();
    // Find a face holding walks of at least two components; the unbounded face first.
    std::vector<std::vector<FaceRef>*> groups{&e.unbounded};
    for (auto& grp : e.nested) groups.push_back(&grp);
    bool done = false;
    for (auto* grp : groups) {
      if (grp->size() < 2) continue;
      std::sort(grp->begin(), grp->end(), [&](const FaceRef& a, const FaceRef& b) {
        return detail::component_min(g, a) < detail::component_min(g, b);
      });
      FaceRef r1 = (*grp)[0], r2 = (*grp)[1];
      detail::Corner c1 = detail::anchor(g, r1), c2 = detail::anchor(g, r2);
      int a = c1.vertex, b = c2.vertex;
      if (c1.before < 0) e.rotation[a] = {b};
      else detail::insert_before(e.rotation[a], c1.before, b);
      if (c2.before < 0) e.rotation[b] = {a};
      else detail::insert_before(e.rotation[b], c2.before, a);
      e.edges.push_back({a, b, Rational(0)});
      record.edges.push_back({a, b, Rational(0), AugmentationTag::ComponentConnector});
      // The dart a -> b lies on the merged walk.
      grp->erase(grp->begin(), grp->begin() + 2);
      grp->insert(grp->begin(), FaceRef{a, b});
      if (grp != &e.unbounded && grp->size() < 2) {
        // The merged walk now bounds the face alone.
        e.nested.erase(std::find_if(e.nested.begin(), e.nested.end(), [&](auto& x) { return &x == grp; }));
      }
      done = true;
      break;
    }
    if (!done) fail(ErrorKind::InvalidGraph, "disconnected graph without a shared face");
    detail::drop_positions(e);
    g = PlanarGraph(std::move(e));
  }
  return {g, record};
}

// Adds 0-weight chords along the outer face so the boundary becomes a simple circuit.
inline std::pair<PlanarGraph, AugmentationRecord> build_boundary_circuit(const PlanarGraph& g) {
  if (!g.is_connected()) fail(ErrorKind::NotConnected, "boundary circuit needs a connected graph");
  AugmentationRecord record = empty_record(g);
  if (g.vertex_count() < 3 || boundary_circuit(g)) return {g, record};
  std::vector<int> tour = detail::ccw_tour(g);
  const std::size_t m = tour.size();
  // Start at the smallest vertex, choosing among its corners the one leaving toward the smallest neighbour.
  int smallest = *std::min_element(tour.begin(), tour.end());
  std::size_t start = m;
  for (std::size_t i = 0; i < m; ++i)
    if (tour[i] == smallest && (start == m || tour[(i + 1) % m] < tour[(start + 1) % m])) start = i;
  std::rotate(tour.begin(), tour.begin() + start, tour.end());

  std::vector<std::size_t> first;  // positions of first occurrences
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < m; ++i)
    if (!seen[tour[i]]) seen[tour[i]] = 1, first.push_back(i);
  const std::size_t k = first.size();

  Embedding e = g.embedding();
  std::optional<FaceRef> outer;
  // Chords are inserted corner by corner; a corner may receive an arriving and a departing chord.
  struct Pending {
    std::size_t pos;
    int other;
    bool arriving;
  };
  std::vector<Pending> pending;
  for (std::size_t j = 0; j < k; ++j) {
    int u = tour[first[j]];
    std::size_t next_first = j + 1 < k ? first[j + 1] : m;
    int w = tour[next_first % m];
    if (g.has_edge(u, w)) continue;
    if (k == 2) continue;
    std::size_t depart = first[j];
    for (std::size_t i = first[j]; i < next_first; ++i)
      if (tour[i] == u) depart = i;
    pending.push_back({depart, w, false});
    pending.push_back({next_first % m, u, true});
    e.edges.push_back({u, w, Rational(0)});
    record.edges.push_back({u, w, Rational(0), AugmentationTag::BoundaryCircuit});
    outer = FaceRef{w, u};
  }
  // Arriving chords sit nearer the predecessor than departing ones at the same corner.
  std::stable_sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return a.pos != b.pos ? a.pos < b.pos : a.arriving > b.arriving;
  });
  for (const auto& p : pending) detail::insert_before(e.rotation[tour[p.pos]], tour[(p.pos + 1) % m], p.other);
  if (outer) {
    e.unbounded = {*outer};
    detail::drop_positions(e);
  }
  PlanarGraph out(std::move(e));
  if (k >= 3) {
    auto circuit = boundary_circuit(out);
    if (!circuit || circuit->size() != k)
      fail(ErrorKind::InvalidGraph, "boundary circuit construction failed");
  }
  return {out, record};
}

// Boundary circuit as a counterclockwise tour starting anywhere, allowing the 2-vertex case.
namespace detail {
inline std::vector<int> boundary_sequence(const PlanarGraph& g) {
  if (g.vertex_count() == 2 && g.edge_count() == 1) return {0, 1};
  auto c = boundary_circuit(g);
  if (!c) fail(ErrorKind::NotEnclosed, "graph has no boundary circuit");
  return *c;
}
}  // namespace detail

// Replaces boundary edge {u,v} by the path u - w - v plus a pendant t on w (edge w-t of weight 1).
inline std::pair<PlanarGraph, AugmentationRecord> evenize_boundary(const PlanarGraph& g) {
  std::vector<int> seq = detail::boundary_sequence(g);
  const std::size_t k = seq.size();
  if (k % 2 == 0 && k != 2) fail(ErrorKind::BoundaryAlreadyEven, "boundary circuit already has even length");
  // Lexicographically smallest boundary edge, kept in counterclockwise order u -> v.
  std::size_t best = 0;
  auto pair_of = [&](std::size_t i) {
    return Orientation::key(seq[i], seq[(i + 1) % k]);
  };
  std::size_t steps = k == 2 ? 1 : k;
  for (std::size_t i = 1; i < steps; ++i)
    if (pair_of(i) < pair_of(best)) best = i;
  int u = seq[best], v = seq[(best + 1) % k];
  int pu = seq[(best + k - 1) % k];
  int nv = seq[(best + 2) % k];

  AugmentationRecord record = empty_record(g);
  Embedding e = g.embedding();
  detail::drop_positions(e);
  int w = detail::append_vertex(e, Rational(0));
  int t = detail::append_vertex(e, Rational(0));
  (void)pu;
  detail::insert_before(e.rotation[u], v, w);
  detail::insert_before(e.rotation[v], nv, w);
  e.rotation[w] = {u, v, t};
  e.rotation[t] = {w};
  e.edges.push_back({u, w, Rational(0)});
  e.edges.push_back({v, w, Rational(0)});
  e.edges.push_back({w, t, Rational(1)});
  e.unbounded = {FaceRef{w, u}};
  record.vertices.push_back({w, AugmentationTag::ParityGadget});
  record.vertices.push_back({t, AugmentationTag::ParityGadget});
  record.edges.push_back({u, w, Rational(0), AugmentationTag::ParityGadget});
  record.edges.push_back({v, w, Rational(0), AugmentationTag::ParityGadget});
  record.edges.push_back({w, t, Rational(1), AugmentationTag::ParityGadget});
  return {PlanarGraph(std::move(e)), record};
}

// Connected graph, even boundary circuit of length >= 4, even vertex count (or empty).
class EnclosedGraph {
 public:
  EnclosedGraph() = default;
  explicit EnclosedGraph(PlanarGraph g) : g_(std::move(g)) {
    const int n = g_.vertex_count();
    if (n == 0) return;
    if (!g_.is_connected()) fail(ErrorKind::NotEnclosed, "enclosed graphs are connected");
    auto c = boundary_circuit(g_);
    if (!c) fail(ErrorKind::NotEnclosed, "graph has no boundary circuit");
    if (c->size() % 2 != 0 || c->size() < 4) fail(ErrorKind::NotEnclosed, "boundary circuit length must be even");
    if (n % 2 != 0) fail(ErrorKind::NotEnclosed, "enclosed graphs have an even number of vertices");
    boundary_ = *c;
    std::vector<char> on(n, 0);
    for (int v : boundary_) on[v] = 1;
    for (int v = 0; v < n; ++v)
      if (!on[v]) interior_.push_back(v);
  }

  const PlanarGraph& graph() const { return g_; }
  // Counterclockwise, starting at the smallest vertex.
  const std::vector<int>& boundary() const { return boundary_; }
  const std::vector<int>& interior() const { return interior_; }
  bool is_boundary(int v) const { return std::find(boundary_.begin(), boundary_.end(), v) != boundary_.end(); }

 private:
  PlanarGraph g_;
  std::vector<int> boundary_;
  std::vector<int> interior_;
};

// Pads odd graphs with an isolated vertex of monomer weight 1 and chains the surgeries.
inline std::pair<EnclosedGraph, AugmentationRecord> to_enclosed(const PlanarGraph& input) {
  AugmentationRecord record = empty_record(input);
  PlanarGraph g = input;
  if (g.vertex_count() == 0) return {EnclosedGraph(g), record};
  if (g.vertex_count() % 2 != 0) {
    Embedding e = g.embedding();
    detail::drop_positions(e);
    int pad = detail::append_vertex(e, Rational(1));
    e.unbounded.push_back(FaceRef{pad, -1});
    record.vertices.push_back({pad, AugmentationTag::EvennessPad});
    record.pad = pad;
    g = PlanarGraph(std::move(e));
  }
  auto [connected, r1] = connect_components(g);
  record.append(r1);
  auto [circuit, r2] = build_boundary_circuit(connected);
  record.append(r2);
  g = circuit;
  // A single edge becomes a triangle-shaped gadget first, then is evenized again.
  while (detail::boundary_sequence(g).size() % 2 != 0 || detail::boundary_sequence(g).size() == 2) {
    auto [even, r3] = evenize_boundary(g);
    record.append(r3);
    g = even;
  }
  return {EnclosedGraph(g), record};
}

}  // namespace dimerpf
