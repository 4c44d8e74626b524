#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dimerpf/embedding.hpp"
#include "dimerpf/error.hpp"
#include "dimerpf/orientation.hpp"
#include "dimerpf/reduce.hpp"

namespace dimerpf {

// Bijection vertex -> {1..n}.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<int> label) : label_(std::move(label)) {
    std::vector<char> used(label_.size() + 1, 0);
    for (int l : label_) {
      if (l < 1 || l > static_cast<int>(label_.size()) || used[l])
        fail(ErrorKind::InvalidArgument, "labeling is not a bijection onto 1..n");
      used[l] = 1;
    }
  }

  static Labeling identity(int n) {
    std::vector<int> l(n);
    for (int v = 0; v < n; ++v) l[v] = v + 1;
    return Labeling(l);
  }

  int of(int v) const { return label_.at(v); }
  int size() const { return static_cast<int>(label_.size()); }
  std::vector<int> vertex_by_label() const {
    std::vector<int> inv(label_.size() + 1, -1);
    for (std::size_t v = 0; v < label_.size(); ++v) inv[label_[v]] = static_cast<int>(v);
    return inv;
  }
  const std::vector<int>& labels() const { return label_; }
  void swap_labels(int a, int b) {
    auto inv = vertex_by_label();
    std::swap(label_[inv[a]], label_[inv[b]]);
  }

  bool operator==(const Labeling&) const = default;

 private:
  std::vector<int> label_;
};

struct Covering {
  std::vector<int> monomers;
  std::vector<std::pair<int, int>> dimers;

  void normalize() {
    std::sort(monomers.begin(), monomers.end());
    for (auto& d : dimers) d = Orientation::key(d.first, d.second);
    std::sort(dimers.begin(), dimers.end());
  }
  Covering normalized() const {
    Covering c = *this;
    c.normalize();
    return c;
  }
  bool operator==(const Covering& o) const {
    Covering a = normalized(), b = o.normalized();
    return a.monomers == b.monomers && a.dimers == b.dimers;
  }
};

// Every vertex exactly once; dimers on edges of g.
inline void validate_covering(const PlanarGraph& g, const Covering& sigma) {
  std::vector<int> hits(g.vertex_count(), 0);
  auto hit = [&](int v) {
    if (v < 0 || v >= g.vertex_count()) fail(ErrorKind::InvalidCovering, "covering names a missing vertex");
    ++hits[v];
  };
  for (int v : sigma.monomers) hit(v);
  for (auto [a, b] : sigma.dimers) {
    hit(a);
    hit(b);
    if (!g.has_edge(a, b)) fail(ErrorKind::InvalidCovering, "dimer on a non-edge");
  }
  for (int h : hits)
    if (h != 1) fail(ErrorKind::InvalidCovering, "covering must cover every vertex exactly once");
}

inline int permutation_parity(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2;
}

// Sign of the pairing permutation (tail1, head1, tail2, head2, ...) in label values.
inline int covering_sign(const PlanarGraph& g, const Orientation& orient, const Labeling& labeling,
                         const Covering& sigma) {
  validate_covering(g, sigma);
  std::vector<int> seq;
  for (auto [a, b] : sigma.dimers) {
    auto t = orient.tail(a, b);
    if (!t) fail(ErrorKind::InvalidCovering, "dimer edge is not directed");
    int head = *t == a ? b : a;
    seq.push_back(labeling.of(*t));
    seq.push_back(labeling.of(head));
  }
  return permutation_parity(seq) == 0 ? 1 : -1;
}

// ---------------------------------------------------------------- orientation

namespace detail {

// Biconnected component id of every edge (Hopcroft-Tarjan).
inline std::map<std::pair<int, int>, int> edge_blocks(const PlanarGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  std::map<std::pair<int, int>, int> block;
  int timer = 0, blocks = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int u : g.rotation(v)) {
      if (u == parent) continue;
      if (disc[u] < 0) {
        stack.emplace_back(v, u);
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          while (true) {
            auto e = stack.back();
            stack.pop_back();
            block[Orientation::key(e.first, e.second)] = blocks;
            if (e == std::pair{v, u}) break;
          }
          ++blocks;
        }
      } else if (disc[u] < disc[v]) {
        stack.emplace_back(v, u);
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return block;
}

class KasteleynDirector {
 public:
  KasteleynDirector(const PlanarGraph& g, Orientation o) : g_(g), o_(std::move(o)), blocks_(edge_blocks(g)) {}

  void run(const std::vector<int>& outer) {
    make_good(outer, cycle_edges(outer));
    split(outer);
    for (const auto& ed : g_.edges()) direct_default(ed.u, ed.v);
  }

  Orientation result() const { return o_; }

 private:
  void direct_default(int u, int v) {
    if (!o_.is_directed(u, v)) o_.direct(std::min(u, v), std::max(u, v));
  }

  static std::vector<std::pair<int, int>> cycle_edges(const std::vector<int>& c) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < c.size(); ++i) out.emplace_back(c[i], c[(i + 1) % c.size()]);
    return out;
  }

  // Directs the still-undirected `edges` by default and flips one if `cycle` comes out bad.
  void make_good(const std::vector<int>& cycle, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> fresh;
    for (auto [a, b] : edges)
      if (!o_.is_directed(a, b)) {
        fresh.emplace_back(a, b);
        direct_default(a, b);
      }
    Circuit ccw = make_ccw_circuit(g_, cycle);
    int back = backwards_count(o_, ccw.vertices());
    int enclosed = enclosed_vertex_count(g_, ccw);
    if ((back + enclosed) % 2 == 1) return;
    if (fresh.empty()) fail(ErrorKind::BadPartialOrientation, "a fully pre-directed circuit is not good");
    auto [a, b] = fresh.front();
    int tail = *o_.tail(a, b);
    o_.direct(tail == a ? b : a, tail);
  }

  // Shortest path through the inside of `c` joining two distinct vertices of `c`.
  std::optional<std::vector<int>> chord_path(const std::vector<int>& c,
                                             const std::set<std::pair<int, int>>& inside_edges) {
    std::set<int> on(c.begin(), c.end());
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : inside_edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
    std::optional<std::vector<int>> best;
    std::vector<int> sorted_c(c.begin(), c.end());
    std::sort(sorted_c.begin(), sorted_c.end());
    for (int a : sorted_c) {
      std::map<int, int> parent{{a, -1}};
      std::vector<int> frontier{a};
      std::optional<std::vector<int>> found;
      while (!frontier.empty() && !found) {
        std::vector<int> next;
        for (int v : frontier) {
          for (int u : adj[v]) {
            if (parent.count(u)) continue;
            if (on.count(u)) {
              if (u == a) continue;
              std::vector<int> path{u};
              for (int x = v; x != -1; x = parent[x]) path.push_back(x);
              std::reverse(path.begin(), path.end());
              if (!found || path < *found) found = path;
              continue;
            }
            parent[u] = v;
            next.push_back(u);
          }
        }
        frontier = std::move(next);
      }
      if (found && (!best || found->size() < best->size() || (found->size() == best->size() && *found < *best)))
        best = found;
    }
    return best;
  }

  void split(const std::vector<int>& c) {
    auto inside_list = enclosed_edges(g_, c);
    if (inside_list.empty()) return;
    std::set<std::pair<int, int>> inside(inside_list.begin(), inside_list.end());
    if (auto path = chord_path(c, inside)) {
      const auto& p = *path;
      int a = p.front(), b = p.back();
      std::size_t ia = std::find(c.begin(), c.end(), a) - c.begin();
      std::size_t ib = std::find(c.begin(), c.end(), b) - c.begin();
      std::vector<int> c1, c2;
      for (std::size_t i = ia;; i = (i + 1) % c.size()) {
        c1.push_back(c[i]);
        if (i == ib) break;
      }
      for (std::size_t k = p.size() - 1; k-- > 1;) c1.push_back(p[k]);
      for (std::size_t i = ib;; i = (i + 1) % c.size()) {
        c2.push_back(c[i]);
        if (i == ia) break;
      }
      for (std::size_t k = 1; k + 1 < p.size(); ++k) c2.push_back(p[k]);
      std::vector<std::pair<int, int>> path_edges;
      for (std::size_t k = 0; k + 1 < p.size(); ++k) path_edges.emplace_back(p[k], p[k + 1]);
      make_good(c1, path_edges);
      split(c1);
      split(c2);
      return;
    }
    // No chord path: everything inside hangs off single vertices or floats in one face.
    int f0 = g_.face_of_dart(c[0], c[1]);
    std::map<int, std::vector<std::pair<int, int>>> block_darts;
    for (auto [u, v] : inside_list) {
      int f1 = g_.face_of_dart(u, v), f2 = g_.face_of_dart(v, u);
      if (f1 == f0 && f2 == f0) {
        direct_default(u, v);
      } else if (f1 == f0 || f2 == f0) {
        auto d = f1 == f0 ? std::pair{v, u} : std::pair{u, v};
        block_darts[blocks_.at(Orientation::key(u, v))].push_back(d);
      }
    }
    for (auto& [block, darts] : block_darts) {
      std::map<int, int> succ;
      for (auto [t, h] : darts) succ[t] = h;
      std::vector<int> cycle{succ.begin()->first};
      while (true) {
        int nxt = succ.at(cycle.back());
        if (nxt == cycle.front()) break;
        cycle.push_back(nxt);
        if (cycle.size() > darts.size()) throw std::logic_error("outer block walk does not close");
      }
      if (cycle.size() != darts.size()) throw std::logic_error("outer block walk is not a single cycle");
      make_good(cycle, cycle_edges(cycle));
      split(cycle);
    }
  }

  const PlanarGraph& g_;
  Orientation o_;
  std::map<std::pair<int, int>, int> blocks_;
};

}  // namespace detail

inline bool has_cycle(const PlanarGraph& g) {
  return g.edge_count() > g.vertex_count() - g.component_count();
}

// Extends `partial` to an orientation under which every circuit of g is good.
inline Orientation orient_kasteleyn(const PlanarGraph& g, const Orientation& partial = {}) {
  for (const auto& [key, tail] : partial.tails())
    if (!g.has_edge(key.first, key.second)) fail(ErrorKind::InvalidArgument, "partial orientation names a non-edge");
  if (!has_cycle(g)) {
    Orientation o = partial;
    for (const auto& ed : g.edges())
      if (!o.is_directed(ed.u, ed.v)) o.direct(std::min(ed.u, ed.v), std::max(ed.u, ed.v));
    return o;
  }
  if (auto outer = boundary_circuit(g)) {
    detail::KasteleynDirector director(g, partial);
    director.run(*outer);
    return director.result();
  }
  auto [connected, r1] = connect_components(g);
  auto [augmented, r2] = build_boundary_circuit(connected);
  Orientation full = orient_kasteleyn(augmented, partial);
  Orientation out;
  for (const auto& ed : g.edges()) out.direct(*full.tail(ed.u, ed.v), *full.tail(ed.u, ed.v) == ed.u ? ed.v : ed.u);
  return out;
}

inline bool is_total(const PlanarGraph& g, const Orientation& orient) {
  for (const auto& ed : g.edges())
    if (!orient.is_directed(ed.u, ed.v)) return false;
  return true;
}

// Every simple cycle good (equivalent to the minimal-circuit condition).
inline bool verify_kasteleyn(const PlanarGraph& g, const Orientation& orient, int cap = kDefaultCycleCap) {
  if (g.vertex_count() > cap) fail(ErrorKind::TooLarge, "exhaustive verification capped at " + std::to_string(cap));
  if (!is_total(g, orient)) return false;
  for (const auto& c : enumerate_simple_cycles(g, cap))
    if (!circuit_is_good(g, orient, c)) return false;
  return true;
}

// ---------------------------------------------------------------- enclosed graphs

namespace detail {

inline bool match_interior(const PlanarGraph& g, const std::vector<int>& order, const std::vector<char>& interior,
                           bool allow_boundary, std::vector<int>& mate, std::size_t at) {
  while (at < order.size() && mate[order[at]] >= 0) ++at;
  if (at == order.size()) return true;
  int v = order[at];
  std::vector<int> options(g.rotation(v).begin(), g.rotation(v).end());
  std::sort(options.begin(), options.end(), [&](int a, int b) {
    if (interior[a] != interior[b]) return interior[a] > interior[b];
    return a < b;
  });
  for (int u : options) {
    if (mate[u] >= 0 || (!interior[u] && !allow_boundary)) continue;
    mate[u] = v;
    mate[v] = u;
    if (match_interior(g, order, interior, allow_boundary, mate, at + 1)) return true;
    mate[u] = mate[v] = -1;
  }
  return false;
}

}  // namespace detail

// All-boundary-monomer attempt first, then interior vertices may pair with boundary ones.
inline Covering find_bmd_covering(const EnclosedGraph& eg) {
  const PlanarGraph& g = eg.graph();
  std::vector<char> interior(g.vertex_count(), 0);
  for (int v : eg.interior()) interior[v] = 1;
  for (bool allow_boundary : {false, true}) {
    std::vector<int> mate(g.vertex_count(), -1);
    if (!detail::match_interior(g, eg.interior(), interior, allow_boundary, mate, 0)) continue;
    Covering c;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (mate[v] < 0) c.monomers.push_back(v);
      else if (v < mate[v]) c.dimers.emplace_back(v, mate[v]);
    }
    return c;
  }
  fail(ErrorKind::NoCoveringExists, "no boundary monomer-dimer covering exists");
}

struct DirectedLabeling {
  Orientation orientation;
  Labeling labeling;
};

inline DirectedLabeling direct_and_label_enclosed(const EnclosedGraph& eg) {
  const PlanarGraph& g = eg.graph();
  const int n = g.vertex_count();
  if (n == 0) return {};
  const auto& boundary = eg.boundary();
  const int k = static_cast<int>(boundary.size());
  std::vector<int> label(n, 0);
  Orientation partial;
  for (int i = 0; i < k; ++i) label[boundary[i]] = i + 1;
  for (int i = 0; i + 1 < k; ++i) partial.direct(boundary[i], boundary[i + 1]);
  partial.direct(boundary[0], boundary[k - 1]);
  Orientation orient = orient_kasteleyn(g, partial);
  int next = k + 1;
  for (int v : eg.interior()) label[v] = next++;
  Labeling labeling(label);
  try {
    Covering c = find_bmd_covering(eg);
    if (covering_sign(g, orient, labeling, c) < 0) {
      if (eg.interior().size() < 2) throw std::logic_error("negative covering without interior vertices");
      labeling.swap_labels(n - 1, n);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoCoveringExists) throw;
  }
  return {orient, labeling};
}

// ---------------------------------------------------------------- auxiliary ring graph

struct AuxiliaryGraph {
  PlanarGraph graph;
  Orientation orientation;
  Labeling labeling;
  int base = 0;                 // ring vertex eps_j has index base + j - 1
  std::vector<int> boundary;    // boundary[j-1] = vertex labelled j
  int ring(int j) const {       // 1-based, cyclic
    int k = static_cast<int>(boundary.size());
    return base + ((j - 1) % k + k) % k;
  }
  int boundary_vertex(int j) const {
    int k = static_cast<int>(boundary.size());
    return boundary[((j - 1) % k + k) % k];
  }
};

inline AuxiliaryGraph build_auxiliary_gamma(const EnclosedGraph& eg, const Orientation& orient, const Labeling& labeling) {
  const PlanarGraph& g = eg.graph();
  const int n = g.vertex_count();
  const auto& ccw = eg.boundary();
  const int k = static_cast<int>(ccw.size());
  if (n == 0 || k < 4) fail(ErrorKind::NotEnclosed, "auxiliary graph needs a nonempty enclosed graph");
  auto by_label = labeling.vertex_by_label();
  AuxiliaryGraph aux;
  for (int j = 1; j <= k; ++j) aux.boundary.push_back(by_label[j]);
  // Labels 1..k must run counterclockwise around the boundary circuit.
  auto start = std::find(ccw.begin(), ccw.end(), aux.boundary[0]);
  if (start == ccw.end()) fail(ErrorKind::NotEnclosed, "label 1 is not on the boundary");
  std::vector<int> rotated(ccw.begin(), ccw.end());
  std::rotate(rotated.begin(), rotated.begin() + (start - ccw.begin()), rotated.end());
  if (rotated != aux.boundary) fail(ErrorKind::NotEnclosed, "boundary labels do not run counterclockwise");

  Embedding e = g.embedding();
  e.pos.clear();
  aux.base = n;
  for (int j = 1; j <= k; ++j) detail::append_vertex(e, Rational(0));
  auto eps = [&](int j) { return aux.ring(j); };
  auto vb = [&](int j) { return aux.boundary_vertex(j); };
  Orientation o = orient;
  std::vector<int> label = labeling.labels();
  for (int j = 1; j <= k; ++j) label.push_back(n + j);
  for (int j = 1; j <= k; ++j) {
    detail::insert_before(e.rotation[vb(j)], vb(j + 1), eps(j - 1));
    detail::insert_before(e.rotation[vb(j)], vb(j + 1), eps(j));
    e.rotation[eps(j)] = {eps(j + 1), vb(j + 1), vb(j), eps(j - 1)};
    e.edges.push_back({vb(j), eps(j), g.monomer(vb(j))});
    e.edges.push_back({vb(j), eps(j - 1), g.monomer(vb(j))});
    e.edges.push_back({eps(j), eps(j + 1), Rational(1)});
  }
  for (int j = 1; j < k; ++j) o.direct(eps(j), eps(j + 1));
  o.direct(eps(1), eps(k));
  for (int j = 1; j <= k; ++j) {
    if (j == 1) {
      o.direct(vb(1), eps(1));
      o.direct(eps(k), vb(1));
    } else if (j % 2 == 1) {
      o.direct(vb(j), eps(j));
      o.direct(vb(j), eps(j - 1));
    } else {
      o.direct(eps(j), vb(j));
      o.direct(eps(j - 1), vb(j));
    }
  }
  e.unbounded = {FaceRef{eps(2), eps(1)}};
  e.nested.clear();
  aux.graph = PlanarGraph(std::move(e));
  aux.orientation = o;
  aux.labeling = Labeling(label);
  return aux;
}

enum class LambdaVariant { Standard, Barred };

inline Covering lambda_gamma(const PlanarGraph& g, const AuxiliaryGraph& aux, const Covering& sigma,
                             LambdaVariant variant = LambdaVariant::Standard) {
  validate_covering(g, sigma);
  const int k = static_cast<int>(aux.boundary.size());
  std::vector<char> in_m(k + 1, 0);
  for (int v : sigma.monomers) {
    int j = aux.labeling.of(v);
    if (j > k) fail(ErrorKind::MonomerOffBoundary, "monomer on an interior vertex");
    in_m[j] = 1;
  }
  if (sigma.monomers.size() % 2 != 0) fail(ErrorKind::OddMonomerCount, "odd number of monomers");
  Covering out;
  out.dimers = sigma.dimers;
  int p = variant == LambdaVariant::Barred ? 1 : 0;
  for (int j = 1; j <= k; ++j) {
    bool odd = (j + p) % 2 == 1;
    if (in_m[j]) out.dimers.emplace_back(aux.boundary_vertex(j), odd ? aux.ring(j) : aux.ring(j - 1));
    else if (!odd) out.dimers.emplace_back(aux.ring(j), aux.ring(j - 1));
    if (in_m[j]) ++p;
  }
  out.normalize();
  validate_covering(aux.graph, out);
  return out;
}

inline Covering Lambda_gamma(const AuxiliaryGraph& aux, const Covering& big) {
  try {
    validate_covering(aux.graph, big);
  } catch (const Error&) {
    fail(ErrorKind::NotPerfectMatching, "not a perfect matching of the auxiliary graph");
  }
  if (!big.monomers.empty()) fail(ErrorKind::NotPerfectMatching, "auxiliary covering has monomers");
  Covering out;
  for (auto [a, b] : big.dimers) {
    bool ra = a >= aux.base, rb = b >= aux.base;
    if (!ra && !rb) out.dimers.emplace_back(a, b);
    else if (ra != rb) out.monomers.push_back(ra ? b : a);
  }
  out.normalize();
  return out;
}

}  // namespace dimerpf
