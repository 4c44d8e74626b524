#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dimerpf/embedding.hpp"
#include "dimerpf/error.hpp"
#include "dimerpf/graphs.hpp"
#include "dimerpf/kasteleyn.hpp"
#include "dimerpf/parallel.hpp"
#include "dimerpf/partition.hpp"
#include "dimerpf/pfaffian.hpp"
#include "dimerpf/poly.hpp"
#include "dimerpf/reduce.hpp"

namespace dimerpf {

// ---------------------------------------------------------------- skeletons

// Planar part `s` (same vertices as the full graph) plus the removed edges, which may cross s.
struct Skeleton {
  PlanarGraph s;
  std::vector<EdgeRecord> removed;
};

inline void validate_skeleton(const Skeleton& sk) {
  const PlanarGraph& s = sk.s;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : sk.removed) {
    if (e.u < 0 || e.v < 0 || e.u >= s.vertex_count() || e.v >= s.vertex_count() || e.u == e.v)
      fail(ErrorKind::InvalidSkeleton, "removed edge has invalid endpoints");
    auto key = Orientation::key(e.u, e.v);
    if (s.has_edge(e.u, e.v) || !seen.insert(key).second)
      fail(ErrorKind::InvalidSkeleton, "removed edge duplicates another edge");
  }
  for (int v = 0; v < s.vertex_count(); ++v)
    if (!s.on_outer_face(v)) fail(ErrorKind::InvalidSkeleton, "skeleton vertex " + std::to_string(s.id(v)) + " is internal");
}

// Checks that skeleton plus removed edges reproduce g exactly.
inline void validate_skeleton_of(const PlanarGraph& g, const Skeleton& sk) {
  validate_skeleton(sk);
  if (g.vertex_count() != sk.s.vertex_count()) fail(ErrorKind::InvalidSkeleton, "vertex sets differ");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.id(v) != sk.s.id(v) || g.monomer(v) != sk.s.monomer(v))
      fail(ErrorKind::InvalidSkeleton, "vertex data differs");
  if (g.edge_count() != sk.s.edge_count() + static_cast<int>(sk.removed.size()))
    fail(ErrorKind::InvalidSkeleton, "edge sets differ");
  for (const auto& e : sk.s.edges())
    if (!g.has_edge(e.u, e.v) || g.dimer(e.u, e.v) != e.dimer) fail(ErrorKind::InvalidSkeleton, "edge sets differ");
  for (const auto& e : sk.removed)
    if (!g.has_edge(e.u, e.v) || g.dimer(e.u, e.v) != e.dimer) fail(ErrorKind::InvalidSkeleton, "edge sets differ");
}

// Comb skeleton of the cols x rows grid: horizontal edges between columns 2t+1 and 2t+2 are
// removed on every row except the top two, opening a slot from the bottom edge.
inline Skeleton build_skeleton_rectangle(int cols, int rows) {
  if (cols < 2 || rows < 2 || cols % 2 != 0)
    fail(ErrorKind::BadDimensions, "rectangle skeleton needs an even width >= 2 and height >= 2");
  PlanarGraph full = graphs::grid(cols, rows);
  std::vector<std::pair<int, int>> removed_pairs;
  for (int x = 1; x + 2 < cols; x += 2)
    for (int y = 0; y + 2 < rows; ++y) removed_pairs.emplace_back(y * cols + x, y * cols + x + 1);
  Skeleton sk{full.without_edges(removed_pairs), {}};
  for (auto [u, v] : removed_pairs) sk.removed.push_back({u, v, full.dimer(u, v)});
  validate_skeleton_of(full, sk);
  std::vector<char> used(full.vertex_count(), 0);
  for (const auto& e : sk.removed) {
    if (used[e.u] || used[e.v]) fail(ErrorKind::InvalidSkeleton, "removed edges are not a matching");
    used[e.u] = used[e.v] = 1;
  }
  if (static_cast<int>(sk.removed.size()) * 2 != (cols - 2) * (rows - 2))
    throw std::logic_error("rectangle skeleton has the wrong number of removed edges");
  return sk;
}

// Vertex-disjoint subsets of the removed edges.
inline std::vector<std::vector<int>> removed_edge_matchings(const Skeleton& sk) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<char> used(sk.s.vertex_count(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == sk.removed.size()) {
      out.push_back(current);
      return;
    }
    rec(i + 1);
    const auto& e = sk.removed[i];
    if (used[e.u] || used[e.v]) return;
    used[e.u] = used[e.v] = 1;
    current.push_back(static_cast<int>(i));
    rec(i + 1);
    current.pop_back();
    used[e.u] = used[e.v] = 0;
  };
  rec(0);
  return out;
}

struct SkeletonStats {
  std::size_t pfaffians = 0;
  std::size_t matchings = 0;
};

// Sum over matchings mu of the removed edges of prod(d_e) times the partition function of s
// with mu's endpoints deleted; every remaining vertex is a boundary vertex.
inline PartitionPolynomial full_partition_skeleton(const Skeleton& sk, int threads = 1, SkeletonStats* stats = nullptr) {
  validate_skeleton(sk);
  auto matchings = removed_edge_matchings(sk);
  std::atomic<std::size_t> pfaffians{0};
  auto terms = parallel_map<SparsePoly>(matchings.size(), threads, [&](std::size_t k) {
    std::vector<int> removed;
    Rational weight = 1;
    for (int i : matchings[k]) {
      removed.push_back(sk.removed[i].u);
      removed.push_back(sk.removed[i].v);
      weight *= sk.removed[i].dimer;
    }
    if (sgn(weight) == 0) return SparsePoly();
    PlanarGraph sub = sk.s.without_vertices(removed);
    if (sub.vertex_count() > 0) ++pfaffians;
    return boundary_partition(sub).poly * SparsePoly(weight);
  });
  PartitionPolynomial out{SparsePoly(), "skeleton", graph_hash(sk.s)};
  for (const auto& t : terms) out.poly += t;
  if (stats) {
    stats->pfaffians = pfaffians;
    stats->matchings = matchings.size();
  }
  return out;
}

// ---------------------------------------------------------------- Hamiltonian split

inline constexpr int kHamiltonianCap = 12;

inline std::optional<std::vector<int>> search_hamiltonian_cycle(const PlanarGraph& g) {
  const int n = g.vertex_count();
  if (n > kHamiltonianCap) fail(ErrorKind::TooLarge, "Hamiltonian search limited to " + std::to_string(kHamiltonianCap) + " vertices");
  if (n < 3) return std::nullopt;
  std::vector<int> path{0};
  std::vector<char> on(n, 0);
  on[0] = 1;
  std::function<bool()> rec = [&]() {
    int v = path.back();
    if (static_cast<int>(path.size()) == n) return g.has_edge(v, 0) && path[1] < v;
    std::vector<int> next(g.rotation(v).begin(), g.rotation(v).end());
    std::sort(next.begin(), next.end());
    for (int u : next) {
      if (on[u]) continue;
      on[u] = 1;
      path.push_back(u);
      if (rec()) return true;
      path.pop_back();
      on[u] = 0;
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return make_ccw_circuit(g, path).vertices();
}

struct HamiltonianResult {
  PlanarGraph graph;        // g, or g plus zero-weight edges
  std::vector<int> cycle;   // counterclockwise
  bool augmented = false;
};

// Backtracking first; otherwise, if every vertex is on the outer face, the augmented boundary circuit.
inline HamiltonianResult find_hamiltonian_cycle(const PlanarGraph& g) {
  if (auto c = search_hamiltonian_cycle(g)) return {g, *c, false};
  if (g.vertex_count() >= 3 && static_cast<int>(boundary_subgraph(g).vertices.size()) == g.vertex_count()) {
    auto [connected, r1] = connect_components(g);
    auto [augmented, r2] = build_boundary_circuit(connected);
    auto c = boundary_circuit(augmented);
    if (c && static_cast<int>(c->size()) == g.vertex_count()) return {augmented, *c, true};
  }
  fail(ErrorKind::NotHamiltonian, "no Hamiltonian cycle, and not every vertex lies on the outer face");
}

struct InOutSplit {
  PlanarGraph inside;   // cycle plus the chords it encloses
  PlanarGraph outside;  // cycle plus the other chords, embedded with the cycle's interior unbounded
  std::vector<int> cycle;
};

inline InOutSplit split_hamiltonian(const PlanarGraph& g, const std::vector<int>& cycle) {
  const int n = g.vertex_count();
  if (static_cast<int>(cycle.size()) != n) fail(ErrorKind::NotHamiltonian, "cycle does not visit every vertex");
  require_cycle(g, cycle);
  std::vector<int> ccw = make_ccw_circuit(g, cycle).vertices();
  std::set<std::pair<int, int>> on_cycle, inner;
  for (int i = 0; i < n; ++i) on_cycle.insert(Orientation::key(ccw[i], ccw[(i + 1) % n]));
  for (auto e : enclosed_edges(g, ccw)) inner.insert(e);
  auto build = [&](bool keep_inner, bool mirror) {
    Embedding e = g.embedding();
    e.pos.clear();
    std::vector<EdgeRecord> edges;
    for (const auto& ed : e.edges) {
      auto k = Orientation::key(ed.u, ed.v);
      if (on_cycle.count(k) || inner.count(k) == static_cast<std::size_t>(keep_inner)) edges.push_back(ed);
    }
    std::set<std::pair<int, int>> kept;
    for (const auto& ed : edges) kept.insert(Orientation::key(ed.u, ed.v));
    for (int v = 0; v < n; ++v) {
      std::vector<int> rot;
      for (int u : e.rotation[v])
        if (kept.count(Orientation::key(u, v))) rot.push_back(u);
      if (mirror) std::reverse(rot.begin(), rot.end());
      e.rotation[v] = rot;
    }
    e.edges = edges;
    e.unbounded = {FaceRef{ccw[1], ccw[0]}};
    e.nested.clear();
    return PlanarGraph(std::move(e));
  };
  return {build(true, false), build(false, true), ccw};
}

// Theorem-1 partition function of h with symbolic weights on the original vertices and edges.
inline SparsePoly symbolic_boundary_partition(const PlanarGraph& h, const std::function<SparsePoly(int)>& vertex_weight,
                                              const std::function<SparsePoly(int, int)>& edge_weight) {
  if (h.vertex_count() == 0) return SparsePoly(1);
  PipelineSetup s = prepare_pipeline(h);
  const PlanarGraph& e = s.enclosed.graph();
  const int n0 = h.vertex_count();
  auto a = build_kasteleyn<SparsePoly>(e, s.orientation, s.labeling, [&](int u, int v) {
    if (u < n0 && v < n0 && h.has_edge(u, v)) return edge_weight(u, v);
    return SparsePoly(e.dimer(u, v));
  });
  std::vector<SparsePoly> ell(e.vertex_count());
  for (int v : s.enclosed.boundary()) ell[v] = v < n0 ? vertex_weight(v) : SparsePoly(e.monomer(v));
  return pf_combinatorial(lieb_matrix(a, by_label(s.labeling, ell)));
}

struct InOutVariables {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // index -> edge of g
  std::set<std::pair<int, int>> on_cycle;
  int lambda(int v) const { return kFirstFreeVar + v; }
  int delta(int edge) const { return kFirstFreeVar + n + edge; }
  int edge_index(int u, int v) const {
    auto k = Orientation::key(u, v);
    return static_cast<int>(std::find(edges.begin(), edges.end(), k) - edges.begin());
  }
};

inline constexpr int kInOutCap = 10;

struct InOutProduct {
  InOutVariables vars;
  SparsePoly inside;
  SparsePoly outside;
};

inline InOutProduct inout_factors(const PlanarGraph& g, const std::vector<int>& cycle, bool with_caps) {
  if (g.vertex_count() > kInOutCap) fail(ErrorKind::TooLarge, "in/out method limited to " + std::to_string(kInOutCap) + " vertices");
  InOutSplit split = split_hamiltonian(g, cycle);
  InOutProduct out;
  InOutVariables& vars = out.vars;
  vars.n = g.vertex_count();
  for (const auto& ed : g.edges()) vars.edges.push_back(Orientation::key(ed.u, ed.v));
  for (std::size_t i = 0; i < split.cycle.size(); ++i)
    vars.on_cycle.insert(Orientation::key(split.cycle[i], split.cycle[(i + 1) % split.cycle.size()]));
  auto capped = [&](SparsePoly p) {
    if (!with_caps) return p;
    for (int v = 0; v < vars.n; ++v) p.set_cap(vars.lambda(v), 4);
    for (std::size_t i = 0; i < vars.edges.size(); ++i)
      p.set_cap(vars.delta(static_cast<int>(i)), vars.on_cycle.count(vars.edges[i]) ? 4 : 2);
    return p;
  };
  auto vw = [&](int v) { return capped(SparsePoly::variable(vars.lambda(v))); };
  auto ew = [&](int u, int v) { return capped(SparsePoly::variable(vars.delta(vars.edge_index(u, v)))); };
  out.inside = symbolic_boundary_partition(split.inside, vw, ew);
  out.outside = symbolic_boundary_partition(split.outside, vw, ew);
  return out;
}

struct ExtractedTerm {
  Rational weight;
  int monomers = 0;
};

// Applies the derivative operators to one term of the product and evaluates at zero.
inline ExtractedTerm inout_extract(const PlanarGraph& g, const InOutVariables& vars, const Monomial& m) {
  std::vector<int> lambda(vars.n, 0), consumed(vars.n, 0);
  ExtractedTerm out{1, 0};
  for (const auto& [var, twice] : m.powers()) {
    if (twice % 2 != 0 || twice < 0 || var < kFirstFreeVar) return {0, 0};
    int e = twice / 2;
    if (var < kFirstFreeVar + vars.n) {
      lambda[var - kFirstFreeVar] = e;
      continue;
    }
    const auto& edge = vars.edges[var - kFirstFreeVar - vars.n];
    if (vars.on_cycle.count(edge)) {
      if (e != 2) return {0, 0};
    } else {
      if (e != 1) return {0, 0};
      ++consumed[edge.first];
      ++consumed[edge.second];
    }
    out.weight *= g.dimer(edge.first, edge.second);
  }
  for (int v = 0; v < vars.n; ++v) {
    int rest = lambda[v] - consumed[v];
    if (rest == 0) {
      if (consumed[v] == 2) out.weight *= 2;
    } else if (rest == 2 && consumed[v] == 0) {
      out.weight *= g.monomer(v);
      ++out.monomers;
    } else {
      return {0, 0};
    }
  }
  return out;
}

// Full partition function from the inside and outside Pfaffians of a Hamiltonian split.
inline PartitionPolynomial full_partition_inout(const PlanarGraph& g, const std::vector<int>& cycle) {
  InOutProduct f = inout_factors(g, cycle, true);
  SparsePoly product = f.inside * f.outside;
  PartitionPolynomial out{SparsePoly(), "inout", graph_hash(g)};
  for (const auto& [m, c] : product.terms()) {
    ExtractedTerm t = inout_extract(g, f.vars, m);
    if (sgn(t.weight) != 0) out.poly += SparsePoly::variable(kVarX, c * t.weight, t.monomers);
  }
  return out;
}

inline PartitionPolynomial full_partition_inout(const PlanarGraph& g) {
  HamiltonianResult h = find_hamiltonian_cycle(g);
  PartitionPolynomial out = full_partition_inout(h.graph, h.cycle);
  out.graph_hash = graph_hash(g);
  return out;
}

// ---------------------------------------------------------------- upper bound

// Substitutes each variable of p by a polynomial in z.
inline SparsePoly substitute(const SparsePoly& p, const std::map<int, SparsePoly>& values) {
  SparsePoly out;
  for (const auto& [m, c] : p.terms()) {
    SparsePoly term(c);
    for (const auto& [var, twice] : m.powers()) {
      auto it = values.find(var);
      if (it == values.end() || twice < 0 || twice % 2 != 0) fail(ErrorKind::InvalidArgument, "cannot substitute variable");
      for (int k = 0; k < twice / 2; ++k) term *= it->second;
    }
    out += term;
  }
  return out;
}

// pf(A_i) pf(A_e) with lambda_v = sqrt(l_v), delta_e = sqrt(d_e) on the cycle and
// sqrt(d_e)/sqrt(l_v l_v') off it, where l_v = m_v z. A Laurent polynomial in z^(1/2).
inline SparsePoly upper_bound_poly(const PlanarGraph& g, const std::vector<int>& cycle) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (sgn(g.monomer(v)) <= 0) fail(ErrorKind::NonpositiveMonomerWeight, "monomer weights must be positive");
  for (const auto& ed : g.edges())
    if (sgn(ed.dimer) < 0) fail(ErrorKind::NegativeDimerWeight, "dimer weights must be nonnegative");
  auto root = [](const Rational& q) {
    auto r = exact_sqrt(q);
    if (!r) fail(ErrorKind::NonSquareWeight, "weight " + q.get_str() + " is not a rational square");
    return *r;
  };
  InOutProduct f = inout_factors(g, cycle, false);
  std::map<int, SparsePoly> values;
  for (int v = 0; v < f.vars.n; ++v) values[f.vars.lambda(v)] = SparsePoly::variable(kVarZ, root(g.monomer(v)), 1);
  for (std::size_t i = 0; i < f.vars.edges.size(); ++i) {
    auto [u, v] = f.vars.edges[i];
    Rational d = root(g.dimer(u, v));
    if (f.vars.on_cycle.count(f.vars.edges[i])) values[f.vars.delta(static_cast<int>(i))] = SparsePoly(d);
    else
      values[f.vars.delta(static_cast<int>(i))] =
          SparsePoly::variable(kVarZ, d / (root(g.monomer(u)) * root(g.monomer(v))), -2);
  }
  return substitute(f.inside, values) * substitute(f.outside, values);
}

inline SparsePoly upper_bound_poly(const PlanarGraph& g) {
  HamiltonianResult h = find_hamiltonian_cycle(g);
  return upper_bound_poly(h.graph, h.cycle);
}

}  // namespace dimerpf
