#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dimerpf/dimerpf.hpp"

// Test corpus and reference computations that avoid the library's own algorithms.
namespace support {

using dimerpf::PlanarGraph;
using dimerpf::Rational;
using Dense = std::vector<std::vector<Rational>>;

struct NamedGraph {
  std::string name;
  PlanarGraph graph;
};

// ---------------------------------------------------------------- reference linear algebra

inline Dense dense_of(const dimerpf::SkewMatrix<Rational>& a) {
  Dense d(a.size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) d[i][j] = a(i, j);
  return d;
}

inline Dense drop(const Dense& a, const std::vector<std::size_t>& removed) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) keep.push_back(i);
  Dense out(keep.size(), std::vector<Rational>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out[i][j] = a[keep[i]][keep[j]];
  return out;
}

inline Dense restrict_to(const Dense& a, const std::vector<std::size_t>& keep) {
  Dense out(keep.size(), std::vector<Rational>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out[i][j] = a[keep[i]][keep[j]];
  return out;
}

// Expansion along the first row: pf(A) = sum_j (-1)^(j+1) a_0j pf(A without 0, j).
inline Rational reference_pf(const Dense& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n % 2 != 0) return 0;
  Rational total = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (sgn(a[0][j]) == 0) continue;
    Rational term = a[0][j] * reference_pf(drop(a, {0, j}));
    if (j % 2 == 1) total += term;
    else total -= term;
  }
  return total;
}

inline Rational reference_det(Dense a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

inline dimerpf::SkewMatrix<Rational> random_skew(std::mt19937_64& rng, std::size_t n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  dimerpf::SkewMatrix<Rational> a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.set(i, j, Rational(d(rng)));
  return a;
}

// ---------------------------------------------------------------- reference geometry

// Simple cycles as vertex lists, by brute-force DFS from each smallest vertex.
inline std::vector<std::vector<int>> reference_cycles(const PlanarGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> adj(n);
  for (const auto& e : g.edges()) adj[e.u].insert(e.v), adj[e.v].insert(e.u);
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> used(n, 0);
  std::function<void(int, int)> dfs = [&](int s, int v) {
    for (int u : adj[v]) {
      if (u == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (u <= s || used[u]) continue;
      used[u] = 1;
      path.push_back(u);
      dfs(s, u);
      path.pop_back();
      used[u] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used[s] = 1;
    dfs(s, s);
    used[s] = 0;
  }
  return out;
}

// Even-odd ray casting; points on the polygon are reported as outside.
inline bool strictly_inside(const dimerpf::Point& p, const std::vector<dimerpf::Point>& poly) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const auto& a = poly[i];
    const auto& b = poly[j];
    double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    bool within_x = std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x);
    bool within_y = std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
    if (cross == 0 && within_x && within_y) return false;
    if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) inside = !inside;
  }
  return inside;
}

inline std::vector<dimerpf::Point> polygon_of(const PlanarGraph& g, const std::vector<int>& cycle) {
  std::vector<dimerpf::Point> poly;
  for (int v : cycle) poly.push_back(g.position(v));
  return poly;
}

// A vertex or edge midpoint reaches infinity unless some cycle not passing through it strictly surrounds it.
inline std::pair<std::vector<int>, std::vector<std::pair<int, int>>> geometric_boundary(const PlanarGraph& g) {
  auto cycles = reference_cycles(g);
  std::vector<std::vector<dimerpf::Point>> polys;
  std::vector<std::set<std::pair<int, int>>> cycle_edges;
  for (const auto& c : cycles) {
    polys.push_back(polygon_of(g, c));
    std::set<std::pair<int, int>> es;
    for (std::size_t i = 0; i < c.size(); ++i) es.insert(dimerpf::Orientation::key(c[i], c[(i + 1) % c.size()]));
    cycle_edges.push_back(es);
  }
  std::vector<int> vs;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool enclosed = false;
    for (std::size_t k = 0; k < cycles.size() && !enclosed; ++k)
      enclosed = std::find(cycles[k].begin(), cycles[k].end(), v) == cycles[k].end() && strictly_inside(g.position(v), polys[k]);
    if (!enclosed) vs.push_back(v);
  }
  std::vector<std::pair<int, int>> es;
  for (const auto& e : g.edges()) {
    auto key = dimerpf::Orientation::key(e.u, e.v);
    dimerpf::Point mid{(g.position(e.u).x + g.position(e.v).x) / 2, (g.position(e.u).y + g.position(e.v).y) / 2};
    bool enclosed = false;
    for (std::size_t k = 0; k < cycles.size() && !enclosed; ++k)
      enclosed = !cycle_edges[k].count(key) && strictly_inside(mid, polys[k]);
    if (!enclosed) es.push_back(key);
  }
  std::sort(es.begin(), es.end());
  return {vs, es};
}

inline int geometric_enclosed_count(const PlanarGraph& g, const std::vector<int>& cycle) {
  auto poly = polygon_of(g, cycle);
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (strictly_inside(g.position(v), poly)) ++count;
  return count;
}

// ---------------------------------------------------------------- weights

enum class Weights { Unit, OneEdgeZero, Mixed };

inline std::string weights_name(Weights w) {
  switch (w) {
    case Weights::Unit: return "all-1";
    case Weights::OneEdgeZero: return "one-edge-0";
    case Weights::Mixed: return "mixed-1/2";
  }
  return "?";
}

inline PlanarGraph with_weights(const PlanarGraph& g, Weights w) {
  const int middle = g.edge_count() / 2;
  switch (w) {
    case Weights::Unit:
      return dimerpf::graphs::reweighted(g, [](int) { return Rational(1); }, [](int) { return Rational(1); });
    case Weights::OneEdgeZero:
      return dimerpf::graphs::reweighted(g, [&](int e) { return Rational(e == middle ? 0 : 1); },
                                         [](int) { return Rational(1); });
    case Weights::Mixed: {
      const Rational cycle3[] = {Rational(1, 2), Rational(1), Rational(2)};
      return dimerpf::graphs::reweighted(g, [&](int e) { return cycle3[e % 3]; },
                                         [&](int v) { return cycle3[(v + 1) % 3]; });
    }
  }
  return g;
}

inline const std::vector<Weights>& all_weights() {
  static const std::vector<Weights> w{Weights::Unit, Weights::OneEdgeZero, Weights::Mixed};
  return w;
}

// ---------------------------------------------------------------- corpus

inline constexpr std::uint64_t kSmallTriangulationSeed = 100;

// Every connected spanning subgraph of one fixed triangulation per size up to 6 vertices,
// seeded random connected subgraphs on 7 and 8 vertices, and named families.
inline std::vector<NamedGraph> corpus() {
  namespace gr = dimerpf::graphs;
  std::vector<NamedGraph> out;
  for (int n = 2; n <= 6; ++n) {
    auto ps = gr::random_triangulation(n, kSmallTriangulationSeed + n);
    int k = 0;
    for (auto& g : gr::connected_spanning_subgraphs(ps))
      out.push_back({"subgraph-n" + std::to_string(n) + "-" + std::to_string(k++), std::move(g)});
  }
  for (int n = 7; n <= 8; ++n) {
    auto ps = gr::random_triangulation(n, kSmallTriangulationSeed + n);
    for (int s = 0; s < 100; ++s)
      out.push_back({"random-n" + std::to_string(n) + "-" + std::to_string(s), gr::random_connected_subgraph(ps, 7000 + 100 * n + s)});
  }
  for (int rows = 1; rows <= 3; ++rows)
    for (int cols = 1; cols <= 4; ++cols)
      if (rows * cols >= 2) out.push_back({"grid-" + std::to_string(cols) + "x" + std::to_string(rows), gr::grid(cols, rows)});
  for (int rim = 3; rim <= 7; ++rim) out.push_back({"wheel-" + std::to_string(rim), gr::wheel(rim)});
  for (int n = 2; n <= 10; ++n) out.push_back({"tree-" + std::to_string(n), gr::random_tree(n, 500 + n)});
  for (int n = 3; n <= 8; ++n) out.push_back({"cycle-" + std::to_string(n), gr::cycle(n)});
  for (int n = 2; n <= 6; ++n) out.push_back({"path-" + std::to_string(n), gr::path(n)});
  for (int k = 3; k <= 5; ++k) out.push_back({"star-" + std::to_string(k), gr::star(k)});
  out.push_back({"square-diagonal", gr::square_with_diagonal()});
  for (int k = 0; k < 25; ++k) out.push_back({"delaunay-" + std::to_string(k), gr::delaunay(4 + k % 7, 1000 + k)});
  return out;
}

// Random connected graph on a random triangulation of n points.
inline PlanarGraph random_graph(std::mt19937_64& rng, int n_min, int n_max) {
  std::uniform_int_distribution<int> size(n_min, n_max);
  int n = size(rng);
  auto ps = dimerpf::graphs::random_triangulation(n, rng());
  return dimerpf::graphs::random_connected_subgraph(ps, rng());
}

inline dimerpf::Orientation random_orientation(const PlanarGraph& g, std::mt19937_64& rng) {
  dimerpf::Orientation o;
  for (const auto& e : g.edges()) {
    if (rng() % 2) o.direct(e.u, e.v);
    else o.direct(e.v, e.u);
  }
  return o;
}

inline dimerpf::Labeling random_labeling(int n, std::mt19937_64& rng) {
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i) l[i] = i + 1;
  std::shuffle(l.begin(), l.end(), rng);
  return dimerpf::Labeling(l);
}

// x^k coefficients -> z^(2k), for comparisons with bounds expressed in z.
inline std::map<int, Rational> coefficients(const dimerpf::SparsePoly& p, int var) {
  std::map<int, Rational> out;
  for (const auto& [m, c] : p.terms()) out[m.twice_exponent(var)] += c;
  return out;
}

}  // namespace support
