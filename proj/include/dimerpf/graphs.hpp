#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dimerpf/embedding.hpp"

// Straight-line test and corpus graphs.
namespace dimerpf::graphs {

using EdgeList = std::vector<std::pair<int, int>>;

inline PlanarGraph from_points(const std::vector<Point>& points, const EdgeList& edges) {
  std::vector<VertexSpec> vs;
  for (std::size_t i = 0; i < points.size(); ++i) vs.push_back({static_cast<long>(i), points[i]});
  std::vector<EdgeSpec> es;
  for (auto [u, v] : edges) es.push_back({u, v});
  return PlanarGraph::from_coordinates(vs, es);
}

// cols x rows lattice; vertex id = row * cols + col at position (col, row).
inline PlanarGraph grid(int cols, int rows) {
  std::vector<Point> pts;
  EdgeList edges;
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x < cols; ++x) {
      pts.push_back({double(x), double(y)});
      int v = y * cols + x;
      if (x + 1 < cols) edges.emplace_back(v, v + 1);
      if (y + 1 < rows) edges.emplace_back(v, v + cols);
    }
  return from_points(pts, edges);
}

inline std::vector<Point> polygon_points(int n, double radius = 10) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    double t = 2 * std::numbers::pi * i / n;
    pts.push_back({radius * std::cos(t), radius * std::sin(t)});
  }
  return pts;
}

inline PlanarGraph cycle(int n) {
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from_points(polygon_points(n), edges);
}

inline PlanarGraph path(int n) {
  std::vector<Point> pts;
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    pts.push_back({double(i), double(i % 2)});
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  return from_points(pts, edges);
}

// Center 0, leaves 1..k.
inline PlanarGraph star(int leaves) {
  std::vector<Point> pts{{0, 0}};
  auto rim = polygon_points(leaves);
  pts.insert(pts.end(), rim.begin(), rim.end());
  EdgeList edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return from_points(pts, edges);
}

// Rim 0..k-1, hub k.
inline PlanarGraph wheel(int rim) {
  auto pts = polygon_points(rim);
  pts.push_back({0, 0});
  EdgeList edges;
  for (int i = 0; i < rim; ++i) {
    edges.emplace_back(i, (i + 1) % rim);
    edges.emplace_back(i, rim);
  }
  return from_points(pts, edges);
}

inline PlanarGraph square_with_diagonal() {
  return from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

// Same embedding, new weights.
inline PlanarGraph reweighted(const PlanarGraph& g, const std::function<Rational(int edge)>& dimer,
                              const std::function<Rational(int vertex)>& monomer) {
  Embedding e = g.embedding();
  for (std::size_t i = 0; i < e.edges.size(); ++i) e.edges[i].dimer = dimer(static_cast<int>(i));
  for (std::size_t v = 0; v < e.monomer.size(); ++v) e.monomer[v] = monomer(static_cast<int>(v));
  return PlanarGraph(std::move(e));
}

// ---------------------------------------------------------------- triangulations

namespace detail {

inline std::int64_t orient2(const std::pair<std::int64_t, std::int64_t>& a, const std::pair<std::int64_t, std::int64_t>& b,
                            const std::pair<std::int64_t, std::int64_t>& c) {
  return (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
}

// > 0 when d lies strictly inside the circumcircle of the counterclockwise triangle abc.
inline __int128 in_circle(const std::pair<std::int64_t, std::int64_t>& a, const std::pair<std::int64_t, std::int64_t>& b,
                          const std::pair<std::int64_t, std::int64_t>& c, const std::pair<std::int64_t, std::int64_t>& d) {
  __int128 ax = a.first - d.first, ay = a.second - d.second;
  __int128 bx = b.first - d.first, by = b.second - d.second;
  __int128 cx = c.first - d.first, cy = c.second - d.second;
  return (ax * ax + ay * ay) * (bx * cy - cx * by) - (bx * bx + by * by) * (ax * cy - cx * ay) +
         (cx * cx + cy * cy) * (ax * by - bx * ay);
}

}  // namespace detail

// Delaunay edges of integer points in general position (no three collinear, no four cocircular).
inline std::optional<EdgeList> delaunay_edges(const std::vector<std::pair<std::int64_t, std::int64_t>>& p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (detail::orient2(p[i], p[j], p[k]) == 0) return std::nullopt;
        for (int l = k + 1; l < n; ++l) {
          auto [a, b, c] = std::tuple{i, j, k};
          if (detail::orient2(p[a], p[b], p[c]) < 0) std::swap(b, c);
          if (detail::in_circle(p[a], p[b], p[c], p[l]) == 0) return std::nullopt;
        }
      }
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        int a = i, b = j, c = k;
        if (detail::orient2(p[a], p[b], p[c]) < 0) std::swap(b, c);
        bool empty = true;
        for (int l = 0; l < n && empty; ++l)
          if (l != a && l != b && l != c && detail::in_circle(p[a], p[b], p[c], p[l]) > 0) empty = false;
        if (!empty) continue;
        edges.insert({i, j});
        edges.insert({i, k});
        edges.insert({j, k});
      }
  if (n == 2) edges.insert({0, 1});
  return EdgeList(edges.begin(), edges.end());
}

struct PointSet {
  std::vector<Point> points;
  EdgeList triangulation;
};

// Random integer points in [0, span)^2 in general position, with their Delaunay triangulation.
inline PointSet random_triangulation(int n, std::uint64_t seed, int span = 64) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(0, span - 1);
  while (true) {
    std::vector<std::pair<std::int64_t, std::int64_t>> p;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    while (static_cast<int>(p.size()) < n) {
      std::pair<std::int64_t, std::int64_t> q{coord(rng), coord(rng)};
      if (seen.insert(q).second) p.push_back(q);
    }
    auto edges = delaunay_edges(p);
    if (!edges) continue;
    PointSet out;
    for (auto [x, y] : p) out.points.push_back({double(x), double(y)});
    out.triangulation = *edges;
    return out;
  }
}

inline PlanarGraph delaunay(int n, std::uint64_t seed) {
  auto ps = random_triangulation(n, seed);
  return from_points(ps.points, ps.triangulation);
}

inline bool connected(int n, const EdgeList& edges) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int parts = n;
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a != b) parent[a] = b, --parts;
  }
  return parts <= 1;
}

// Every connected spanning subgraph of a straight-line triangulation.
inline std::vector<PlanarGraph> connected_spanning_subgraphs(const PointSet& ps) {
  std::vector<PlanarGraph> out;
  const int n = static_cast<int>(ps.points.size());
  const auto& all = ps.triangulation;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << all.size()); ++mask) {
    EdgeList chosen;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1u) chosen.push_back(all[i]);
    if (connected(n, chosen)) out.push_back(from_points(ps.points, chosen));
  }
  return out;
}

// A seeded random connected spanning subgraph: a random spanning tree plus each extra edge with probability 1/2.
inline PlanarGraph random_connected_subgraph(const PointSet& ps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(ps.points.size());
  EdgeList shuffled = ps.triangulation;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  EdgeList chosen;
  for (auto [u, v] : shuffled) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      chosen.emplace_back(u, v);
    } else if (rng() % 2 == 0) {
      chosen.emplace_back(u, v);
    }
  }
  return from_points(ps.points, chosen);
}

inline PlanarGraph random_tree(int n, std::uint64_t seed) {
  auto ps = random_triangulation(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  EdgeList shuffled = ps.triangulation;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  EdgeList chosen;
  for (auto [u, v] : shuffled) {
    int a = find(u), b = find(v);
    if (a != b) parent[a] = b, chosen.emplace_back(u, v);
  }
  return from_points(ps.points, chosen);
}

}  // namespace dimerpf::graphs
