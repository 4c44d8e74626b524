#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dimerpf/error.hpp"
#include "dimerpf/poly.hpp"
#include "dimerpf/rational.hpp"

namespace dimerpf {

// Plain weighted graph: no embedding, so enumeration stays independent of the planar machinery.
struct WeightedGraph {
  int n = 0;
  std::vector<Rational> monomer;
  struct Edge {
    int u;
    int v;
    Rational dimer;
  };
  std::vector<Edge> edges;
};

enum class Region { All, Boundary, Explicit, Fixed };

struct EnumerationSpec {
  WeightedGraph graph;
  Region region = Region::All;
  std::vector<int> vertices;  // boundary / explicit / fixed set, depending on `region`
};

struct OracleCovering {
  std::vector<int> monomers;
  std::vector<std::pair<int, int>> dimers;
  Rational dimer_weight;  // product of dimer weights only
};

inline constexpr int kDefaultOracleCap = 16;

inline int oracle_cap() {
  if (const char* env = std::getenv("DIMERPF_MAX_ORACLE")) {
    try {
      return std::stoi(env);
    } catch (...) {
    }
  }
  return kDefaultOracleCap;
}

namespace detail {

// Visits every covering: the smallest uncovered vertex becomes a monomer (if allowed) or pairs upward.
inline void for_each_covering(const EnumerationSpec& spec, const std::function<void(const OracleCovering&)>& visit) {
  const WeightedGraph& g = spec.graph;
  if (g.n > oracle_cap()) fail(ErrorKind::TooLarge, "oracle limited to " + std::to_string(oracle_cap()) + " vertices");
  std::vector<char> allowed(g.n, spec.region == Region::All), forced(g.n, 0);
  for (int v : spec.vertices) {
    if (v < 0 || v >= g.n) fail(ErrorKind::InvalidArgument, "region names a missing vertex");
    if (spec.region == Region::Fixed) forced[v] = 1;
    else allowed[v] = 1;
  }
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    adj[g.edges[i].u].emplace_back(g.edges[i].v, i);
    adj[g.edges[i].v].emplace_back(g.edges[i].u, i);
  }
  std::vector<char> covered(g.n, 0);
  OracleCovering current;
  current.dimer_weight = 1;
  std::function<void(int)> step = [&](int v) {
    while (v < g.n && covered[v]) ++v;
    if (v == g.n) {
      visit(current);
      return;
    }
    covered[v] = 1;
    if (allowed[v] || forced[v]) {
      current.monomers.push_back(v);
      step(v + 1);
      current.monomers.pop_back();
    }
    if (!forced[v]) {
      for (auto [u, edge] : adj[v]) {
        if (covered[u] || forced[u]) continue;
        covered[u] = 1;
        Rational saved = current.dimer_weight;
        current.dimer_weight *= g.edges[edge].dimer;
        current.dimers.emplace_back(v, u);
        step(v + 1);
        current.dimers.pop_back();
        current.dimer_weight = saved;
        covered[u] = 0;
      }
    }
    covered[v] = 0;
  };
  step(0);
}

}  // namespace detail

// Sum over coverings of prod(monomer weights) prod(dimer weights) x^(monomers/2).
inline SparsePoly enumerate_partition(const EnumerationSpec& spec) {
  std::map<int, Rational> by_count;
  detail::for_each_covering(spec, [&](const OracleCovering& c) {
    Rational w = c.dimer_weight;
    for (int v : c.monomers) w *= spec.graph.monomer[v];
    by_count[static_cast<int>(c.monomers.size())] += w;
  });
  SparsePoly p;
  for (const auto& [k, w] : by_count) p += SparsePoly::variable(kVarX, w, k);
  return p;
}

// Weighted dimer coverings of the graph with the given vertices removed.
inline Rational count_fixed_monomers(const WeightedGraph& g, const std::vector<int>& monomers) {
  Rational total = 0;
  detail::for_each_covering({g, Region::Fixed, monomers}, [&](const OracleCovering& c) { total += c.dimer_weight; });
  return total;
}

// Dimer weight per monomer set.
inline std::map<std::vector<int>, Rational> monomer_set_weights(const EnumerationSpec& spec) {
  std::map<std::vector<int>, Rational> out;
  detail::for_each_covering(spec, [&](const OracleCovering& c) {
    std::vector<int> m = c.monomers;
    std::sort(m.begin(), m.end());
    out[m] += c.dimer_weight;
  });
  return out;
}

inline std::vector<OracleCovering> enumerate_coverings(const EnumerationSpec& spec) {
  std::vector<OracleCovering> out;
  detail::for_each_covering(spec, [&](const OracleCovering& c) { out.push_back(c); });
  return out;
}

}  // namespace dimerpf
