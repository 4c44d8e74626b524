#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimerpf/embedding.hpp"
#include "dimerpf/error.hpp"
#include "dimerpf/kasteleyn.hpp"
#include "dimerpf/oracle.hpp"
#include "dimerpf/pfaffian.hpp"
#include "dimerpf/poly.hpp"
#include "dimerpf/reduce.hpp"

namespace dimerpf {

struct PartitionPolynomial {
  SparsePoly poly;  // in x unless converted
  std::string method;
  std::string graph_hash;
  int var = kVarX;

  // x^k -> z^(2k)
  PartitionPolynomial in_z() const {
    if (var == kVarZ) return *this;
    PartitionPolynomial out = *this;
    out.poly = poly.rename(kVarX, kVarZ).scale_exponents(kVarZ, 2, 1);
    out.var = kVarZ;
    return out;
  }
};

inline std::string graph_hash(const PlanarGraph& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    mix(std::to_string(g.id(v)));
    mix(g.monomer(v).get_str());
    for (int u : g.rotation(v)) mix(std::to_string(g.id(u)));
  }
  for (const auto& ed : g.edges()) mix(std::to_string(g.id(ed.u)) + "-" + std::to_string(g.id(ed.v)) + ":" + ed.dimer.get_str());
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 15];
  return out;
}

inline WeightedGraph to_weighted(const PlanarGraph& g) {
  WeightedGraph w;
  w.n = g.vertex_count();
  for (int v = 0; v < w.n; ++v) w.monomer.push_back(g.monomer(v));
  for (const auto& ed : g.edges()) w.edges.push_back({ed.u, ed.v, ed.dimer});
  return w;
}

inline SparsePoly oracle_boundary_partition(const PlanarGraph& g) {
  return enumerate_partition({to_weighted(g), Region::Boundary, boundary_subgraph(g).vertices});
}

inline SparsePoly oracle_full_partition(const PlanarGraph& g) {
  return enumerate_partition({to_weighted(g), Region::All, {}});
}

// ---------------------------------------------------------------- matrices

// a_ij = +d if the vertex labelled i points to the one labelled j, -d otherwise.
template <class T>
SkewMatrix<T> build_kasteleyn(const PlanarGraph& g, const Orientation& orient, const Labeling& labeling,
                              const std::function<T(int, int)>& weight) {
  const int n = g.vertex_count();
  if (labeling.size() != n) fail(ErrorKind::InvalidArgument, "labeling size differs from vertex count");
  SkewMatrix<T> a(n);
  for (const auto& ed : g.edges()) {
    auto tail = orient.tail(ed.u, ed.v);
    if (!tail) fail(ErrorKind::InvalidArgument, "orientation is not total");
    int head = *tail == ed.u ? ed.v : ed.u;
    a.set(labeling.of(*tail) - 1, labeling.of(head) - 1, weight(ed.u, ed.v));
  }
  return a;
}

inline SkewMatrix<Rational> build_kasteleyn(const PlanarGraph& g, const Orientation& orient, const Labeling& labeling) {
  return build_kasteleyn<Rational>(g, orient, labeling, [&](int u, int v) { return g.dimer(u, v); });
}

// Reorders per-vertex weights into label order.
template <class T>
std::vector<T> by_label(const Labeling& labeling, const std::vector<T>& per_vertex) {
  std::vector<T> out(per_vertex.size());
  for (std::size_t v = 0; v < per_vertex.size(); ++v) out[labeling.of(static_cast<int>(v)) - 1] = per_vertex[v];
  return out;
}

// Boundary vertices get m_v x^(1/2); interior ones must carry zero monomer weight unless zeroed here.
inline std::vector<SparsePoly> symbolic_monomer_weights(const EnclosedGraph& eg, bool zero_interior) {
  const PlanarGraph& g = eg.graph();
  std::vector<SparsePoly> ell(g.vertex_count());
  for (int v : eg.boundary()) ell[v] = SparsePoly::variable(kVarX, g.monomer(v), 1);
  for (int v : eg.interior())
    if (sgn(g.monomer(v)) != 0 && !zero_interior)
      fail(ErrorKind::NonzeroInteriorMonomer, "interior vertex " + std::to_string(g.id(v)) + " has a monomer weight");
  return ell;
}

inline SkewMatrix<SparsePoly> build_A(const EnclosedGraph& eg, const Orientation& orient, const Labeling& labeling,
                                      bool zero_interior = false) {
  const PlanarGraph& g = eg.graph();
  auto a = build_kasteleyn<SparsePoly>(g, orient, labeling, [&](int u, int v) { return SparsePoly(g.dimer(u, v)); });
  return lieb_matrix(a, by_label(labeling, symbolic_monomer_weights(eg, zero_interior)));
}

inline SkewMatrix<Rational> build_A_numeric(const PlanarGraph& g, const Orientation& orient, const Labeling& labeling,
                                            const std::vector<Rational>& ell) {
  return lieb_matrix(build_kasteleyn(g, orient, labeling), by_label(labeling, ell));
}

// ---------------------------------------------------------------- pipelines

struct PipelineSetup {
  EnclosedGraph enclosed;
  AugmentationRecord record;
  Orientation orientation;
  Labeling labeling;
};

inline PipelineSetup prepare_pipeline(const PlanarGraph& g) {
  auto [eg, record] = to_enclosed(g);
  auto [orient, labeling] = direct_and_label_enclosed(eg);
  return {std::move(eg), std::move(record), std::move(orient), std::move(labeling)};
}

// Undo the x^(1/2) contributed by the padding vertex.
inline SparsePoly remove_pad(const SparsePoly& p, const AugmentationRecord& record) {
  return record.pad ? p.shift(kVarX, -1) : p;
}

inline PartitionPolynomial boundary_partition(const PlanarGraph& g, int threads = 1,
                                              InterpolationStats* stats = nullptr) {
  PartitionPolynomial out{SparsePoly(1), "theorem1", graph_hash(g)};
  if (g.vertex_count() == 0) return out;
  PipelineSetup s = prepare_pipeline(g);
  auto a = build_A(s.enclosed, s.orientation, s.labeling, true);
  out.poly = remove_pad(pf_univariate(a, kVarX, threads, stats), s.record);
  return out;
}

// Half the dimer partition function of the ring-augmented graph, connectors weighted z m_v.
inline SkewMatrix<SparsePoly> bijection_matrix(const PipelineSetup& s, const AuxiliaryGraph& aux) {
  const PlanarGraph& g = s.enclosed.graph();
  return build_kasteleyn<SparsePoly>(aux.graph, aux.orientation, aux.labeling, [&](int u, int v) -> SparsePoly {
    bool ru = u >= aux.base, rv = v >= aux.base;
    if (!ru && !rv) return SparsePoly(g.dimer(u, v));
    if (ru && rv) return SparsePoly(1);
    return SparsePoly::variable(kVarZ, g.monomer(ru ? v : u));
  });
}

inline PartitionPolynomial boundary_partition_bijection(const PlanarGraph& g, int threads = 1) {
  PartitionPolynomial out{SparsePoly(1), "bijection", graph_hash(g)};
  if (g.vertex_count() == 0) return out;
  PipelineSetup s = prepare_pipeline(g);
  AuxiliaryGraph aux = build_auxiliary_gamma(s.enclosed, s.orientation, s.labeling);
  SparsePoly twice = pf_univariate(bijection_matrix(s, aux), kVarZ, threads);
  SparsePoly half = twice * SparsePoly(Rational(1, 2));
  out.poly = remove_pad(half.scale_exponents(kVarZ, 1, 2).rename(kVarZ, kVarX), s.record);
  return out;
}

// ---------------------------------------------------------------- correlations

namespace detail {

inline void check_correlation_indices(const PlanarGraph& g, const std::vector<int>& vertices) {
  std::set<int> distinct(vertices.begin(), vertices.end());
  if (distinct.size() != vertices.size()) fail(ErrorKind::InvalidArgument, "correlation indices must be distinct");
  auto boundary = boundary_subgraph(g).vertices;
  for (int v : vertices)
    if (v < 0 || v >= g.vertex_count() || !std::binary_search(boundary.begin(), boundary.end(), v))
      fail(ErrorKind::IndexOffBoundary, "correlation index is not a boundary vertex");
  if (vertices.size() % 2 != 0) fail(ErrorKind::OddSubsetSize, "correlations need an even number of indices");
}

struct CloseSetup {
  PipelineSetup setup;
  SkewMatrix<Rational> a;
  Rational pf_a;
};

inline CloseSetup close_packing_setup(const PlanarGraph& g) {
  CloseSetup c{prepare_pipeline(g), {}, 0};
  c.a = build_kasteleyn(c.setup.enclosed.graph(), c.setup.orientation, c.setup.labeling);
  c.pf_a = pf_elimination(c.a);
  if (sgn(c.pf_a) == 0) fail(ErrorKind::NoPerfectMatching, "graph has no perfect matching");
  return c;
}

inline std::vector<std::size_t> sorted_label_indices(const Labeling& labeling, const std::vector<int>& vertices) {
  std::vector<std::size_t> out;
  for (int v : vertices) out.push_back(static_cast<std::size_t>(labeling.of(v) - 1));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Close-packing correlations of one graph; the pipeline and the inverse are built once.
class ClosePacking {
 public:
  explicit ClosePacking(const PlanarGraph& g) : g_(g), c_(detail::close_packing_setup(g)) {}

  // pf of the matrix with the indices removed, over pf of the full one.
  Rational ratio(const std::vector<int>& vertices) const {
    detail::check_correlation_indices(g_, vertices);
    if (vertices.empty()) return 1;
    return pfaffian(c_.a.without(detail::sorted_label_indices(c_.setup.labeling, vertices))) / c_.pf_a;
  }

  // Pfaffian of the two-point correlation matrix, whose entries are read off a^{-1}.
  Rational wick(const std::vector<int>& vertices) const {
    detail::check_correlation_indices(g_, vertices);
    if (vertices.empty()) return 1;
    if (!inverse_) inverse_ = skew_inverse(c_.a);
    auto idx = detail::sorted_label_indices(c_.setup.labeling, vertices);
    SkewMatrix<Rational> m(idx.size());
    for (std::size_t p = 0; p < idx.size(); ++p)
      for (std::size_t q = p + 1; q < idx.size(); ++q) m.set(p, q, minor_ratio(*inverse_, {idx[p], idx[q]}));
    return pf_elimination(m);
  }

 private:
  const PlanarGraph& g_;
  detail::CloseSetup c_;
  mutable std::optional<SkewMatrix<Rational>> inverse_;
};

inline Rational monomer_correlation(const PlanarGraph& g, const std::vector<int>& vertices) {
  detail::check_correlation_indices(g, vertices);
  if (vertices.empty()) return 1;
  return ClosePacking(g).ratio(vertices);
}

inline Rational wick_correlation(const PlanarGraph& g, const std::vector<int>& vertices) {
  detail::check_correlation_indices(g, vertices);
  if (vertices.empty()) return 1;
  return ClosePacking(g).wick(vertices);
}

// Derivative of the boundary partition function in the listed monomer weights, divided by
// the partition function itself, at the graph's own (finite) weights.
inline Rational finite_fugacity_correlation(const PlanarGraph& g, const std::vector<int>& vertices) {
  detail::check_correlation_indices(g, vertices);
  PipelineSetup s = prepare_pipeline(g);
  const PlanarGraph& e = s.enclosed.graph();
  auto a = build_kasteleyn(e, s.orientation, s.labeling);
  // Expansion pf(A) = sum_J pf([a]_J) prod_{j in J} l_j over boundary sets J.
  std::vector<int> support = vertices;
  for (int v : s.enclosed.boundary())
    if (sgn(e.monomer(v)) != 0 && std::find(vertices.begin(), vertices.end(), v) == vertices.end())
      support.push_back(v);
  if (support.size() > 20) fail(ErrorKind::TooLarge, "finite-fugacity expansion limited to 20 boundary vertices");
  const std::uint32_t fixed_mask = (std::uint32_t{1} << vertices.size()) - 1;
  Rational numerator = 0, partition = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << support.size()); ++mask) {
    std::vector<int> chosen;
    if ((e.vertex_count() - __builtin_popcount(mask)) % 2 != 0) continue;
    Rational free_weight = 1, fixed_weight = 1;
    for (std::size_t i = 0; i < support.size(); ++i)
      if (mask >> i & 1u) {
        chosen.push_back(support[i]);
        (i < vertices.size() ? fixed_weight : free_weight) *= e.monomer(support[i]);
      }
    Rational term = pfaffian(a.without(detail::sorted_label_indices(s.labeling, chosen)));
    partition += term * free_weight * fixed_weight;
    if ((mask & fixed_mask) == fixed_mask) numerator += term * free_weight;
  }
  if (sgn(partition) == 0) fail(ErrorKind::NoPerfectMatching, "boundary partition function vanishes");
  return numerator / partition;
}

// Naive Wick analogue away from close packing: pf of pairwise finite-fugacity correlations.
inline Rational naive_finite_wick(const PlanarGraph& g, const std::vector<int>& vertices) {
  detail::check_correlation_indices(g, vertices);
  PipelineSetup s = prepare_pipeline(g);
  std::vector<int> order = vertices;
  std::sort(order.begin(), order.end(),
            [&](int u, int v) { return s.labeling.of(u) < s.labeling.of(v); });
  SkewMatrix<Rational> m(order.size());
  for (std::size_t p = 0; p < order.size(); ++p)
    for (std::size_t q = p + 1; q < order.size(); ++q)
      m.set(p, q, finite_fugacity_correlation(g, {order[p], order[q]}));
  return pf_elimination(m);
}

// ---------------------------------------------------------------- lower bound

struct LowerBound {
  std::map<std::vector<int>, Rational> per_subset;  // monomer set -> pf of the reduced matrix
  SparsePoly boundary_poly;                         // sum over boundary monomer sets, in x
};

inline constexpr int kLowerBoundCap = 12;

// pf([a]_I) for every monomer set I under an arbitrary orientation and labeling.
inline LowerBound lower_bound_poly(const PlanarGraph& g, const Orientation& orient, const Labeling& labeling) {
  const int n = g.vertex_count();
  if (n > kLowerBoundCap) fail(ErrorKind::TooLarge, "lower bound limited to " + std::to_string(kLowerBoundCap) + " vertices");
  for (const auto& ed : g.edges())
    if (sgn(ed.dimer) < 0) fail(ErrorKind::NegativeDimerWeight, "dimer weights must be nonnegative");
  auto a = build_kasteleyn(g, orient, labeling);
  auto boundary = boundary_subgraph(g).vertices;
  std::vector<char> on_boundary(n, 0);
  for (int v : boundary) on_boundary[v] = 1;
  LowerBound out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if ((n - __builtin_popcount(mask)) % 2 != 0) continue;
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) subset.push_back(v);
    Rational value = pfaffian(a.without(detail::sorted_label_indices(labeling, subset)));
    if (sgn(value) == 0) continue;
    out.per_subset[subset] = value;
    bool all_boundary = std::all_of(subset.begin(), subset.end(), [&](int v) { return on_boundary[v]; });
    if (!all_boundary) continue;
    Rational w = value;
    for (int v : subset) w *= g.monomer(v);
    out.boundary_poly += SparsePoly::variable(kVarX, w, static_cast<int>(subset.size()));
  }
  return out;
}

}  // namespace dimerpf
