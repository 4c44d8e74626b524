#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

// Randomized and corpus-wide checks shared by the unit suite and the acceptance runner.
namespace checks {

using namespace dimerpf;
using support::Dense;

struct Tally {
  std::size_t cases = 0;
  std::size_t comparisons = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  void expect(bool ok, const std::string& what) {
    ++comparisons;
    if (!ok) fail(what);
  }
  bool ok() const { return failures == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << cases << " cases, " << comparisons << " comparisons, " << failures << " failures";
    if (failures) s << " (first: " << first_failure << ")";
    return s.str();
  }
};

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string str(const Rational& q) { return q.get_str(); }

inline std::vector<std::vector<int>> even_subsets(const std::vector<int>& items, std::size_t max_size = 64) {
  std::vector<std::vector<int>> out;
  const std::size_t k = items.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    std::size_t bits = static_cast<std::size_t>(__builtin_popcount(mask));
    if (bits % 2 != 0 || bits > max_size) continue;
    std::vector<int> s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) s.push_back(items[i]);
    out.push_back(s);
  }
  return out;
}

// Maps an orientation through a vertex renumbering, dropping edges that lost an endpoint.
inline Orientation remap(const Orientation& o, const std::vector<int>& old_to_new) {
  Orientation out;
  for (const auto& [key, tail] : o.tails()) {
    int head = tail == key.first ? key.second : key.first;
    if (old_to_new[tail] >= 0 && old_to_new[head] >= 0) out.direct(old_to_new[tail], old_to_new[head]);
  }
  return out;
}

// Labels of the surviving vertices, renumbered by rank.
inline Labeling induced_labeling(const Labeling& l, const std::vector<int>& old_to_new, int remaining) {
  std::vector<std::pair<int, int>> order;
  for (std::size_t v = 0; v < old_to_new.size(); ++v)
    if (old_to_new[v] >= 0) order.emplace_back(l.of(static_cast<int>(v)), old_to_new[v]);
  std::sort(order.begin(), order.end());
  std::vector<int> label(remaining);
  for (std::size_t r = 0; r < order.size(); ++r) label[order[r].second] = static_cast<int>(r) + 1;
  return Labeling(label);
}

inline std::vector<OracleCovering> perfect_matchings(const PlanarGraph& g) {
  return enumerate_coverings({to_weighted(g), Region::Fixed, {}});
}

// ---------------------------------------------------------------- fixtures and pipelines

inline Tally check_matrix_fixtures() {
  Tally t;
  for (const auto& f : fixtures::matrix_fixtures()) {
    ++t.cases;
    SparsePoly pf = pfaffian(fixtures::fixture_matrix(f)) * SparsePoly(f.scale);
    t.expect(pf == fixtures::fixture_expected(f), f.name + ": got " + pf.to_string());
  }
  return t;
}

inline Tally check_square_pipeline() {
  Tally t;
  PlanarGraph square = graphs::cycle(4);
  SparsePoly expected = fixtures::dense(kVarZ, {2, 0, 4, 0, 1});
  t.cases = 2;
  auto direct = boundary_partition(square).in_z().poly;
  auto bijection = boundary_partition_bijection(square).in_z().poly;
  t.expect(direct == expected, "theorem1 gave " + direct.to_string());
  t.expect(bijection == expected, "bijection gave " + bijection.to_string());
  return t;
}

// Both methods against exhaustive enumeration for every corpus graph and weight pattern.
inline Tally check_oracle_sweep(const std::vector<support::NamedGraph>& corpus) {
  Tally t;
  for (const auto& ng : corpus)
    for (auto w : support::all_weights()) {
      ++t.cases;
      PlanarGraph g = support::with_weights(ng.graph, w);
      SparsePoly oracle = oracle_boundary_partition(g);
      std::string tag = ng.name + "/" + support::weights_name(w);
      SparsePoly direct = boundary_partition(g).poly;
      t.expect(direct == oracle, tag + " theorem1 " + direct.to_string() + " vs " + oracle.to_string());
      SparsePoly bij = boundary_partition_bijection(g).poly;
      t.expect(bij == oracle, tag + " bijection " + bij.to_string() + " vs " + oracle.to_string());
    }
  return t;
}

// ---------------------------------------------------------------- linear algebra properties

// pf(a + rank-two-per-pair correction) against the expansion over even deleted sets.
inline Tally check_lieb(int cases, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(-3, 3);
  for (int c = 0; c < cases; ++c) {
    const std::size_t n = 2 * (1 + c % 4);
    auto a = support::random_skew(rng, n);
    std::vector<Rational> ell(n);
    for (auto& l : ell) l = weight(rng);
    Dense d = support::dense_of(a);
    Dense shifted = d;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Rational pair = ell[i] * ell[j];
        Rational sign = (i + j) % 2 == 0 ? Rational(-1) : Rational(1);
        shifted[i][j] += i < j ? Rational(sign * pair) : Rational(-sign * pair);
      }
    Rational lhs = support::reference_pf(shifted);
    Rational rhs = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      if (__builtin_popcount(mask) % 2 != 0) continue;
      std::vector<std::size_t> s;
      Rational w = 1;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) s.push_back(i), w *= ell[i];
      rhs += w * support::reference_pf(support::drop(d, s));
    }
    ++t.cases;
    t.expect(lhs == rhs, "reference expansion disagrees at case " + std::to_string(c));
    t.expect(pf_elimination(lieb_matrix(a, ell)) == lhs, "library matrix pf at case " + std::to_string(c));
    t.expect(verify_lieb_identity(a, ell), "verify_lieb_identity at case " + std::to_string(c));
  }
  return t;
}

inline Tally check_pf_squared_is_det(int cases, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    const std::size_t n = 2 * (c % 6);
    auto a = support::random_skew(rng, n, c % 3 == 0 ? 0 : -4, 4);
    Rational pf = pf_elimination(a);
    ++t.cases;
    t.expect(pf * pf == support::reference_det(support::dense_of(a)), "pf^2 != det at case " + std::to_string(c));
    t.expect(pf == support::reference_pf(support::dense_of(a)), "elimination vs expansion at case " + std::to_string(c));
    t.expect(pf == pf_combinatorial(a), "elimination vs pairing sum at case " + std::to_string(c));
    // Entries linear in x: the interpolated Pfaffian must match the pairing sum.
    if (n <= 8) {
      auto b = support::random_skew(rng, n);
      SkewMatrix<SparsePoly> p(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) p.set(i, j, SparsePoly(a(i, j)) + SparsePoly::variable(kVarX, b(i, j)));
      t.expect(pf_univariate(p) == pf_combinatorial(p), "interpolation vs pairing sum at case " + std::to_string(c));
    }
  }
  return t;
}

// pf(a without S) / pf(a) = (-1)^(|S|/2) pf of the inverse restricted to S, times the sign of
// the permutation that moves S to the front.
inline Tally check_minor_identity(int cases, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int c = 0; t.cases < static_cast<std::size_t>(cases); ++c) {
    const std::size_t n = 2 * (1 + c % 5);
    auto a = support::random_skew(rng, n);
    Rational pf = pf_elimination(a);
    if (sgn(pf) == 0) continue;
    ++t.cases;
    auto inv = skew_inverse(a);
    Dense da = support::dense_of(a), di = support::dense_of(inv);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += da[i][k] * di[k][j];
        if (s != Rational(i == j ? 1 : 0)) {
          t.expect(false, "a * inverse != identity at case " + std::to_string(c));
          i = j = n;
        }
      }
    std::uniform_int_distribution<std::size_t> half(1, n / 2);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<std::size_t> s(idx.begin(), idx.begin() + 2 * half(rng));
    std::sort(s.begin(), s.end());
    Rational lhs = support::reference_pf(support::drop(da, s)) / pf;
    Rational rhs = support::reference_pf(support::restrict_to(di, s));
    std::size_t flips = s.size() / 2;
    for (std::size_t k = 0; k < s.size(); ++k) flips += s[k] - k;
    if (flips % 2 == 1) rhs = -rhs;
    t.expect(lhs == rhs, "minor identity at case " + std::to_string(c));
    t.expect(minor_ratio(inv, s) == lhs, "library minor ratio at case " + std::to_string(c));
  }
  return t;
}

// ---------------------------------------------------------------- orientation properties

// Merging two adjacent counterclockwise circuits along a shared string.
inline Tally check_merger(int cases, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; t.cases < static_cast<std::size_t>(cases) && attempt < 50 * cases; ++attempt) {
    PlanarGraph g = support::random_graph(rng, 4, 8);
    Orientation o = support::random_orientation(g, rng);
    auto cycles = enumerate_simple_cycles(g);
    std::vector<int> enclosed;
    std::vector<char> good;
    for (const auto& c : cycles) {
      enclosed.push_back(support::geometric_enclosed_count(g, c.vertices()));
      good.push_back(circuit_is_good(g, o, c));
      int back = backwards_count(o, c.vertices());
      t.expect(static_cast<bool>(good.back()) == ((back + enclosed.back()) % 2 == 1), "goodness disagrees with counts");
    }
    bool merged_any = false;
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (std::size_t j = 0; j < cycles.size(); ++j) {
        if (i == j) continue;
        Circuit m;
        try {
          m = merge_circuits(cycles[i], cycles[j]);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotMergeable) throw;
          continue;
        }
        merged_any = true;
        auto e1 = cycles[i].edge_set(), e2 = cycles[j].edge_set();
        std::set<std::pair<int, int>> sym, shared;
        for (auto e : e1) (e2.count(e) ? shared : sym).insert(e);
        for (auto e : e2)
          if (!e1.count(e)) sym.insert(e);
        std::string tag = "cycles " + std::to_string(i) + "," + std::to_string(j) + " at attempt " + std::to_string(attempt);
        t.expect(m.edge_set() == sym, "merger edges are not the symmetric difference, " + tag);
        int nu = static_cast<int>(shared.size());
        int em = support::geometric_enclosed_count(g, m.vertices());
        t.expect(em == enclosed[i] + enclosed[j] + nu - 1, "enclosed count of merger, " + tag);
        if (good[i] && good[j]) t.expect(circuit_is_good(g, o, m), "good circuits merged into a bad one, " + tag);
      }
    if (merged_any) ++t.cases;
  }
  return t;
}

// Kasteleyn orientations stay Kasteleyn after deleting any edge.
inline Tally check_edge_deletion(int cases, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    PlanarGraph g = support::random_graph(rng, 3, 9);
    Orientation o = orient_kasteleyn(g);
    ++t.cases;
    t.expect(verify_kasteleyn(g, o), "constructed orientation is not Kasteleyn at case " + std::to_string(c));
    for (const auto& e : g.edges()) {
      PlanarGraph h = g.without_edges({{e.u, e.v}});
      t.expect(verify_kasteleyn(h, o), "deleting an edge broke the orientation at case " + std::to_string(c));
    }
  }
  return t;
}

// All perfect matchings share one sign under a Kasteleyn orientation and any labeling,
// and all boundary-monomer coverings are positive under the pipeline's own labeling.
inline Tally check_uniform_positivity(int cases, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; t.cases < static_cast<std::size_t>(cases) && attempt < 50 * cases; ++attempt) {
    PlanarGraph g = support::random_graph(rng, 4, 10);
    if (g.vertex_count() % 2 != 0) continue;
    auto matchings = perfect_matchings(g);
    if (matchings.size() < 2) continue;
    ++t.cases;
    Orientation o = orient_kasteleyn(g);
    Labeling l = support::random_labeling(g.vertex_count(), rng);
    int first = covering_sign(g, o, l, {{}, matchings.front().dimers});
    for (const auto& m : matchings)
      t.expect(covering_sign(g, o, l, {{}, m.dimers}) == first, "mixed matching signs at attempt " + std::to_string(attempt));
    PipelineSetup s = prepare_pipeline(g);
    const PlanarGraph& e = s.enclosed.graph();
    if (e.vertex_count() > 14) continue;
    for (const auto& cov : enumerate_coverings({to_weighted(e), Region::Boundary, s.enclosed.boundary()})) {
      if (cov.monomers.size() % 2 != 0) continue;
      t.expect(covering_sign(e, s.orientation, s.labeling, {cov.monomers, cov.dimers}) == 1,
               "negative boundary-monomer covering at attempt " + std::to_string(attempt));
    }
  }
  return t;
}

// Removing an even set of boundary vertices leaves a Kasteleyn graph whose perfect matchings
// are all positive under the induced labeling.
inline Tally check_boundary_removal(int cases, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; t.cases < static_cast<std::size_t>(cases) && attempt < 50 * cases; ++attempt) {
    PlanarGraph g = support::random_graph(rng, 3, 9);
    PipelineSetup s = prepare_pipeline(g);
    const PlanarGraph& e = s.enclosed.graph();
    if (e.vertex_count() > 10) continue;
    ++t.cases;
    for (const auto& m : even_subsets(s.enclosed.boundary())) {
      std::vector<int> old_to_new;
      PlanarGraph h = e.without_vertices(m, &old_to_new);
      Orientation o = remap(s.orientation, old_to_new);
      Labeling l = induced_labeling(s.labeling, old_to_new, h.vertex_count());
      std::string tag = "attempt " + std::to_string(attempt) + ", " + std::to_string(m.size()) + " removed";
      t.expect(verify_kasteleyn(h, o), "reduced graph is not Kasteleyn, " + tag);
      for (const auto& pm : perfect_matchings(h))
        t.expect(covering_sign(h, o, l, {{}, pm.dimers}) == 1, "negative matching of reduced graph, " + tag);
    }
  }
  return t;
}

// The ring-augmented graph: both lifts keep the sign, project back, and every perfect
// matching of the augmented graph is one of exactly two lifts.
inline Tally check_lambda(int cases, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; t.cases < static_cast<std::size_t>(cases) && attempt < 50 * cases; ++attempt) {
    PlanarGraph g = support::random_graph(rng, 2, 8);
    PipelineSetup s = prepare_pipeline(g);
    const PlanarGraph& e = s.enclosed.graph();
    AuxiliaryGraph aux = build_auxiliary_gamma(s.enclosed, s.orientation, s.labeling);
    if (aux.graph.vertex_count() > 16) continue;
    ++t.cases;
    std::string tag = "attempt " + std::to_string(attempt);
    t.expect(verify_kasteleyn(aux.graph, aux.orientation), "augmented orientation is not Kasteleyn, " + tag);
    std::map<std::vector<int>, int> fiber;
    std::vector<Covering> sigmas;
    for (const auto& c : enumerate_coverings({to_weighted(e), Region::Boundary, s.enclosed.boundary()})) {
      if (c.monomers.size() % 2 != 0) continue;
      Covering sigma{c.monomers, c.dimers};
      sigma.normalize();
      sigmas.push_back(sigma);
      int sign = covering_sign(e, s.orientation, s.labeling, sigma);
      Covering lifted = lambda_gamma(e, aux, sigma, LambdaVariant::Standard);
      Covering barred = lambda_gamma(e, aux, sigma, LambdaVariant::Barred);
      t.expect(!(lifted == barred), "the two lifts coincide, " + tag);
      t.expect(Lambda_gamma(aux, lifted) == sigma, "standard lift does not project back, " + tag);
      t.expect(Lambda_gamma(aux, barred) == sigma, "barred lift does not project back, " + tag);
      t.expect(covering_sign(aux.graph, aux.orientation, aux.labeling, lifted) == sign, "standard lift changes sign, " + tag);
      t.expect(covering_sign(aux.graph, aux.orientation, aux.labeling, barred) == sign, "barred lift changes sign, " + tag);
    }
    std::map<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>, int> preimages;
    for (const auto& pm : perfect_matchings(aux.graph)) {
      Covering projected = Lambda_gamma(aux, {{}, pm.dimers});
      preimages[{projected.monomers, projected.dimers}]++;
    }
    t.expect(preimages.size() == sigmas.size(), "projection image size differs from the covering count, " + tag);
    for (const auto& sigma : sigmas) {
      auto it = preimages.find({sigma.monomers, sigma.dimers});
      t.expect(it != preimages.end() && it->second == 2, "fiber is not of size two, " + tag);
    }
  }
  return t;
}

// ---------------------------------------------------------------- correlations

// Pfaffian of two-point functions against the deleted-minor ratio, and the ratio against
// the exhaustive count, for every even boundary set of size at most six.
inline Tally check_wick(const std::vector<support::NamedGraph>& corpus) {
  Tally t;
  for (const auto& ng : corpus) {
    const PlanarGraph& g = ng.graph;
    if (g.vertex_count() % 2 != 0) continue;
    WeightedGraph w = to_weighted(g);
    Rational matchings = count_fixed_monomers(w, {});
    if (sgn(matchings) == 0) continue;
    ++t.cases;
    ClosePacking cp(g);
    for (const auto& s : even_subsets(boundary_subgraph(g).vertices, 6)) {
      if (s.empty()) continue;
      Rational ratio = cp.ratio(s);
      Rational wick = cp.wick(s);
      t.expect(wick == ratio, ng.name + ": wick " + str(wick) + " vs ratio " + str(ratio));
      Rational oracle = count_fixed_monomers(w, s) / matchings;
      t.expect(ratio == oracle, ng.name + ": ratio " + str(ratio) + " vs count " + str(oracle));
    }
  }
  return t;
}

// Away from close packing the four-point function of the square with a diagonal is not
// the Pfaffian of its two-point functions.
inline Tally check_finite_fugacity_counterexample() {
  Tally t;
  t.cases = 1;
  PlanarGraph g = graphs::square_with_diagonal();
  std::vector<int> all{0, 1, 2, 3};
  Rational direct = finite_fugacity_correlation(g, all);
  Rational naive = naive_finite_wick(g, all);
  t.expect(direct != naive, "finite-fugacity four-point function unexpectedly factorizes: " + str(direct));
  // Both sides from exhaustive enumeration at unit weights.
  auto weights = monomer_set_weights({to_weighted(g), Region::All, {}});
  Rational z = 0;
  for (const auto& [set, w] : weights) z += w;
  auto pair = [&](int a, int b) -> Rational {
    Rational num = 0;
    for (const auto& [set, w] : weights)
      if (std::count(set.begin(), set.end(), a) && std::count(set.begin(), set.end(), b)) num += w;
    return num / z;
  };
  t.expect(direct == weights[all] / z, "four-point function " + str(direct) + " vs count " + str(weights[all] / z));
  t.expect(pair(0, 1) == finite_fugacity_correlation(g, {0, 1}), "two-point function vs count");
  Rational expected_naive = pair(0, 1) * pair(2, 3) - pair(0, 2) * pair(1, 3) + pair(0, 3) * pair(1, 2);
  t.expect(naive == expected_naive, "naive pfaffian " + str(naive) + " vs " + str(expected_naive));
  ClosePacking cp(g);
  t.expect(cp.wick(all) == cp.ratio(all), "close-packing rule fails on the same graph");
  return t;
}

// ---------------------------------------------------------------- bounds

// Each reduced Pfaffian under an arbitrary orientation and labeling is at most the
// weighted count of coverings with that monomer set.
inline Tally check_lower_bound(const std::vector<support::NamedGraph>& corpus, int orientations, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (const auto& ng : corpus) {
    const PlanarGraph& g = ng.graph;
    if (g.vertex_count() > kLowerBoundCap) continue;
    ++t.cases;
    auto weights = monomer_set_weights({to_weighted(g), Region::All, {}});
    auto oracle = support::coefficients(oracle_boundary_partition(g), kVarX);
    for (int k = 0; k < orientations; ++k) {
      Orientation o = support::random_orientation(g, rng);
      Labeling l = support::random_labeling(g.vertex_count(), rng);
      LowerBound lb = lower_bound_poly(g, o, l);
      bool within = true;
      for (const auto& [set, value] : lb.per_subset) {
        auto it = weights.find(set);
        Rational count = it == weights.end() ? Rational(0) : it->second;
        if (abs(value) > count) within = false;
      }
      t.expect(within, ng.name + ": a reduced pfaffian exceeds its covering count");
      for (const auto& [e, c] : support::coefficients(lb.boundary_poly, kVarX))
        t.expect(abs(c) <= oracle[e], ng.name + ": boundary coefficient exceeds the oracle");
    }
  }
  return t;
}

// Rational-square weights. The light pattern keeps every dimer weight <= 1, which the
// upper bound needs: an off-cycle dimer enters the bound with weight sqrt(d) rather than d.
inline PlanarGraph square_weights(const PlanarGraph& g, bool light = false) {
  const Rational squares[] = {Rational(1, 4), Rational(1), Rational(4)};
  const Rational dimers[] = {Rational(1, 4), Rational(1), light ? Rational(1, 9) : Rational(4)};
  return graphs::reweighted(g, [&](int e) { return dimers[e % 3]; }, [&](int v) { return squares[(v + 2) % 3]; });
}

inline std::vector<const support::NamedGraph*> hamiltonian_graphs(const std::vector<support::NamedGraph>& corpus,
                                                                  int max_vertices) {
  std::vector<const support::NamedGraph*> out;
  for (const auto& ng : corpus)
    if (ng.graph.vertex_count() <= max_vertices && search_hamiltonian_cycle(ng.graph)) out.push_back(&ng);
  return out;
}

// Product of the inside and outside Pfaffians dominates the full partition function
// coefficient by coefficient in z. Unit weights plus light square weights by default;
// heavy = true uses dimer weight 4, where the bound is known to fail on some graphs.
inline Tally check_upper_bound(const std::vector<support::NamedGraph>& corpus, bool heavy = false) {
  Tally t;
  for (const auto* ng : hamiltonian_graphs(corpus, 8))
    for (bool squared : {false, true}) {
      ++t.cases;
      PlanarGraph g = squared ? square_weights(ng->graph, !heavy) : ng->graph;
      auto cycle = *search_hamiltonian_cycle(g);
      auto upper = support::coefficients(upper_bound_poly(g, cycle), kVarZ);
      auto oracle = support::coefficients(oracle_full_partition(g), kVarX);
      for (const auto& [e, c] : oracle) {
        auto it = upper.find(2 * e);
        Rational u = it == upper.end() ? Rational(0) : it->second;
        t.expect(u >= c, ng->name + (squared ? "/squares" : "") + ": bound " + str(u) + " below " + str(c) +
                             " at z^" + format_half(2 * e));
      }
    }
  return t;
}

inline Tally check_inout(const std::vector<support::NamedGraph>& corpus) {
  Tally t;
  for (const auto* ng : hamiltonian_graphs(corpus, 8))
    for (auto w : support::all_weights()) {
      ++t.cases;
      PlanarGraph g = support::with_weights(ng->graph, w);
      SparsePoly got = full_partition_inout(g, *search_hamiltonian_cycle(g)).poly;
      SparsePoly oracle = oracle_full_partition(g);
      t.expect(got == oracle, ng->name + "/" + support::weights_name(w) + ": " + got.to_string() + " vs " + oracle.to_string());
    }
  return t;
}

}  // namespace checks
