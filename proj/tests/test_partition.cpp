#include <gtest/gtest.h>

#include "checks.hpp"

using namespace dimerpf;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected an error");
}

Orientation low_to_high(const PlanarGraph& g) {
  Orientation o;
  for (const auto& e : g.edges()) o.direct(std::min(e.u, e.v), std::max(e.u, e.v));
  return o;
}

}  // namespace

TEST(BoundaryPartition, Square) {
  auto g = graphs::cycle(4);
  SparsePoly expected = fixtures::dense(kVarX, {2, 4, 1});
  EXPECT_EQ(boundary_partition(g).poly, expected);
  EXPECT_EQ(boundary_partition_bijection(g).poly, expected);
  EXPECT_EQ(boundary_partition(g).in_z().poly, fixtures::dense(kVarZ, {2, 0, 4, 0, 1}));
}

TEST(BoundaryPartition, SingleEdge) {
  EXPECT_EQ(boundary_partition(graphs::path(2)).poly, fixtures::dense(kVarX, {1, 1}));
  EXPECT_EQ(boundary_partition_bijection(graphs::path(2)).poly, fixtures::dense(kVarX, {1, 1}));
}

TEST(BoundaryPartition, EmptyGraphIsOne) {
  PlanarGraph empty = graphs::from_points({}, {});
  EXPECT_EQ(boundary_partition(empty).poly, SparsePoly(1));
  EXPECT_EQ(boundary_partition_bijection(empty).poly, SparsePoly(1));
}

TEST(BoundaryPartition, ThreeByThreeGridMatchesOracle) {
  for (auto w : support::all_weights()) {
    auto g = support::with_weights(graphs::grid(3, 3), w);
    SparsePoly oracle = oracle_boundary_partition(g);
    EXPECT_EQ(boundary_partition(g).poly, oracle) << support::weights_name(w);
    EXPECT_EQ(boundary_partition_bijection(g).poly, oracle) << support::weights_name(w);
  }
}

TEST(BoundaryPartition, MethodsAgreeOnRandomGraphs) {
  std::mt19937_64 rng(909);
  for (int c = 0; c < 10; ++c) {
    auto g = support::random_graph(rng, 3, 10);
    EXPECT_EQ(boundary_partition(g).poly, boundary_partition_bijection(g).poly);
  }
}

TEST(BoundaryPartition, ConstantTermCountsPerfectMatchings) {
  for (const auto& ng : support::corpus()) {
    auto g = support::with_weights(ng.graph, support::Weights::Mixed);
    auto coeffs = support::coefficients(boundary_partition(g).poly, kVarX);
    Rational constant = coeffs.count(0) ? coeffs[0] : Rational(0);
    EXPECT_EQ(constant, count_fixed_monomers(to_weighted(g), {})) << ng.name;
  }
}

TEST(BoundaryPartition, ResultCarriesGraphHash) {
  auto g = graphs::grid(3, 2);
  EXPECT_EQ(boundary_partition(g).graph_hash, graph_hash(g));
  EXPECT_EQ(boundary_partition(g).method, "theorem1");
  EXPECT_EQ(boundary_partition_bijection(g).method, "bijection");
  EXPECT_NE(graph_hash(g), graph_hash(graphs::grid(2, 3)));
}

TEST(Correlations, Square) {
  auto g = graphs::cycle(4);
  EXPECT_EQ(monomer_correlation(g, {0, 1}), Rational(1, 2));
  EXPECT_EQ(wick_correlation(g, {0, 1}), Rational(1, 2));
  EXPECT_EQ(monomer_correlation(g, {0, 2}), Rational(0));
  EXPECT_EQ(wick_correlation(g, {0, 2}), Rational(0));
  EXPECT_EQ(monomer_correlation(g, {0, 1, 2, 3}), Rational(1, 2));
  EXPECT_EQ(wick_correlation(g, {0, 1, 2, 3}), Rational(1, 2));
  EXPECT_EQ(monomer_correlation(g, {}), Rational(1));
  EXPECT_EQ(wick_correlation(g, {}), Rational(1));
}

TEST(Correlations, TwoByFourGrid) {
  auto g = graphs::grid(4, 2);
  // Five perfect matchings; two survive removing the corner pair.
  EXPECT_EQ(monomer_correlation(g, {0, 1}), Rational(2, 5));
  EXPECT_EQ(wick_correlation(g, {0, 1}), Rational(2, 5));
  WeightedGraph w = to_weighted(g);
  Rational total = count_fixed_monomers(w, {});
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      Rational expected = count_fixed_monomers(w, {i, j}) / total;
      EXPECT_EQ(monomer_correlation(g, {i, j}), expected) << i << "," << j;
      EXPECT_EQ(wick_correlation(g, {i, j}), expected) << i << "," << j;
    }
}

TEST(Correlations, OrderOfIndicesIsIrrelevant) {
  auto g = graphs::grid(4, 2);
  ClosePacking cp(g);
  EXPECT_EQ(cp.ratio({0, 1, 6, 7}), cp.ratio({7, 0, 6, 1}));
  EXPECT_EQ(cp.wick({0, 1, 6, 7}), cp.wick({6, 1, 0, 7}));
}

TEST(Correlations, Errors) {
  EXPECT_EQ(kind_of([] { monomer_correlation(graphs::star(3), {1, 2}); }), ErrorKind::NoPerfectMatching);
  EXPECT_EQ(kind_of([] { wick_correlation(graphs::wheel(4), {0, 4}); }), ErrorKind::IndexOffBoundary);
  EXPECT_EQ(kind_of([] { wick_correlation(graphs::cycle(4), {0, 9}); }), ErrorKind::IndexOffBoundary);
  EXPECT_EQ(kind_of([] { monomer_correlation(graphs::cycle(4), {0}); }), ErrorKind::OddSubsetSize);
  EXPECT_EQ(kind_of([] { monomer_correlation(graphs::cycle(4), {0, 0}); }), ErrorKind::InvalidArgument);
}

TEST(Correlations, WickRuleOnCorpus) {
  auto t = checks::check_wick(support::corpus());
  EXPECT_GT(t.cases, 0u);
  EXPECT_TRUE(t.ok()) << t.summary();
}

TEST(Correlations, FiniteFugacityCounterexample) {
  auto t = checks::check_finite_fugacity_counterexample();
  EXPECT_TRUE(t.ok()) << t.summary();
}

TEST(Correlations, FiniteFugacityTwoPointAgreesWithCount) {
  auto g = graphs::cycle(4);
  // Z = 2 + 4 + 1 at unit weights; 0 and 1 are both monomers only under the lone dimer {2,3} and under no dimers.
  EXPECT_EQ(finite_fugacity_correlation(g, {0, 1}), Rational(2, 7));
}

TEST(OracleSweep, BothMethodsMatchEnumeration) {
  auto t = checks::check_oracle_sweep(support::corpus());
  EXPECT_TRUE(t.ok()) << t.summary();
}

TEST(LowerBound, KasteleynPositiveSetupIsExact) {
  for (auto g : {graphs::grid(4, 2), graphs::grid(4, 3), graphs::cycle(6)}) {
    PipelineSetup s = prepare_pipeline(g);
    ASSERT_EQ(s.enclosed.graph().vertex_count(), g.vertex_count());
    LowerBound lb = lower_bound_poly(s.enclosed.graph(), s.orientation, s.labeling);
    EXPECT_EQ(lb.boundary_poly, oracle_boundary_partition(g));
  }
}

TEST(LowerBound, AdversarialOrientationsOnTwoByThree) {
  auto g = graphs::grid(3, 2);
  SparsePoly oracle = oracle_boundary_partition(g);
  auto exact = support::coefficients(oracle, kVarX);
  std::mt19937_64 rng(31);
  bool strict = false;
  for (int k = 0; k < 50; ++k) {
    LowerBound lb = lower_bound_poly(g, support::random_orientation(g, rng), support::random_labeling(6, rng));
    for (const auto& [e, c] : support::coefficients(lb.boundary_poly, kVarX)) {
      EXPECT_LE(abs(c), exact[e]);
      strict = strict || abs(c) < exact[e];
    }
  }
  EXPECT_TRUE(strict);
  LowerBound naive = lower_bound_poly(g, low_to_high(g), Labeling::identity(6));
  for (const auto& [e, c] : support::coefficients(naive.boundary_poly, kVarX)) EXPECT_LE(abs(c), exact[e]);
}

TEST(LowerBound, TreesAreExactUpToSign) {
  auto g = graphs::random_tree(8, 4);
  auto weights = monomer_set_weights({to_weighted(g), Region::All, {}});
  std::mt19937_64 rng(8);
  for (int k = 0; k < 5; ++k) {
    LowerBound lb = lower_bound_poly(g, support::random_orientation(g, rng), support::random_labeling(8, rng));
    EXPECT_EQ(lb.per_subset.size(), weights.size());
    for (const auto& [set, value] : lb.per_subset) EXPECT_EQ(abs(value), weights[set]);
  }
}

TEST(LowerBound, Errors) {
  auto g = graphs::reweighted(graphs::cycle(4), [](int) { return Rational(-1); }, [](int) { return Rational(1); });
  EXPECT_EQ(kind_of([&] { lower_bound_poly(g, low_to_high(g), Labeling::identity(4)); }), ErrorKind::NegativeDimerWeight);
  auto big = graphs::grid(7, 2);
  EXPECT_EQ(kind_of([&] { lower_bound_poly(big, low_to_high(big), Labeling::identity(14)); }), ErrorKind::TooLarge);
}

TEST(LowerBound, CorpusUnderRandomOrientations) {
  auto t = checks::check_lower_bound(support::corpus(), 5, 77);
  EXPECT_GT(t.cases, 0u);
  EXPECT_TRUE(t.ok()) << t.summary();
}
