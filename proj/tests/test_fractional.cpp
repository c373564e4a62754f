#include <gtest/gtest.h>

#include <random>

#include "pcf/coloring.hpp"
#include "pcf/fractional.hpp"
#include "pcf/generate.hpp"
#include "pcf/graph.hpp"
#include "pcf/solvers.hpp"
#include "support/oracles.hpp"

using pcf::ConflictInstance;
using pcf::DualWeights;
using pcf::Graph;
using pcf::Hypergraph;
using pcf::Rational;
using pcf::Verdict;

namespace {

ConflictInstance with_neighborhoods(Graph g) {
  Hypergraph h = pcf::neighborhood_hypergraph(g);
  return {std::move(g), std::move(h)};
}

ConflictInstance proper_only(Graph g) {
  const int n = g.num_vertices();
  return {std::move(g), Hypergraph(n)};
}

DualWeights uniform_f(int n, int edges, const Rational& value) {
  return {std::vector<Rational>(static_cast<std::size_t>(n), value),
          std::vector<Rational>(static_cast<std::size_t>(edges), Rational(0))};
}

}  // namespace

TEST(StableSets, Counts) {
  EXPECT_EQ(pcf::enumerate_stable_sets(pcf::generate(pcf::gen::Complete{3}, 0)).sets,
            (std::vector<pcf::VertexMask>{1, 2, 4}));
  EXPECT_EQ(pcf::enumerate_stable_sets(pcf::generate(pcf::gen::Cycle{5}, 0)).sets.size(), 10U);
  EXPECT_EQ(pcf::enumerate_stable_sets(Graph(3)).sets.size(), 7U);
  EXPECT_THROW(pcf::enumerate_stable_sets(Graph(21)), pcf::ParameterError);
}

TEST(StableSets, MatchOracle) {
  std::mt19937_64 rng(59);
  for (int round = 0; round < 50; ++round) {
    const Graph g = oracle::random_graph(rng, 1 + round % 12, 0.3);
    EXPECT_EQ(pcf::enumerate_stable_sets(g).sets.size(), oracle::count_stable_sets(g));
  }
}

TEST(StableSets, Columns) {
  const auto sys = pcf::enumerate_stable_sets(with_neighborhoods(pcf::generate(pcf::gen::Cycle{5}, 0)));
  EXPECT_EQ(sys.num_rows(), 10U);
  // {0}: vertex row 0 plus the two neighbourhoods containing vertex 0.
  EXPECT_EQ(sys.column(0).size(), 3U);
  EXPECT_EQ(pcf::mask_vertices(0b10110U), (std::vector<pcf::Vertex>{1, 2, 4}));
}

TEST(FractionalLp, Classical) {
  EXPECT_EQ(pcf::fractional_pcf_lp(proper_only(pcf::generate(pcf::gen::Complete{3}, 0))).optimum, Rational(3));
  EXPECT_EQ(pcf::fractional_pcf_lp(proper_only(pcf::generate(pcf::gen::Cycle{5}, 0))).optimum, Rational(5, 2));
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(pcf::fractional_pcf_lp(proper_only(pcf::generate(pcf::gen::Complete{n}, 0))).optimum, Rational(n));
  }
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(pcf::fractional_pcf_lp(proper_only(pcf::generate(pcf::gen::Cycle{2 * k + 1}, 0))).optimum,
              Rational(2) + Rational(1, k));
  }
}

TEST(FractionalLp, C5WithNeighborhoods) {
  const auto inst = with_neighborhoods(pcf::generate(pcf::gen::Cycle{5}, 0));
  const auto lp = pcf::fractional_pcf_lp(inst);
  EXPECT_EQ(lp.optimum, Rational(5, 2));
  EXPECT_GE(lp.optimum, Rational(5, 2));
  EXPECT_LE(lp.optimum, Rational(5));
  Rational sum = 0;
  for (const auto& x : lp.primal) sum += x;
  EXPECT_EQ(sum, lp.optimum);
  EXPECT_EQ(lp.dual.total(), lp.optimum);
}

TEST(Payoff, Examples) {
  const auto c5 = with_neighborhoods(pcf::generate(pcf::gen::Cycle{5}, 0));
  DualWeights one_vertex = uniform_f(5, 5, Rational(0));
  one_vertex.f[2] = 1;
  const auto a = pcf::best_stable_payoff(c5, one_vertex);
  EXPECT_EQ(a.payoff, Rational(1));
  EXPECT_EQ(a.set, 1U << 2);

  DualWeights one_edge = uniform_f(5, 5, Rational(0));
  one_edge.g[0] = 1;
  EXPECT_EQ(pcf::best_stable_payoff(c5, one_edge).payoff, Rational(1));
  const auto& z = c5.hypergraph.edge(0);
  EXPECT_EQ(pcf::stable_payoff(c5, one_edge, {z[0]}), Rational(1));

  EXPECT_EQ(pcf::best_stable_payoff(c5, uniform_f(5, 5, Rational(1, 5))).payoff, Rational(2, 5));
  EXPECT_EQ(pcf::stable_payoff(c5, uniform_f(5, 5, Rational(1, 5)), {0, 2}), Rational(2, 5));
}

TEST(Payoff, Normalization) {
  DualWeights w{{Rational(1), Rational(3)}, {Rational(4)}};
  EXPECT_EQ(w.total(), Rational(8));
  EXPECT_EQ(w.normalized().f[1], Rational(3, 8));
  EXPECT_THROW((DualWeights{{Rational(0)}, {}}.normalized()), pcf::ParameterError);
}

TEST(Duality, Examples) {
  const auto c5 = pcf::duality_check(with_neighborhoods(pcf::generate(pcf::gen::Cycle{5}, 0)));
  EXPECT_EQ(c5.verdict, Verdict::pass);
  EXPECT_EQ(c5.dual_payoff, 1 / c5.optimum);
  EXPECT_EQ(c5.sample_failures, 0);

  const auto k3 = proper_only(pcf::generate(pcf::gen::Complete{3}, 0));
  const auto r = pcf::duality_check(k3);
  EXPECT_EQ(r.optimum, Rational(3));
  EXPECT_EQ(r.dual_payoff, Rational(1, 3));
  const auto lp = pcf::fractional_pcf_lp(k3);
  for (const auto& f : lp.dual.normalized().f) EXPECT_EQ(f, Rational(1, 3));

  const auto single = pcf::duality_check(ConflictInstance(Graph(1), Hypergraph(1)));
  EXPECT_EQ(single.optimum, Rational(1));
  EXPECT_EQ(single.dual_payoff, Rational(1));
}

TEST(Duality, RandomInstancesAndIntegralBound) {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 + round % 6;
    const ConflictInstance inst(oracle::random_graph(rng, n, 0.4), oracle::random_hypergraph(rng, n, 3, 1, 4));
    const auto r = pcf::duality_check(inst, static_cast<std::uint64_t>(round), 20);
    EXPECT_EQ(r.verdict, Verdict::pass) << round;
    EXPECT_LE(r.optimum, Rational(pcf::exact_chi_pcf(inst).upper));
  }
}

TEST(Sampler, EdgelessForcedP) {
  const ConflictInstance inst(Graph(6), Hypergraph(6));
  pcf::SamplerParams params;
  params.p = 1.0L;
  const auto r = pcf::weighted_stable_sampler(inst, uniform_f(6, 0, Rational(1, 6)), params);
  EXPECT_EQ(r.set.size(), 6U);
  EXPECT_EQ(r.payoff, Rational(1));
  EXPECT_TRUE(r.stable);
  EXPECT_EQ(r.classes, 1);
}

TEST(Sampler, RequiresDegreeTwoWithoutP) {
  const ConflictInstance inst(Graph(3), Hypergraph(3));
  EXPECT_THROW(pcf::weighted_stable_sampler(inst, uniform_f(3, 0, Rational(1)), {}), pcf::ParameterError);
}

TEST(Sampler, DocumentedRegularInstance) {
  const auto inst = with_neighborhoods(pcf::generate(pcf::gen::RandomRegular{50, 10}, 2024));
  const auto w = uniform_f(50, static_cast<int>(inst.hypergraph.num_edges()), Rational(1, 50));
  pcf::SamplerParams params;
  params.seed = 7;
  const auto a = pcf::weighted_stable_sampler(inst, w, params);
  const auto b = pcf::weighted_stable_sampler(inst, w, params);
  EXPECT_TRUE(a.stable);
  EXPECT_EQ(a.set, b.set);
  EXPECT_EQ(a.payoff, pcf::stable_payoff(inst, w, a.set));
  EXPECT_NEAR(static_cast<double>(a.p), std::log(10.0) / 10, 1e-15);
  EXPECT_NEAR(static_cast<double>(a.guarantee), 0.81 / 12.0, 1e-15);
  EXPECT_LE(a.classes, a.class_bound);
  RecordProperty("payoff", pcf::to_string(a.payoff));
}

TEST(Sampler, AlwaysStable) {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 200; ++round) {
    const auto inst = with_neighborhoods(oracle::random_graph(rng, 8 + round % 20, 0.3));
    if (inst.graph.max_degree() < 2) continue;
    const auto w = uniform_f(inst.num_vertices(), static_cast<int>(inst.hypergraph.num_edges()), Rational(1));
    pcf::SamplerParams params;
    params.seed = static_cast<std::uint64_t>(round);
    const auto r = pcf::weighted_stable_sampler(inst, w, params);
    EXPECT_TRUE(r.stable);
    for (std::size_t i = 0; i < r.set.size(); ++i)
      for (std::size_t j = i + 1; j < r.set.size(); ++j) EXPECT_FALSE(inst.graph.adjacent(r.set[i], r.set[j]));
  }
}

TEST(Round, Examples) {
  const auto c5 = proper_only(pcf::generate(pcf::gen::Cycle{5}, 0));
  const auto r = pcf::round_to_ab(c5, pcf::fractional_pcf_lp(c5));
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(Rational(r.coloring.a, r.coloring.b), Rational(5, 2));

  const auto k3 = proper_only(pcf::generate(pcf::gen::Complete{3}, 0));
  const auto s = pcf::round_to_ab(k3, pcf::fractional_pcf_lp(k3));
  EXPECT_TRUE(s.verified);
  EXPECT_EQ(s.coloring.a, 3);
  EXPECT_EQ(s.coloring.b, 1);

  const auto nb = with_neighborhoods(pcf::generate(pcf::gen::Cycle{5}, 0));
  EXPECT_TRUE(pcf::round_to_ab(nb, pcf::fractional_pcf_lp(nb)).verified);
}

TEST(Round, RandomInstancesVerify) {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 30; ++round) {
    const int n = 2 + round % 6;
    const ConflictInstance inst(oracle::random_graph(rng, n, 0.4), oracle::random_hypergraph(rng, n, 2, 1, 4));
    const auto lp = pcf::fractional_pcf_lp(inst);
    const auto r = pcf::round_to_ab(inst, lp);
    EXPECT_TRUE(r.verified) << round;
    EXPECT_TRUE(pcf::is_fractional_pcf(inst, r.coloring));
  }
}

TEST(Chernoff, Examples) {
  const auto a = pcf::chernoff_diagnostic(1000, 0.5L, 0.5L, 2000, 1);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.empirical, 0.0L);
  const auto b = pcf::chernoff_diagnostic(100, 0.1L, 0.3L, 2000, 1);
  EXPECT_TRUE(b.pass);
  EXPECT_NEAR(static_cast<double>(b.bound), 2 * std::exp(-0.09 * 10 / 3), 1e-12);
  EXPECT_GT(b.bound, 1.0L);
  const auto c = pcf::chernoff_diagnostic(10, 0.01L, 0.99L, 2000, 1);
  EXPECT_TRUE(c.pass);
  const auto j1 = pcf::chernoff_diagnostic(200, 0.2L, 0.2L, 10000, 3, 1);
  const auto j3 = pcf::chernoff_diagnostic(200, 0.2L, 0.2L, 10000, 3, 3);
  EXPECT_EQ(j1.empirical, j3.empirical);
}
