#include <gtest/gtest.h>

#include <random>

#include "pcf/coloring.hpp"
#include "pcf/generate.hpp"
#include "pcf/graph.hpp"
#include "pcf/numeric.hpp"
#include "support/oracles.hpp"

using pcf::Coloring;
using pcf::ConflictInstance;
using pcf::Edge;
using pcf::Graph;
using pcf::Hypergraph;
using pcf::ListAssignment;
using pcf::SetColoring;

namespace {

ConflictInstance c5_instance() {
  Graph g = pcf::generate(pcf::gen::Cycle{5}, 0);
  Hypergraph h = pcf::neighborhood_hypergraph(g);
  return {std::move(g), std::move(h)};
}

SetColoring c5_five_two() { return {5, 2, {{1, 2}, {3, 4}, {1, 5}, {2, 3}, {4, 5}}}; }

Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

}  // namespace

TEST(ListAssignment, Basics) {
  ListAssignment l({{3, 1, 1}, {2}});
  EXPECT_EQ(l[0], (std::vector<int>{1, 3}));
  EXPECT_TRUE(l.allows(1, 2));
  EXPECT_FALSE(l.allows(1, 3));
  EXPECT_EQ(l.min_size(), 1);
  EXPECT_EQ(ListAssignment::uniform(3, 4)[2], (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(ListAssignment().min_size(), 0);
}

TEST(IsProper, Examples) {
  const Graph k3 = pcf::generate(pcf::gen::Complete{3}, 0);
  EXPECT_TRUE(pcf::is_proper(k3, {1, 2, 3}));
  EXPECT_FALSE(pcf::is_proper(k3, {1, 1, 2}));
  EXPECT_TRUE(pcf::is_proper(pcf::generate(pcf::gen::Cycle{5}, 0), {1, 2, 1, 2, 3}));
  EXPECT_THROW(pcf::is_proper(k3, {1, 2}), pcf::ParameterError);
}

TEST(ConflictFree, Examples) {
  const Hypergraph three(3, {{0, 1, 2}});
  EXPECT_FALSE(pcf::is_t_conflict_free(three, {5, 5, 5}, 1));
  EXPECT_TRUE(pcf::is_t_conflict_free(three, {5, 5, 7}, 1));
  const Hypergraph four(4, {{0, 1, 2, 3}});
  EXPECT_TRUE(pcf::is_t_conflict_free(four, {5, 5, 6, 6}, 2));
  EXPECT_FALSE(pcf::is_t_conflict_free(four, {5, 5, 6, 6}, 1));
}

TEST(IsPcf, Examples) {
  const auto c5 = c5_instance();
  EXPECT_TRUE(pcf::is_pcf(c5, {1, 2, 3, 4, 5}));
  const ConflictInstance single(Graph(1), Hypergraph(1));
  const ListAssignment lists({{4, 9}});
  EXPECT_TRUE(pcf::is_pcf(single, {4}, &lists));
  EXPECT_TRUE(pcf::is_pcf(single, {9}, &lists));
  EXPECT_FALSE(pcf::is_pcf(single, {5}, &lists));
}

TEST(IsPcf, NoFourColoringOfC5) {
  const auto c5 = c5_instance();
  int proper = 0;
  oracle::for_each_list_coloring(ListAssignment::uniform(5, 4), [&](const Coloring& phi) {
    proper += pcf::is_proper(c5.graph, phi);
    EXPECT_FALSE(pcf::is_pcf(c5, phi));
  });
  EXPECT_GT(proper, 0);
}

TEST(IsPcf, AgreesWithOracle) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + round % 7;
    ConflictInstance inst(oracle::random_graph(rng, n, 0.4), oracle::random_hypergraph(rng, n, 3, 1, 4));
    const auto phi = oracle::random_coloring(rng, n, 3);
    for (int t = 1; t <= 3; ++t) EXPECT_EQ(pcf::is_pcf(inst, phi, nullptr, t), oracle::pcf(inst, phi, t));
  }
}

TEST(BichromaticPaths, Examples) {
  EXPECT_FALSE(pcf::bichromatic_paths_ok(path(4), {1, 2, 1, 2}));
  EXPECT_TRUE(pcf::bichromatic_paths_ok(path(3), {1, 2, 1}));
  EXPECT_TRUE(pcf::bichromatic_paths_ok(pcf::generate(pcf::gen::Complete{5}, 0), {1, 2, 3, 4, 5}));
  EXPECT_TRUE(pcf::bichromatic_paths_ok(path(4), {1, 2, 1, 3}));
  EXPECT_THROW(pcf::bichromatic_paths_ok(path(3), {1, 1, 2}), pcf::ParameterError);
  // A bicolored 4-cycle is not a path.
  EXPECT_FALSE(pcf::bichromatic_paths_ok(pcf::generate(pcf::gen::Cycle{4}, 0), {1, 2, 1, 2}, 5));
}

TEST(SetColoring, Validate) {
  EXPECT_NO_THROW(c5_five_two().validate());
  EXPECT_THROW((SetColoring{3, 2, {{1, 4}}}.validate()), pcf::ParameterError);
  EXPECT_THROW((SetColoring{3, 2, {{1}}}.validate()), pcf::ParameterError);
  EXPECT_THROW((SetColoring{3, 2, {{2, 1}}}.validate()), pcf::ParameterError);
}

TEST(FractionalPcf, Examples) {
  const Graph c5 = pcf::generate(pcf::gen::Cycle{5}, 0);
  EXPECT_TRUE(pcf::is_fractional_pcf(ConflictInstance(c5, Hypergraph(5)), c5_five_two()));
  std::vector<Edge> one{{0, 1}};
  const ConflictInstance k2(Graph(2, one), Hypergraph(2, {{0, 1}}));
  EXPECT_FALSE(pcf::is_fractional_pcf(k2, SetColoring{2, 1, {{1}, {1}}}));
  const ConflictInstance pair(Graph(2), Hypergraph(2, {{0, 1}}));
  EXPECT_FALSE(pcf::is_fractional_pcf(pair, SetColoring{4, 2, {{1, 2}, {1, 2}}}));
  EXPECT_TRUE(pcf::is_fractional_pcf(pair, SetColoring{4, 2, {{1, 2}, {3, 4}}}));
}

TEST(FractionalPcf, BEqualsOneIsPcf) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + round % 6;
    ConflictInstance inst(oracle::random_graph(rng, n, 0.4), oracle::random_hypergraph(rng, n, 3, 1, 4));
    const auto phi = oracle::random_coloring(rng, n, 3);
    SetColoring psi{3, 1, {}};
    for (int c : phi) psi.sets.push_back({c});
    EXPECT_EQ(pcf::is_fractional_pcf(inst, psi), pcf::is_pcf(inst, phi));
  }
}

TEST(Cor16, Examples) {
  const Graph c5 = pcf::generate(pcf::gen::Cycle{5}, 0);
  EXPECT_TRUE(pcf::cor16_properties(ConflictInstance(c5, Hypergraph(5)), c5_five_two()).stmt3);

  const auto rainbow = pcf::cor16_properties(c5_instance(), SetColoring{5, 1, {{1}, {2}, {3}, {4}, {5}}});
  EXPECT_TRUE(rainbow.stmt2);
  EXPECT_TRUE(rainbow.stmt3);

  std::vector<Edge> one{{0, 1}};
  const ConflictInstance k2(Graph(2, one), Hypergraph(2));
  EXPECT_FALSE(pcf::cor16_properties(k2, SetColoring{6, 3, {{1, 2, 3}, {1, 2, 4}}}).stmt3);
}

TEST(Cor16, SubsetAndTripleFormsAgree) {
  std::mt19937_64 rng(9);
  int compared = 0;
  for (int round = 0; round < 400; ++round) {
    const int n = 3 + round % 5;
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const int b = 1 + round % 3;
    const int a = std::min(12, 2 * b + 1 + static_cast<int>(rng() % 4));
    SetColoring psi{a, b, {}};
    std::vector<int> colors(static_cast<std::size_t>(a));
    for (int c = 0; c < a; ++c) colors[static_cast<std::size_t>(c)] = c + 1;
    for (int v = 0; v < n; ++v) {
      std::shuffle(colors.begin(), colors.end(), rng);
      std::vector<int> set(colors.begin(), colors.begin() + b);
      std::sort(set.begin(), set.end());
      psi.sets.push_back(set);
    }
    EXPECT_EQ(pcf::small_color_sets_split(g, psi), pcf::connected_triples_spread(g, psi)) << round;
    ++compared;
  }
  EXPECT_EQ(compared, 400);
}
