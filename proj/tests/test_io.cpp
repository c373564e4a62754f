#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "pcf/generate.hpp"
#include "pcf/io.hpp"
#include "support/oracles.hpp"

namespace io = pcf::io;
using pcf::Graph;
using pcf::Hypergraph;

namespace {

template <class Fn>
std::string written(Fn&& fn) {
  std::ostringstream out;
  fn(out);
  return out.str();
}

std::string error_of(const std::string& text, int n = 3) {
  std::istringstream in(text);
  try {
    io::read_coloring(in, n);
  } catch (const io::ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Io, GraphRoundTrip) {
  std::mt19937_64 rng(73);
  for (int round = 0; round < 20; ++round) {
    const Graph g = oracle::random_graph(rng, 1 + round, 0.3);
    std::istringstream in(written([&](std::ostream& o) { io::write_graph(o, g); }));
    EXPECT_EQ(io::read_graph(in), g);
  }
}

TEST(Io, GraphParsing) {
  std::istringstream in("c a comment\np edge 3 2\ne 1 2\n\ne 2 3\n");
  const Graph g = io::read_graph(in);
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
}

TEST(Io, GraphErrorsNameTheLine) {
  std::istringstream missing("e 1 2\n");
  EXPECT_THROW(io::read_graph(missing), io::ParseError);
  std::istringstream bad("p edge 3 1\ne 1 7\n");
  try {
    io::read_graph(bad);
    FAIL();
  } catch (const io::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  std::istringstream count("p edge 3 2\ne 1 2\n");
  EXPECT_THROW(io::read_graph(count), io::ParseError);
}

TEST(Io, HypergraphRoundTrip) {
  const Hypergraph h(5, {{0, 1, 2}, {3}, {1, 4}});
  std::istringstream in(written([&](std::ostream& o) { io::write_hypergraph(o, h); }));
  EXPECT_EQ(io::read_hypergraph(in, 5), h);
  std::istringstream commented("# edges\n1 2 3\n\n4\n");
  EXPECT_EQ(io::read_hypergraph(commented, 4), Hypergraph(4, {{0, 1, 2}, {3}}));
  std::istringstream bad("1 9\n");
  EXPECT_THROW(io::read_hypergraph(bad, 4), io::ParseError);
}

TEST(Io, ColoringRoundTripAndErrors) {
  const pcf::Coloring phi{3, 1, 2};
  std::istringstream in(written([&](std::ostream& o) { io::write_coloring(o, phi); }));
  EXPECT_EQ(io::read_coloring(in, 3), phi);
  EXPECT_NE(error_of("1 1\n1 2\n3 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("1 1\n2 x\n3 1\n").find("line 2"), std::string::npos);
  EXPECT_FALSE(error_of("1 1\n2 2\n").empty());
  EXPECT_FALSE(error_of("1 1\n2 0\n3 1\n").empty());
}

TEST(Io, ListsRoundTrip) {
  const pcf::ListAssignment lists({{1, 2, 3}, {4}, {2, 7}});
  std::istringstream in(written([&](std::ostream& o) { io::write_lists(o, lists); }));
  EXPECT_EQ(io::read_lists(in, 3), lists);
}

TEST(Io, SetColoringRoundTrip) {
  const pcf::SetColoring psi{5, 2, {{1, 2}, {3, 4}, {1, 5}, {2, 3}, {4, 5}}};
  std::istringstream in(written([&](std::ostream& o) { io::write_set_coloring(o, psi); }));
  EXPECT_EQ(io::read_set_coloring(in, 5), psi);
  std::istringstream headerless("1 1,2\n2 3,4\n");
  const auto inferred = io::read_set_coloring(headerless, 2);
  EXPECT_EQ(inferred.a, 4);
  EXPECT_EQ(inferred.b, 2);
}

TEST(Io, FilesAndHashes) {
  EXPECT_EQ(io::fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(io::fnv1a_hex("a"), "af63dc4c8601ec8c");
  const auto path = std::filesystem::temp_directory_path() / "pcf_io_test.col";
  {
    std::ofstream out(path);
    io::write_graph(out, pcf::generate(pcf::gen::Cycle{5}, 0));
  }
  EXPECT_EQ(io::load_graph(path).num_edges(), 5U);
  EXPECT_FALSE(io::read_file(path).empty());
  std::filesystem::remove(path);
  EXPECT_THROW(io::load_graph(path), pcf::ParameterError);
}
