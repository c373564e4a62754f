#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pcf {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Adjacency lists are sorted and symmetric; self-loops are rejected and
/// parallel edges collapse to one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  std::size_t num_edges() const { return num_edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
};

/// Hypergraph on vertices 0..n-1 with non-empty, deduplicated edges.
///
/// Each edge is stored as a sorted vertex list; the edge list itself is kept
/// in sorted order so two hypergraphs with the same edge set compare equal.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int n);
  Hypergraph(int n, std::vector<std::vector<Vertex>> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::vector<Vertex>>& edges() const { return edges_; }
  const std::vector<Vertex>& edge(std::size_t index) const { return edges_[index]; }

  /// Indices of the edges containing v.
  const std::vector<std::size_t>& incident(Vertex v) const { return incidence_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const;
  /// Largest edge size; 0 for an edgeless hypergraph.
  int rank() const;
  /// Smallest edge size among edges containing v; empty if v is in none.
  std::optional<int> min_rank(Vertex v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// A graph together with a conflict hypergraph on the same vertex set.
struct ConflictInstance {
  Graph graph;
  Hypergraph hypergraph;

  ConflictInstance() = default;
  ConflictInstance(Graph g, Hypergraph h);

  int num_vertices() const { return graph.num_vertices(); }
};

/// Open neighbourhoods of the non-isolated vertices, deduplicated.
Hypergraph neighborhood_hypergraph(const Graph& g);

/// Vertex sets of all (not necessarily induced) 4-vertex paths, plus every
/// 3-subset of N(v) for vertices of degree at least 3.
Hypergraph star_linear_hypergraph(const Graph& g);

struct DegeneracyOrder {
  int degeneracy = 0;
  /// Every vertex has at most `degeneracy` neighbours earlier in this order.
  std::vector<Vertex> order;
};

/// Smallest-last ordering (repeated minimum-degree removal, reversed).
DegeneracyOrder degeneracy_ordering(const Graph& g);

}  // namespace pcf
