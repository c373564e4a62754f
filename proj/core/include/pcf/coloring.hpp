#pragma once

#include <optional>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

using Color = int;

/// colors[v] is the (positive) color of vertex v.
using Coloring = std::vector<Color>;

/// Per-vertex sets of allowed colors. Lists are kept sorted and free of
/// duplicates.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<Color>> lists);

  /// Every vertex gets {1, ..., k}.
  static ListAssignment uniform(int n, int k);

  int num_vertices() const { return static_cast<int>(lists_.size()); }
  const std::vector<Color>& operator[](Vertex v) const { return lists_[static_cast<std::size_t>(v)]; }
  const std::vector<std::vector<Color>>& lists() const { return lists_; }
  bool allows(Vertex v, Color c) const;
  /// Smallest list size; 0 when there are no vertices.
  int min_size() const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<std::vector<Color>> lists_;
};

/// An (a:b)-coloring: each vertex receives a b-subset of {1, ..., a}.
struct SetColoring {
  int a = 0;
  int b = 0;
  std::vector<std::vector<Color>> sets;

  /// Throws ParameterError unless every set is a sorted b-subset of [a].
  void validate() const;

  friend bool operator==(const SetColoring&, const SetColoring&) = default;
};

/// Throws ParameterError when phi does not cover exactly n vertices.
bool is_proper(const Graph& g, const Coloring& phi);

/// Every hyperedge has a color whose multiplicity on it lies in [1, t].
bool is_t_conflict_free(const Hypergraph& h, const Coloring& phi, int t = 1);

bool is_pcf(const ConflictInstance& inst, const Coloring& phi, const ListAssignment* lists = nullptr, int t = 1);

/// For every pair of colors, each component of the subgraph induced by the
/// two color classes is a path on at most max_vertices vertices. Throws
/// ParameterError if phi is not proper.
bool bichromatic_paths_ok(const Graph& g, const Coloring& phi, int max_vertices = 3);

/// Every color class is stable in G and every hyperedge sees at least b
/// colors exactly once.
bool is_fractional_pcf(const ConflictInstance& inst, const SetColoring& psi);

struct Cor16Report {
  /// Components of vertices whose colors lie inside any color set of size
  /// < 5b/2 have at most two vertices.
  bool stmt2 = false;
  /// |psi(v) ∩ psi(w)| <= b/2 for all distinct v, w.
  bool stmt3 = false;
  /// stmt2 came from enumerating color subsets (a <= 12) rather than the
  /// connected-triple form.
  bool stmt2_enumerated = false;
};

Cor16Report cor16_properties(const ConflictInstance& inst, const SetColoring& psi);

/// The two evaluation strategies behind Cor16Report::stmt2, exposed so they
/// can be cross-checked. The subset form throws for a > 20.
bool small_color_sets_split(const Graph& g, const SetColoring& psi);
bool connected_triples_spread(const Graph& g, const SetColoring& psi);

}  // namespace pcf
