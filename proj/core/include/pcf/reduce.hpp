#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

struct ReductionStep {
  Vertex removed = 0;
  /// Neighbours at removal time, in the original labelling (0, 1 or 2).
  std::vector<Vertex> neighbors;
  /// The two neighbours were distinct and non-adjacent, so xy was added.
  bool added_edge = false;
};

struct LowDegreeReduction {
  int original_n = 0;
  /// What is left, relabelled 0..k-1.
  Graph kernel;
  /// kernel vertex i is original vertex kernel_vertices[i].
  std::vector<Vertex> kernel_vertices;
  std::vector<ReductionStep> trace;
};

/// While at least two vertices remain and the minimum degree is at most 2,
/// removes the lowest-indexed vertex of minimum degree, joining its two
/// neighbours when they are distinct and non-adjacent.
LowDegreeReduction reduce_low_degree(const Graph& g);

struct ReplayResult {
  std::optional<Coloring> coloring;
  /// The vertex whose list ran out, when replay fails.
  std::optional<Vertex> blocking;
  std::string message;
};

/// Extends a PCF coloring of the kernel (neighbourhood hypergraph) back to
/// the original graph, undoing the trace in reverse. Each removed vertex v
/// with neighbours x, y takes the first color of L(v) outside
/// {phi(x), phi(y), c_x, c_y}, or outside S_x ∪ S_y ∪ {phi(x), phi(y)} when
/// xy was added, where c_u is a color seen exactly once on the current
/// neighbourhood of u. Every step is verified locally.
ReplayResult replay_extension(const Graph& original, const LowDegreeReduction& reduction,
                              const Coloring& kernel_coloring, const ListAssignment& lists);

}  // namespace pcf
