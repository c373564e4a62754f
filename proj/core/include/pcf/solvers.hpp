#pragma once

#include <cstdint>
#include <optional>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"
#include "pcf/numeric.hpp"

namespace pcf {

struct SolverConfig {
  int t = 1;
  std::uint64_t seed = 0;
  int restart_cap = 200;
  /// Search nodes allowed per run (exact, count) or per restart (sample).
  long node_cap = 50'000'000;

  /// Throws ParameterError unless t and both caps are positive.
  void validate() const;
};

/// Colors vertices in a degeneracy order with the smallest color that avoids
/// the colors of earlier neighbours and the color of the earliest vertex of
/// every hyperedge through the current vertex. Uses at most
/// degeneracy + Delta(H) + 1 colors.
Coloring greedy_pcf(const ConflictInstance& inst);

/// Number of distinct colors in phi.
int colors_used(const Coloring& phi);

struct ChiResult {
  int lower = 0;
  int upper = 0;
  /// A PCF coloring with `upper` colors.
  Coloring witness;
  long nodes = 0;
  bool exact() const { return lower == upper; }
};

/// Minimum k admitting a PCF k-coloring (t from cfg). When the node budget
/// runs out the result is a bracket [lower, upper] with lower < upper.
ChiResult exact_chi_pcf(const ConflictInstance& inst, const SolverConfig& cfg = {});

struct CountResult {
  BigInt count;
  bool complete = true;
  long nodes = 0;
};

/// Exact number of proper t-conflict-free L-colorings of all vertices.
/// Hyperedges are checked once fully colored. `jobs` shards the search on
/// the first vertex's color.
CountResult count_pcf_colorings(const ConflictInstance& inst, const ListAssignment& lists, int t = 1,
                                long node_cap = 50'000'000, int jobs = 1);

struct RosenfeldReport {
  Verdict verdict = Verdict::inconclusive;
  Rational required;
  int min_list_size = 0;
  CountResult count;
  /// count * q^n and p^n for beta = p/q; pass iff lhs >= rhs.
  BigInt lhs;
  BigInt rhs;
};

/// Counts colorings and compares with beta^n exactly, provided every list
/// has at least required_list_size(inst, beta, t) colors.
RosenfeldReport rosenfeld_check(const ConflictInstance& inst, const ListAssignment& lists, const Rational& beta,
                                int t = 1, long node_cap = 50'000'000, int jobs = 1);

struct SampleResult {
  std::optional<Coloring> coloring;
  int restarts = 0;
  long nodes = 0;
};

/// Randomized backtracking over a random vertex order with shuffled
/// admissible colors, restarted up to cfg.restart_cap times. Deterministic
/// for a fixed (instance, lists, cfg).
SampleResult sample_pcf(const ConflictInstance& inst, const ListAssignment& lists, const SolverConfig& cfg);

}  // namespace pcf
