#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"
#include "pcf/numeric.hpp"

namespace pcf {

using VertexMask = std::uint32_t;

inline constexpr int kMaxStableSetVertices = 20;

/// All non-empty stable sets of G as bitmasks, with the incidence data of
/// the covering LP: A1[v][S] = [v in S] and A2[z][S] = [|z ∩ S| = 1].
struct StableSetSystem {
  int n = 0;
  std::vector<VertexMask> sets;
  std::vector<VertexMask> edge_masks;

  std::size_t num_rows() const { return static_cast<std::size_t>(n) + edge_masks.size(); }
  /// Row indices with a 1 in column j: vertices first, then hyperedges.
  std::vector<std::size_t> column(std::size_t j) const;
};

/// Sets come out in increasing mask order. Throws ParameterError for n > 20.
StableSetSystem enumerate_stable_sets(const ConflictInstance& inst);
StableSetSystem enumerate_stable_sets(const Graph& g);

std::vector<Vertex> mask_vertices(VertexMask mask);

struct DualWeights {
  std::vector<Rational> f;
  std::vector<Rational> g;

  Rational total() const;
  /// Scaled to total 1. Throws ParameterError when the total is 0.
  DualWeights normalized() const;
};

struct LPResult {
  Rational optimum;
  StableSetSystem system;
  /// Weight per stable set, aligned with system.sets.
  std::vector<Rational> primal;
  /// Optimal dual (f on vertices, g on hyperedges), not normalized.
  DualWeights dual;
  int pivots = 0;
};

/// Exact minimum of 1^T x subject to A1 x >= 1, A2 x >= 1, x >= 0 by a
/// rational dual simplex with Bland's rule. Feasibility of both solutions
/// and equality of the objectives are asserted before returning.
LPResult fractional_pcf_lp(const ConflictInstance& inst);

struct StablePayoff {
  VertexMask set = 0;
  Rational payoff;
};

/// Maximum over stable S of sum_{v in S} f(v) + sum_{|z ∩ S| = 1} g(z);
/// ties go to the smallest mask.
StablePayoff best_stable_payoff(const ConflictInstance& inst, const DualWeights& w);
Rational stable_payoff(const ConflictInstance& inst, const DualWeights& w, const std::vector<Vertex>& set);

struct DualityReport {
  Verdict verdict = Verdict::fail;
  Rational optimum;
  /// Best payoff of the normalized optimal dual; must equal 1/optimum.
  Rational dual_payoff;
  int samples = 0;
  /// Sampled weight vectors whose best payoff fell below 1/optimum.
  int sample_failures = 0;
};

DualityReport duality_check(const ConflictInstance& inst, std::uint64_t seed = 1, int samples = 100);

struct SamplerParams {
  long double eps = 0.1L;
  std::uint64_t seed = 0;
  std::optional<long double> p;
};

struct SamplerRun {
  std::vector<Vertex> set;
  Rational payoff;
  long double p = 0.0L;
  /// Number of vertices with X_v = 1, and of those that also have Y_v = 0.
  int sampled = 0;
  int kept = 0;
  int classes = 0;
  int class_bound = 0;
  bool stable = false;
  /// (1-eps)^2 / ((1+2 eps) Delta), for comparison only.
  long double guarantee = 0.0L;
  bool rank_exceeds_delta = false;
};

/// Marks each vertex with probability p (default log Delta / Delta), drops
/// marked vertices with more than (1+eps) p Delta marked neighbours, colors
/// the rest greedily in index order and returns the best color class.
/// Requires Delta >= 2 unless p is given.
SamplerRun weighted_stable_sampler(const ConflictInstance& inst, const DualWeights& w, const SamplerParams& params);

struct RoundResult {
  SetColoring coloring;
  /// Some vertex was covered more than b times and had colors dropped.
  bool trimmed = false;
  bool verified = false;
};

/// Scales the primal by the lcm D of its denominators, turns each stable set
/// S into x_S D consecutive colors, keeps the D lowest colors per vertex and
/// checks the result with is_fractional_pcf.
RoundResult round_to_ab(const ConflictInstance& inst, const LPResult& lp);

struct ChernoffReport {
  long double expectation = 0.0L;
  long double empirical = 0.0L;
  long double bound = 0.0L;
  long double margin = 0.0L;
  long trials = 0;
  bool pass = false;
};

/// Monte Carlo estimate of P(|X - EX| >= delta EX) for X ~ Bin(n, p) against
/// 2 exp(-delta^2 EX / 3), passing when empirical <= bound + 3 sigma.
ChernoffReport chernoff_diagnostic(long n, long double p, long double delta, long trials, std::uint64_t seed,
                                   int jobs = 0);

}  // namespace pcf
