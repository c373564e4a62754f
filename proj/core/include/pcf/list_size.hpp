#pragma once

#include <string>
#include <vector>

#include "pcf/graph.hpp"
#include "pcf/numeric.hpp"

namespace pcf {

/// max over v of
///   Delta(G) + beta + sum_{e ∋ v} sum_{i=1}^{floor(|e|/(t+1))} S_{t+1}(|e|, i) beta^{i-|e|+1}.
Rational required_list_size(const ConflictInstance& inst, const Rational& beta, int t = 1);

struct ListSizeResult {
  BigInt a;
  /// Hypotheses of the underlying theorem that the inputs do not meet. The
  /// value of `a` is still the formula's value.
  std::vector<std::string> unmet;
  /// Set when floating-point evaluation left the ceiling ambiguous.
  bool approximate = false;
};

/// ceil(Delta + beta + sqrt(Delta)), exact. `unmet` lists the failed regime
/// conditions: beta <= Delta and one of (Delta >= 1.24811e8,
/// beta >= 0.6550826 Delta), (Delta >= 8000, beta >= 2/3 Delta),
/// (Delta >= 750, beta >= 0.8 Delta).
ListSizeResult a_main(const BigInt& delta, const Rational& beta);

/// ceil(Delta(G) + beta + max_v deg_H(v) max{2 beta^{1-k} (log R)^{2k},
/// (1 - 1e-8)^{(log R)^2}}) with k = ceil(mr_H(v)/2). The vertex term is
/// evaluated in log-space so R may have millions of digits.
/// Throws HypothesisError when some hyperedge has fewer than 3 vertices or
/// rank(H) > R; the beta range and R >= e^{5e6} are reported in `unmet`.
ListSizeResult a_hyper(const ConflictInstance& inst, const BigInt& R, const Rational& beta);

enum class FixedRankBranch { general, rank_at_most_4 };

/// R is passed through its square so radicals such as sqrt(7.5) Delta^{3/2}
/// stay exact.
///   general:        ceil(Delta(G) + R + (1+eps) max_v deg_H(v) r^k R^{1-k}),
///                   requires R >= (1 + 1/eps) r
///   rank_at_most_4: ceil(Delta(G) + R + Delta(H) (3/R + 1/R^2)), requires r <= 4
/// Both require every hyperedge to have >= 3 vertices and rank(H) <= r;
/// violations throw HypothesisError.
ListSizeResult a_fixed_rank(const ConflictInstance& inst, const Rational& R_squared, int r, const Rational& eps,
                            FixedRankBranch branch);

/// The rank <= 4 formula from the degree statistics alone.
BigInt rank4_list_size(const Rational& max_degree_g, const Rational& max_degree_h, const Rational& R_squared);

/// ceil(sqrt(30) Delta^{3/2} + Delta + 1/3).
BigInt star_linear_palette(const BigInt& delta);

}  // namespace pcf
