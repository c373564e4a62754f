#pragma once

#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pcf/numeric.hpp"

namespace pcf {

/// Exact t-associated Stirling numbers S_t(d, i): the number of partitions
/// of {1..d} into i blocks, each of size at least t.
///
/// Rows are filled lazily from
///   S_t(d, i) = i S_t(d-1, i) + C(d-1, t-1) S_t(d-t, i-1)
/// and cached; access is internally synchronized.
class StirlingTable {
 public:
  explicit StirlingTable(int t);

  int t() const { return t_; }
  /// Largest d whose row is cached.
  int max_d() const;

  BigInt operator()(int d, int i) const;
  /// Entries for i = 0..floor(d/t). The reference stays valid for the
  /// table's lifetime.
  const std::vector<BigInt>& row(int d) const;
  void ensure(int d) const;

 private:
  int t_;
  mutable std::mutex mutex_;
  mutable std::deque<std::vector<BigInt>> rows_;
};

/// Process-wide table for a given t, created on first use.
const StirlingTable& stirling_table(int t);

BigInt stirling_assoc(int t, int d, int i);

/// Enumerates set partitions of {1..d} (restricted growth strings) and
/// histograms them by block count, keeping those with all blocks >= t.
/// Throws ParameterError for d > 12.
std::vector<BigInt> brute_force_stirling_row(int t, int d);
BigInt brute_force_stirling(int t, int d, int i);

/// sum_{i=1}^{floor(d/min_part)} S_{min_part}(d, i) beta^{i-d+1}.
Rational pcf_sum_exact(int d, const Rational& beta, int min_part = 2);

struct TwoBasicBounds {
  Rational leaders;   // C(d,i) i^(d-i) 2^-i
  Rational pairs_triples;  // matching term + pairs/triples decomposition
  Rational min;
};

/// Both upper bounds on S_2(d, i); requires 1 <= i <= floor(d/2).
TwoBasicBounds bound_two_basic(int d, int i);

/// sum_i min(two basic bounds) beta^{i-d+1}, an upper bound on pcf_sum_exact.
Rational two_basic_weighted_sum(int d, const Rational& beta);

/// beta (d/beta)^ceil(d/2) / (1 - d/beta); requires d < beta.
Rational bound_simple(int d, const Rational& beta);

struct BoundParams {
  Rational R;
  Rational beta;
  Rational eps;
  Rational c;
  int d = 0;
};

/// Result of comparing an exact partial sum with a closed-form bound.
struct PartialSumReport {
  Rational partial_sum;
  /// Natural log of the bound.
  long double log_bound = 0.0L;
  /// Exact bound when it is rational.
  std::optional<Rational> bound;
  Verdict verdict = Verdict::inconclusive;
  /// d meets the "moreover" threshold; tail_verdict then certifies
  /// partial_sum <= R^{-1/2} / 2 exactly.
  bool beyond_threshold = false;
  long double threshold = 0.0L;
  Verdict tail_verdict = Verdict::premise_not_met;
};

/// Low-index part: i <= c d, against d^2 beta / 2 (1/2 + c/eps)^d.
/// Requires d <= R, 0 < eps < 1, 0 < c < eps/2, eps R <= beta <= R.
PartialSumReport bound_lower_sum(const BoundParams& p);
PartialSumReport lower_sum_unchecked(const BoundParams& p);

/// High-index part: c d <= i <= d/2, against
/// R^3/4 0.9126^d + d^4/4 ((1/eps)^(1-c) 0.7524)^d.
/// Requires d <= R, R >= 50, 0.6 <= eps < 1, 0.3 <= c < eps/2,
/// eps R <= beta <= R.
PartialSumReport bound_upper_sum(const BoundParams& p);
PartialSumReport upper_sum_unchecked(const BoundParams& p);

struct TermCheck {
  Rational lhs;
  long double log_rhs = 0.0L;
  Verdict verdict = Verdict::inconclusive;
};

/// C(d,3i) (3i)!/(i! 6^i) i^(d-3i) beta^(i-d+1)
///   <= (beta d / e) (d/beta)^(d-i) 0.549474^d, for 1 <= i <= d/3.
TermCheck single_triple_term_check(int d, int i, const Rational& beta);

/// The j = 3i - d term with no leftover elements
///   < (d beta / e) 0.9126^d, for i > j > 0 and beta >= 0.6 d.
TermCheck pairs_triples_term_check(int d, int i, int j, const Rational& beta);

/// Exact test of pcf_sum_exact(d, beta) <= R^{-1/2}, by squaring.
bool sum_within_inv_sqrt(int d, const Rational& beta, const Rational& R);

enum class Clm1Range { full, small, middle, large };

std::string_view to_string(Clm1Range range);

struct Clm1Row {
  int d = 0;
  Rational sum;
  bool pass = false;
};

struct Clm1Report {
  Clm1Range range = Clm1Range::full;
  long R = 0;
  long beta = 0;
  int d_lo = 0;
  int d_hi = 0;
  std::vector<Clm1Row> rows;
  std::optional<int> first_failure;
  bool all_pass() const { return !first_failure; }
};

/// Certifies sum_i S_2(d,i) beta^{i-d+1} <= R^{-1/2} for every d in the
/// range's window, capped at d_max. `full` is 3 <= d <= beta^{19/20} with
/// beta >= max(0.6R, 600), R >= 750; `small` is 3..9 with beta >= 0.6R,
/// R >= 750; `middle` is 10 <= d <= beta^{2/3} with beta >= 0.6R >= 14;
/// `large` is beta^{2/3} <= d <= beta^{19/20} with the `full` hypotheses.
/// Throws HypothesisError when the range's hypotheses fail.
Clm1Report verify_clm1(long R, long beta, int d_max, Clm1Range range = Clm1Range::full, int jobs = 0);

/// floor(beta^{p/q}): the largest d with d^q <= beta^p.
long floor_rational_power(long beta, unsigned long p, unsigned long q);

struct FactorialReport {
  int n_max = 0;
  std::optional<int> first_failure;
  bool all_pass() const { return !first_failure; }
};

/// n^n / e^(n-1) <= n! <= n^(n+1) / e^(n-1) for 1 <= n <= n_max, using
/// exact factorials and a rational bracket around e.
FactorialReport factorial_bounds_check(int n_max);

}  // namespace pcf
