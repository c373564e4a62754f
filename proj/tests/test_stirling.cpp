#include <gtest/gtest.h>

#include <cmath>

#include "pcf/numeric.hpp"
#include "pcf/stirling.hpp"

using pcf::BigInt;
using pcf::BoundParams;
using pcf::Rational;
using pcf::Verdict;

namespace {

BoundParams params(int R, const Rational& beta, const Rational& eps, const Rational& c, int d) {
  return {Rational(R), beta, eps, c, d};
}

}  // namespace

TEST(Stirling, Examples) {
  EXPECT_EQ(pcf::stirling_assoc(2, 3, 1), 1);
  EXPECT_EQ(pcf::stirling_assoc(2, 4, 2), 3);
  EXPECT_EQ(pcf::stirling_assoc(2, 4, 1), 1);
  EXPECT_EQ(pcf::stirling_assoc(2, 5, 2), 10);
  EXPECT_EQ(pcf::stirling_assoc(2, 2, 1), 1);
  EXPECT_EQ(pcf::stirling_assoc(2, 6, 3), 15);
  EXPECT_EQ(pcf::stirling_assoc(1, 4, 2), 7);
  EXPECT_EQ(pcf::stirling_assoc(2, 0, 0), 1);
  EXPECT_EQ(pcf::stirling_assoc(2, 5, 3), 0);
}

TEST(Stirling, MatchesBruteForce) {
  for (int t = 1; t <= 3; ++t) {
    for (int d = 0; d <= 10; ++d) {
      const auto expect = pcf::brute_force_stirling_row(t, d);
      for (int i = 0; i <= d; ++i) {
        const BigInt want = i < static_cast<int>(expect.size()) ? expect[static_cast<std::size_t>(i)] : BigInt(0);
        EXPECT_EQ(pcf::stirling_assoc(t, d, i), want) << t << " " << d << " " << i;
      }
    }
  }
  EXPECT_THROW(pcf::brute_force_stirling_row(2, 13), pcf::ParameterError);
}

TEST(Stirling, RowSums) {
  // Partitions of [d] with no singleton block.
  const long expect[] = {1, 1, 4, 11, 41, 162, 715, 3425};
  for (int d = 2; d <= 9; ++d) {
    BigInt sum = 0;
    for (const auto& v : pcf::stirling_table(2).row(d)) sum += v;
    EXPECT_EQ(sum, expect[d - 2]) << d;
  }
}

TEST(Stirling, ClassicalRowsAndGrowthBound) {
  // t = 1 row sums are Bell numbers.
  BigInt bell = 0;
  for (const auto& v : pcf::stirling_table(1).row(15)) bell += v;
  EXPECT_EQ(bell, BigInt("1382958545"));
  // Every part has >= 2 elements, so assigning labels gives S_2(d,i) <= i^d / i!.
  for (int d = 2; d <= 40; ++d) {
    for (int i = 1; 2 * i <= d; ++i) {
      EXPECT_LE(pcf::stirling_assoc(2, d, i) * pcf::factorial(static_cast<unsigned long>(i)),
                pcf::pow(BigInt(i), static_cast<unsigned long>(d)));
    }
  }
}

TEST(Stirling, LazyGrowthBeyondPrefetch) {
  pcf::StirlingTable table(2);
  EXPECT_EQ(table(600, 1), 1);
  EXPECT_GE(table.max_d(), 600);
  EXPECT_EQ(table.row(600).size(), 301U);
  EXPECT_THROW(pcf::StirlingTable(0), pcf::ParameterError);
}

TEST(PcfSum, Examples) {
  EXPECT_EQ(pcf::pcf_sum_exact(3, Rational(2)), Rational(1, 2));
  EXPECT_EQ(pcf::pcf_sum_exact(4, Rational(600)), Rational(1801, 360000));
  EXPECT_EQ(pcf::pcf_sum_exact(1, Rational(2)), Rational(0));
  EXPECT_THROW(pcf::pcf_sum_exact(0, Rational(2)), pcf::ParameterError);
  EXPECT_THROW(pcf::pcf_sum_exact(3, Rational(0)), pcf::ParameterError);
}

TEST(TwoBasic, Examples) {
  EXPECT_EQ(pcf::bound_two_basic(4, 2).leaders, Rational(6));
  EXPECT_GE(pcf::bound_two_basic(4, 2).min, Rational(3));
  EXPECT_GE(pcf::bound_two_basic(4, 2).pairs_triples, Rational(3));
  EXPECT_EQ(pcf::bound_two_basic(2, 1).pairs_triples, Rational(1));
  EXPECT_EQ(pcf::bound_two_basic(6, 3).pairs_triples, Rational(15));
  EXPECT_THROW(pcf::bound_two_basic(5, 3), pcf::ParameterError);
}

TEST(TwoBasic, SoundUpToForty) {
  for (int d = 2; d <= 40; ++d) {
    for (int i = 1; 2 * i <= d; ++i) {
      const auto b = pcf::bound_two_basic(d, i);
      const Rational exact(pcf::stirling_assoc(2, d, i));
      EXPECT_GE(b.leaders, exact);
      EXPECT_GE(b.pairs_triples, exact);
      EXPECT_EQ(b.min, std::min(b.leaders, b.pairs_triples));
    }
    EXPECT_GE(pcf::two_basic_weighted_sum(d, Rational(10)), pcf::pcf_sum_exact(d, Rational(10)));
  }
}

TEST(BoundSimple, Examples) {
  EXPECT_EQ(pcf::bound_simple(3, Rational(600)), Rational(3, 199));
  EXPECT_LE(Rational(1, 600), pcf::bound_simple(3, Rational(600)));
  EXPECT_LE(pcf::pcf_sum_exact(3, Rational(600)), pcf::bound_simple(3, Rational(600)));
  EXPECT_EQ(pcf::bound_simple(1, Rational(2)), Rational(2));
  EXPECT_EQ(pcf::bound_simple(10, Rational(100)), Rational(1, 900));
  EXPECT_LE(pcf::pcf_sum_exact(10, Rational(100)), pcf::bound_simple(10, Rational(100)));
  EXPECT_THROW(pcf::bound_simple(5, Rational(5)), pcf::HypothesisError);
}

TEST(BoundLower, Example) {
  const auto r = pcf::bound_lower_sum(params(100, Rational(80), Rational(4, 5), Rational(8, 25), 20));
  ASSERT_TRUE(r.bound.has_value());
  EXPECT_EQ(*r.bound, Rational(16000) * pcf::pow(Rational(9, 10), 20));
  EXPECT_NEAR(static_cast<double>(pcf::to_long_double(*r.bound)), 1945.226, 1e-3);
  EXPECT_LE(r.partial_sum, *r.bound);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_FALSE(r.beyond_threshold);
}

TEST(BoundLower, Rejects) {
  EXPECT_THROW(pcf::bound_lower_sum(params(100, Rational(80), Rational(4, 5), Rational(2, 5), 20)),
               pcf::HypothesisError);
  EXPECT_THROW(pcf::bound_lower_sum(params(50, Rational(40), Rational(4, 5), Rational(8, 25), 51)),
               pcf::HypothesisError);
  EXPECT_NO_THROW(pcf::lower_sum_unchecked(params(50, Rational(40), Rational(4, 5), Rational(8, 25), 51)));
}

TEST(BoundLower, TailBeyondThreshold) {
  const auto r = pcf::bound_lower_sum(params(200, Rational(160), Rational(4, 5), Rational(8, 25), 180));
  EXPECT_TRUE(r.beyond_threshold);
  EXPECT_NEAR(static_cast<double>(r.threshold), 3.5 * std::log(200.0) / std::log(1.6 / 1.44), 1e-9);
  EXPECT_EQ(r.tail_verdict, Verdict::pass);
  EXPECT_EQ(r.verdict, Verdict::pass);
}

TEST(BoundUpper, Examples) {
  const auto r = pcf::bound_upper_sum(params(100, Rational(80), Rational(4, 5), Rational(8, 25), 30));
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_LE(pcf::log_of(r.partial_sum), r.log_bound);
  EXPECT_NO_THROW(pcf::bound_upper_sum(params(50, Rational(40), Rational(4, 5), Rational(8, 25), 50)));
  EXPECT_THROW(pcf::bound_upper_sum(params(50, Rational(40), Rational(4, 5), Rational(8, 25), 51)),
               pcf::HypothesisError);
  EXPECT_THROW(pcf::bound_upper_sum(params(100, Rational(50), Rational(1, 2), Rational(1, 5), 30)),
               pcf::HypothesisError);
}

TEST(TermChecks, SingleTriple) {
  const auto r = pcf::single_triple_term_check(30, 10, Rational(30));
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_NEAR(static_cast<double>(pcf::to_long_double(r.lhs)), 1.0401e-10, 1e-13);
  EXPECT_NEAR(std::exp(static_cast<double>(r.log_rhs)), 5.2283e-6, 1e-9);
  EXPECT_THROW(pcf::single_triple_term_check(30, 11, Rational(30)), pcf::ParameterError);
}

TEST(TermChecks, PairsTriples) {
  for (int d = 10; d <= 40; ++d) {
    for (int i = d / 3 + 1; 2 * i <= d; ++i) {
      const int j = 3 * i - d;
      if (!(i > j && j > 0)) continue;
      EXPECT_EQ(pcf::pairs_triples_term_check(d, i, j, Rational(d)).verdict, Verdict::pass) << d << " " << i;
    }
  }
  EXPECT_THROW(pcf::pairs_triples_term_check(30, 12, 5, Rational(30)), pcf::ParameterError);
}

TEST(Clm1, SquaredComparison) {
  EXPECT_TRUE(pcf::sum_within_inv_sqrt(3, Rational(600), Rational(750)));
  EXPECT_TRUE(pcf::sum_within_inv_sqrt(4, Rational(750), Rational(750)));
  EXPECT_FALSE(pcf::sum_within_inv_sqrt(3, Rational(2), Rational(750)));
}

TEST(Clm1, FullRunAndRanges) {
  const auto r = pcf::verify_clm1(750, 600, 435);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.rows.size(), 433U);
  EXPECT_EQ(r.rows.front().d, 3);
  EXPECT_EQ(r.rows.back().d, 435);

  const auto small = pcf::verify_clm1(750, 600, 435, pcf::Clm1Range::small);
  EXPECT_EQ(small.rows.size(), 7U);
  EXPECT_TRUE(small.all_pass());
  const auto middle = pcf::verify_clm1(750, 600, 435, pcf::Clm1Range::middle);
  EXPECT_EQ(middle.rows.front().d, 10);
  EXPECT_EQ(middle.rows.back().d, 71);
  EXPECT_THROW(pcf::verify_clm1(700, 600, 435), pcf::HypothesisError);
  EXPECT_THROW(pcf::verify_clm1(750, 400, 435), pcf::HypothesisError);
}

TEST(Clm1, FloorRationalPower) {
  EXPECT_EQ(pcf::floor_rational_power(600, 19, 20), 435);
  EXPECT_EQ(pcf::floor_rational_power(750, 19, 20), 538);
  EXPECT_EQ(pcf::floor_rational_power(800, 19, 20), 572);
  EXPECT_EQ(pcf::floor_rational_power(600, 2, 3), 71);
  EXPECT_EQ(pcf::floor_rational_power(64, 1, 2), 8);
  EXPECT_EQ(pcf::floor_rational_power(63, 1, 2), 7);
}

TEST(FactorialBounds, Examples) {
  EXPECT_TRUE(pcf::factorial_bounds_check(1).all_pass());
  EXPECT_TRUE(pcf::factorial_bounds_check(5).all_pass());
  EXPECT_TRUE(pcf::factorial_bounds_check(1000).all_pass());
  EXPECT_THROW(pcf::factorial_bounds_check(0), pcf::ParameterError);
}
