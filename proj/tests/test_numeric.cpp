#include <gtest/gtest.h>

#include <cmath>

#include "pcf/numeric.hpp"

using pcf::BigInt;
using pcf::Rational;

TEST(ParseRational, Fractions) {
  EXPECT_EQ(pcf::parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(pcf::parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(pcf::parse_rational(" 7 "), Rational(7));
}

TEST(ParseRational, Decimals) {
  EXPECT_EQ(pcf::parse_rational("0.6550826"), Rational(3275413, 5000000));
  EXPECT_EQ(pcf::parse_rational("-1.5e3"), Rational(-1500));
  EXPECT_EQ(pcf::parse_rational("2.5E-1"), Rational(1, 4));
  EXPECT_EQ(pcf::parse_rational(".5"), Rational(1, 2));
}

TEST(ParseRational, Rejects) {
  EXPECT_THROW(pcf::parse_rational(""), pcf::ParameterError);
  EXPECT_THROW(pcf::parse_rational("1/0"), pcf::ParameterError);
  EXPECT_THROW(pcf::parse_rational("abc"), pcf::ParameterError);
  EXPECT_THROW(pcf::parse_rational("1.2.3"), pcf::ParameterError);
  EXPECT_THROW(pcf::parse_rational("."), pcf::ParameterError);
}

TEST(Numeric, PowBinomialFactorial) {
  EXPECT_EQ(pcf::pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(pcf::pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(pcf::pow(Rational(5), 0), Rational(1));
  EXPECT_THROW(pcf::pow(Rational(0), -1), pcf::ParameterError);
  EXPECT_EQ(pcf::binomial(6, 3), 20);
  EXPECT_EQ(pcf::binomial(3, 6), 0);
  EXPECT_EQ(pcf::factorial(10), 3628800);
}

TEST(Numeric, FloorCeil) {
  EXPECT_EQ(pcf::floor(Rational(7, 2)), 3);
  EXPECT_EQ(pcf::ceil(Rational(7, 2)), 4);
  EXPECT_EQ(pcf::floor(Rational(-7, 2)), -4);
  EXPECT_EQ(pcf::ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(pcf::ceil(Rational(4)), 4);
}

TEST(Numeric, LogOfHugeValues) {
  const BigInt big = pcf::pow(BigInt(10), 5000);
  EXPECT_NEAR(static_cast<double>(pcf::log_of(big)), 5000 * std::log(10.0), 1e-9);
  EXPECT_NEAR(static_cast<double>(pcf::log_of(Rational(1, 3))), std::log(1.0 / 3), 1e-15);
  EXPECT_THROW(pcf::log_of(BigInt(0)), pcf::ParameterError);
  EXPECT_NEAR(static_cast<double>(pcf::to_long_double(Rational(-3, 8))), -0.375, 1e-15);
}

TEST(Numeric, CeilPlusSqrtMatchesLinearScan) {
  for (int p = -6; p <= 6; ++p) {
    for (int q = 1; q <= 4; ++q) {
      for (int r = 0; r <= 60; r += 3) {
        const Rational offset(p, q);
        const Rational radicand(r, q);
        BigInt expect = -10;
        for (;; ++expect) {
          const Rational gap = Rational(expect) - offset;
          if (gap >= 0 && gap * gap >= radicand) break;
        }
        EXPECT_EQ(pcf::ceil_plus_sqrt(offset, radicand), expect) << p << "/" << q << " " << r;
      }
    }
  }
  // ceil(750 + 600 + sqrt(750)) with sqrt(750) = 27.386...
  EXPECT_EQ(pcf::ceil_plus_sqrt(Rational(1350), Rational(750)), 1378);
  EXPECT_EQ(pcf::ceil_plus_sqrt(Rational(0), Rational(49)), 7);
  EXPECT_THROW(pcf::ceil_plus_sqrt(Rational(0), Rational(-1)), pcf::ParameterError);
}

TEST(Numeric, CompareLe) {
  EXPECT_EQ(pcf::compare_le(Rational(1, 2), std::log(1.0L)), pcf::Verdict::pass);
  EXPECT_EQ(pcf::compare_le(Rational(2), std::log(1.0L)), pcf::Verdict::fail);
  EXPECT_EQ(pcf::compare_le(Rational(1), std::log(1.0L)), pcf::Verdict::inconclusive);
  EXPECT_EQ(pcf::compare_le(Rational(0), -1000.0L), pcf::Verdict::pass);
}

TEST(Numeric, VerdictNames) {
  EXPECT_EQ(pcf::to_string(pcf::Verdict::pass), "pass");
  EXPECT_EQ(pcf::to_string(pcf::Verdict::premise_not_met), "premise-not-met");
}
