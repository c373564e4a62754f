#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcf {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Outcome of a certification. `inconclusive` is reported whenever a
/// floating-point comparison lands inside its rounding margin, or an
/// exhaustive search ran out of budget.
enum class Verdict { pass, fail, inconclusive, premise_not_met };

std::string_view to_string(Verdict v);

/// Invalid arguments to a constructor, generator or operation.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A stated hypothesis of a bound or theorem does not hold for the input.
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parses "p/q", integers and finite decimals ("0.6550826", "-1.5e3") exactly.
Rational parse_rational(std::string_view text);

/// base^exponent for any integer exponent; base must be non-zero when
/// exponent < 0.
Rational pow(const Rational& base, long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// Natural log of a positive value, accurate to long double precision even
/// when the value is far outside the double exponent range.
long double log_of(const BigInt& value);
long double log_of(const Rational& value);

long double to_long_double(const Rational& value);

/// Smallest integer >= value.
BigInt ceil(const Rational& value);
BigInt floor(const Rational& value);

/// Exact ceil(offset + sqrt(radicand)) for rational offset and radicand >= 0.
BigInt ceil_plus_sqrt(const Rational& offset, const Rational& radicand);

/// Compares an exact non-negative value against a positive bound known only
/// through its natural log, with a relative rounding margin.
Verdict compare_le(const Rational& exact, long double log_bound,
                   long double relative_margin = 1e-9L);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

}  // namespace pcf
