#include "pcf/numeric.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace pcf {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::premise_not_met:
      return "premise-not-met";
  }
  return "unknown";
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParameterError("not a number: '" + std::string(whole) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParameterError("not a number: '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw ParameterError("zero denominator in '" + std::string(whole) + "'");
    result = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      BigInt magnitude = parse_integer(exp_text, whole);
      if (!magnitude.fits_slong_p()) throw ParameterError("exponent too large in '" + std::string(whole) + "'");
      exponent = magnitude.get_si() * (exp_negative ? -1 : 1);
      text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
      exponent -= static_cast<long>(text.size() - dot - 1);
      if (dot == 0 && text.size() == 1) digits.clear();
    } else {
      digits = std::string(text);
    }
    result = Rational(parse_integer(digits, whole));
    result *= pow(Rational(10), exponent);
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    const auto e = static_cast<unsigned long>(exponent);
    Rational out(pow(BigInt(base.get_num()), e), pow(BigInt(base.get_den()), e));
    out.canonicalize();
    return out;
  }
  if (base == 0) throw ParameterError("zero raised to a negative power");
  const auto e = static_cast<unsigned long>(-exponent);
  Rational out(pow(BigInt(base.get_den()), e), pow(BigInt(base.get_num()), e));
  out.canonicalize();
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

long double log_of(const BigInt& value) {
  if (value <= 0) throw ParameterError("log of a non-positive value");
  // Keep the top 64 bits so the mantissa survives the long double conversion.
  const auto bits = static_cast<long>(mpz_sizeinbase(value.get_mpz_t(), 2));
  long shift = bits > 64 ? bits - 64 : 0;
  BigInt top = value >> static_cast<mp_bitcnt_t>(shift);
  long double mantissa = 0.0L;
  // top < 2^64; assemble from two 32-bit limbs to stay portable.
  BigInt high = top >> 32;
  BigInt low = top - (high << 32);
  mantissa = static_cast<long double>(high.get_ui()) * 4294967296.0L + static_cast<long double>(low.get_ui());
  return std::log(mantissa) + static_cast<long double>(shift) * std::numbers::ln2_v<long double>;
}

long double log_of(const Rational& value) {
  if (value <= 0) throw ParameterError("log of a non-positive value");
  return log_of(BigInt(value.get_num())) - log_of(BigInt(value.get_den()));
}

long double to_long_double(const Rational& value) {
  if (value == 0) return 0.0L;
  const long double magnitude = std::exp(log_of(Rational(abs(value))));
  return value < 0 ? -magnitude : magnitude;
}

BigInt floor(const Rational& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt ceil(const Rational& value) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt ceil_plus_sqrt(const Rational& offset, const Rational& radicand) {
  if (radicand < 0) throw ParameterError("negative radicand");
  // sqrt(radicand) lies in [s, s + 1) where s = isqrt(floor(radicand)).
  BigInt s;
  BigInt whole = floor(radicand);
  mpz_sqrt(s.get_mpz_t(), whole.get_mpz_t());
  auto admissible = [&](const BigInt& a) {
    Rational gap = Rational(a) - offset;
    return gap >= 0 && gap * gap >= radicand;
  };
  BigInt candidate = pcf::ceil(Rational(offset + Rational(s)));
  while (!admissible(candidate)) ++candidate;
  while (admissible(BigInt(candidate - 1))) --candidate;
  return candidate;
}

Verdict compare_le(const Rational& exact, long double log_bound, long double relative_margin) {
  if (exact <= 0) return Verdict::pass;
  const long double lhs = log_of(exact);
  if (lhs <= log_bound + std::log1p(-relative_margin)) return Verdict::pass;
  if (lhs > log_bound + std::log1p(relative_margin)) return Verdict::fail;
  return Verdict::inconclusive;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace pcf
