#include "pcf/stirling.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numbers>

#include "pcf/parallel.hpp"

namespace pcf {

namespace {

constexpr long double kE = std::numbers::e_v<long double>;

void require(bool condition, const char* hypothesis) {
  if (!condition) throw HypothesisError(std::string("hypothesis failed: ") + hypothesis);
}

// sum_{i=lo}^{hi} S_2(d, i) beta^{i-d+1}, exact. Assumes hi <= d - 1.
Rational weighted_stirling_sum(int d, int lo, int hi, const Rational& beta, int min_part = 2) {
  if (lo < 1) lo = 1;
  if (hi < lo) return Rational(0);
  const auto& row = stirling_table(min_part).row(d);
  const BigInt p = beta.get_num();
  const BigInt q = beta.get_den();
  // beta^{i-d+1} = p^i q^{d-1-i} / p^{d-1}
  BigInt numerator = 0;
  BigInt p_pow = pow(p, static_cast<unsigned long>(lo));
  for (int i = lo; i <= hi; ++i) {
    numerator += row[static_cast<std::size_t>(i)] * p_pow * pow(q, static_cast<unsigned long>(d - 1 - i));
    p_pow *= p;
  }
  Rational out(numerator, pow(p, static_cast<unsigned long>(d - 1)));
  out.canonicalize();
  return out;
}

BigInt matching_count(int pairs) {
  // (2j)! / (j! 2^j)
  return factorial(static_cast<unsigned long>(2 * pairs)) /
         (factorial(static_cast<unsigned long>(pairs)) * pow(BigInt(2), static_cast<unsigned long>(pairs)));
}

BigInt triple_count(int triples) {
  // (3m)! / (m! 6^m)
  return factorial(static_cast<unsigned long>(3 * triples)) /
         (factorial(static_cast<unsigned long>(triples)) * pow(BigInt(6), static_cast<unsigned long>(triples)));
}

long double log_sum_exp(long double a, long double b) {
  const long double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

long double ld(const Rational& value) { return to_long_double(value); }

// 4 sum^2 R <= 1, i.e. sum <= R^{-1/2} / 2.
Verdict half_inv_sqrt_verdict(const Rational& sum, const Rational& R) {
  return 4 * sum * sum * R <= 1 ? Verdict::pass : Verdict::fail;
}

}  // namespace

StirlingTable::StirlingTable(int t) : t_(t) {
  if (t < 1) throw ParameterError("Stirling parameter t must be at least 1");
  rows_.push_back({BigInt(1)});
}

int StirlingTable::max_d() const {
  std::lock_guard lock(mutex_);
  return static_cast<int>(rows_.size()) - 1;
}

void StirlingTable::ensure(int d) const {
  if (d < 0) throw ParameterError("negative d");
  std::lock_guard lock(mutex_);
  const BigInt zero;
  for (int n = static_cast<int>(rows_.size()); n <= d; ++n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n / t_) + 1);
    const BigInt choose = binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(t_ - 1));
    const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
    for (int i = 1; i <= n / t_; ++i) {
      BigInt value = 0;
      if (static_cast<std::size_t>(i) < prev.size()) value += i * prev[static_cast<std::size_t>(i)];
      if (n - t_ >= 0) {
        const auto& back = rows_[static_cast<std::size_t>(n - t_)];
        if (static_cast<std::size_t>(i - 1) < back.size()) value += choose * back[static_cast<std::size_t>(i - 1)];
      }
      row[static_cast<std::size_t>(i)] = std::move(value);
    }
    rows_.push_back(std::move(row));
  }
}

const std::vector<BigInt>& StirlingTable::row(int d) const {
  ensure(d);
  std::lock_guard lock(mutex_);
  return rows_[static_cast<std::size_t>(d)];
}

BigInt StirlingTable::operator()(int d, int i) const {
  if (i < 0) throw ParameterError("negative block count");
  const auto& r = row(d);
  return static_cast<std::size_t>(i) < r.size() ? r[static_cast<std::size_t>(i)] : BigInt(0);
}

const StirlingTable& stirling_table(int t) {
  static std::mutex registry_mutex;
  static std::map<int, std::unique_ptr<StirlingTable>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[t];
  if (!slot) slot = std::make_unique<StirlingTable>(t);
  return *slot;
}

BigInt stirling_assoc(int t, int d, int i) { return stirling_table(t)(d, i); }

std::vector<BigInt> brute_force_stirling_row(int t, int d) {
  if (t < 1) throw ParameterError("t must be at least 1");
  if (d < 0 || d > 12) throw ParameterError("brute-force Stirling enumeration is limited to 0 <= d <= 12");
  std::vector<std::uint64_t> histogram(static_cast<std::size_t>(d) + 1, 0);
  std::vector<int> sizes(static_cast<std::size_t>(d) + 1, 0);
  // Restricted growth strings: element `pos` joins one of the `blocks`
  // existing blocks or opens a new one.
  auto walk = [&](auto&& self, int pos, int blocks) -> void {
    if (pos == d) {
      for (int b = 0; b < blocks; ++b) {
        if (sizes[static_cast<std::size_t>(b)] < t) return;
      }
      ++histogram[static_cast<std::size_t>(blocks)];
      return;
    }
    for (int b = 0; b < blocks; ++b) {
      ++sizes[static_cast<std::size_t>(b)];
      self(self, pos + 1, blocks);
      --sizes[static_cast<std::size_t>(b)];
    }
    sizes[static_cast<std::size_t>(blocks)] = 1;
    self(self, pos + 1, blocks + 1);
    sizes[static_cast<std::size_t>(blocks)] = 0;
  };
  walk(walk, 0, 0);
  std::vector<BigInt> out;
  for (auto count : histogram) out.emplace_back(static_cast<unsigned long>(count));
  return out;
}

BigInt brute_force_stirling(int t, int d, int i) {
  auto row = brute_force_stirling_row(t, d);
  if (i < 0) throw ParameterError("negative block count");
  return static_cast<std::size_t>(i) < row.size() ? row[static_cast<std::size_t>(i)] : BigInt(0);
}

Rational pcf_sum_exact(int d, const Rational& beta, int min_part) {
  if (d < 1) throw ParameterError("d must be positive");
  if (beta <= 0) throw ParameterError("beta must be positive");
  if (min_part < 1) throw ParameterError("part size bound must be positive");
  const int top = d / min_part;
  Rational sum = weighted_stirling_sum(d, 1, std::min(top, d - 1), beta, min_part);
  // Only min_part == 1 reaches i = d (all singletons), weight beta.
  if (top == d) sum += beta;
  return sum;
}

TwoBasicBounds bound_two_basic(int d, int i) {
  if (i < 1 || 2 * i > d) throw ParameterError("two basic bounds need 1 <= i <= floor(d/2)");
  const auto ud = static_cast<unsigned long>(d);
  const auto ui = static_cast<unsigned long>(i);
  TwoBasicBounds out;
  out.leaders = Rational(binomial(ud, ui) * pow(BigInt(i), ud - ui), pow(BigInt(2), ui));
  out.leaders.canonicalize();
  BigInt second = 0;
  if (d % 2 == 0) second += matching_count(d / 2);
  for (int j = std::max(3 * i - d, 0); j <= i - 1; ++j) {
    const int m = i - j;
    const int rest = d - 2 * j - 3 * m;
    second += binomial(ud, static_cast<unsigned long>(2 * j)) * matching_count(j) *
              binomial(static_cast<unsigned long>(d - 2 * j), static_cast<unsigned long>(3 * m)) * triple_count(m) *
              pow(BigInt(m), static_cast<unsigned long>(rest));
  }
  out.pairs_triples = Rational(second);
  out.min = out.leaders < out.pairs_triples ? out.leaders : out.pairs_triples;
  return out;
}

Rational two_basic_weighted_sum(int d, const Rational& beta) {
  if (beta <= 0) throw ParameterError("beta must be positive");
  Rational sum = 0;
  for (int i = 1; 2 * i <= d; ++i) sum += bound_two_basic(d, i).min * pow(beta, i - d + 1);
  return sum;
}

Rational bound_simple(int d, const Rational& beta) {
  if (d < 1) throw ParameterError("d must be positive");
  require(Rational(d) < beta, "d < beta");
  const Rational ratio = Rational(d) / beta;
  return beta * pow(ratio, (d + 1) / 2) / (1 - ratio);
}

PartialSumReport lower_sum_unchecked(const BoundParams& p) {
  PartialSumReport out;
  // i ranges over integers with 1 <= i <= c d.
  const int top = static_cast<int>(pcf::floor(Rational(p.c * p.d)).get_si());
  out.partial_sum = weighted_stirling_sum(p.d, 1, std::min(top, p.d / 2), p.beta);
  const Rational base = Rational(1, 2) + p.c / p.eps;
  Rational bound = Rational(p.d * p.d) * p.beta / 2 * pow(base, p.d);
  out.log_bound = log_of(bound);
  out.verdict = out.partial_sum <= bound ? Verdict::pass : Verdict::fail;
  out.bound = std::move(bound);
  const long double ratio = ld(2 * p.eps / (p.eps + 2 * p.c));
  out.threshold = ratio > 1 ? 3.5L * log_of(p.R) / std::log(ratio) : std::numeric_limits<long double>::infinity();
  out.beyond_threshold = static_cast<long double>(p.d) >= out.threshold;
  if (out.beyond_threshold) out.tail_verdict = half_inv_sqrt_verdict(out.partial_sum, p.R);
  return out;
}

PartialSumReport bound_lower_sum(const BoundParams& p) {
  require(p.d >= 1, "d >= 1");
  require(Rational(p.d) <= p.R, "d <= R");
  require(p.eps > 0 && p.eps < 1, "0 < eps < 1");
  require(p.c > 0 && 2 * p.c < p.eps, "0 < c < eps/2");
  require(p.eps * p.R <= p.beta && p.beta <= p.R, "eps R <= beta <= R");
  return lower_sum_unchecked(p);
}

PartialSumReport upper_sum_unchecked(const BoundParams& p) {
  PartialSumReport out;
  const int bottom = static_cast<int>(pcf::ceil(Rational(p.c * p.d)).get_si());
  out.partial_sum = weighted_stirling_sum(p.d, std::max(bottom, 1), p.d / 2, p.beta);
  const long double log_r = log_of(p.R);
  const long double log_eps = log_of(p.eps);
  const long double one_minus_c = ld(1 - p.c);
  const long double d = p.d;
  const long double first = 3.0L * log_r - std::log(4.0L) + d * std::log(0.9126L);
  const long double second = 4.0L * std::log(d) - std::log(4.0L) + d * (-one_minus_c * log_eps + std::log(0.7524L));
  out.log_bound = log_sum_exp(first, second);
  out.verdict = compare_le(out.partial_sum, out.log_bound);
  const long double gap = one_minus_c * log_eps - std::log(0.7524L);
  const long double a = gap > 0 ? 4.5L * log_r / gap : std::numeric_limits<long double>::infinity();
  const long double b = 3.5L * log_r / std::log(1.09577L);
  out.threshold = std::max(a, b);
  out.beyond_threshold = d >= out.threshold;
  if (out.beyond_threshold) out.tail_verdict = half_inv_sqrt_verdict(out.partial_sum, p.R);
  return out;
}

PartialSumReport bound_upper_sum(const BoundParams& p) {
  require(p.d >= 1, "d >= 1");
  require(Rational(p.d) <= p.R, "d <= R");
  require(p.R >= 50, "R >= 50");
  require(p.eps >= Rational(3, 5) && p.eps < 1, "0.6 <= eps < 1");
  require(p.c >= Rational(3, 10) && 2 * p.c < p.eps, "0.3 <= c < eps/2");
  require(p.eps * p.R <= p.beta && p.beta <= p.R, "eps R <= beta <= R");
  return upper_sum_unchecked(p);
}

TermCheck single_triple_term_check(int d, int i, const Rational& beta) {
  if (i < 1 || 3 * i > d) throw ParameterError("need 1 <= i <= d/3");
  if (beta <= 0) throw ParameterError("beta must be positive");
  TermCheck out;
  const auto ud = static_cast<unsigned long>(d);
  out.lhs = Rational(binomial(ud, static_cast<unsigned long>(3 * i)) * triple_count(i) *
                     pow(BigInt(i), static_cast<unsigned long>(d - 3 * i))) *
            pow(beta, i - d + 1);
  const long double log_beta = log_of(beta);
  const long double log_d = std::log(static_cast<long double>(d));
  out.log_rhs = log_beta + log_d - 1.0L + (d - i) * (log_d - log_beta) + d * std::log(0.549474L);
  out.verdict = compare_le(out.lhs, out.log_rhs);
  return out;
}

TermCheck pairs_triples_term_check(int d, int i, int j, const Rational& beta) {
  if (!(i > j && j > 0)) throw ParameterError("need i > j > 0");
  if (d - 3 * i + j != 0) throw ParameterError("need d - 3i + j = 0");
  require(beta >= Rational(3, 5) * d, "beta >= 0.6 d");
  TermCheck out;
  const int m = i - j;
  out.lhs = Rational(binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(2 * j)) * matching_count(j) *
                     binomial(static_cast<unsigned long>(d - 2 * j), static_cast<unsigned long>(3 * m)) *
                     triple_count(m)) *
            pow(beta, i - d + 1);
  out.log_rhs = std::log(static_cast<long double>(d)) + log_of(beta) - 1.0L + d * std::log(0.9126L);
  out.verdict = compare_le(out.lhs, out.log_rhs);
  return out;
}

bool sum_within_inv_sqrt(int d, const Rational& beta, const Rational& R) {
  if (R <= 0) throw ParameterError("R must be positive");
  const Rational sum = pcf_sum_exact(d, beta);
  return sum * sum * R <= 1;
}

std::string_view to_string(Clm1Range range) {
  switch (range) {
    case Clm1Range::full:
      return "clm1";
    case Clm1Range::small:
      return "clm0";
    case Clm1Range::middle:
      return "clm1a";
    case Clm1Range::large:
      return "clm1b";
  }
  return "unknown";
}

long floor_rational_power(long beta, unsigned long p, unsigned long q) {
  if (beta < 0 || q == 0) throw ParameterError("floor_rational_power needs beta >= 0, q > 0");
  const BigInt target = pow(BigInt(beta), p);
  BigInt root;
  mpz_root(root.get_mpz_t(), target.get_mpz_t(), q);
  while (pow(BigInt(root + 1), q) <= target) ++root;
  while (root > 0 && pow(root, q) > target) --root;
  return root.get_si();
}

Clm1Report verify_clm1(long R, long beta, int d_max, Clm1Range range, int jobs) {
  if (R <= 0 || beta <= 0) throw ParameterError("R and beta must be positive integers");
  const bool ratio = 5 * beta >= 3 * R;
  Clm1Report report;
  report.range = range;
  report.R = R;
  report.beta = beta;
  switch (range) {
    case Clm1Range::full:
      require(ratio, "beta >= 0.6 R");
      require(3 * R >= 70, "0.6 R >= 14");
      require(beta >= 600, "beta >= 600");
      require(R >= 750, "R >= 750");
      report.d_lo = 3;
      report.d_hi = static_cast<int>(floor_rational_power(beta, 19, 20));
      break;
    case Clm1Range::small:
      require(ratio, "beta >= 0.6 R");
      require(R >= 750, "R >= 750");
      report.d_lo = 3;
      report.d_hi = 9;
      break;
    case Clm1Range::middle:
      require(ratio, "beta >= 0.6 R");
      require(3 * R >= 70, "0.6 R >= 14");
      report.d_lo = 10;
      report.d_hi = static_cast<int>(floor_rational_power(beta, 2, 3));
      break;
    case Clm1Range::large: {
      require(ratio && beta >= 600, "beta >= max(0.6 R, 600)");
      require(R >= 750, "R >= 750");
      long lo = floor_rational_power(beta, 2, 3);
      if (lo * lo * lo < beta * beta) ++lo;
      report.d_lo = static_cast<int>(lo);
      report.d_hi = static_cast<int>(floor_rational_power(beta, 19, 20));
      break;
    }
  }
  report.d_hi = std::min(report.d_hi, d_max);
  if (report.d_hi < report.d_lo) return report;
  stirling_table(2).ensure(report.d_hi);
  report.rows.resize(static_cast<std::size_t>(report.d_hi - report.d_lo + 1));
  const Rational b(beta);
  const Rational r(R);
  parallel_for(report.rows.size(), jobs, [&](std::size_t k) {
    Clm1Row& row = report.rows[k];
    row.d = report.d_lo + static_cast<int>(k);
    row.sum = pcf_sum_exact(row.d, b);
    row.pass = row.sum * row.sum * r <= 1;
  });
  for (const auto& row : report.rows) {
    if (!row.pass) {
      report.first_failure = row.d;
      break;
    }
  }
  return report;
}

FactorialReport factorial_bounds_check(int n_max) {
  if (n_max < 1) throw ParameterError("n_max must be at least 1");
  // e_lo = sum_{k<=K} 1/k!, and e <= e_lo + 1/(K! K).
  constexpr unsigned long kTerms = 40;
  Rational e_lo = 0;
  for (unsigned long k = 0; k <= kTerms; ++k) e_lo += Rational(BigInt(1), factorial(k));
  Rational e_hi = e_lo + Rational(BigInt(1), factorial(kTerms) * kTerms);
  e_lo.canonicalize();
  e_hi.canonicalize();
  FactorialReport report;
  report.n_max = n_max;
  BigInt fact = 1;
  BigInt lo_num_pow = 1, lo_den_pow = 1, hi_num_pow = 1, hi_den_pow = 1;
  for (int n = 1; n <= n_max; ++n) {
    fact *= n;
    if (n > 1) {
      lo_num_pow *= e_lo.get_num();
      lo_den_pow *= e_lo.get_den();
      hi_num_pow *= e_hi.get_num();
      hi_den_pow *= e_hi.get_den();
    }
    const BigInt n_pow = pow(BigInt(n), static_cast<unsigned long>(n));
    // n^n <= n! e_lo^(n-1) <= n! e^(n-1)
    const bool lower = n_pow * lo_den_pow <= fact * lo_num_pow;
    // n! e^(n-1) <= n! e_hi^(n-1) <= n^(n+1)
    const bool upper = fact * hi_num_pow <= n_pow * n * hi_den_pow;
    if (!(lower && upper)) {
      report.first_failure = n;
      break;
    }
  }
  return report;
}

}  // namespace pcf
