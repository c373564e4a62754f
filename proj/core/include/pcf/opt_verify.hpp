#pragma once

#include <cstdint>
#include <vector>

#include "pcf/numeric.hpp"

namespace pcf {

/// 0 < x < 1/2 and max(3x - 1, 0) < y < x.
bool in_xy_domain(long double x, long double y);
/// 0 < s < 1 and 0 < t < min(s, (1 - s)/2).
bool in_st_domain(long double s, long double t);

/// f(x, y) = ((x-y)/(1-3x+y)) ((1-3x+y)/(e (x-y)^2))^(2x-y)
///           ((1-3x+y)/6)^(x-y) ((1-3x+y)/(2y))^y,
/// evaluated in log-space. Throws ParameterError outside the domain.
long double log_f_xy(long double x, long double y);
long double f_xy(long double x, long double y);

/// g(s, t) = f(x, y) with s = 1 - 2x, t = x - y, from its simplified
/// product form. Throws ParameterError outside the domain.
long double log_g_st(long double s, long double t);
long double g_st(long double s, long double t);

/// h(r) = (r+2)(r-1)^3 e^r + 6e r (r-2).
long double h_r(long double r);

struct Bracket {
  long double lo = 0.0L;
  long double hi = 0.0L;
  long double width() const { return hi - lo; }
  long double mid() const { return (lo + hi) / 2; }
};

struct CriticalPoint {
  Bracket r0;
  Bracket t0;
  Bracket s0;
  /// Upper bound on log g over the box s0 x t0.
  long double log_g_upper = 0.0L;
  int iterations = 0;
};

/// Bisects h on [1.5, 2] until the bracket is at most `width` wide, then
/// maps r to t = r(2-r)/(r+2) and s = r t. Throws std::runtime_error if h
/// does not change sign on the initial bracket.
CriticalPoint find_critical(long double width = 1e-12L);

/// Term-wise upper bound on log g(s, t) for (s, t) in the box, using the
/// monotonicity of each term of the log expansion.
long double log_g_box_upper(const Bracket& s, const Bracket& t);

struct Gradient {
  long double ds = 0.0L;
  long double dt = 0.0L;
};

struct Hessian {
  long double ss = 0.0L;
  long double st = 0.0L;
  long double tt = 0.0L;
  long double det() const { return ss * tt - st * st; }
};

/// Closed-form partial derivatives of log g.
Gradient grad_log_g(long double s, long double t);
Hessian hessian_log_g(long double s, long double t);
bool hessian_negdef(long double s, long double t);

/// Largest |closed form - central difference| / max(1, |closed form|) over
/// the components, for the gradient and the Hessian respectively.
long double gradient_fd_error(long double s, long double t);
long double hessian_fd_error(long double s, long double t);

struct GridMax {
  long double s = 0.0L;
  long double t = 0.0L;
  long double value = 0.0L;
  long double log_value = 0.0L;
  /// Best raw grid value before refinement.
  long double grid_value = 0.0L;
  std::size_t samples = 0;
  /// value <= 0.7524 - 1e-6 passes, value >= 0.7524 fails.
  Verdict verdict = Verdict::inconclusive;
};

/// Samples g on the domain (inset 1e-9 from the boundary) at the given
/// step, then runs `refine` rounds of golden-section coordinate ascent
/// around the best sample. Requires 0 < step <= 1e-2.
GridMax grid_max_g(long double step, int refine = 8, int jobs = 0);

struct LimitRow {
  long double x = 0.0L;
  long double value = 0.0L;
  long double tolerance = 0.0L;
  bool within = false;
};

struct CalculusReport {
  int min_checks = 0;
  int min_failures = 0;
  std::vector<LimitRow> limit_rows;
  bool limit_monotone = false;
  bool all_pass() const;
};

/// (i) f(x) = x (1-p)^x satisfies f(x) >= min(f(a), f(b)) for a <= x <= b
/// on 200 random triples per p in {0.1, 0.5, 0.9}; (ii) x (1 - log x / x)^x
/// approaches 1 monotonically, within 2 log^2 x / x, at x = 1e3..1e6.
CalculusReport calculus_checks(std::uint64_t seed = 1);

}  // namespace pcf
