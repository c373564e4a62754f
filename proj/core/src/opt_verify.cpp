#include "pcf/opt_verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "pcf/parallel.hpp"

namespace pcf {

namespace {

constexpr long double kE = std::numbers::e_v<long double>;
constexpr long double kInset = 1e-9L;
constexpr long double kTarget = 0.7524L;

void require_xy(long double x, long double y) {
  if (!in_xy_domain(x, y)) throw ParameterError("(x, y) outside 0 < x < 1/2, max(3x-1, 0) < y < x");
}

void require_st(long double s, long double t) {
  if (!in_st_domain(s, t)) throw ParameterError("(s, t) outside 0 < s < 1, 0 < t < min(s, (1-s)/2)");
}

// Maximum of -u log u over [lo, hi] (unimodal, peak at 1/e).
long double neg_xlogx_max(long double lo, long double hi) {
  const long double peak = 1.0L / kE;
  const long double u = hi <= peak ? hi : (lo >= peak ? lo : peak);
  return -u * std::log(u);
}

long double t_of_r(long double r) { return r * (2 - r) / (r + 2); }

// Largest t inside the domain for a given s.
long double t_ceiling(long double s) { return std::min(s, (1 - s) / 2); }

template <class Fn>
long double golden_max(Fn&& fn, long double lo, long double hi, int iterations) {
  const long double ratio = (std::sqrt(5.0L) - 1) / 2;
  long double a = lo, b = hi;
  long double c = b - ratio * (b - a), d = a + ratio * (b - a);
  long double fc = fn(c), fd = fn(d);
  for (int k = 0; k < iterations; ++k) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = fn(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = fn(c);
    }
  }
  return (a + b) / 2;
}

}  // namespace

bool in_xy_domain(long double x, long double y) {
  return x > 0 && x < 0.5L && y > std::max(3 * x - 1, 0.0L) && y < x;
}

bool in_st_domain(long double s, long double t) { return s > 0 && s < 1 && t > 0 && t < t_ceiling(s); }

long double log_f_xy(long double x, long double y) {
  require_xy(x, y);
  const long double u = x - y;
  const long double w = 1 - 3 * x + y;
  return std::log(u) - std::log(w) + (2 * x - y) * (std::log(w) - 1 - 2 * std::log(u)) +
         (x - y) * (std::log(w) - std::log(6.0L)) + y * (std::log(w) - std::log(2 * y));
}

long double f_xy(long double x, long double y) { return std::exp(log_f_xy(x, y)); }

long double log_g_st(long double s, long double t) {
  require_st(s, t);
  const long double u = s - t;
  const long double w = (1 - s) / 2 - t;
  return -u * std::log(u) + (s - 1) / 2 * std::log(2 * kE) + s * std::log(t) - t * std::log(3 * kE) -
         2 * t * std::log(t) - w * std::log(w);
}

long double g_st(long double s, long double t) { return std::exp(log_g_st(s, t)); }

long double h_r(long double r) {
  const long double m = r - 1;
  return (r + 2) * m * m * m * std::exp(r) + 6 * kE * r * (r - 2);
}

CriticalPoint find_critical(long double width) {
  CriticalPoint out;
  long double lo = 1.5L, hi = 2.0L;
  if (!(h_r(lo) < 0 && h_r(hi) > 0)) throw std::runtime_error("h does not change sign on [1.5, 2]");
  while (hi - lo > width) {
    const long double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    (h_r(mid) < 0 ? lo : hi) = mid;
    ++out.iterations;
  }
  out.r0 = {lo, hi};
  const long double t_lo = t_of_r(lo), t_hi = t_of_r(hi);
  out.t0 = {std::min(t_lo, t_hi), std::max(t_lo, t_hi)};
  const long double s_lo = lo * t_lo, s_hi = hi * t_hi;
  out.s0 = {std::min(s_lo, s_hi), std::max(s_lo, s_hi)};
  out.log_g_upper = log_g_box_upper(out.s0, out.t0);
  return out;
}

long double log_g_box_upper(const Bracket& s, const Bracket& t) {
  require_st(s.lo, t.hi);
  require_st(s.hi, t.lo);
  const long double u = neg_xlogx_max(s.lo - t.hi, s.hi - t.lo);
  const long double w = neg_xlogx_max((1 - s.hi) / 2 - t.hi, (1 - s.lo) / 2 - t.lo);
  const long double linear = (s.hi - 1) / 2 * std::log(2 * kE) - t.lo * std::log(3 * kE);
  // s log t: log t < 0, so the bound takes the smallest s and largest t.
  const long double s_log_t = s.lo * std::log(t.hi);
  const long double t_log_t = -2 * t.hi * std::log(t.lo);
  return u + linear + s_log_t + t_log_t + w;
}

Gradient grad_log_g(long double s, long double t) {
  require_st(s, t);
  const long double w = (1 - s) / 2 - t;
  Gradient g;
  g.ds = -std::log(s - t) + std::log(2.0L) / 2 + std::log(t) + std::log(w) / 2;
  g.dt = std::log(s - t) + s / t - std::log(3 * kE) - 2 * std::log(t) + std::log(w);
  return g;
}

Hessian hessian_log_g(long double s, long double t) {
  require_st(s, t);
  const long double u = s - t;
  const long double v = 1 - s - 2 * t;
  Hessian h;
  h.ss = -1 / u - 1 / (2 * v);
  h.st = 1 / u + 1 / t - 1 / v;
  h.tt = -1 / u - s / (t * t) - 2 / t - 2 / v;
  return h;
}

bool hessian_negdef(long double s, long double t) {
  const Hessian h = hessian_log_g(s, t);
  return h.ss < 0 && h.det() > 0;
}

long double gradient_fd_error(long double s, long double t) {
  const Gradient g = grad_log_g(s, t);
  const long double margin = std::min({t, s - t, (1 - s) / 2 - t});
  const long double h = 1e-5L * margin;
  const long double ds = (log_g_st(s + h, t) - log_g_st(s - h, t)) / (2 * h);
  const long double dt = (log_g_st(s, t + h) - log_g_st(s, t - h)) / (2 * h);
  auto rel = [](long double exact, long double approx) {
    return std::fabs(exact - approx) / std::max(1.0L, std::fabs(exact));
  };
  return std::max(rel(g.ds, ds), rel(g.dt, dt));
}

long double hessian_fd_error(long double s, long double t) {
  const Hessian hs = hessian_log_g(s, t);
  const long double margin = std::min({t, s - t, (1 - s) / 2 - t});
  const long double h = 1e-4L * margin;
  const long double f0 = log_g_st(s, t);
  const long double ss = (log_g_st(s + h, t) - 2 * f0 + log_g_st(s - h, t)) / (h * h);
  const long double tt = (log_g_st(s, t + h) - 2 * f0 + log_g_st(s, t - h)) / (h * h);
  const long double st = (log_g_st(s + h, t + h) - log_g_st(s + h, t - h) - log_g_st(s - h, t + h) +
                          log_g_st(s - h, t - h)) /
                         (4 * h * h);
  auto rel = [](long double exact, long double approx) {
    return std::fabs(exact - approx) / std::max(1.0L, std::fabs(exact));
  };
  return std::max({rel(hs.ss, ss), rel(hs.st, st), rel(hs.tt, tt)});
}

GridMax grid_max_g(long double step, int refine, int jobs) {
  if (!(step > 0 && step <= 1e-2L * (1 + 1e-12L))) throw ParameterError("grid step must lie in (0, 1e-2]");
  if (refine < 0) throw ParameterError("refine must be non-negative");
  struct RowBest {
    long double s = 0, t = 0, log_value = -INFINITY;
    std::size_t samples = 0;
  };
  const auto rows = static_cast<std::size_t>(std::floor((1 - 2 * kInset) / step)) + 1;
  std::vector<RowBest> best(rows);
  parallel_for(rows, jobs, [&](std::size_t k) {
    const long double s = kInset + static_cast<long double>(k) * step;
    RowBest& row = best[k];
    if (s >= 1 - kInset) return;
    const long double ceiling = t_ceiling(s) - kInset;
    for (long double t = kInset; t <= ceiling; t += step) {
      const long double value = log_g_st(s, t);
      ++row.samples;
      if (value > row.log_value) row = {s, t, value, row.samples};
    }
  });
  GridMax out;
  long double log_best = -INFINITY;
  for (const auto& row : best) {
    out.samples += row.samples;
    if (row.log_value > log_best) {
      log_best = row.log_value;
      out.s = row.s;
      out.t = row.t;
    }
  }
  out.grid_value = std::exp(log_best);
  // log g is strictly concave, so coordinate ascent from the best cell
  // converges toward the interior maximum.
  long double s = out.s, t = out.t;
  for (int round = 0; round < refine; ++round) {
    const long double s_lo = std::max(kInset, s - 2 * step);
    const long double s_hi = std::min(1 - kInset, s + 2 * step);
    s = golden_max(
        [&](long double x) { return in_st_domain(x, t) ? log_g_st(x, t) : -INFINITY; }, s_lo, s_hi, 80);
    const long double t_lo = std::max(kInset, t - 2 * step);
    const long double t_hi = std::min(t_ceiling(s) - kInset, t + 2 * step);
    t = golden_max(
        [&](long double y) { return in_st_domain(s, y) ? log_g_st(s, y) : -INFINITY; }, t_lo, t_hi, 80);
  }
  // Newton polish on the concave objective; steps are kept only if they
  // stay in the domain and do not decrease log g.
  for (int k = 0; k < 50 && refine > 0; ++k) {
    const Gradient gr = grad_log_g(s, t);
    const Hessian hs = hessian_log_g(s, t);
    const long double det = hs.det();
    if (!(hs.ss < 0 && det > 0)) break;
    const long double ns = s - (hs.tt * gr.ds - hs.st * gr.dt) / det;
    const long double nt = t - (hs.ss * gr.dt - hs.st * gr.ds) / det;
    if (!in_st_domain(ns, nt) || log_g_st(ns, nt) < log_g_st(s, t)) break;
    if (ns == s && nt == t) break;
    s = ns;
    t = nt;
  }
  const long double refined = log_g_st(s, t);
  if (refined >= log_best) {
    out.s = s;
    out.t = t;
    log_best = refined;
  }
  out.log_value = log_best;
  out.value = std::exp(log_best);
  if (out.value <= kTarget - 1e-6L) {
    out.verdict = Verdict::pass;
  } else if (out.value >= kTarget) {
    out.verdict = Verdict::fail;
  } else {
    out.verdict = Verdict::inconclusive;
  }
  return out;
}

bool CalculusReport::all_pass() const {
  if (min_failures != 0 || !limit_monotone) return false;
  return std::all_of(limit_rows.begin(), limit_rows.end(), [](const LimitRow& r) { return r.within; });
}

CalculusReport calculus_checks(std::uint64_t seed) {
  CalculusReport report;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<long double> point(0.0L, 50.0L);
  for (long double p : {0.1L, 0.5L, 0.9L}) {
    auto f = [p](long double x) { return x * std::pow(1 - p, x); };
    for (int k = 0; k < 200; ++k) {
      long double v[3] = {point(rng), point(rng), point(rng)};
      std::sort(v, v + 3);
      ++report.min_checks;
      const long double floor_value = std::min(f(v[0]), f(v[2]));
      if (f(v[1]) < floor_value * (1 - 1e-15L)) ++report.min_failures;
    }
  }
  long double previous_gap = INFINITY;
  report.limit_monotone = true;
  for (long double x : {1e3L, 1e4L, 1e5L, 1e6L}) {
    const long double lx = std::log(x);
    LimitRow row;
    row.x = x;
    row.value = std::exp(lx + x * std::log1p(-lx / x));
    row.tolerance = 2 * lx * lx / x;
    row.within = std::fabs(row.value - 1) <= row.tolerance;
    const long double gap = std::fabs(row.value - 1);
    if (gap >= previous_gap) report.limit_monotone = false;
    previous_gap = gap;
    report.limit_rows.push_back(row);
  }
  return report;
}

}  // namespace pcf
