#include <cmath>
#include <sstream>

#include "common.hpp"
#include "pcf/opt_verify.hpp"
#include "pcf/parallel.hpp"
#include "pcf/stirling.hpp"

namespace pcf::cli {

namespace {

struct StirlingOpts {
  std::string lemma, R, beta, eps, c, range = "full", csv, out;
  int dmax = 0;
  std::optional<int> dmin;
  int jobs = 0;
};

struct Row {
  int d = 0;
  Rational exact;
  std::string bound;
  Verdict verdict = Verdict::inconclusive;
};

Rational require_rational(const std::string& value, const char* flag, const std::string& lemma) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required for --lemma " + lemma);
  return parse_rational(value);
}

long require_integer(const std::string& value, const char* flag, const std::string& lemma) {
  const Rational q = require_rational(value, flag, lemma);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw UsageError(std::string(flag) + " must be an integer");
  return q.get_num().get_si();
}

Clm1Range parse_range(const std::string& s) {
  if (s == "full") return Clm1Range::full;
  if (s == "small") return Clm1Range::small;
  if (s == "middle") return Clm1Range::middle;
  return Clm1Range::large;
}

int run_stirling(const StirlingOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("stirling-check");
  rec["outputs"] = json::array();
  rec["lemma"] = o.lemma;
  const int jobs = jobs_from(o.jobs);
  std::vector<Row> rows;
  json extra;

  if (o.lemma == "clm1") {
    const long R = require_integer(o.R, "--R", o.lemma);
    const long beta = require_integer(o.beta, "--beta", o.lemma);
    const Clm1Report rep = verify_clm1(R, beta, o.dmax, parse_range(o.range), jobs);
    rec["R"] = R;
    rec["beta"] = beta;
    rec["range"] = std::string(to_string(rep.range));
    const std::string bound = format_real(1.0L / std::sqrt(static_cast<long double>(R)));
    for (const auto& r : rep.rows) rows.push_back({r.d, r.sum, bound, r.pass ? Verdict::pass : Verdict::fail});
  } else if (o.lemma == "lower" || o.lemma == "upper") {
    BoundParams base;
    base.R = require_rational(o.R, "--R", o.lemma);
    base.beta = require_rational(o.beta, "--beta", o.lemma);
    base.eps = require_rational(o.eps, "--eps", o.lemma);
    base.c = require_rational(o.c, "--c", o.lemma);
    const int lo = o.dmin.value_or(1);
    if (lo < 1 || lo > o.dmax) throw UsageError("--dmin must lie in [1, --dmax]");
    rows.resize(static_cast<std::size_t>(o.dmax - lo + 1));
    std::vector<PartialSumReport> reports(rows.size());
    const bool lower = o.lemma == "lower";
    parallel_for(rows.size(), jobs, [&](std::size_t k) {
      BoundParams p = base;
      p.d = lo + static_cast<int>(k);
      reports[k] = lower ? bound_lower_sum(p) : bound_upper_sum(p);
      Verdict v = reports[k].verdict;
      if (reports[k].beyond_threshold && reports[k].tail_verdict != Verdict::pass && v == Verdict::pass) {
        v = reports[k].tail_verdict;
      }
      rows[k] = {p.d, reports[k].partial_sum, format_exp(reports[k].log_bound), v};
    });
    int tail_checked = 0, tail_failures = 0;
    for (const auto& r : reports) {
      if (!r.beyond_threshold) continue;
      ++tail_checked;
      if (r.tail_verdict != Verdict::pass) ++tail_failures;
    }
    rec["R"] = rational_json(base.R);
    rec["beta"] = rational_json(base.beta);
    rec["eps"] = rational_json(base.eps);
    rec["c"] = rational_json(base.c);
    extra["tail_checked"] = tail_checked;
    extra["tail_failures"] = tail_failures;
  } else if (o.lemma == "simple" || o.lemma == "two-basic") {
    const Rational beta = o.beta.empty() && o.lemma == "two-basic" ? Rational(1)
                                                                  : require_rational(o.beta, "--beta", o.lemma);
    rec["beta"] = rational_json(beta);
    const int lo = o.dmin.value_or(1);
    if (lo < 1 || lo > o.dmax) throw UsageError("--dmin must lie in [1, --dmax]");
    rows.resize(static_cast<std::size_t>(o.dmax - lo + 1));
    const bool simple = o.lemma == "simple";
    parallel_for(rows.size(), jobs, [&](std::size_t k) {
      const int d = lo + static_cast<int>(k);
      const Rational exact = pcf_sum_exact(d, beta);
      Rational bound;
      bool ok = true;
      if (simple) {
        bound = bound_simple(d, beta);
      } else {
        bound = two_basic_weighted_sum(d, beta);
        for (int i = 1; i <= d / 2; ++i) ok = ok && bound_two_basic(d, i).min >= Rational(stirling_assoc(2, d, i));
      }
      ok = ok && exact <= bound;
      rows[k] = {d, exact, format_real(to_long_double(bound)), ok ? Verdict::pass : Verdict::fail};
    });
  } else {
    const FactorialReport rep = factorial_bounds_check(o.dmax);
    const int last = rep.first_failure.value_or(o.dmax);
    BigInt fact = 1;
    for (int n = 1; n <= last; ++n) {
      fact *= n;
      const long double log_hi = (n + 1) * std::log(static_cast<long double>(n)) - (n - 1);
      const Verdict v = rep.first_failure && *rep.first_failure == n ? Verdict::fail : Verdict::pass;
      rows.push_back({n, Rational(fact), format_exp(log_hi), v});
    }
  }

  int failures = 0, inconclusive = 0;
  std::optional<int> first_failure;
  for (const auto& r : rows) {
    if (r.verdict == Verdict::fail) {
      ++failures;
      if (!first_failure) first_failure = r.d;
    } else if (r.verdict != Verdict::pass) {
      ++inconclusive;
    }
  }
  if (!o.csv.empty()) {
    std::ostringstream csv;
    csv << "d,exact_sum_num,exact_sum_den,bound,verdict\n";
    for (const auto& r : rows) {
      csv << r.d << ',' << r.exact.get_num().get_str() << ',' << r.exact.get_den().get_str() << ',' << r.bound << ','
          << to_string(r.verdict) << '\n';
    }
    write_text(o.csv, csv.str());
    rec["outputs"].push_back(o.csv);
  }
  rec["rows"] = rows.size();
  if (!rows.empty()) rec["d_range"] = json::array({rows.front().d, rows.back().d});
  rec["failures"] = failures;
  rec["inconclusive"] = inconclusive;
  rec["first_failure"] = first_failure ? json(*first_failure) : json(nullptr);
  for (auto& [k, v] : extra.items()) rec[k] = v;
  rec["wall_ms"] = clock.ms();
  const Verdict verdict = failures > 0 ? Verdict::fail : inconclusive > 0 ? Verdict::inconclusive : Verdict::pass;
  return emit(ctx, rec, o.out, verdict);
}

struct OptOpts {
  double step = 1e-3;
  int refine = 8;
  int jobs = 0;
  std::string out;
};

json bracket_json(const Bracket& b) { return json::array({format_real(b.lo), format_real(b.hi)}); }

int run_opt(const OptOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("opt-check");
  const CriticalPoint cp = find_critical();
  rec["r0"] = bracket_json(cp.r0);
  rec["t0"] = bracket_json(cp.t0);
  rec["s0"] = bracket_json(cp.s0);
  rec["log_g_upper"] = format_real(cp.log_g_upper);
  rec["bisection_steps"] = cp.iterations;
  const long double s0 = cp.s0.mid(), t0 = cp.t0.mid();
  const Gradient gr = grad_log_g(s0, t0);
  rec["gradient_at_critical"] = json::array({format_real(gr.ds), format_real(gr.dt)});
  const bool negdef = hessian_negdef(s0, t0);
  rec["hessian_negdef_at_critical"] = negdef;
  const GridMax gm = grid_max_g(o.step, o.refine, jobs_from(o.jobs));
  rec["grid"] = {{"step", o.step},
                 {"refine", o.refine},
                 {"samples", gm.samples},
                 {"s", format_real(gm.s)},
                 {"t", format_real(gm.t)},
                 {"value", format_real(gm.value)},
                 {"grid_value", format_real(gm.grid_value)},
                 {"verdict", std::string(to_string(gm.verdict))}};
  const CalculusReport calc = calculus_checks();
  json limits = json::array();
  for (const auto& r : calc.limit_rows) {
    limits.push_back({{"x", format_real(r.x)}, {"value", format_real(r.value)}, {"within", r.within}});
  }
  rec["calculus"] = {{"min_checks", calc.min_checks},
                     {"min_failures", calc.min_failures},
                     {"limit", limits},
                     {"limit_monotone", calc.limit_monotone}};
  Verdict v = gm.verdict;
  if (!negdef || !calc.all_pass()) v = Verdict::fail;
  rec["wall_ms"] = clock.ms();
  return emit(ctx, rec, o.out, v);
}

}  // namespace

void register_bound_commands(CLI::App& app, Context& ctx) {
  add_command<StirlingOpts>(
      app, ctx, "stirling-check", "certify associated Stirling sums against their bounds",
      [](CLI::App* sub, StirlingOpts& o) {
        sub->add_option("--lemma", o.lemma)
            ->required()
            ->check(CLI::IsMember({"clm1", "lower", "upper", "simple", "two-basic", "knuth"}));
        sub->add_option("--R", o.R, "R (integer for clm1, rational otherwise)");
        sub->add_option("--beta", o.beta, "beta");
        sub->add_option("--eps", o.eps, "epsilon for lower/upper");
        sub->add_option("--c", o.c, "c for lower/upper");
        sub->add_option("--dmax", o.dmax, "largest d (n for knuth)")->required()->check(CLI::PositiveNumber);
        sub->add_option("--dmin", o.dmin, "smallest d for lower/upper/simple/two-basic");
        sub->add_option("--range", o.range, "clm1 window")
            ->check(CLI::IsMember({"full", "small", "middle", "large"}))
            ->capture_default_str();
        sub->add_option("--csv", o.csv, "per-d CSV output file");
        sub->add_option("--jobs", o.jobs, "worker threads");
        sub->add_option("--out", o.out, "write the JSON record here");
      },
      run_stirling);

  add_command<OptOpts>(
      app, ctx, "opt-check", "certify the critical point and the maximum of g",
      [](CLI::App* sub, OptOpts& o) {
        sub->add_option("--step", o.step, "grid step in (0, 1e-2]")->capture_default_str();
        sub->add_option("--refine", o.refine, "refinement rounds")->capture_default_str();
        sub->add_option("--jobs", o.jobs, "worker threads");
        sub->add_option("--out", o.out, "write the JSON record here");
      },
      run_opt);
}

}  // namespace pcf::cli
