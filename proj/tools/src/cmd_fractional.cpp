#include <sstream>

#include "common.hpp"
#include "pcf/fractional.hpp"
#include "pcf/io.hpp"
#include "pcf/parallel.hpp"

namespace pcf::cli {

namespace {

json weights_json(const DualWeights& w) {
  json f = json::array(), g = json::array();
  for (const auto& x : w.f) f.push_back(rational_json(x));
  for (const auto& x : w.g) g.push_back(rational_json(x));
  return {{"f", f}, {"g", g}};
}

struct LpOpts {
  InstanceOptions inst;
  std::string out;
};

int run_lp(const LpOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("frac-lp");
  const ConflictInstance inst = load_instance(o.inst, rec["inputs"]);
  const LPResult lp = fractional_pcf_lp(inst);
  rec["optimum"] = rational_json(lp.optimum);
  rec["stable_sets"] = lp.system.sets.size();
  rec["pivots"] = lp.pivots;
  json primal = json::array();
  for (std::size_t j = 0; j < lp.primal.size(); ++j) {
    if (lp.primal[j] == 0) continue;
    primal.push_back({{"set", vertices_json(mask_vertices(lp.system.sets[j]))}, {"weight", rational_json(lp.primal[j])}});
  }
  rec["primal"] = primal;
  rec["dual"] = weights_json(lp.dual);
  rec["wall_ms"] = clock.ms();
  return emit(ctx, rec, o.out, Verdict::pass);
}

struct DualOpts {
  InstanceOptions inst;
  std::string out;
  std::uint64_t seed = 0;
  int samples = 100;
};

int run_dual(const DualOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("frac-dual-check");
  const ConflictInstance inst = load_instance(o.inst, rec["inputs"]);
  const DualityReport r = duality_check(inst, o.seed, o.samples);
  rec["seed"] = o.seed;
  rec["optimum"] = rational_json(r.optimum);
  rec["dual_payoff"] = rational_json(r.dual_payoff);
  rec["samples"] = r.samples;
  rec["sample_failures"] = r.sample_failures;
  rec["wall_ms"] = clock.ms();
  return emit(ctx, rec, o.out, r.verdict);
}

struct SampleOpts {
  InstanceOptions inst;
  std::string out, weights = "uniform";
  std::uint64_t seed = 0;
  double eps = 0.1;
  std::optional<double> p;
  int runs = 1;
  int jobs = 0;
};

int run_sampler(const SampleOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("frac-sample");
  const ConflictInstance inst = load_instance(o.inst, rec["inputs"]);
  const int n = inst.num_vertices();
  DualWeights w;
  if (o.weights == "lp") {
    w = fractional_pcf_lp(inst).dual.normalized();
  } else {
    if (n == 0) throw ParameterError("empty graph");
    w.f.assign(static_cast<std::size_t>(n), Rational(1, n));
    w.g.assign(inst.hypergraph.num_edges(), 0);
  }
  SamplerParams base;
  base.eps = o.eps;
  if (o.p) base.p = *o.p;
  std::vector<SamplerRun> runs(static_cast<std::size_t>(o.runs));
  parallel_for(runs.size(), jobs_from(o.jobs), [&](std::size_t k) {
    SamplerParams params = base;
    params.seed = o.seed + k;
    runs[k] = weighted_stable_sampler(inst, w, params);
  });
  int stable = 0;
  long double total = 0;
  Rational best = -1, worst = 0;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    stable += runs[k].stable;
    total += to_long_double(runs[k].payoff);
    if (runs[k].payoff > best) best = runs[k].payoff;
    if (k == 0 || runs[k].payoff < worst) worst = runs[k].payoff;
  }
  rec["seed"] = o.seed;
  rec["runs"] = o.runs;
  rec["weights"] = o.weights;
  rec["eps"] = o.eps;
  if (!runs.empty()) {
    const SamplerRun& first = runs.front();
    rec["p"] = format_real(first.p);
    rec["class_bound"] = first.class_bound;
    rec["guarantee"] = format_real(first.guarantee);
    rec["rank_exceeds_delta"] = first.rank_exceeds_delta;
    rec["first_run"] = {{"set", vertices_json(first.set)},
                        {"payoff", rational_json(first.payoff)},
                        {"sampled", first.sampled},
                        {"kept", first.kept},
                        {"classes", first.classes}};
    rec["best_payoff"] = rational_json(best);
    rec["worst_payoff"] = rational_json(worst);
    rec["mean_payoff"] = format_real(total / static_cast<long double>(runs.size()));
  }
  rec["stable_runs"] = stable;
  rec["wall_ms"] = clock.ms();
  return emit(ctx, rec, o.out, stable == o.runs ? Verdict::pass : Verdict::fail);
}

struct RoundOpts {
  InstanceOptions inst;
  std::string out, write_set_coloring;
};

int run_round(const RoundOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("frac-round");
  rec["outputs"] = json::array();
  const ConflictInstance inst = load_instance(o.inst, rec["inputs"]);
  const LPResult lp = fractional_pcf_lp(inst);
  const RoundResult r = round_to_ab(inst, lp);
  rec["optimum"] = rational_json(lp.optimum);
  rec["a"] = r.coloring.a;
  rec["b"] = r.coloring.b;
  rec["trimmed"] = r.trimmed;
  rec["verified"] = r.verified;
  if (!o.write_set_coloring.empty()) {
    std::ostringstream ss;
    io::write_set_coloring(ss, r.coloring);
    write_text(o.write_set_coloring, ss.str());
    rec["outputs"].push_back(o.write_set_coloring);
  }
  rec["wall_ms"] = clock.ms();
  return emit(ctx, rec, o.out, r.verified ? Verdict::pass : Verdict::fail);
}

}  // namespace

void register_fractional_commands(CLI::App& app, Context& ctx) {
  add_command<LpOpts>(
      app, ctx, "frac-lp", "exact fractional PCF chromatic number",
      [](CLI::App* sub, LpOpts& o) {
        add_instance_options(sub, o.inst);
        sub->add_option("--out", o.out, "write the JSON record here");
      },
      run_lp);

  add_command<DualOpts>(
      app, ctx, "frac-dual-check", "check the stable-set payoff form of LP duality",
      [](CLI::App* sub, DualOpts& o) {
        add_instance_options(sub, o.inst);
        sub->add_option("--seed", o.seed)->required();
        sub->add_option("--samples", o.samples, "random weight vectors")->capture_default_str();
        sub->add_option("--out", o.out, "write the JSON record here");
      },
      run_dual);

  add_command<SampleOpts>(
      app, ctx, "frac-sample", "randomized weighted stable-set construction",
      [](CLI::App* sub, SampleOpts& o) {
        add_instance_options(sub, o.inst);
        sub->add_option("--seed", o.seed, "seed of the first run; run k uses seed + k")->required();
        sub->add_option("--eps", o.eps)->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--p", o.p, "marking probability (default log D / D)");
        sub->add_option("--runs", o.runs)->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--weights", o.weights, "uniform or lp")
            ->check(CLI::IsMember({"uniform", "lp"}))
            ->capture_default_str();
        sub->add_option("--jobs", o.jobs, "worker threads");
        sub->add_option("--out", o.out, "write the JSON record here");
      },
      run_sampler);

  add_command<RoundOpts>(
      app, ctx, "frac-round", "turn the LP optimum into an (a:b)-coloring",
      [](CLI::App* sub, RoundOpts& o) {
        add_instance_options(sub, o.inst);
        sub->add_option("--write-set-coloring", o.write_set_coloring, "(a:b)-coloring output file");
        sub->add_option("--out", o.out, "write the JSON record here");
      },
      run_round);
}

}  // namespace pcf::cli
