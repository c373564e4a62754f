#include "pcf/fractional.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "pcf/parallel.hpp"

namespace pcf {

namespace {

VertexMask to_mask(const std::vector<Vertex>& vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) m |= VertexMask{1} << v;
  return m;
}

void require_small(int n) {
  if (n > kMaxStableSetVertices) {
    throw ParameterError("stable-set enumeration is limited to " + std::to_string(kMaxStableSetVertices) +
                         " vertices");
  }
}

void check_weights(const ConflictInstance& inst, const DualWeights& w) {
  if (w.f.size() != static_cast<std::size_t>(inst.num_vertices()) || w.g.size() != inst.hypergraph.num_edges()) {
    throw ParameterError("dual weights do not match the instance");
  }
  for (const auto* part : {&w.f, &w.g}) {
    for (const auto& x : *part) {
      if (x < 0) throw ParameterError("dual weights must be non-negative");
    }
  }
}

using Matrix = std::vector<std::vector<Rational>>;

}  // namespace

std::vector<std::size_t> StableSetSystem::column(std::size_t j) const {
  std::vector<std::size_t> rows;
  const VertexMask s = sets[j];
  for (int v = 0; v < n; ++v) {
    if (s >> v & 1U) rows.push_back(static_cast<std::size_t>(v));
  }
  for (std::size_t e = 0; e < edge_masks.size(); ++e) {
    if (std::popcount(edge_masks[e] & s) == 1) rows.push_back(static_cast<std::size_t>(n) + e);
  }
  return rows;
}

StableSetSystem enumerate_stable_sets(const ConflictInstance& inst) {
  const int n = inst.num_vertices();
  require_small(n);
  StableSetSystem out;
  out.n = n;
  std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = to_mask(inst.graph.neighbors(v));
  auto rec = [&](auto&& self, Vertex next, VertexMask current, VertexMask blocked) -> void {
    for (Vertex v = next; v < n; ++v) {
      if (blocked >> v & 1U) continue;
      const VertexMask with = current | VertexMask{1} << v;
      out.sets.push_back(with);
      self(self, v + 1, with, blocked | adj[static_cast<std::size_t>(v)]);
    }
  };
  rec(rec, 0, 0, 0);
  std::sort(out.sets.begin(), out.sets.end());
  for (const auto& e : inst.hypergraph.edges()) out.edge_masks.push_back(to_mask(e));
  return out;
}

StableSetSystem enumerate_stable_sets(const Graph& g) {
  return enumerate_stable_sets(ConflictInstance(g, Hypergraph(g.num_vertices())));
}

std::vector<Vertex> mask_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1U) out.push_back(v);
  }
  return out;
}

Rational DualWeights::total() const {
  Rational s = 0;
  for (const auto& x : f) s += x;
  for (const auto& x : g) s += x;
  return s;
}

DualWeights DualWeights::normalized() const {
  const Rational s = total();
  if (s == 0) throw ParameterError("cannot normalize zero weights");
  DualWeights out = *this;
  for (auto& x : out.f) x /= s;
  for (auto& x : out.g) x /= s;
  return out;
}

LPResult fractional_pcf_lp(const ConflictInstance& inst) {
  LPResult out;
  out.system = enumerate_stable_sets(inst);
  const auto& sys = out.system;
  const std::size_t r = sys.num_rows();
  const std::size_t cols = sys.sets.size();
  std::vector<std::vector<std::size_t>> column(cols);
  for (std::size_t j = 0; j < cols; ++j) column[j] = sys.column(j);

  // Standard form A x - s = 1 with variables x_0..x_{N-1}, s_0..s_{r-1}.
  // The all-surplus basis is dual feasible because every cost is 1 >= 0.
  const std::size_t total = cols + r;
  Matrix binv(r, std::vector<Rational>(r, 0));
  std::vector<std::size_t> basis(r);
  std::vector<Rational> xb(r, -1);
  std::vector<Rational> reduced(total, 0);
  std::vector<char> basic(total, 0);
  for (std::size_t i = 0; i < r; ++i) {
    binv[i][i] = -1;
    basis[i] = cols + i;
    basic[cols + i] = 1;
  }
  for (std::size_t j = 0; j < cols; ++j) reduced[j] = 1;

  std::vector<Rational> alpha(total);
  for (;;) {
    std::size_t leave = r;
    for (std::size_t i = 0; i < r; ++i) {
      if (xb[i] < 0 && (leave == r || basis[i] < basis[leave])) leave = i;
    }
    if (leave == r) break;
    const auto& row = binv[leave];
    std::size_t enter = total;
    Rational best_ratio;
    for (std::size_t j = 0; j < total; ++j) {
      if (basic[j]) continue;
      Rational a = 0;
      if (j < cols) {
        for (std::size_t k : column[j]) a += row[k];
      } else {
        a = -row[j - cols];
      }
      alpha[j] = a;
      if (a >= 0) continue;
      Rational ratio = reduced[j] / -a;
      if (enter == total || ratio < best_ratio) {
        enter = j;
        best_ratio = ratio;
      }
    }
    if (enter == total) throw std::logic_error("covering LP reported infeasible");

    std::vector<Rational> w(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (enter < cols) {
        for (std::size_t k : column[enter]) w[i] += binv[i][k];
      } else {
        w[i] = -binv[i][enter - cols];
      }
    }
    const Rational theta = reduced[enter] / alpha[enter];
    for (std::size_t j = 0; j < total; ++j) {
      if (!basic[j]) reduced[j] -= theta * alpha[j];
    }
    const std::size_t leaving_var = basis[leave];
    reduced[leaving_var] = -theta;
    reduced[enter] = 0;

    const Rational pivot = w[leave];
    xb[leave] /= pivot;
    for (auto& x : binv[leave]) x /= pivot;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == leave || w[i] == 0) continue;
      xb[i] -= w[i] * xb[leave];
      for (std::size_t k = 0; k < r; ++k) binv[i][k] -= w[i] * binv[leave][k];
    }
    basic[leaving_var] = 0;
    basic[enter] = 1;
    basis[leave] = enter;
    ++out.pivots;
  }

  out.primal.assign(cols, 0);
  std::vector<Rational> y(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (basis[i] >= cols) continue;
    out.primal[basis[i]] = xb[i];
    for (std::size_t k = 0; k < r; ++k) y[k] += binv[i][k];
  }
  out.optimum = 0;
  for (const auto& x : out.primal) out.optimum += x;

  std::vector<Rational> cover(r, 0);
  Rational dual_value = 0;
  for (std::size_t k = 0; k < r; ++k) {
    if (y[k] < 0) throw std::logic_error("negative dual value");
    dual_value += y[k];
  }
  for (std::size_t j = 0; j < cols; ++j) {
    Rational load = 0;
    for (std::size_t k : column[j]) {
      cover[k] += out.primal[j];
      load += y[k];
    }
    if (out.primal[j] < 0 || load > 1) throw std::logic_error("LP solution failed its certificate");
  }
  for (const auto& c : cover) {
    if (c < 1) throw std::logic_error("primal solution does not cover every row");
  }
  if (dual_value != out.optimum) throw std::logic_error("primal and dual objectives differ");
  out.dual.f.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(sys.n));
  out.dual.g.assign(y.begin() + static_cast<std::ptrdiff_t>(sys.n), y.end());
  return out;
}

Rational stable_payoff(const ConflictInstance& inst, const DualWeights& w, const std::vector<Vertex>& set) {
  check_weights(inst, w);
  std::vector<char> member(static_cast<std::size_t>(inst.num_vertices()), 0);
  Rational total = 0;
  for (Vertex v : set) {
    member[static_cast<std::size_t>(v)] = 1;
    total += w.f[static_cast<std::size_t>(v)];
  }
  const auto& edges = inst.hypergraph.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int hits = 0;
    for (Vertex v : edges[e]) hits += member[static_cast<std::size_t>(v)];
    if (hits == 1) total += w.g[e];
  }
  return total;
}

StablePayoff best_stable_payoff(const ConflictInstance& inst, const DualWeights& w) {
  check_weights(inst, w);
  const StableSetSystem sys = enumerate_stable_sets(inst);
  StablePayoff best;
  best.payoff = 0;
  for (std::size_t j = 0; j < sys.sets.size(); ++j) {
    Rational value = 0;
    for (std::size_t k : sys.column(j)) {
      value += k < static_cast<std::size_t>(sys.n) ? w.f[k] : w.g[k - static_cast<std::size_t>(sys.n)];
    }
    if (value > best.payoff) {
      best.payoff = value;
      best.set = sys.sets[j];
    }
  }
  return best;
}

DualityReport duality_check(const ConflictInstance& inst, std::uint64_t seed, int samples) {
  DualityReport out;
  const LPResult lp = fractional_pcf_lp(inst);
  out.optimum = lp.optimum;
  const Rational target = 1 / lp.optimum;
  out.dual_payoff = best_stable_payoff(inst, lp.dual.normalized()).payoff;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(0, 9);
  DualWeights w;
  w.f.resize(static_cast<std::size_t>(inst.num_vertices()));
  w.g.resize(inst.hypergraph.num_edges());
  while (out.samples < samples) {
    for (auto& x : w.f) x = draw(rng);
    for (auto& x : w.g) x = draw(rng);
    if (w.total() == 0) continue;
    ++out.samples;
    if (best_stable_payoff(inst, w.normalized()).payoff < target) ++out.sample_failures;
  }
  out.verdict = out.dual_payoff == target && out.sample_failures == 0 ? Verdict::pass : Verdict::fail;
  return out;
}

SamplerRun weighted_stable_sampler(const ConflictInstance& inst, const DualWeights& w, const SamplerParams& params) {
  check_weights(inst, w);
  if (!(params.eps > 0)) throw ParameterError("eps must be positive");
  const auto& g = inst.graph;
  const int n = inst.num_vertices();
  const int delta = g.max_degree();
  SamplerRun out;
  if (params.p) {
    out.p = *params.p;
    if (!(out.p >= 0 && out.p <= 1)) throw ParameterError("p must lie in [0, 1]");
  } else {
    if (delta < 2) throw ParameterError("the default p needs maximum degree at least 2");
    out.p = std::log(static_cast<long double>(delta)) / delta;
  }
  out.rank_exceeds_delta = inst.hypergraph.rank() > delta;
  if (delta > 0) {
    const long double e = params.eps;
    out.guarantee = (1 - e) * (1 - e) / ((1 + 2 * e) * delta);
  }
  const long double threshold = (1 + params.eps) * out.p * delta;
  out.class_bound = static_cast<int>(std::floor(threshold)) + 1;

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<long double> unit(0.0L, 1.0L);
  std::vector<char> marked(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    marked[static_cast<std::size_t>(v)] = unit(rng) < out.p;
    out.sampled += marked[static_cast<std::size_t>(v)];
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v) {
    if (!marked[static_cast<std::size_t>(v)]) continue;
    int heavy = 0;
    for (Vertex u : g.neighbors(v)) heavy += marked[static_cast<std::size_t>(u)];
    if (heavy <= threshold) kept.push_back(v);
  }
  out.kept = static_cast<int>(kept.size());

  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v : kept) {
    std::vector<char> taken(classes.size() + 2, 0);
    for (Vertex u : g.neighbors(v)) {
      const int c = color[static_cast<std::size_t>(u)];
      if (c > 0) taken[static_cast<std::size_t>(c)] = 1;
    }
    int c = 1;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    color[static_cast<std::size_t>(v)] = c;
    if (static_cast<std::size_t>(c) > classes.size()) classes.emplace_back();
    classes[static_cast<std::size_t>(c - 1)].push_back(v);
  }
  out.classes = static_cast<int>(classes.size());
  out.payoff = 0;
  for (const auto& cls : classes) {
    Rational value = stable_payoff(inst, w, cls);
    if (out.set.empty() || value > out.payoff) {
      out.payoff = value;
      out.set = cls;
    }
  }
  out.stable = true;
  for (std::size_t i = 0; i < out.set.size(); ++i) {
    for (std::size_t j = i + 1; j < out.set.size(); ++j) {
      if (g.adjacent(out.set[i], out.set[j])) out.stable = false;
    }
  }
  return out;
}

RoundResult round_to_ab(const ConflictInstance& inst, const LPResult& lp) {
  const auto& sys = lp.system;
  if (lp.primal.size() != sys.sets.size() || sys.n != inst.num_vertices()) {
    throw ParameterError("LP result does not match the instance");
  }
  BigInt scale = 1;
  for (const auto& x : lp.primal) {
    if (x > 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  }
  if (!scale.fits_sint_p()) throw ParameterError("common denominator too large for an explicit coloring");
  RoundResult out;
  out.coloring.b = static_cast<int>(scale.get_si());
  std::vector<std::vector<Color>> covering(static_cast<std::size_t>(sys.n));
  Color next = 1;
  for (std::size_t j = 0; j < sys.sets.size(); ++j) {
    if (lp.primal[j] <= 0) continue;
    const BigInt copies = BigInt(lp.primal[j] * scale);
    const auto members = mask_vertices(sys.sets[j]);
    for (long k = 0; k < copies.get_si(); ++k, ++next) {
      for (Vertex v : members) covering[static_cast<std::size_t>(v)].push_back(next);
    }
  }
  out.coloring.a = next - 1;
  for (auto& colors : covering) {
    if (colors.size() > static_cast<std::size_t>(out.coloring.b)) {
      out.trimmed = true;
      colors.resize(static_cast<std::size_t>(out.coloring.b));
    }
  }
  out.coloring.sets = std::move(covering);
  out.verified = is_fractional_pcf(inst, out.coloring);
  return out;
}

ChernoffReport chernoff_diagnostic(long n, long double p, long double delta, long trials, std::uint64_t seed,
                                   int jobs) {
  if (n < 1 || trials < 1) throw ParameterError("n and trials must be positive");
  if (!(p > 0 && p < 1)) throw ParameterError("p must lie in (0, 1)");
  if (!(delta > 0 && delta < 1)) throw ParameterError("delta must lie in (0, 1)");
  ChernoffReport out;
  out.trials = trials;
  out.expectation = static_cast<long double>(n) * p;
  out.bound = 2 * std::exp(-delta * delta * out.expectation / 3);
  constexpr long kChunk = 4096;
  const auto chunks = static_cast<std::size_t>((trials + kChunk - 1) / kChunk);
  std::vector<long> hits(chunks, 0);
  parallel_for(chunks, jobs, [&](std::size_t c) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(c)};
    std::mt19937_64 rng(seq);
    std::binomial_distribution<long> binom(n, static_cast<double>(p));
    const long begin = static_cast<long>(c) * kChunk;
    const long end = std::min(trials, begin + kChunk);
    for (long i = begin; i < end; ++i) {
      const long double x = static_cast<long double>(binom(rng));
      if (std::fabs(x - out.expectation) >= delta * out.expectation) ++hits[c];
    }
  });
  long total = 0;
  for (long h : hits) total += h;
  out.empirical = static_cast<long double>(total) / static_cast<long double>(trials);
  const long double q = std::min(out.bound, 1.0L);
  out.margin = 3 * std::sqrt(q * (1 - q) / static_cast<long double>(trials));
  out.pass = out.empirical <= out.bound + out.margin;
  return out;
}

}  // namespace pcf
