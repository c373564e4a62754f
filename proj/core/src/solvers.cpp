#include "pcf/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <set>

#include "pcf/list_size.hpp"
#include "pcf/parallel.hpp"

namespace pcf {

namespace {

// Some color occurs on e between 1 and t times.
bool edge_conflict_free(const std::vector<Vertex>& e, const Coloring& phi, int t, std::vector<Color>& scratch) {
  scratch.clear();
  for (Vertex v : e) scratch.push_back(phi[static_cast<std::size_t>(v)]);
  std::sort(scratch.begin(), scratch.end());
  for (std::size_t i = 0; i < scratch.size();) {
    std::size_t j = i;
    while (j < scratch.size() && scratch[j] == scratch[i]) ++j;
    if (static_cast<int>(j - i) <= t) return true;
    i = j;
  }
  return false;
}

// Greedy connectivity order: each next vertex has the most constraints
// into the vertices already placed.
std::vector<Vertex> search_order(const ConflictInstance& inst) {
  const int n = inst.num_vertices();
  const auto& g = inst.graph;
  const auto& h = inst.hypergraph;
  std::vector<int> score(static_cast<std::size_t>(n), 0);
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      const auto sv = score[static_cast<std::size_t>(v)], sb = score[static_cast<std::size_t>(best)];
      const int dv = g.degree(v) + h.degree(v), db = g.degree(best) + h.degree(best);
      if (sv > sb || (sv == sb && dv > db)) best = v;
    }
    placed[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) ++score[static_cast<std::size_t>(w)];
    for (std::size_t e : h.incident(best)) {
      for (Vertex w : h.edge(e)) {
        if (w != best) ++score[static_cast<std::size_t>(w)];
      }
    }
  }
  return order;
}

// Static search plan: vertices in order, earlier neighbours, and the
// hyperedges completed at each position.
struct Plan {
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> earlier;
  std::vector<std::vector<std::size_t>> closing;

  explicit Plan(const ConflictInstance& inst) : order(search_order(inst)) {
    const auto n = order.size();
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[static_cast<std::size_t>(order[i])] = i;
    earlier.resize(n);
    closing.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (Vertex w : inst.graph.neighbors(order[i])) {
        if (position[static_cast<std::size_t>(w)] < i) earlier[i].push_back(w);
      }
    }
    const auto& h = inst.hypergraph;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      std::size_t last = 0;
      for (Vertex v : h.edge(e)) last = std::max(last, position[static_cast<std::size_t>(v)]);
      closing[last].push_back(e);
    }
  }
};

class Backtracker {
 public:
  Backtracker(const ConflictInstance& inst, const Plan& plan, int t) : inst_(inst), plan_(plan), t_(t) {
    phi_.assign(static_cast<std::size_t>(inst.num_vertices()), 0);
  }

  bool admissible(std::size_t depth, Color c) {
    for (Vertex w : plan_.earlier[depth]) {
      if (phi_[static_cast<std::size_t>(w)] == c) return false;
    }
    phi_[static_cast<std::size_t>(plan_.order[depth])] = c;
    for (std::size_t e : plan_.closing[depth]) {
      if (!edge_conflict_free(inst_.hypergraph.edge(e), phi_, t_, scratch_)) return false;
    }
    return true;
  }

  Coloring& phi() { return phi_; }

 private:
  const ConflictInstance& inst_;
  const Plan& plan_;
  int t_;
  Coloring phi_;
  std::vector<Color> scratch_;
};

enum class Search { found, exhausted, budget };

// Is there a PCF coloring with colors 1..k? New colors are introduced in
// increasing order.
Search k_colorable(const ConflictInstance& inst, const Plan& plan, int k, int t, long& nodes, long cap,
                   Coloring& out) {
  Backtracker bt(inst, plan, t);
  const std::size_t n = plan.order.size();
  bool over = false;
  auto rec = [&](auto&& self, std::size_t depth, int max_used) -> bool {
    if (depth == n) return true;
    if (++nodes > cap) {
      over = true;
      return false;
    }
    const int limit = std::min(k, max_used + 1);
    for (Color c = 1; c <= limit; ++c) {
      if (!bt.admissible(depth, c)) continue;
      if (self(self, depth + 1, std::max(max_used, c))) return true;
      if (over) return false;
    }
    bt.phi()[static_cast<std::size_t>(plan.order[depth])] = 0;
    return false;
  };
  if (rec(rec, 0, 0)) {
    out = bt.phi();
    return Search::found;
  }
  return over ? Search::budget : Search::exhausted;
}

}  // namespace

void SolverConfig::validate() const {
  if (t < 1) throw ParameterError("t must be at least 1");
  if (restart_cap < 1) throw ParameterError("restart cap must be positive");
  if (node_cap < 1) throw ParameterError("node cap must be positive");
}

Coloring greedy_pcf(const ConflictInstance& inst) {
  const int n = inst.num_vertices();
  const auto& g = inst.graph;
  const auto& h = inst.hypergraph;
  const auto order = degeneracy_ordering(g).order;
  std::vector<std::size_t> position(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = i;
  std::vector<Vertex> leader(h.num_edges());
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto& edge = h.edge(e);
    leader[e] = *std::min_element(edge.begin(), edge.end(), [&](Vertex a, Vertex b) {
      return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
    });
  }
  Coloring phi(static_cast<std::size_t>(n), 0);
  std::vector<char> blocked;
  for (Vertex v : order) {
    blocked.assign(static_cast<std::size_t>(g.degree(v) + h.degree(v)) + 2, 0);
    auto block = [&](Color c) {
      if (c > 0 && static_cast<std::size_t>(c) < blocked.size()) blocked[static_cast<std::size_t>(c)] = 1;
    };
    for (Vertex w : g.neighbors(v)) block(phi[static_cast<std::size_t>(w)]);
    for (std::size_t e : h.incident(v)) {
      if (leader[e] != v) block(phi[static_cast<std::size_t>(leader[e])]);
    }
    Color c = 1;
    while (blocked[static_cast<std::size_t>(c)]) ++c;
    phi[static_cast<std::size_t>(v)] = c;
  }
  return phi;
}

int colors_used(const Coloring& phi) {
  return static_cast<int>(std::set<Color>(phi.begin(), phi.end()).size());
}

ChiResult exact_chi_pcf(const ConflictInstance& inst, const SolverConfig& cfg) {
  cfg.validate();
  ChiResult out;
  const int n = inst.num_vertices();
  if (n == 0) return out;
  out.witness = greedy_pcf(inst);
  if (cfg.t != 1 && !is_pcf(inst, out.witness, nullptr, cfg.t)) {
    out.witness.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) out.witness[static_cast<std::size_t>(v)] = v + 1;
  }
  out.upper = colors_used(out.witness);
  out.lower = 1;
  const Plan plan(inst);
  while (out.lower < out.upper) {
    Coloring found;
    const Search s = k_colorable(inst, plan, out.lower, cfg.t, out.nodes, cfg.node_cap, found);
    if (s == Search::budget) break;
    if (s == Search::found) {
      out.upper = out.lower;
      out.witness = std::move(found);
      break;
    }
    ++out.lower;
  }
  return out;
}

CountResult count_pcf_colorings(const ConflictInstance& inst, const ListAssignment& lists, int t, long node_cap,
                                int jobs) {
  if (t < 1) throw ParameterError("t must be at least 1");
  if (lists.num_vertices() != inst.num_vertices()) throw ParameterError("list assignment size mismatch");
  CountResult out;
  const std::size_t n = static_cast<std::size_t>(inst.num_vertices());
  if (n == 0) {
    out.count = 1;
    return out;
  }
  const Plan plan(inst);
  const auto& first = lists[plan.order[0]];
  std::atomic<long> nodes{0};
  std::atomic<bool> over{false};
  std::vector<BigInt> partial(first.size());
  parallel_for(first.size(), jobs, [&](std::size_t shard) {
    Backtracker bt(inst, plan, t);
    BigInt& total = partial[shard];
    auto rec = [&](auto&& self, std::size_t depth) -> void {
      if (over.load(std::memory_order_relaxed)) return;
      if (nodes.fetch_add(1, std::memory_order_relaxed) >= node_cap) {
        over = true;
        return;
      }
      const auto& list = lists[plan.order[depth]];
      if (depth + 1 == n) {
        for (Color c : list) {
          if (bt.admissible(depth, c)) ++total;
        }
        return;
      }
      for (Color c : list) {
        if (bt.admissible(depth, c)) self(self, depth + 1);
      }
    };
    if (bt.admissible(0, first[shard])) {
      if (n == 1) {
        ++total;
      } else {
        rec(rec, 1);
      }
    }
  });
  for (const auto& p : partial) out.count += p;
  out.nodes = nodes.load();
  out.complete = !over.load();
  return out;
}

RosenfeldReport rosenfeld_check(const ConflictInstance& inst, const ListAssignment& lists, const Rational& beta, int t,
                                long node_cap, int jobs) {
  if (beta <= 0) throw ParameterError("beta must be positive");
  RosenfeldReport out;
  out.required = required_list_size(inst, beta, t);
  out.min_list_size = lists.min_size();
  if (inst.num_vertices() > 0 && Rational(out.min_list_size) < out.required) {
    out.verdict = Verdict::premise_not_met;
    return out;
  }
  out.count = count_pcf_colorings(inst, lists, t, node_cap, jobs);
  const auto n = static_cast<unsigned long>(inst.num_vertices());
  out.lhs = out.count.count * pow(BigInt(beta.get_den()), n);
  out.rhs = pow(BigInt(beta.get_num()), n);
  if (!out.count.complete) {
    // A partial count that already clears the bound still certifies it.
    out.verdict = out.lhs >= out.rhs ? Verdict::pass : Verdict::inconclusive;
  } else {
    out.verdict = out.lhs >= out.rhs ? Verdict::pass : Verdict::fail;
  }
  return out;
}

SampleResult sample_pcf(const ConflictInstance& inst, const ListAssignment& lists, const SolverConfig& cfg) {
  cfg.validate();
  if (lists.num_vertices() != inst.num_vertices()) throw ParameterError("list assignment size mismatch");
  SampleResult out;
  const int n = inst.num_vertices();
  const auto& g = inst.graph;
  const auto& h = inst.hypergraph;
  std::mt19937_64 rng(cfg.seed);
  std::vector<Color> scratch;
  std::vector<int> uncolored(h.num_edges());
  for (out.restarts = 0; out.restarts < cfg.restart_cap; ++out.restarts) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::shuffle(order.begin(), order.end(), rng);
    Coloring phi(static_cast<std::size_t>(n), 0);
    for (std::size_t e = 0; e < h.num_edges(); ++e) uncolored[e] = static_cast<int>(h.edge(e).size());
    long nodes = 0;
    bool over = false;
    auto try_color = [&](Vertex v, Color c) {
      for (Vertex w : g.neighbors(v)) {
        if (phi[static_cast<std::size_t>(w)] == c) return false;
      }
      phi[static_cast<std::size_t>(v)] = c;
      for (std::size_t e : h.incident(v)) {
        if (uncolored[e] == 1 && !edge_conflict_free(h.edge(e), phi, cfg.t, scratch)) {
          phi[static_cast<std::size_t>(v)] = 0;
          return false;
        }
      }
      for (std::size_t e : h.incident(v)) --uncolored[e];
      return true;
    };
    auto uncolor = [&](Vertex v) {
      phi[static_cast<std::size_t>(v)] = 0;
      for (std::size_t e : h.incident(v)) ++uncolored[e];
    };
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
      if (depth == order.size()) return true;
      if (++nodes > cfg.node_cap) {
        over = true;
        return false;
      }
      const Vertex v = order[depth];
      std::vector<Color> candidates = lists[v];
      std::shuffle(candidates.begin(), candidates.end(), rng);
      for (Color c : candidates) {
        if (!try_color(v, c)) continue;
        if (self(self, depth + 1)) return true;
        uncolor(v);
        if (over) return false;
      }
      return false;
    };
    const bool found = rec(rec, 0);
    out.nodes += nodes;
    if (found) {
      out.coloring = std::move(phi);
      return out;
    }
    // A search that finished without hitting the cap proves infeasibility.
    if (!over) return out;
  }
  return out;
}

}  // namespace pcf
