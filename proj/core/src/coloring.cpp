#include "pcf/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "pcf/numeric.hpp"

namespace pcf {

namespace {

void require_cover(int n, std::size_t size) {
  if (size != static_cast<std::size_t>(n)) {
    throw ParameterError("coloring covers " + std::to_string(size) + " vertices, instance has " + std::to_string(n));
  }
}

std::size_t intersection_size(const std::vector<Color>& x, const std::vector<Color>& y) {
  std::size_t count = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
  for (auto& list : lists_) {
    if (list.empty()) throw ParameterError("color lists must be non-empty");
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

ListAssignment ListAssignment::uniform(int n, int k) {
  if (k < 1) throw ParameterError("list size must be positive");
  std::vector<Color> palette(static_cast<std::size_t>(k));
  std::iota(palette.begin(), palette.end(), 1);
  return ListAssignment(std::vector<std::vector<Color>>(static_cast<std::size_t>(n), palette));
}

bool ListAssignment::allows(Vertex v, Color c) const {
  const auto& list = (*this)[v];
  return std::binary_search(list.begin(), list.end(), c);
}

int ListAssignment::min_size() const {
  if (lists_.empty()) return 0;
  std::size_t best = lists_.front().size();
  for (const auto& list : lists_) best = std::min(best, list.size());
  return static_cast<int>(best);
}

void SetColoring::validate() const {
  if (a < 1 || b < 1 || b > a) throw ParameterError("(a:b) coloring needs 1 <= b <= a");
  for (const auto& set : sets) {
    if (static_cast<int>(set.size()) != b) throw ParameterError("color set does not have exactly b elements");
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 1 || set[i] > a) throw ParameterError("color outside [1, a]");
      if (i > 0 && set[i - 1] >= set[i]) throw ParameterError("color set must be sorted and duplicate-free");
    }
  }
}

bool is_proper(const Graph& g, const Coloring& phi) {
  require_cover(g.num_vertices(), phi.size());
  for (auto [u, v] : g.edges()) {
    if (phi[static_cast<std::size_t>(u)] == phi[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

bool is_t_conflict_free(const Hypergraph& h, const Coloring& phi, int t) {
  require_cover(h.num_vertices(), phi.size());
  if (t < 1) throw ParameterError("t must be at least 1");
  std::vector<Color> seen;
  for (const auto& e : h.edges()) {
    seen.clear();
    for (Vertex v : e) seen.push_back(phi[static_cast<std::size_t>(v)]);
    std::sort(seen.begin(), seen.end());
    bool ok = false;
    for (std::size_t i = 0; i < seen.size() && !ok;) {
      std::size_t j = i;
      while (j < seen.size() && seen[j] == seen[i]) ++j;
      ok = static_cast<int>(j - i) <= t;
      i = j;
    }
    if (!ok) return false;
  }
  return true;
}

bool is_pcf(const ConflictInstance& inst, const Coloring& phi, const ListAssignment* lists, int t) {
  if (!is_proper(inst.graph, phi)) return false;
  if (!is_t_conflict_free(inst.hypergraph, phi, t)) return false;
  if (lists) {
    if (lists->num_vertices() != inst.num_vertices()) throw ParameterError("list assignment size mismatch");
    for (Vertex v = 0; v < inst.num_vertices(); ++v) {
      if (!lists->allows(v, phi[static_cast<std::size_t>(v)])) return false;
    }
  }
  return true;
}

bool bichromatic_paths_ok(const Graph& g, const Coloring& phi, int max_vertices) {
  if (!is_proper(g, phi)) throw ParameterError("bichromatic check needs a proper coloring");
  std::map<std::pair<Color, Color>, std::vector<Edge>> by_pair;
  for (auto [u, v] : g.edges()) {
    Color cu = phi[static_cast<std::size_t>(u)];
    Color cv = phi[static_cast<std::size_t>(v)];
    by_pair[{std::min(cu, cv), std::max(cu, cv)}].emplace_back(u, v);
  }
  std::map<Vertex, std::vector<Vertex>> adj;
  std::map<Vertex, bool> visited;
  for (const auto& [pair, edges] : by_pair) {
    adj.clear();
    visited.clear();
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (const auto& [start, unused] : adj) {
      if (visited[start]) continue;
      // A component is a path iff it is a tree with maximum degree <= 2.
      std::vector<Vertex> stack{start};
      visited[start] = true;
      std::size_t vertices = 0;
      std::size_t degree_sum = 0;
      std::size_t max_deg = 0;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        ++vertices;
        degree_sum += adj[x].size();
        max_deg = std::max(max_deg, adj[x].size());
        for (Vertex y : adj[x]) {
          if (!visited[y]) {
            visited[y] = true;
            stack.push_back(y);
          }
        }
      }
      if (degree_sum / 2 != vertices - 1 || max_deg > 2) return false;
      if (static_cast<int>(vertices) > max_vertices) return false;
    }
  }
  return true;
}

bool is_fractional_pcf(const ConflictInstance& inst, const SetColoring& psi) {
  psi.validate();
  require_cover(inst.num_vertices(), psi.sets.size());
  for (auto [u, v] : inst.graph.edges()) {
    if (intersection_size(psi.sets[static_cast<std::size_t>(u)], psi.sets[static_cast<std::size_t>(v)]) != 0) return false;
  }
  std::map<Color, int> multiplicity;
  for (const auto& e : inst.hypergraph.edges()) {
    multiplicity.clear();
    for (Vertex v : e) {
      for (Color c : psi.sets[static_cast<std::size_t>(v)]) ++multiplicity[c];
    }
    int unique = 0;
    for (const auto& [c, count] : multiplicity) unique += count == 1 ? 1 : 0;
    if (unique < psi.b) return false;
  }
  return true;
}

bool small_color_sets_split(const Graph& g, const SetColoring& psi) {
  psi.validate();
  require_cover(g.num_vertices(), psi.sets.size());
  if (psi.a > 20) throw ParameterError("color-subset enumeration is limited to a <= 20");
  // Largest integer strictly below 5b/2; larger C only admits more vertices.
  const int size = std::min(psi.a, (5 * psi.b - 1) / 2);
  const int n = g.num_vertices();
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Color c : psi.sets[static_cast<std::size_t>(v)]) masks[static_cast<std::size_t>(v)] |= 1U << (c - 1);
  }
  const std::uint32_t limit = 1U << psi.a;
  std::uint32_t subset = size == 0 ? 0 : (1U << size) - 1;
  std::vector<char> inside(static_cast<std::size_t>(n));
  while (subset < limit) {
    for (Vertex v = 0; v < n; ++v) inside[static_cast<std::size_t>(v)] = (masks[static_cast<std::size_t>(v)] & ~subset) == 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!inside[static_cast<std::size_t>(v)]) continue;
      int count = 0;
      for (Vertex w : g.neighbors(v)) count += inside[static_cast<std::size_t>(w)];
      if (count >= 2) return false;
    }
    if (subset == 0) break;
    // Gosper's hack: next subset with the same popcount.
    std::uint32_t low = subset & (~subset + 1);
    std::uint32_t ripple = subset + low;
    subset = (((ripple ^ subset) >> 2) / low) | ripple;
  }
  return true;
}

bool connected_triples_spread(const Graph& g, const SetColoring& psi) {
  psi.validate();
  require_cover(g.num_vertices(), psi.sets.size());
  std::vector<Color> merged;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const auto& nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        merged = psi.sets[static_cast<std::size_t>(x)];
        const auto& sy = psi.sets[static_cast<std::size_t>(nb[i])];
        const auto& sz = psi.sets[static_cast<std::size_t>(nb[j])];
        merged.insert(merged.end(), sy.begin(), sy.end());
        merged.insert(merged.end(), sz.begin(), sz.end());
        std::sort(merged.begin(), merged.end());
        const auto distinct = std::unique(merged.begin(), merged.end()) - merged.begin();
        if (2 * distinct < 5 * psi.b) return false;
      }
    }
  }
  return true;
}

Cor16Report cor16_properties(const ConflictInstance& inst, const SetColoring& psi) {
  psi.validate();
  require_cover(inst.num_vertices(), psi.sets.size());
  Cor16Report report;
  report.stmt3 = true;
  const int n = inst.num_vertices();
  for (Vertex v = 0; v < n && report.stmt3; ++v) {
    for (Vertex w = v + 1; w < n; ++w) {
      if (2 * intersection_size(psi.sets[static_cast<std::size_t>(v)], psi.sets[static_cast<std::size_t>(w)]) >
          static_cast<std::size_t>(psi.b)) {
        report.stmt3 = false;
        break;
      }
    }
  }
  report.stmt2_enumerated = psi.a <= 12;
  report.stmt2 = report.stmt2_enumerated ? small_color_sets_split(inst.graph, psi)
                                         : connected_triples_spread(inst.graph, psi);
  return report;
}

}  // namespace pcf
