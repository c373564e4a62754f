#include "pcf/reduce.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pcf/numeric.hpp"

namespace pcf {

namespace {

using Adjacency = std::vector<std::set<Vertex>>;

// A color seen exactly once among phi over nbrs, preferring one != avoid.
std::optional<Color> unique_color(const std::set<Vertex>& nbrs, const Coloring& phi, Color avoid) {
  std::map<Color, int> counts;
  for (Vertex w : nbrs) ++counts[phi[static_cast<std::size_t>(w)]];
  std::optional<Color> fallback;
  for (auto [c, k] : counts) {
    if (k != 1) continue;
    if (c != avoid) return c;
    fallback = c;
  }
  return fallback;
}

bool neighbourhood_ok(const std::set<Vertex>& nbrs, const Coloring& phi) {
  return nbrs.empty() || unique_color(nbrs, phi, 0).has_value();
}

}  // namespace

LowDegreeReduction reduce_low_degree(const Graph& g) {
  const int n = g.num_vertices();
  LowDegreeReduction out;
  out.original_n = n;
  Adjacency adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) queue.emplace(g.degree(v), v);
  std::vector<char> present(static_cast<std::size_t>(n), 1);
  auto reinsert = [&](Vertex u, int old_degree) {
    queue.erase({old_degree, u});
    queue.emplace(static_cast<int>(adj[static_cast<std::size_t>(u)].size()), u);
  };
  while (queue.size() >= 2 && queue.begin()->first <= 2) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    present[static_cast<std::size_t>(v)] = 0;
    ReductionStep step;
    step.removed = v;
    step.neighbors.assign(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
    for (Vertex u : step.neighbors) {
      const int old_degree = static_cast<int>(adj[static_cast<std::size_t>(u)].size());
      adj[static_cast<std::size_t>(u)].erase(v);
      reinsert(u, old_degree);
    }
    if (step.neighbors.size() == 2) {
      const Vertex x = step.neighbors[0], y = step.neighbors[1];
      if (!adj[static_cast<std::size_t>(x)].count(y)) {
        step.added_edge = true;
        const int dx = static_cast<int>(adj[static_cast<std::size_t>(x)].size());
        const int dy = static_cast<int>(adj[static_cast<std::size_t>(y)].size());
        adj[static_cast<std::size_t>(x)].insert(y);
        adj[static_cast<std::size_t>(y)].insert(x);
        reinsert(x, dx);
        reinsert(y, dy);
      }
    }
    adj[static_cast<std::size_t>(v)].clear();
    out.trace.push_back(std::move(step));
  }
  std::vector<int> relabel(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (present[static_cast<std::size_t>(v)]) {
      relabel[static_cast<std::size_t>(v)] = static_cast<int>(out.kernel_vertices.size());
      out.kernel_vertices.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (Vertex v : out.kernel_vertices) {
    for (Vertex w : adj[static_cast<std::size_t>(v)]) {
      if (v < w) edges.emplace_back(relabel[static_cast<std::size_t>(v)], relabel[static_cast<std::size_t>(w)]);
    }
  }
  out.kernel = Graph(static_cast<int>(out.kernel_vertices.size()), edges);
  return out;
}

ReplayResult replay_extension(const Graph& original, const LowDegreeReduction& reduction,
                              const Coloring& kernel_coloring, const ListAssignment& lists) {
  const int n = reduction.original_n;
  if (original.num_vertices() != n || lists.num_vertices() != n) {
    throw ParameterError("graph, lists and reduction disagree on the vertex count");
  }
  if (static_cast<int>(kernel_coloring.size()) != reduction.kernel.num_vertices()) {
    throw ParameterError("kernel coloring has the wrong length");
  }
  ReplayResult out;
  Coloring phi(static_cast<std::size_t>(n), 0);
  Adjacency adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < reduction.kernel_vertices.size(); ++i) {
    const Vertex v = reduction.kernel_vertices[i];
    phi[static_cast<std::size_t>(v)] = kernel_coloring[i];
    for (Vertex w : reduction.kernel.neighbors(static_cast<Vertex>(i))) {
      adj[static_cast<std::size_t>(v)].insert(reduction.kernel_vertices[static_cast<std::size_t>(w)]);
    }
  }
  for (auto it = reduction.trace.rbegin(); it != reduction.trace.rend(); ++it) {
    const ReductionStep& step = *it;
    const Vertex v = step.removed;
    std::set<Color> forbidden;
    const auto& nb = step.neighbors;
    auto color_of = [&](Vertex u) { return phi[static_cast<std::size_t>(u)]; };
    if (!nb.empty()) {
      const Vertex x = nb.front(), y = nb.back();
      const auto cx = unique_color(adj[static_cast<std::size_t>(x)], phi, color_of(y));
      const auto cy = unique_color(adj[static_cast<std::size_t>(y)], phi, color_of(x));
      forbidden.insert(color_of(x));
      forbidden.insert(color_of(y));
      if (!step.added_edge) {
        if (cx) forbidden.insert(*cx);
        if (cy) forbidden.insert(*cy);
      } else {
        for (auto [u, cu, other] : {std::tuple{x, cx, y}, std::tuple{y, cy, x}}) {
          if (cu && *cu == color_of(other)) {
            for (Vertex z : adj[static_cast<std::size_t>(u)]) {
              if (z != other) forbidden.insert(color_of(z));
            }
          } else if (cu) {
            forbidden.insert(*cu);
          }
        }
        adj[static_cast<std::size_t>(x)].erase(y);
        adj[static_cast<std::size_t>(y)].erase(x);
      }
    }
    for (Vertex u : nb) {
      adj[static_cast<std::size_t>(u)].insert(v);
      adj[static_cast<std::size_t>(v)].insert(u);
    }
    bool placed = false;
    for (Color c : lists[v]) {
      if (forbidden.count(c)) continue;
      phi[static_cast<std::size_t>(v)] = c;
      bool ok = neighbourhood_ok(adj[static_cast<std::size_t>(v)], phi);
      for (Vertex u : nb) {
        ok = ok && color_of(u) != c && neighbourhood_ok(adj[static_cast<std::size_t>(u)], phi);
      }
      if (ok) {
        placed = true;
        break;
      }
    }
    if (!placed) {
      out.blocking = v;
      out.message = "no admissible color left in the list of vertex " + std::to_string(v + 1);
      return out;
    }
  }
  out.coloring = std::move(phi);
  return out;
}

}  // namespace pcf
