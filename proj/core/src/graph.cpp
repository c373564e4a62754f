#include "pcf/graph.hpp"

#include <algorithm>
#include <string>

#include "pcf/numeric.hpp"

namespace pcf {

namespace {

void check_vertex(Vertex v, int n) {
  if (v < 0 || v >= n) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
  }
}

void sort_unique(std::vector<Vertex>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw ParameterError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& list : adjacency_) {
    sort_unique(list);
    twice += list.size();
  }
  num_edges_ = twice / 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Hypergraph::Hypergraph(int n) : Hypergraph(n, {}) {}

Hypergraph::Hypergraph(int n, std::vector<std::vector<Vertex>> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw ParameterError("negative vertex count");
  for (auto& e : edges_) {
    if (e.empty()) throw ParameterError("hyperedges must be non-empty");
    for (Vertex v : e) check_vertex(v, n);
    sort_unique(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  incidence_.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (Vertex v : edges_[i]) incidence_[static_cast<std::size_t>(v)].push_back(i);
  }
}

int Hypergraph::max_degree() const {
  int best = 0;
  for (const auto& list : incidence_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Hypergraph::rank() const {
  int best = 0;
  for (const auto& e : edges_) best = std::max(best, static_cast<int>(e.size()));
  return best;
}

std::optional<int> Hypergraph::min_rank(Vertex v) const {
  std::optional<int> best;
  for (std::size_t index : incident(v)) {
    const int size = static_cast<int>(edges_[index].size());
    if (!best || size < *best) best = size;
  }
  return best;
}

ConflictInstance::ConflictInstance(Graph g, Hypergraph h) : graph(std::move(g)), hypergraph(std::move(h)) {
  if (graph.num_vertices() != hypergraph.num_vertices()) {
    throw ParameterError("graph and hypergraph vertex counts differ");
  }
}

Hypergraph neighborhood_hypergraph(const Graph& g) {
  std::vector<std::vector<Vertex>> edges;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) edges.push_back(g.neighbors(v));
  }
  return Hypergraph(g.num_vertices(), std::move(edges));
}

Hypergraph star_linear_hypergraph(const Graph& g) {
  std::vector<std::vector<Vertex>> edges;
  // A 4-vertex path a-b-c-d is generated from its middle edge bc in both
  // orientations; the constructor's deduplication keeps one copy.
  for (Vertex b = 0; b < g.num_vertices(); ++b) {
    for (Vertex c : g.neighbors(b)) {
      for (Vertex a : g.neighbors(b)) {
        if (a == c) continue;
        for (Vertex d : g.neighbors(c)) {
          if (d == b || d == a) continue;
          edges.push_back({a, b, c, d});
        }
      }
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        for (std::size_t k = j + 1; k < nb.size(); ++k) edges.push_back({nb[i], nb[j], nb[k]});
      }
    }
  }
  return Hypergraph(g.num_vertices(), std::move(edges));
}

DegeneracyOrder degeneracy_ordering(const Graph& g) {
  const int n = g.num_vertices();
  DegeneracyOrder out;
  if (n == 0) return out;
  const int max_deg = g.max_degree();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(max_deg) + 1);
  for (Vertex v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = g.degree(v);
    buckets[static_cast<std::size_t>(g.degree(v))].push_back(v);
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> removal;
  removal.reserve(static_cast<std::size_t>(n));
  int low = 0;
  while (static_cast<int>(removal.size()) < n) {
    low = std::max(0, low - 1);
    // Buckets hold stale entries; skip vertices whose degree has moved on.
    Vertex picked = -1;
    while (picked < 0) {
      auto& bucket = buckets[static_cast<std::size_t>(low)];
      while (!bucket.empty()) {
        Vertex v = bucket.back();
        bucket.pop_back();
        if (!removed[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == low) {
          picked = v;
          break;
        }
      }
      if (picked < 0) ++low;
    }
    out.degeneracy = std::max(out.degeneracy, low);
    removed[static_cast<std::size_t>(picked)] = 1;
    removal.push_back(picked);
    for (Vertex w : g.neighbors(picked)) {
      auto& d = degree[static_cast<std::size_t>(w)];
      if (!removed[static_cast<std::size_t>(w)]) {
        --d;
        buckets[static_cast<std::size_t>(d)].push_back(w);
      }
    }
  }
  out.order.assign(removal.rbegin(), removal.rend());
  return out;
}

}  // namespace pcf
