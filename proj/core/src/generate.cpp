#include "pcf/generate.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "pcf/numeric.hpp"

namespace pcf {

namespace {

void require_vertices(int n) {
  if (n < 1) throw ParameterError("graph needs at least one vertex");
}

Graph gnp(const gen::Gnp& spec, std::mt19937_64& rng) {
  require_vertices(spec.n);
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw ParameterError("edge probability must lie in [0, 1]");
  std::bernoulli_distribution coin(spec.p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < spec.n; ++u) {
    for (Vertex v = u + 1; v < spec.n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(spec.n, edges);
}

Graph cycle(const gen::Cycle& spec) {
  if (spec.n < 3) throw ParameterError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < spec.n; ++v) edges.emplace_back(v, (v + 1) % spec.n);
  return Graph(spec.n, edges);
}

Graph complete(const gen::Complete& spec) {
  require_vertices(spec.n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < spec.n; ++u) {
    for (Vertex v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
  }
  return Graph(spec.n, edges);
}

// Pairing with rejection of loops and repeated edges (Steger-Wormald);
// restarts only when no admissible pair remains.
Graph random_regular(const gen::RandomRegular& spec, std::mt19937_64& rng) {
  require_vertices(spec.n);
  if (spec.k < 0 || spec.k >= spec.n) throw ParameterError("regular degree must lie in [0, n)");
  if ((static_cast<long>(spec.n) * spec.k) % 2 != 0) throw ParameterError("n * k must be even");
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vertex> points;
    for (Vertex v = 0; v < spec.n; ++v) {
      for (int j = 0; j < spec.k; ++j) points.push_back(v);
    }
    std::set<Edge> seen;
    auto admissible = [&](Vertex a, Vertex b) { return a != b && !seen.count({std::min(a, b), std::max(a, b)}); };
    bool stuck = false;
    while (!points.empty() && !stuck) {
      std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
      std::size_t i = 0, j = 0;
      bool found = false;
      for (int tries = 0; tries < 64 && !found; ++tries) {
        i = pick(rng);
        j = pick(rng);
        found = admissible(points[i], points[j]);
      }
      if (!found) {
        std::vector<std::pair<std::size_t, std::size_t>> options;
        for (std::size_t a = 0; a < points.size(); ++a) {
          for (std::size_t b = a + 1; b < points.size(); ++b) {
            if (admissible(points[a], points[b])) options.emplace_back(a, b);
          }
        }
        if (options.empty()) {
          stuck = true;
          break;
        }
        std::tie(i, j) = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      }
      seen.insert({std::min(points[i], points[j]), std::max(points[i], points[j])});
      if (i < j) std::swap(i, j);
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
    }
    if (!stuck) return Graph(spec.n, std::vector<Edge>(seen.begin(), seen.end()));
  }
  throw ParameterError("random regular pairing did not converge");
}

}  // namespace

Graph generate(const GraphKind& kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return std::visit(
      [&](const auto& spec) -> Graph {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, gen::Gnp>) return gnp(spec, rng);
        else if constexpr (std::is_same_v<T, gen::Cycle>) return cycle(spec);
        else if constexpr (std::is_same_v<T, gen::Complete>) return complete(spec);
        else return random_regular(spec, rng);
      },
      kind);
}

}  // namespace pcf
