#include "pcf/list_size.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "pcf/stirling.hpp"

namespace pcf {

namespace {

void require_min_edge_size(const Hypergraph& h) {
  for (const auto& e : h.edges()) {
    if (e.size() < 3) throw HypothesisError("hypothesis failed: every hyperedge has at least 3 vertices");
  }
}

// Nonnegative value x + y sqrt(Q) where at most one of x, y is non-zero.
struct SurdTerm {
  Rational x;
  Rational y;
};

bool surd_less(const SurdTerm& a, const SurdTerm& b, const Rational& q) {
  auto square = [&](const SurdTerm& s) { return s.y == 0 ? Rational(s.x * s.x) : Rational(s.y * s.y * q); };
  if ((a.y == 0) == (b.y == 0)) return a.y == 0 ? a.x < b.x : a.y < b.y;
  return square(a) < square(b);
}

// R^{1-k} with R = sqrt(q), k >= 1.
SurdTerm radical_power(const Rational& q, int k, const Rational& scale) {
  const int e = 1 - k;
  if (e % 2 == 0) return {scale * pow(q, e / 2), 0};
  return {0, scale * pow(q, (e - 1) / 2)};
}

}  // namespace

Rational required_list_size(const ConflictInstance& inst, const Rational& beta, int t) {
  if (beta <= 0) throw ParameterError("beta must be positive");
  if (t < 1) throw ParameterError("t must be at least 1");
  const Rational base = Rational(inst.graph.max_degree()) + beta;
  std::map<std::size_t, Rational> per_size;
  auto edge_sum = [&](std::size_t size) -> const Rational& {
    auto it = per_size.find(size);
    if (it == per_size.end()) it = per_size.emplace(size, pcf_sum_exact(static_cast<int>(size), beta, t + 1)).first;
    return it->second;
  };
  Rational best = base;
  for (Vertex v = 0; v < inst.num_vertices(); ++v) {
    Rational total = base;
    for (std::size_t index : inst.hypergraph.incident(v)) total += edge_sum(inst.hypergraph.edge(index).size());
    if (total > best) best = total;
  }
  return best;
}

ListSizeResult a_main(const BigInt& delta, const Rational& beta) {
  if (delta < 0) throw ParameterError("Delta must be non-negative");
  if (beta <= 0) throw ParameterError("beta must be positive");
  ListSizeResult out;
  const Rational d(delta);
  out.a = ceil_plus_sqrt(d + beta, d);
  if (beta > d) out.unmet.emplace_back("beta <= Delta");
  const bool regime = (delta >= 124811000 && beta >= Rational(6550826, 10000000) * d) ||
                      (delta >= 8000 && 3 * beta >= 2 * d) || (delta >= 750 && 5 * beta >= 4 * d);
  if (!regime) {
    out.unmet.emplace_back(
        "one of (Delta >= 1.24811e8, beta >= 0.6550826 Delta), (Delta >= 8000, beta >= 2/3 Delta), "
        "(Delta >= 750, beta >= 0.8 Delta)");
  }
  return out;
}

ListSizeResult a_hyper(const ConflictInstance& inst, const BigInt& R, const Rational& beta) {
  if (R < 1) throw ParameterError("R must be a positive integer");
  if (beta <= 0) throw ParameterError("beta must be positive");
  const Hypergraph& h = inst.hypergraph;
  require_min_edge_size(h);
  if (BigInt(h.rank()) > R) throw HypothesisError("hypothesis failed: rank(H) <= R");
  ListSizeResult out;
  if (beta < Rational(6550826, 10000000) * R || beta > Rational(R)) out.unmet.emplace_back("0.6550826 R <= beta <= R");
  const long double log_r = log_of(R);
  if (log_r < 5e6L) out.unmet.emplace_back("R >= e^(5e6)");
  const long double log_beta = log_of(beta);
  const long double neg_inf = -std::numeric_limits<long double>::infinity();
  long double best = neg_inf;
  for (Vertex v = 0; v < inst.num_vertices(); ++v) {
    if (h.degree(v) == 0) continue;
    const int k = (*h.min_rank(v) + 1) / 2;
    const long double first = log_r > 0 ? std::log(2.0L) + (1 - k) * log_beta + 2 * k * std::log(log_r) : neg_inf;
    const long double second = log_r * log_r * std::log1p(-1e-8L);
    best = std::max(best, std::log(static_cast<long double>(h.degree(v))) + std::max(first, second));
  }
  const Rational base = Rational(inst.graph.max_degree()) + beta;
  if (best == neg_inf) {
    out.a = pcf::ceil(base);
    return out;
  }
  const BigInt whole = pcf::floor(base);
  const long double frac = to_long_double(Rational(base - Rational(whole)));
  if (best < 40.0L) {
    const long double extra = std::exp(best);
    const long double extra_whole = std::floor(extra);
    const long double s = frac + (extra - extra_whole);
    // The vertex term is strictly positive even when exp underflows, so s > 0.
    const long up = std::max(1L, static_cast<long>(std::ceil(s)));
    out.a = whole + BigInt(static_cast<unsigned long>(extra_whole)) + BigInt(up);
    out.approximate = std::nearbyint(s) != 0 && std::fabs(s - std::nearbyint(s)) < 1e-12L;
  } else {
    // Beyond 2^57 the fractional parts are below long double resolution.
    if (best > 11000.0L) throw ParameterError("list size exceeds the representable range");
    int exponent = 0;
    const long double mantissa = std::frexp(std::exp(best), &exponent);
    const auto top = static_cast<unsigned long>(std::ldexp(mantissa, 64));
    BigInt extra = BigInt(top >> 32) << 32;
    extra += BigInt(top & 0xffffffffUL);
    extra = exponent >= 64 ? BigInt(extra << static_cast<mp_bitcnt_t>(exponent - 64))
                           : BigInt(extra >> static_cast<mp_bitcnt_t>(64 - exponent));
    out.a = whole + extra + 1;
    out.approximate = true;
  }
  return out;
}

BigInt rank4_list_size(const Rational& max_degree_g, const Rational& max_degree_h, const Rational& R_squared) {
  if (R_squared <= 0) throw ParameterError("R must be positive");
  // Delta(G) + R + Delta(H)(3/R + 1/R^2) = A + B R with R = sqrt(Q):
  // 3/R = 3R/Q and 1/R^2 = 1/Q.
  const Rational A = max_degree_g + max_degree_h / R_squared;
  const Rational B = 1 + 3 * max_degree_h / R_squared;
  return ceil_plus_sqrt(A, Rational(B * B * R_squared));
}

ListSizeResult a_fixed_rank(const ConflictInstance& inst, const Rational& R_squared, int r, const Rational& eps,
                            FixedRankBranch branch) {
  if (R_squared <= 0) throw ParameterError("R must be positive");
  if (r < 1) throw ParameterError("r must be positive");
  const Hypergraph& h = inst.hypergraph;
  require_min_edge_size(h);
  if (h.rank() > r) throw HypothesisError("hypothesis failed: rank(H) <= r");
  ListSizeResult out;
  const Rational delta_g(inst.graph.max_degree());
  if (branch == FixedRankBranch::rank_at_most_4) {
    if (r > 4) throw HypothesisError("hypothesis failed: r <= 4");
    out.a = rank4_list_size(delta_g, Rational(h.max_degree()), R_squared);
    return out;
  }
  if (eps <= 0) throw ParameterError("eps must be positive");
  const Rational floor_r = (1 + 1 / eps) * r;
  if (R_squared < floor_r * floor_r) throw HypothesisError("hypothesis failed: R >= (1 + 1/eps) r");
  SurdTerm best{0, 0};
  for (Vertex v = 0; v < inst.num_vertices(); ++v) {
    if (h.degree(v) == 0) continue;
    const int k = (*h.min_rank(v) + 1) / 2;
    const Rational scale = Rational(h.degree(v)) * Rational(pow(BigInt(r), static_cast<unsigned long>(k)));
    SurdTerm term = radical_power(R_squared, k, scale);
    if (surd_less(best, term, R_squared)) best = term;
  }
  const Rational A = delta_g + (1 + eps) * best.x;
  const Rational B = 1 + (1 + eps) * best.y;
  out.a = ceil_plus_sqrt(A, Rational(B * B * R_squared));
  return out;
}

BigInt star_linear_palette(const BigInt& delta) {
  if (delta < 0) throw ParameterError("Delta must be non-negative");
  const Rational d(delta);
  return ceil_plus_sqrt(d + Rational(1, 3), Rational(30 * d * d * d));
}

}  // namespace pcf
