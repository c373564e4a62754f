#pragma once

#include <cstdint>
#include <variant>

#include "pcf/graph.hpp"

namespace pcf {

namespace gen {

struct Gnp {
  int n = 0;
  double p = 0.0;
};
struct Cycle {
  int n = 0;
};
struct Complete {
  int n = 0;
};
struct RandomRegular {
  int n = 0;
  int k = 0;
};

}  // namespace gen

using GraphKind = std::variant<gen::Gnp, gen::Cycle, gen::Complete, gen::RandomRegular>;

/// Deterministic for a fixed seed. Throws ParameterError on invalid
/// parameters (n < 1, p outside [0, 1], n < 3 for a cycle, nk odd or
/// k >= n for a regular graph).
Graph generate(const GraphKind& kind, std::uint64_t seed);

}  // namespace pcf
