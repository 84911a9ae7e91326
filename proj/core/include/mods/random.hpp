#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mods/digraph.hpp"
#include "mods/graph.hpp"

namespace mods {

// Deterministic generator used by every seeded operation.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Conversions to doubles and bounded integers are done here rather
// than through <random> distributions, whose results vary between standard
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Every ordered pair (u,v), u != v, visited in row-major order, becomes an
// arc with probability p. Throws Error(invalid_argument) for p outside [0,1].
Digraph random_digraph(std::size_t n, double p, std::uint64_t seed);

// Every pair {u,v}, u < v, visited in lexicographic order, becomes an edge
// with probability p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// One fair coin per edge, in edge order.
Orientation random_orientation(const Graph& g, std::uint64_t seed);

}  // namespace mods
