#include "mods/random.hpp"

#include <limits>
#include <string>

#include "mods/error.hpp"

namespace mods {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::invalid_argument, "probability must lie in [0,1], got " + std::to_string(p));
  }
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) fail(ErrorCode::invalid_argument, "Rng::below needs a positive bound");
  // Rejection sampling keeps the result unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

Digraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  if (n == 0) fail(ErrorCode::invalid_argument, "random digraph needs n >= 1");
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.bernoulli(p)) arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return Digraph(n, arcs);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  if (n == 0) fail(ErrorCode::invalid_argument, "random graph needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph(n, edges);
}

Orientation random_orientation(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<bool> reversed(g.edge_count());
  for (std::size_t i = 0; i < reversed.size(); ++i) reversed[i] = (rng.next() >> 63) != 0;
  return Orientation(g, std::move(reversed));
}

}  // namespace mods
