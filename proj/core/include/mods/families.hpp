#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mods/digraph.hpp"
#include "mods/graph.hpp"

namespace mods {

using Instance = std::variant<Digraph, Graph>;

enum class Family {
  dipath,
  dicycle,
  figure1,
  empty,
  path,
  cycle,
  complete,
  star,
  doublestar,
  wheel,
  bipartite,
  randdigraph,
};

// Parsed form of strings such as "dipath:8", "doublestar:3,4" or
// "randdigraph:8,0.3,42".
struct FamilySpec {
  Family family = Family::dipath;
  std::vector<std::size_t> sizes;
  double probability = 0.0;
  std::uint64_t seed = 0;

  // Throws Error(parse_error) on unknown names or malformed parameters.
  static FamilySpec parse(std::string_view text);
  // nullopt when the prefix before ':' is not a known family name.
  static std::optional<FamilySpec> try_parse(std::string_view text);

  bool directed() const noexcept;
  std::string to_string() const;
};

// Throws Error(invalid_argument) naming the violated parameter constraint.
Instance make_family(const FamilySpec& spec);

Digraph directed_path(std::size_t n);
Digraph directed_cycle(std::size_t n);
Digraph empty_digraph(std::size_t n);

// Vertex layout: u = 0, v = 1, s-block 2..k+1, t-block k+2..2k+3.
// Every s-vertex has arcs to u and v, every t-vertex an arc to v.
Digraph figure1_digraph(std::size_t k);

namespace figure1_layout {
constexpr Vertex u = 0;
constexpr Vertex v = 1;
constexpr Vertex s(std::size_t i) { return static_cast<Vertex>(2 + i); }
inline Vertex t(std::size_t k, std::size_t j) { return static_cast<Vertex>(k + 2 + j); }
}  // namespace figure1_layout

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// K_{1,n-1}; the center is vertex 0.
Graph star_graph(std::size_t n);
// Stems 0 (with a leaves 2..a+1) and 1 (with b leaves a+2..a+b+1).
Graph double_star(std::size_t a, std::size_t b);
// W_n = hub + C_{n-1}; hub 0, rim 1..n-1 in cycle order.
Graph wheel_graph(std::size_t n);
// Parts 0..r-1 and r..r+s-1.
Graph complete_bipartite(std::size_t r, std::size_t s);

}  // namespace mods
