#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mods/digraph.hpp"
#include "mods/vertex_set.hpp"

namespace mods {

// Unordered edge, normalized so that lo < hi.
struct Edge {
  Vertex lo = 0;
  Vertex hi = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
  std::string to_string() const;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Ascending lexicographic order; this fixes the orientation bit order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const VertexSet& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).count(); }
  bool has_edge(Vertex a, Vertex b) const noexcept;
  bool connected() const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && order() == other.order(); }

 private:
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
};

// N[S] in the undirected sense.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

// One direction per edge of a base graph. Bit i of the direction vector
// refers to edges()[i]: false orients lo -> hi, true orients hi -> lo.
class Orientation {
 public:
  Orientation(Graph base, std::vector<bool> reversed);

  // Binary-counter encoding; bit i of code is the direction of edge i.
  // Requires edge_count() <= 63.
  static Orientation from_code(Graph base, std::uint64_t code);

  const Graph& base() const noexcept { return base_; }
  const std::vector<bool>& reversed() const noexcept { return reversed_; }
  Arc arc(std::size_t edge_index) const;
  std::vector<Arc> arcs() const;
  Digraph digraph() const;
  std::uint64_t code() const;

  bool operator==(const Orientation& other) const = default;

 private:
  Graph base_;
  std::vector<bool> reversed_;
};

}  // namespace mods
