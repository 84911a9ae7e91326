#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mods/vertex_set.hpp"

namespace mods {

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Arc&) const = default;
  std::string to_string() const;
};

// Immutable loopless digraph on vertices 0..n-1 without parallel arcs.
// Opposite arcs (u,v) and (v,u) may coexist.
class Digraph {
 public:
  // Throws Error(loop / duplicate_arc / invalid_argument) on malformed input.
  Digraph(std::size_t order, std::span<const Arc> arcs);
  Digraph(std::size_t order, std::initializer_list<Arc> arcs)
      : Digraph(order, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  // Sorted by (tail, head).
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  const VertexSet& out_neighbors(Vertex v) const;
  const VertexSet& in_neighbors(Vertex v) const;
  bool has_arc(Vertex tail, Vertex head) const noexcept;

  std::size_t out_degree(Vertex v) const { return out_neighbors(v).count(); }
  std::size_t in_degree(Vertex v) const { return in_neighbors(v).count(); }
  std::size_t max_out_degree() const noexcept { return max_out_degree_; }

  // N+[v] = {v} u N+(v).
  VertexSet closed_out_neighbors(Vertex v) const;

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all_vertices() const { return VertexSet::full(order()); }

  bool operator==(const Digraph& other) const { return arcs_ == other.arcs_ && order() == other.order(); }

 private:
  void check_vertex(Vertex v) const;

  std::vector<Arc> arcs_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::size_t max_out_degree_ = 0;
};

// N+[S] = S u { w : (u,w) is an arc for some u in S }.
VertexSet closed_out_neighborhood(const Digraph& d, const VertexSet& s);

// pn+(u,S): vertices outside S whose only in-neighbor inside S is u.
// Throws Error(invalid_argument) unless u is in S.
VertexSet private_out_neighbors(const Digraph& d, const VertexSet& s, Vertex u);

// Vertices that leave N+[S] when u is dropped from S, i.e.
// N+[S] \ N+[S \ {u}]. Equals pn+(u,S) plus u itself exactly when u has no
// in-neighbor in S.
VertexSet exclusive_coverage(const Digraph& d, const VertexSet& s, Vertex u);

struct InducedSubdigraph {
  Digraph digraph;
  // original[i] is the label in the parent digraph of vertex i.
  std::vector<Vertex> original;
};

// D[X], relabelled to 0..|X|-1 in ascending order of original label.
InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& x);

struct VertexRemoval {
  Digraph digraph;
  std::vector<Vertex> original;
};

// Functional edits; each returns a new digraph.
Digraph remove_arc(const Digraph& d, Arc e);
Digraph add_arc(const Digraph& d, Arc e);
Digraph reverse_arc(const Digraph& d, Arc e);
VertexRemoval remove_vertex(const Digraph& d, Vertex v);

}  // namespace mods
