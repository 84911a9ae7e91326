#pragma once

#include <vector>

#include "mods/detail/cover_search.hpp"
#include "mods/detail/mask.hpp"
#include "mods/digraph.hpp"
#include "mods/graph.hpp"

namespace mods::detail {

inline std::vector<VertexSet> closed_out_sets(const Digraph& d) {
  std::vector<VertexSet> out;
  out.reserve(d.order());
  for (Vertex v = 0; v < d.order(); ++v) out.push_back(d.closed_out_neighbors(v));
  return out;
}

inline std::vector<VertexSet> closed_sets(const Graph& g) {
  std::vector<VertexSet> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet s = g.neighbors(v);
    s.insert(v);
    out.push_back(std::move(s));
  }
  return out;
}

// Builds a CoverSearch over the narrowest mask type and passes it to f.
template <class F>
decltype(auto) with_cover_search(const std::vector<VertexSet>& closed, std::size_t target, F&& f) {
  const std::size_t n = closed.size();
  return dispatch_mask(n, [&]<class Mask>(std::type_identity<Mask>) {
    std::vector<Mask> masks;
    masks.reserve(n);
    const Mask proto = make_mask<Mask>(n);
    for (const auto& s : closed) masks.push_back(mask_from(s, proto));
    const CoverSearch<Mask> search(std::move(masks), target);
    return f(search);
  });
}

inline VertexSet to_vertex_set(std::size_t n, const std::vector<Vertex>& members) {
  return VertexSet(n, std::span<const Vertex>(members));
}

}  // namespace mods::detail
