#include "mods/digraph.hpp"

#include <algorithm>

#include "mods/error.hpp"

namespace mods {

std::string Arc::to_string() const {
  return "(" + std::to_string(tail) + "," + std::to_string(head) + ")";
}

Digraph::Digraph(std::size_t order, std::span<const Arc> arcs) : arcs_(arcs.begin(), arcs.end()) {
  if (order == 0) fail(ErrorCode::invalid_argument, "digraph needs at least one vertex");
  out_.assign(order, VertexSet(order));
  in_.assign(order, VertexSet(order));
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc a = arcs_[i];
    if (a.tail >= order || a.head >= order) {
      fail(ErrorCode::invalid_argument,
           "arc " + a.to_string() + " outside vertex range 0.." + std::to_string(order - 1));
    }
    if (a.tail == a.head) fail(ErrorCode::loop, "loop " + a.to_string() + " not allowed");
    if (i > 0 && arcs_[i - 1] == a) fail(ErrorCode::duplicate_arc, "duplicate arc " + a.to_string());
    out_[a.tail].insert(a.head);
    in_[a.head].insert(a.tail);
  }
  for (const auto& s : out_) max_out_degree_ = std::max(max_out_degree_, s.count());
}

void Digraph::check_vertex(Vertex v) const {
  if (v >= order()) {
    fail(ErrorCode::invalid_argument,
         "vertex " + std::to_string(v) + " out of range for digraph of order " + std::to_string(order()));
  }
}

const VertexSet& Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  return out_[v];
}

const VertexSet& Digraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  return in_[v];
}

bool Digraph::has_arc(Vertex tail, Vertex head) const noexcept {
  return tail < order() && out_[tail].contains(head);
}

VertexSet Digraph::closed_out_neighbors(Vertex v) const {
  VertexSet s = out_neighbors(v);
  s.insert(v);
  return s;
}

VertexSet closed_out_neighborhood(const Digraph& d, const VertexSet& s) {
  VertexSet out = s;
  for (Vertex u : s) out |= d.out_neighbors(u);
  return out;
}

VertexSet private_out_neighbors(const Digraph& d, const VertexSet& s, Vertex u) {
  if (!s.contains(u)) {
    fail(ErrorCode::invalid_argument, "vertex " + std::to_string(u) + " is not in " + s.to_string());
  }
  VertexSet others = s;
  others.erase(u);
  // Out-neighbors of u outside S that no other member of S reaches.
  VertexSet out = d.out_neighbors(u) - s;
  for (Vertex w : others) out -= d.out_neighbors(w);
  return out;
}

VertexSet exclusive_coverage(const Digraph& d, const VertexSet& s, Vertex u) {
  VertexSet out = private_out_neighbors(d, s, u);
  VertexSet others = s;
  others.erase(u);
  if (!d.in_neighbors(u).intersects(others)) out.insert(u);
  return out;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& x) {
  if (x.empty()) fail(ErrorCode::invalid_argument, "induced subdigraph of an empty vertex set");
  std::vector<Vertex> original = x.to_vector();
  std::vector<Vertex> index(d.order(), 0);
  for (std::size_t i = 0; i < original.size(); ++i) index[original[i]] = static_cast<Vertex>(i);
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (x.contains(a.tail) && x.contains(a.head)) arcs.push_back({index[a.tail], index[a.head]});
  }
  return {Digraph(original.size(), arcs), std::move(original)};
}

Digraph remove_arc(const Digraph& d, Arc e) {
  if (!d.has_arc(e.tail, e.head)) fail(ErrorCode::missing_arc, "arc " + e.to_string() + " not present");
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count() - 1);
  std::copy_if(d.arcs().begin(), d.arcs().end(), std::back_inserter(arcs),
               [&](const Arc& a) { return a != e; });
  return Digraph(d.order(), arcs);
}

Digraph add_arc(const Digraph& d, Arc e) {
  if (e.tail == e.head) fail(ErrorCode::loop, "loop " + e.to_string() + " not allowed");
  if (e.tail >= d.order() || e.head >= d.order()) {
    fail(ErrorCode::invalid_argument, "arc " + e.to_string() + " outside vertex range");
  }
  if (d.has_arc(e.tail, e.head)) fail(ErrorCode::duplicate_arc, "arc " + e.to_string() + " already present");
  std::vector<Arc> arcs = d.arcs();
  arcs.push_back(e);
  return Digraph(d.order(), arcs);
}

Digraph reverse_arc(const Digraph& d, Arc e) {
  if (!d.has_arc(e.tail, e.head)) fail(ErrorCode::missing_arc, "arc " + e.to_string() + " not present");
  const Arc reversed{e.head, e.tail};
  if (d.has_arc(reversed.tail, reversed.head)) {
    fail(ErrorCode::duplicate_arc, "reversed arc " + reversed.to_string() + " already present");
  }
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) arcs.push_back(a == e ? reversed : a);
  return Digraph(d.order(), arcs);
}

VertexRemoval remove_vertex(const Digraph& d, Vertex v) {
  if (v >= d.order()) {
    fail(ErrorCode::invalid_argument, "vertex " + std::to_string(v) + " out of range");
  }
  if (d.order() < 2) fail(ErrorCode::last_vertex, "cannot remove the last vertex");
  VertexSet keep = d.all_vertices();
  keep.erase(v);
  auto induced = induced_subdigraph(d, keep);
  return {std::move(induced.digraph), std::move(induced.original)};
}

}  // namespace mods
