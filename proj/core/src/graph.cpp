#include "mods/graph.hpp"

#include <algorithm>

#include "mods/error.hpp"

namespace mods {

std::string Edge::to_string() const {
  return "{" + std::to_string(lo) + "," + std::to_string(hi) + "}";
}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : edges_(edges.begin(), edges.end()) {
  if (order == 0) fail(ErrorCode::invalid_argument, "graph needs at least one vertex");
  adj_.assign(order, VertexSet(order));
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge e = edges_[i];
    if (e.hi >= order) {
      fail(ErrorCode::invalid_argument,
           "edge " + e.to_string() + " outside vertex range 0.." + std::to_string(order - 1));
    }
    if (e.lo == e.hi) fail(ErrorCode::loop, "loop " + e.to_string() + " not allowed");
    if (i > 0 && edges_[i - 1] == e) fail(ErrorCode::duplicate_arc, "duplicate edge " + e.to_string());
    adj_[e.lo].insert(e.hi);
    adj_[e.hi].insert(e.lo);
  }
}

const VertexSet& Graph::neighbors(Vertex v) const {
  if (v >= order()) {
    fail(ErrorCode::invalid_argument,
         "vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(order()));
  }
  return adj_[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept { return a < order() && adj_[a].contains(b); }

bool Graph::connected() const {
  VertexSet seen(order());
  std::vector<Vertex> stack{0};
  seen.insert(0);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[v]) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen.count() == order();
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

Orientation::Orientation(Graph base, std::vector<bool> reversed)
    : base_(std::move(base)), reversed_(std::move(reversed)) {
  if (reversed_.size() != base_.edge_count()) {
    fail(ErrorCode::invalid_argument, "orientation needs one direction per edge (" +
                                          std::to_string(base_.edge_count()) + "), got " +
                                          std::to_string(reversed_.size()));
  }
}

Orientation Orientation::from_code(Graph base, std::uint64_t code) {
  const auto m = base.edge_count();
  if (m > 63) fail(ErrorCode::limit_exceeded, "orientation codes support at most 63 edges");
  std::vector<bool> reversed(m);
  for (std::size_t i = 0; i < m; ++i) reversed[i] = ((code >> i) & 1U) != 0;
  return Orientation(std::move(base), std::move(reversed));
}

Arc Orientation::arc(std::size_t edge_index) const {
  const Edge e = base_.edges().at(edge_index);
  return reversed_[edge_index] ? Arc{e.hi, e.lo} : Arc{e.lo, e.hi};
}

std::vector<Arc> Orientation::arcs() const {
  std::vector<Arc> out;
  out.reserve(reversed_.size());
  for (std::size_t i = 0; i < reversed_.size(); ++i) out.push_back(arc(i));
  return out;
}

Digraph Orientation::digraph() const {
  const auto a = arcs();
  return Digraph(base_.order(), a);
}

std::uint64_t Orientation::code() const {
  if (reversed_.size() > 63) fail(ErrorCode::limit_exceeded, "orientation codes support at most 63 edges");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < reversed_.size(); ++i) {
    if (reversed_[i]) code |= std::uint64_t{1} << i;
  }
  return code;
}

}  // namespace mods
