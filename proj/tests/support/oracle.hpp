#pragma once

// Brute-force reference implementations for small instances (n <= 20).
// They share nothing with the library beyond reading arc lists, so the
// library's search code is checked against plain enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "mods/digraph.hpp"
#include "mods/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<Mask> closed_out(const mods::Digraph& d) {
  std::vector<Mask> c(d.order());
  for (std::size_t v = 0; v < d.order(); ++v) c[v] = Mask{1} << v;
  for (const auto& a : d.arcs()) c[a.tail] |= Mask{1} << a.head;
  return c;
}

inline std::vector<Mask> closed_undirected(const mods::Graph& g) {
  std::vector<Mask> c(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) c[v] = Mask{1} << v;
  for (const auto& e : g.edges()) {
    c[e.lo] |= Mask{1} << e.hi;
    c[e.hi] |= Mask{1} << e.lo;
  }
  return c;
}

inline Mask cover(const std::vector<Mask>& closed, Mask s) {
  Mask out = 0;
  for (std::size_t v = 0; v < closed.size(); ++v) {
    if ((s >> v) & 1U) out |= closed[v];
  }
  return out;
}

inline std::vector<std::uint32_t> members(Mask s) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < 32; ++v) {
    if ((s >> v) & 1U) out.push_back(v);
  }
  return out;
}

inline std::size_t half(std::size_t n) { return (n + 1) / 2; }

struct Best {
  std::size_t value = 0;
  std::vector<std::uint32_t> witness;
};

// Smallest selection covering >= target; ties broken by lexicographic order
// of the ascending member lists.
inline Best min_cover(const std::vector<Mask>& closed, std::size_t target) {
  const std::size_t n = closed.size();
  Best best;
  bool found = false;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (static_cast<std::size_t>(std::popcount(cover(closed, s))) < target) continue;
    const auto m = members(s);
    if (!found || m.size() < best.value || (m.size() == best.value && m < best.witness)) {
      best.value = m.size();
      best.witness = m;
      found = true;
    }
  }
  return best;
}

inline Best gamma_m_plus(const mods::Digraph& d) { return min_cover(closed_out(d), half(d.order())); }
inline Best gamma_plus(const mods::Digraph& d) { return min_cover(closed_out(d), d.order()); }
inline Best gamma_m(const mods::Graph& g) { return min_cover(closed_undirected(g), half(g.order())); }

inline bool is_mods(const mods::Digraph& d, Mask s) {
  return static_cast<std::size_t>(std::popcount(cover(closed_out(d), s))) >= half(d.order());
}

inline bool is_minimal_mods(const mods::Digraph& d, Mask s) {
  if (!is_mods(d, s)) return false;
  for (std::size_t v = 0; v < d.order(); ++v) {
    if (((s >> v) & 1U) && is_mods(d, s & ~(Mask{1} << v))) return false;
  }
  return true;
}

// Every minimal MODS, as masks in increasing numeric order.
inline std::vector<Mask> minimal_mods(const mods::Digraph& d) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << d.order()); ++s) {
    if (is_minimal_mods(d, s)) out.push_back(s);
  }
  return out;
}

// Longest simple directed path (arcs) by depth-first search.
inline std::size_t longest_path(const mods::Digraph& d) {
  const auto n = d.order();
  std::vector<std::vector<std::uint32_t>> out(n);
  for (const auto& a : d.arcs()) out[a.tail].push_back(a.head);
  std::size_t best = 0;
  std::function<void(std::uint32_t, Mask, std::size_t)> go = [&](std::uint32_t v, Mask seen, std::size_t len) {
    best = std::max(best, len);
    for (auto w : out[v]) {
      if (!((seen >> w) & 1U)) go(w, seen | (Mask{1} << w), len + 1);
    }
  };
  for (std::uint32_t v = 0; v < n; ++v) go(v, Mask{1} << v, 0);
  return best;
}

// Longest directed cycle length, 0 if acyclic.
inline std::size_t longest_cycle(const mods::Digraph& d) {
  const auto n = d.order();
  std::vector<std::vector<std::uint32_t>> out(n);
  for (const auto& a : d.arcs()) out[a.tail].push_back(a.head);
  std::size_t best = 0;
  for (std::uint32_t start = 0; start < n; ++start) {
    std::function<void(std::uint32_t, Mask, std::size_t)> go = [&](std::uint32_t v, Mask seen, std::size_t len) {
      for (auto w : out[v]) {
        if (w == start) best = std::max(best, len + 1);
        if (w > start && !((seen >> w) & 1U)) go(w, seen | (Mask{1} << w), len + 1);
      }
    };
    go(start, Mask{1} << start, 0);
  }
  return best;
}

// gamma_m+ of every orientation of g, by code.
inline std::vector<std::size_t> orientation_values(const mods::Graph& g) {
  const auto m = g.edge_count();
  std::vector<std::size_t> values;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    std::vector<Mask> closed(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) closed[v] = Mask{1} << v;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& e = g.edges()[i];
      if ((code >> i) & 1U) {
        closed[e.hi] |= Mask{1} << e.lo;
      } else {
        closed[e.lo] |= Mask{1} << e.hi;
      }
    }
    values.push_back(min_cover(closed, half(g.order())).value);
  }
  return values;
}

}  // namespace oracle
