#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "mods/digraph.hpp"

namespace mods {

enum class PerturbKind { arc_removal, vertex_removal, arc_addition, arc_reversal };

std::string_view to_string(PerturbKind k) noexcept;

using PerturbTarget = std::variant<Arc, Vertex>;

// gamma_m+ before and after one structural edit, together with the range
// the corresponding theorem admits:
//   arc removal     k     <= after <= k + 1
//   vertex removal  k - 1 <= after <= max(k, k - 1 + d+(v))
//   arc addition    k - 1 <= after <= k
//   arc reversal    k - 1 <= after <= k + 1
// Targets are reported in the labels of the input digraph.
struct PerturbationRecord {
  PerturbKind kind = PerturbKind::arc_removal;
  PerturbTarget target;
  std::size_t before = 0;
  std::size_t after = 0;
  std::size_t bound_low = 0;
  std::size_t bound_high = 0;
  bool within_bounds = false;
  // d+(v) in the input digraph, for vertex removal.
  std::optional<std::size_t> removed_out_degree;
};

// Throws the digraph edit errors (missing_arc, duplicate_arc, loop,
// last_vertex) when the target does not fit the kind.
PerturbationRecord perturb(const Digraph& d, PerturbKind kind, PerturbTarget target);

// Every MODS of minimum cardinality, in lexicographic order.
std::vector<VertexSet> enumerate_minimum_mods(const Digraph& d);

// gamma_m+(D - e) = gamma_m+(D) + 1, by solving both digraphs.
bool is_critical_arc_direct(const Digraph& d, Arc e);

// Every minimum MODS S has u in S, v in pn+(u,S) and |N+[S]| = ceil(n/2),
// where e = (u,v).
bool is_critical_arc_characterized(const Digraph& d, Arc e);

}  // namespace mods
