#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mods/digraph.hpp"
#include "mods/graph.hpp"
#include "mods/vertex_set.hpp"

namespace mods {

enum class Method { exact, oracle, greedy };

std::string_view to_string(Method m) noexcept;
// Accepts "exact", "oracle", "greedy"; throws Error(parse_error) otherwise.
Method parse_method(std::string_view text);

struct SolveResult {
  std::size_t value = 0;
  // Lexicographically smallest set attaining `value` (for exact/oracle).
  VertexSet witness;
  Method method = Method::exact;
  // Search nodes (exact), subsets tested (oracle) or gain evaluations (greedy).
  std::uint64_t explored = 0;
};

// ceil(n/2). |N+[S]| is an integer, so |N+[S]| >= n/2 exactly when
// |N+[S]| >= ceil(n/2); every majority predicate goes through here.
std::size_t majority_threshold(std::size_t n);

bool is_mods(const Digraph& d, const VertexSet& s);
bool is_out_dominating(const Digraph& d, const VertexSet& s);
bool is_majority_dominating(const Graph& g, const VertexSet& s);

// Set majority out-domination number. method must be exact or oracle.
SolveResult gamma_m_plus(const Digraph& d, Method method = Method::exact);
// Out-domination number (N+[S] = V).
SolveResult gamma_plus(const Digraph& d, Method method = Method::exact);
// Set majority domination number of an undirected graph.
SolveResult gamma_m_undirected(const Graph& g, Method method = Method::exact);

// Picks the vertex adding the most uncovered vertices (smallest label on
// ties) until the majority threshold is met. An upper bound on gamma_m_plus.
SolveResult greedy_mods(const Digraph& d);

// True when D has a MODS of at most k vertices.
bool has_mods_within(const Digraph& d, std::size_t k);

// No single-vertex removal leaves a MODS. Throws Error(not_a_mods) when S is
// not a MODS.
bool is_minimal_mods_direct(const Digraph& d, const VertexSet& s);

// Minimality through private out-neighbor counting:
//   |N+[S]| >  ceil(n/2): every v in S has |pn+[v,S]| > |N+[S]| - ceil(n/2)
//   |N+[S]| == ceil(n/2): every v in S has no in-neighbor in S or pn+(v,S) != {}
// where pn+[v,S] is the closed private set exclusive_coverage(D,S,v): v itself
// counts only when no other member of S reaches it. Throws Error(not_a_mods).
bool is_minimal_mods_characterized(const Digraph& d, const VertexSet& s);

// The same two conditions evaluated with pn+[v,S] = pn+(v,S) u {v} and
// "isolate in D[S]" meaning no in- or out-neighbor inside S. This reading
// disagrees with direct minimality on some digraphs; it is kept so the
// disagreement can be measured. Throws Error(not_a_mods).
bool minimality_conditions_literal(const Digraph& d, const VertexSet& s);

struct MinimalModsList {
  std::vector<VertexSet> sets;
  bool truncated = false;
};

// All minimal MODSs in lexicographic order of ascending member sequences,
// stopping after `cap` sets (truncated is then true if more exist).
MinimalModsList enumerate_minimal_mods(const Digraph& d, std::size_t cap = 1'000'000);

}  // namespace mods
