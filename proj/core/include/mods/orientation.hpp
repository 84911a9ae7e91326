#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mods/families.hpp"
#include "mods/graph.hpp"
#include "mods/solver.hpp"

namespace mods {

inline constexpr std::size_t kDefaultEdgeLimit = 24;

// Visits all 2^m orientations once each, in binary-counter order of
// Orientation::code() over the sorted edge list. visit returns false to
// stop early. Throws Error(limit_exceeded) when m > edge_limit.
void for_each_orientation(const Graph& g, const std::function<bool(const Orientation&)>& visit,
                          std::size_t edge_limit = kDefaultEdgeLimit);

// gamma_m+ of every orientation of a graph.
struct OrientationSpectrum {
  Graph base;
  // gamma_m+ value -> number of orientations attaining it. Expanding it in
  // key order gives the sorted multiset of values.
  std::map<std::size_t, std::uint64_t> histogram;
  std::size_t min_value = 0;  // dom+_m(G)
  std::size_t max_value = 0;  // DOM+_m(G)
  // First attaining orientation in enumeration order.
  Orientation min_witness;
  Orientation max_witness;

  std::uint64_t total() const;
  std::vector<std::size_t> values() const;
};

OrientationSpectrum spectrum(const Graph& g, std::size_t edge_limit = kDefaultEdgeLimit);

// gamma_m+ of one orientation (same as gamma_m_plus(o.digraph())).
std::size_t orientation_gamma(const Orientation& o);

// dom+_m(G) computed as gamma_m(G).
SolveResult dom_via_theorem(const Graph& g);

struct UpperOrientable {
  std::size_t value = 0;  // DOM+_m(G)
  std::optional<Orientation> witness;
  std::uint64_t full_solves = 0;
  std::uint64_t pruned = 0;
};

// DOM+_m(G) by exhaustive search. Orientations that admit a MODS no larger
// than the running maximum are discarded by a bounded search; only full
// solves move the maximum and its witness.
UpperOrientable upper_orientable_number(const Graph& g, std::size_t edge_limit = kDefaultEdgeLimit);

// Orients every edge between M and V \ M away from M and every other edge by
// a coin from Rng(seed), in edge order. M is then a MODS of the result.
// Throws Error(invalid_argument) if M is not majority dominating in G.
Orientation orient_from_majority_set(const Graph& g, const VertexSet& m, std::uint64_t seed);

// Builds the orientation of g whose arcs are exactly `arcs`.
Orientation orientation_from_arcs(const Graph& g, std::span<const Arc> arcs);

// Explicit orientations of graph families, 0-based:
//   pathdom:<n>            P_n; vertex i (1-based i = idx+1) with i = 2 mod 3
//                          is a source toward both neighbors; the remaining
//                          edges v_{3m} - v_{3m+1} point to v_{3m+1}.
//   starsink:<n>           K_{1,n-1} with every leaf pointing at the center.
//   doublestarsink:<a>,<b> stems u (smaller degree) and v: u -> v, every
//                          leaf points at its stem, so d+(u)=1, d+(v)=0.
//   doublestarsource:<a>,<b> every leaf arc leaves its stem and the stem
//                          edge is u -> v, so u has in-degree zero.
//   wheelsink:<n>          W_n with the hub a sink and the rim a directed
//                          cycle 1 -> 2 -> ... -> n-1 -> 1.
//   bipsink:<r>,<s>        K_{r,s} (r <= s) with every arc into the r-part.
//   biptwoout:<r>,<s>      K_{r,s} (r <= s, s >= 2): u_i -> v_j exactly for
//                          j = ((2i-2) mod s)+1 and ((2i-1) mod s)+1, all other
//                          edges point into the r-part.
enum class NamedOrientationKind {
  path_dom,
  star_sink,
  double_star_sink,
  double_star_source,
  wheel_sink,
  bipartite_sink,
  bipartite_two_out,
};

struct NamedOrientation {
  NamedOrientationKind kind = NamedOrientationKind::path_dom;
  std::vector<std::size_t> sizes;

  static NamedOrientation parse(std::string_view text);
  static std::optional<NamedOrientation> try_parse(std::string_view text);
  std::string to_string() const;
};

// Checks the construction's defining degree property after building it.
Orientation construct_named_orientation(const NamedOrientation& spec);

struct IvtCheck {
  bool interval_ok = false;
  // Distinct gamma_m+ values attained, ascending.
  std::vector<std::size_t> values;
};

// Attained values are exactly {dom+_m, ..., DOM+_m}.
IvtCheck check_ivt(const Graph& g, std::size_t edge_limit = kDefaultEdgeLimit);

// DOM+_m(K_{r,s}) = 1 exactly when r + s <= 4 or (r,s) is (2,3), (2,4), (3,3).
bool dom1_bipartite_condition(std::size_t r, std::size_t s);

struct Dom1Check {
  std::size_t dom = 0;
  bool condition = false;
  bool agrees = false;
};

// Exhaustive DOM+_m(K_{r,s}) against dom1_bipartite_condition. Needs r <= s.
Dom1Check check_dom1_bipartite(std::size_t r, std::size_t s, std::size_t edge_limit = kDefaultEdgeLimit);

struct ConjectureVerdict {
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t computed_dom = 0;
  std::size_t conjectured = 0;
  // False when DOM+_m(K_{r,s}) = 1, outside the conjecture's hypothesis.
  bool applicable = false;
  bool agrees = false;
  std::string method = "exhaustive";
};

// 2 if s <= r + 2, else ceil((s - r)/2).
std::size_t conjectured_dom(std::size_t r, std::size_t s);

ConjectureVerdict check_conjecture(std::size_t r, std::size_t s, std::size_t edge_limit = kDefaultEdgeLimit);

// Published closed forms for dom+_m and DOM+_m of a family instance; nullopt
// when no formula covers the instance.
std::optional<std::size_t> closed_form_lower(const FamilySpec& spec);
std::optional<std::size_t> closed_form_upper(const FamilySpec& spec);

}  // namespace mods
