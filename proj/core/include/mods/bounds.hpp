#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mods/digraph.hpp"

namespace mods {

inline constexpr std::size_t kDefaultDpLimit = 18;
// Subset tables are 2^n words; beyond this the limit itself is rejected.
inline constexpr std::size_t kMaxDpLimit = 28;

struct LongestPath {
  // Number of arcs on the path.
  std::size_t length = 0;
  std::vector<Vertex> witness;
};

struct LongestCycle {
  // 0 when the digraph is acyclic. Opposite arcs form 2-cycles.
  std::size_t length = 0;
  std::optional<std::vector<Vertex>> witness;
};

// Exact, by dynamic programming over (vertex subset, endpoint) states.
// Throws Error(limit_exceeded) when order() > limit.
LongestPath longest_directed_path(const Digraph& d, std::size_t limit = kDefaultDpLimit);
LongestCycle longest_directed_cycle(const Digraph& d, std::size_t limit = kDefaultDpLimit);

// Exact rational used for bound right-hand sides such as (n - D + 1)/2.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d = 1);

  std::strong_ordering operator<=>(const Fraction& other) const;
  bool operator==(const Fraction& other) const;
  std::string to_string() const;
};

enum class Relation {
  at_most,   // lhs <= rhs
  at_least,  // lhs >= rhs
  iff,       // lhs and rhs are truth values (0/1) that must agree
  unit_or_at_most,  // lhs == 1 or lhs <= rhs
};

std::string_view to_string(Relation r) noexcept;

struct BoundEntry {
  std::string name;
  std::string statement;
  Relation relation = Relation::at_most;
  Fraction lhs;
  Fraction rhs;
  // False when the bound's hypothesis does not apply (e.g. the cycle bound
  // on an acyclic digraph); holds and tight are then false as well.
  bool applicable = true;
  bool holds = false;
  bool tight = false;
  std::string note;
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t delta_plus = 0;
  std::size_t gamma_m_plus = 0;
  std::size_t gamma_plus = 0;
  LongestPath path;
  LongestCycle cycle;
  std::vector<BoundEntry> entries;

  // Every applicable entry holds.
  bool all_hold() const;
  // Throws Error(invalid_argument) for unknown names.
  const BoundEntry& entry(std::string_view name) const;
};

// Recomputes holds from relation/lhs/rhs; used to check report integrity.
bool recompute_holds(const BoundEntry& e);

// Entry names, in report order:
//   hamiltonian_cycle       gamma_m+ <= ceil(n/4) when c(D) = n
//   longest_path            gamma_m+ <= ceil((2n - l(D) - 1)/4)
//   longest_cycle           gamma_m+ <= ceil((2n - c(D))/4) when c(D) >= 2
//   half_out_domination     gamma_m+ <= ceil(gamma+/2)
//   degree_lower            gamma_m+ >= ceil(n / (2(D+ + 1)))
//   degree_upper            gamma_m+ = 1 or gamma_m+ <= ceil(n/2) - D+
//   degree_upper_corollary  gamma_m+ <= (n - D+ + 1)/2
//   equality_iff_full_degree  gamma_m+ = gamma+  <=>  D+ = n - 1
//   unit_iff_degree         gamma_m+ = 1  <=>  D+ >= ceil(n/2) - 1
BoundReport bound_report(const Digraph& d, std::size_t dp_limit = kDefaultDpLimit);

}  // namespace mods
