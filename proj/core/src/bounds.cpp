#include "mods/bounds.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "mods/error.hpp"
#include "mods/solver.hpp"

namespace mods {

namespace {

using Table = std::vector<std::uint32_t>;

void check_limit(const Digraph& d, std::size_t limit) {
  if (limit > kMaxDpLimit) {
    fail(ErrorCode::invalid_argument,
         "path/cycle limit " + std::to_string(limit) + " exceeds the maximum " + std::to_string(kMaxDpLimit));
  }
  if (d.order() > limit) {
    fail(ErrorCode::limit_exceeded, "longest path/cycle needs n <= " + std::to_string(limit) + " (n = " +
                                        std::to_string(d.order()) + "); raise --limit-dp");
  }
}

std::vector<std::uint32_t> out_masks(const Digraph& d) {
  std::vector<std::uint32_t> out(d.order(), 0);
  for (const Arc& a : d.arcs()) out[a.tail] |= std::uint32_t{1} << a.head;
  return out;
}

int lowest(std::uint32_t x) { return std::countr_zero(x); }

// Walks back from (mask, end) through states present in the table.
std::vector<Vertex> rebuild(const Table& reach, const std::vector<std::uint32_t>& out, std::uint32_t mask,
                            int end) {
  std::vector<Vertex> seq{static_cast<Vertex>(end)};
  while (std::popcount(mask) > 1) {
    const std::uint32_t prev = mask & ~(std::uint32_t{1} << end);
    std::uint32_t candidates = reach[prev];
    int pick = -1;
    while (candidates != 0) {
      const int u = lowest(candidates);
      candidates &= candidates - 1;
      if ((out[u] >> end) & 1U) {
        pick = u;
        break;
      }
    }
    end = pick;
    mask = prev;
    seq.push_back(static_cast<Vertex>(end));
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

BoundEntry make(std::string name, std::string statement, Relation rel, Fraction lhs, Fraction rhs,
                bool applicable = true) {
  BoundEntry e{std::move(name), std::move(statement), rel, lhs, rhs, applicable, false, false, {}};
  if (applicable) {
    e.holds = recompute_holds(e);
    e.tight = lhs == rhs;
  }
  return e;
}

}  // namespace

LongestPath longest_directed_path(const Digraph& d, std::size_t limit) {
  check_limit(d, limit);
  const std::size_t n = d.order();
  const auto out = out_masks(d);
  Table reach(std::size_t{1} << n, 0);
  for (std::size_t v = 0; v < n; ++v) reach[std::size_t{1} << v] = std::uint32_t{1} << v;
  std::uint32_t best_mask = 1;
  int best_size = 1;
  for (std::uint32_t mask = 1; mask < reach.size(); ++mask) {
    std::uint32_t ends = reach[mask];
    if (ends == 0) continue;
    if (std::popcount(mask) > best_size) {
      best_size = std::popcount(mask);
      best_mask = mask;
    }
    while (ends != 0) {
      const int v = lowest(ends);
      ends &= ends - 1;
      std::uint32_t ext = out[v] & ~mask;
      while (ext != 0) {
        const int w = lowest(ext);
        ext &= ext - 1;
        reach[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  LongestPath r;
  r.length = static_cast<std::size_t>(best_size - 1);
  r.witness = rebuild(reach, out, best_mask, lowest(reach[best_mask]));
  return r;
}

LongestCycle longest_directed_cycle(const Digraph& d, std::size_t limit) {
  check_limit(d, limit);
  const std::size_t n = d.order();
  const auto out = out_masks(d);
  // Paths that start at the lowest vertex of their subset.
  Table reach(std::size_t{1} << n, 0);
  for (std::size_t v = 0; v < n; ++v) reach[std::size_t{1} << v] = std::uint32_t{1} << v;
  std::uint32_t best_mask = 0;
  int best_end = -1;
  int best_size = 0;
  for (std::uint32_t mask = 1; mask < reach.size(); ++mask) {
    std::uint32_t ends = reach[mask];
    if (ends == 0) continue;
    const int start = lowest(mask);
    const int size = std::popcount(mask);
    const std::uint32_t above = ~((std::uint32_t{2} << start) - 1);
    while (ends != 0) {
      const int v = lowest(ends);
      ends &= ends - 1;
      if (size >= 2 && ((out[v] >> start) & 1U) && size > best_size) {
        best_size = size;
        best_mask = mask;
        best_end = v;
      }
      std::uint32_t ext = out[v] & ~mask & above;
      while (ext != 0) {
        const int w = lowest(ext);
        ext &= ext - 1;
        reach[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  LongestCycle r;
  if (best_size == 0) return r;
  r.length = static_cast<std::size_t>(best_size);
  r.witness = rebuild(reach, out, best_mask, best_end);
  return r;
}

Fraction::Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) fail(ErrorCode::invalid_argument, "fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::strong_ordering Fraction::operator<=>(const Fraction& other) const {
  return num * other.den <=> other.num * den;
}

bool Fraction::operator==(const Fraction& other) const { return num == other.num && den == other.den; }

std::string Fraction::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::at_most: return "<=";
    case Relation::at_least: return ">=";
    case Relation::iff: return "<=>";
    case Relation::unit_or_at_most: return "=1|<=";
  }
  return "?";
}

bool recompute_holds(const BoundEntry& e) {
  switch (e.relation) {
    case Relation::at_most: return e.lhs <= e.rhs;
    case Relation::at_least: return e.lhs >= e.rhs;
    case Relation::iff: return e.lhs == e.rhs;
    case Relation::unit_or_at_most: return e.lhs == Fraction(1) || e.lhs <= e.rhs;
  }
  return false;
}

bool BoundReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return !e.applicable || e.holds; });
}

const BoundEntry& BoundReport::entry(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  fail(ErrorCode::invalid_argument, "no bound named '" + std::string(name) + "'");
}

BoundReport bound_report(const Digraph& d, std::size_t dp_limit) {
  BoundReport r;
  r.n = d.order();
  r.delta_plus = d.max_out_degree();
  r.path = longest_directed_path(d, dp_limit);
  r.cycle = longest_directed_cycle(d, dp_limit);
  r.gamma_m_plus = gamma_m_plus(d).value;
  r.gamma_plus = gamma_plus(d).value;

  const auto n = static_cast<std::int64_t>(r.n);
  const auto delta = static_cast<std::int64_t>(r.delta_plus);
  const auto g = static_cast<std::int64_t>(r.gamma_m_plus);
  const auto gp = static_cast<std::int64_t>(r.gamma_plus);
  const auto l = static_cast<std::int64_t>(r.path.length);
  const auto c = static_cast<std::int64_t>(r.cycle.length);
  const auto half = static_cast<std::int64_t>(majority_threshold(r.n));

  r.entries.push_back(make("hamiltonian_cycle", "gamma_m+ <= ceil(n/4) when c(D) = n", Relation::at_most, g,
                           ceil_div(n, 4), c == n));
  r.entries.push_back(make("longest_path", "gamma_m+ <= ceil((2n - l - 1)/4)", Relation::at_most, g,
                           ceil_div(2 * n - l - 1, 4)));
  auto cycle = make("longest_cycle", "gamma_m+ <= ceil((2n - c)/4)", Relation::at_most, g,
                    ceil_div(2 * n - c, 4), c >= 2);
  if (!cycle.applicable) cycle.note = "not applicable: acyclic";
  r.entries.push_back(std::move(cycle));
  r.entries.push_back(
      make("half_out_domination", "gamma_m+ <= ceil(gamma+/2)", Relation::at_most, g, ceil_div(gp, 2)));
  r.entries.push_back(make("degree_lower", "gamma_m+ >= ceil(n/(2(D+ + 1)))", Relation::at_least, g,
                           ceil_div(n, 2 * (delta + 1))));

  auto upper = make("degree_upper", "gamma_m+ = 1 or gamma_m+ <= ceil(n/2) - D+", Relation::unit_or_at_most,
                    g, half - delta);
  upper.note = g == 1 ? "gamma_m+ = 1" : "degree bound";
  r.entries.push_back(std::move(upper));

  r.entries.push_back(make("degree_upper_corollary", "gamma_m+ <= (n - D+ + 1)/2", Relation::at_most, g,
                           Fraction(n - delta + 1, 2)));
  r.entries.push_back(make("equality_iff_full_degree", "gamma_m+ = gamma+ <=> D+ = n - 1", Relation::iff,
                           g == gp ? 1 : 0, delta == n - 1 ? 1 : 0));
  r.entries.push_back(make("unit_iff_degree", "gamma_m+ = 1 <=> D+ >= ceil(n/2) - 1", Relation::iff,
                           g == 1 ? 1 : 0, delta >= half - 1 ? 1 : 0));
  return r;
}

}  // namespace mods
