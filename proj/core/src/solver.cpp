#include "mods/solver.hpp"

#include <string>

#include "mods/detail/cover_dispatch.hpp"
#include "mods/error.hpp"

namespace mods {

namespace {

SolveResult run(const std::vector<VertexSet>& closed, std::size_t target, Method method) {
  const std::size_t n = closed.size();
  return detail::with_cover_search(closed, target, [&](const auto& search) {
    detail::CoverResult r;
    switch (method) {
      case Method::exact: r = search.exact(); break;
      case Method::oracle: r = search.oracle(); break;
      case Method::greedy: r = search.greedy(); break;
    }
    return SolveResult{r.value, detail::to_vertex_set(n, r.witness), method, r.explored};
  });
}

void require_exact_or_oracle(Method m) {
  if (m == Method::greedy) {
    fail(ErrorCode::invalid_argument, "greedy is an upper bound, not a solver method; use greedy_mods");
  }
}

void require_mods(const Digraph& d, const VertexSet& s) {
  if (!is_mods(d, s)) fail(ErrorCode::not_a_mods, s.to_string() + " is not a MODS");
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::exact: return "exact";
    case Method::oracle: return "oracle";
    case Method::greedy: return "greedy";
  }
  return "exact";
}

Method parse_method(std::string_view text) {
  if (text == "exact") return Method::exact;
  if (text == "oracle") return Method::oracle;
  if (text == "greedy") return Method::greedy;
  fail(ErrorCode::parse_error, "unknown method '" + std::string(text) + "'");
}

std::size_t majority_threshold(std::size_t n) {
  if (n == 0) fail(ErrorCode::invalid_argument, "majority threshold needs n >= 1");
  return (n + 1) / 2;
}

bool is_mods(const Digraph& d, const VertexSet& s) {
  return closed_out_neighborhood(d, s).count() >= majority_threshold(d.order());
}

bool is_out_dominating(const Digraph& d, const VertexSet& s) {
  return closed_out_neighborhood(d, s).count() == d.order();
}

bool is_majority_dominating(const Graph& g, const VertexSet& s) {
  return closed_neighborhood(g, s).count() >= majority_threshold(g.order());
}

SolveResult gamma_m_plus(const Digraph& d, Method method) {
  require_exact_or_oracle(method);
  return run(detail::closed_out_sets(d), majority_threshold(d.order()), method);
}

SolveResult gamma_plus(const Digraph& d, Method method) {
  require_exact_or_oracle(method);
  return run(detail::closed_out_sets(d), d.order(), method);
}

SolveResult gamma_m_undirected(const Graph& g, Method method) {
  require_exact_or_oracle(method);
  return run(detail::closed_sets(g), majority_threshold(g.order()), method);
}

SolveResult greedy_mods(const Digraph& d) {
  return run(detail::closed_out_sets(d), majority_threshold(d.order()), Method::greedy);
}

bool has_mods_within(const Digraph& d, std::size_t k) {
  return detail::with_cover_search(detail::closed_out_sets(d), majority_threshold(d.order()),
                                   [&](const auto& search) { return search.exists_within(k); });
}

bool is_minimal_mods_direct(const Digraph& d, const VertexSet& s) {
  require_mods(d, s);
  for (Vertex v : s) {
    VertexSet smaller = s;
    smaller.erase(v);
    if (is_mods(d, smaller)) return false;
  }
  return true;
}

bool is_minimal_mods_characterized(const Digraph& d, const VertexSet& s) {
  require_mods(d, s);
  const std::size_t covered = closed_out_neighborhood(d, s).count();
  const std::size_t threshold = majority_threshold(d.order());
  if (covered > threshold) {
    const std::size_t surplus = covered - threshold;
    for (Vertex v : s) {
      if (exclusive_coverage(d, s, v).count() <= surplus) return false;
    }
    return true;
  }
  for (Vertex v : s) {
    VertexSet others = s;
    others.erase(v);
    const bool undominated_in_s = !d.in_neighbors(v).intersects(others);
    if (!undominated_in_s && private_out_neighbors(d, s, v).empty()) return false;
  }
  return true;
}

bool minimality_conditions_literal(const Digraph& d, const VertexSet& s) {
  require_mods(d, s);
  const std::size_t covered = closed_out_neighborhood(d, s).count();
  const std::size_t threshold = majority_threshold(d.order());
  if (covered > threshold) {
    const std::size_t surplus = covered - threshold;
    for (Vertex v : s) {
      if (private_out_neighbors(d, s, v).count() + 1 <= surplus) return false;
    }
    return true;
  }
  for (Vertex v : s) {
    VertexSet others = s;
    others.erase(v);
    const bool isolate = !d.in_neighbors(v).intersects(others) && !d.out_neighbors(v).intersects(others);
    if (!isolate && private_out_neighbors(d, s, v).empty()) return false;
  }
  return true;
}

MinimalModsList enumerate_minimal_mods(const Digraph& d, std::size_t cap) {
  if (cap == 0) fail(ErrorCode::invalid_argument, "enumeration cap must be at least 1");
  MinimalModsList out;
  const std::size_t n = d.order();
  detail::with_cover_search(detail::closed_out_sets(d), majority_threshold(n), [&](const auto& search) {
    search.for_each_minimal([&](const std::vector<Vertex>& sel) {
      if (out.sets.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.sets.push_back(detail::to_vertex_set(n, sel));
      return true;
    });
    return 0;
  });
  return out;
}

}  // namespace mods
