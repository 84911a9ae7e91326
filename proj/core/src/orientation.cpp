#include "mods/orientation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "mods/detail/cover_dispatch.hpp"
#include "mods/error.hpp"
#include "mods/random.hpp"

namespace mods {

namespace {

constexpr std::size_t kMaxCodeEdges = 63;

void check_edges(const Graph& g, std::size_t edge_limit) {
  const std::size_t m = g.edge_count();
  if (m > edge_limit || m > kMaxCodeEdges) {
    fail(ErrorCode::limit_exceeded, "orientation enumeration needs m <= " +
                                        std::to_string(std::min(edge_limit, kMaxCodeEdges)) + " edges (m = " +
                                        std::to_string(m) + "); raise --limit-edges");
  }
}

// gamma_m+ for every code, handed to visit(code, value). Graphs with at most
// 64 vertices build the closed out-neighborhood words straight from the code.
template <class Visit>
void scan_codes(const Graph& g, Visit&& visit) {
  const std::size_t n = g.order();
  const std::size_t m = g.edge_count();
  const std::uint64_t total = std::uint64_t{1} << m;
  const std::size_t target = majority_threshold(n);
  if (n <= 64) {
    using Mask = detail::WordMask<1>;
    std::vector<Mask> closed(n);
    for (std::uint64_t code = 0; code < total; ++code) {
      for (std::size_t v = 0; v < n; ++v) closed[v].w[0] = std::uint64_t{1} << v;
      for (std::size_t i = 0; i < m; ++i) {
        const Edge& e = g.edges()[i];
        if ((code >> i) & 1U) {
          closed[e.hi].w[0] |= std::uint64_t{1} << e.lo;
        } else {
          closed[e.lo].w[0] |= std::uint64_t{1} << e.hi;
        }
      }
      const detail::CoverSearch<Mask> search(closed, target);
      if (!visit(code, search)) return;
    }
    return;
  }
  for (std::uint64_t code = 0; code < total; ++code) {
    const Digraph d = Orientation::from_code(g, code).digraph();
    bool go = true;
    detail::with_cover_search(detail::closed_out_sets(d), target, [&](const auto& search) {
      go = visit(code, search);
      return 0;
    });
    if (!go) return;
  }
}

std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

std::size_t parse_size(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    fail(ErrorCode::parse_error, "bad size '" + std::string(text) + "' in '" + std::string(whole) + "'");
  }
  return value;
}

struct KindName {
  NamedOrientationKind kind;
  std::string_view name;
  std::size_t arity;
};

constexpr KindName kKinds[] = {
    {NamedOrientationKind::path_dom, "pathdom", 1},
    {NamedOrientationKind::star_sink, "starsink", 1},
    {NamedOrientationKind::double_star_sink, "doublestarsink", 2},
    {NamedOrientationKind::double_star_source, "doublestarsource", 2},
    {NamedOrientationKind::wheel_sink, "wheelsink", 1},
    {NamedOrientationKind::bipartite_sink, "bipsink", 2},
    {NamedOrientationKind::bipartite_two_out, "biptwoout", 2},
};

const KindName& kind_entry(NamedOrientationKind k) {
  for (const auto& e : kKinds) {
    if (e.kind == k) return e;
  }
  throw std::logic_error("unknown orientation kind");
}

void require(bool ok, std::string_view what) {
  if (!ok) fail(ErrorCode::invalid_argument, "orientation parameter out of range: requires " + std::string(what));
}

void ensure(bool ok, std::string_view what) {
  if (!ok) throw std::logic_error("construction lost its degree property: " + std::string(what));
}

Orientation build_path_dom(std::size_t n) {
  require(n >= 2, "n >= 2");
  const Graph g = path_graph(n);
  std::vector<Arc> arcs;
  for (std::size_t lo = 0; lo + 1 < n; ++lo) {
    const std::size_t i = lo + 1;  // 1-based label of the lower end
    const auto a = static_cast<Vertex>(lo);
    const auto b = static_cast<Vertex>(lo + 1);
    if (i % 3 == 2) {
      arcs.push_back({a, b});
    } else if (i % 3 == 1) {
      arcs.push_back({b, a});
    } else {
      arcs.push_back({a, b});
    }
  }
  Orientation o = orientation_from_arcs(g, arcs);
  const Digraph d = o.digraph();
  for (std::size_t v = 0; v < n; ++v) {
    if ((v + 1) % 3 == 2) ensure(d.out_degree(static_cast<Vertex>(v)) == g.degree(static_cast<Vertex>(v)), "source");
  }
  return o;
}

Orientation build_star_sink(std::size_t n) {
  require(n >= 2, "n >= 2");
  const Graph g = star_graph(n);
  std::vector<Arc> arcs;
  for (Vertex leaf = 1; leaf < n; ++leaf) arcs.push_back({leaf, 0});
  Orientation o = orientation_from_arcs(g, arcs);
  ensure(o.digraph().out_degree(0) == 0, "center is a sink");
  return o;
}

Orientation build_double_star(std::size_t a, std::size_t b, bool sink) {
  require(a >= 1 && b >= 1, "a >= 1 and b >= 1");
  const Graph g = double_star(a, b);
  const Vertex u = a <= b ? 0 : 1;
  const Vertex v = u == 0 ? 1 : 0;
  std::vector<Arc> arcs{{u, v}};
  for (Vertex leaf = 2; leaf < g.order(); ++leaf) {
    const Vertex stem = leaf < a + 2 ? 0 : 1;
    arcs.push_back(sink ? Arc{leaf, stem} : Arc{stem, leaf});
  }
  Orientation o = orientation_from_arcs(g, arcs);
  const Digraph d = o.digraph();
  if (sink) {
    ensure(d.out_degree(u) == 1 && d.out_degree(v) == 0, "d+(u) = 1, d+(v) = 0");
  } else {
    ensure(d.in_degree(u) == 0, "d-(u) = 0");
  }
  return o;
}

Orientation build_wheel_sink(std::size_t n) {
  require(n >= 4, "n >= 4");
  const Graph g = wheel_graph(n);
  std::vector<Arc> arcs;
  for (Vertex x = 1; x < n; ++x) {
    arcs.push_back({x, 0});
    arcs.push_back({x, x + 1 < n ? x + 1 : Vertex{1}});
  }
  Orientation o = orientation_from_arcs(g, arcs);
  const Digraph d = o.digraph();
  ensure(d.out_degree(0) == 0, "hub is a sink");
  for (Vertex x = 1; x < n; ++x) ensure(d.in_degree(x) == 1, "rim in-degree 1");
  return o;
}

Orientation build_bipartite_sink(std::size_t r, std::size_t s) {
  require(r >= 1 && r <= s, "1 <= r <= s");
  const Graph g = complete_bipartite(r, s);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < r; ++u) {
    for (std::size_t j = 0; j < s; ++j) arcs.push_back({static_cast<Vertex>(r + j), u});
  }
  Orientation o = orientation_from_arcs(g, arcs);
  const Digraph d = o.digraph();
  for (Vertex u = 0; u < r; ++u) ensure(d.out_degree(u) == 0, "r-part are sinks");
  return o;
}

Orientation build_bipartite_two_out(std::size_t r, std::size_t s) {
  require(r >= 1 && s >= 2 && r <= s, "1 <= r <= s and s >= 2");
  const Graph g = complete_bipartite(r, s);
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i <= r; ++i) {
    const auto u = static_cast<Vertex>(i - 1);
    const std::size_t j1 = ((2 * i - 2) % s) + 1;
    const std::size_t j2 = ((2 * i - 1) % s) + 1;
    for (std::size_t j = 1; j <= s; ++j) {
      const auto v = static_cast<Vertex>(r + j - 1);
      arcs.push_back(j == j1 || j == j2 ? Arc{u, v} : Arc{v, u});
    }
  }
  Orientation o = orientation_from_arcs(g, arcs);
  const Digraph d = o.digraph();
  for (Vertex u = 0; u < r; ++u) ensure(d.out_degree(u) == 2, "d+(u) = 2 on the r-part");
  return o;
}

}  // namespace

void for_each_orientation(const Graph& g, const std::function<bool(const Orientation&)>& visit,
                          std::size_t edge_limit) {
  check_edges(g, edge_limit);
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t code = 0; code < total; ++code) {
    if (!visit(Orientation::from_code(g, code))) return;
  }
}

std::uint64_t OrientationSpectrum::total() const {
  std::uint64_t t = 0;
  for (const auto& [value, count] : histogram) t += count;
  return t;
}

std::vector<std::size_t> OrientationSpectrum::values() const {
  std::vector<std::size_t> out;
  out.reserve(total());
  for (const auto& [value, count] : histogram) out.insert(out.end(), count, value);
  return out;
}

OrientationSpectrum spectrum(const Graph& g, std::size_t edge_limit) {
  check_edges(g, edge_limit);
  std::map<std::size_t, std::uint64_t> histogram;
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::uint64_t lo_code = 0;
  std::uint64_t hi_code = 0;
  bool first = true;
  scan_codes(g, [&](std::uint64_t code, const auto& search) {
    const std::size_t value = search.exact().value;
    ++histogram[value];
    if (first || value < lo) {
      lo = value;
      lo_code = code;
    }
    if (first || value > hi) {
      hi = value;
      hi_code = code;
    }
    first = false;
    return true;
  });
  return OrientationSpectrum{g,  std::move(histogram), lo, hi, Orientation::from_code(g, lo_code),
                             Orientation::from_code(g, hi_code)};
}

std::size_t orientation_gamma(const Orientation& o) { return gamma_m_plus(o.digraph()).value; }

SolveResult dom_via_theorem(const Graph& g) { return gamma_m_undirected(g); }

UpperOrientable upper_orientable_number(const Graph& g, std::size_t edge_limit) {
  check_edges(g, edge_limit);
  UpperOrientable r;
  std::uint64_t best_code = 0;
  scan_codes(g, [&](std::uint64_t code, const auto& search) {
    if (r.value > 0 && search.exists_within(r.value)) {
      ++r.pruned;
      return true;
    }
    ++r.full_solves;
    const std::size_t value = search.exact().value;
    if (value > r.value) {
      r.value = value;
      best_code = code;
    }
    return true;
  });
  r.witness = Orientation::from_code(g, best_code);
  return r;
}

Orientation orient_from_majority_set(const Graph& g, const VertexSet& m, std::uint64_t seed) {
  if (m.universe() != g.order()) fail(ErrorCode::invalid_argument, "set universe does not match the graph order");
  if (!is_majority_dominating(g, m)) {
    fail(ErrorCode::invalid_argument, "set " + m.to_string() + " is not majority dominating");
  }
  Rng rng(seed);
  std::vector<bool> reversed;
  reversed.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const bool lo_in = m.contains(e.lo);
    const bool hi_in = m.contains(e.hi);
    if (lo_in != hi_in) {
      reversed.push_back(hi_in);
    } else {
      reversed.push_back((rng.next() >> 63) != 0);
    }
  }
  return Orientation(g, std::move(reversed));
}

Orientation orientation_from_arcs(const Graph& g, std::span<const Arc> arcs) {
  if (arcs.size() != g.edge_count()) {
    fail(ErrorCode::invalid_argument, "orientation needs exactly one arc per edge");
  }
  std::vector<int> seen(g.edge_count(), -1);
  for (const Arc& a : arcs) {
    const Edge e(a.tail, a.head);
    const auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
    if (it == g.edges().end() || *it != e) {
      fail(ErrorCode::missing_arc, "arc " + a.to_string() + " is not an edge of the base graph");
    }
    const auto i = static_cast<std::size_t>(it - g.edges().begin());
    if (seen[i] != -1) fail(ErrorCode::duplicate_arc, "edge " + e.to_string() + " oriented twice");
    seen[i] = a.tail == e.lo ? 0 : 1;
  }
  std::vector<bool> reversed(seen.begin(), seen.end());
  return Orientation(g, std::move(reversed));
}

NamedOrientation NamedOrientation::parse(std::string_view text) {
  auto r = try_parse(text);
  if (!r) fail(ErrorCode::parse_error, "unknown orientation '" + std::string(text) + "'");
  return *r;
}

std::optional<NamedOrientation> NamedOrientation::try_parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  for (const auto& k : kKinds) {
    if (k.name != name) continue;
    if (colon == std::string_view::npos) {
      fail(ErrorCode::parse_error, "'" + std::string(text) + "' needs " + std::to_string(k.arity) + " size(s)");
    }
    NamedOrientation r;
    r.kind = k.kind;
    std::string_view rest = text.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      r.sizes.push_back(parse_size(rest.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (r.sizes.size() != k.arity) {
      fail(ErrorCode::parse_error, "'" + std::string(text) + "' needs " + std::to_string(k.arity) + " size(s)");
    }
    return r;
  }
  return std::nullopt;
}

std::string NamedOrientation::to_string() const {
  std::string out(kind_entry(kind).name);
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i == 0 ? ":" : ",") + std::to_string(sizes[i]);
  return out;
}

Orientation construct_named_orientation(const NamedOrientation& spec) {
  if (spec.sizes.size() != kind_entry(spec.kind).arity) {
    fail(ErrorCode::invalid_argument, "wrong number of sizes for " + std::string(kind_entry(spec.kind).name));
  }
  const auto& z = spec.sizes;
  switch (spec.kind) {
    case NamedOrientationKind::path_dom: return build_path_dom(z[0]);
    case NamedOrientationKind::star_sink: return build_star_sink(z[0]);
    case NamedOrientationKind::double_star_sink: return build_double_star(z[0], z[1], true);
    case NamedOrientationKind::double_star_source: return build_double_star(z[0], z[1], false);
    case NamedOrientationKind::wheel_sink: return build_wheel_sink(z[0]);
    case NamedOrientationKind::bipartite_sink: return build_bipartite_sink(z[0], z[1]);
    case NamedOrientationKind::bipartite_two_out: return build_bipartite_two_out(z[0], z[1]);
  }
  throw std::logic_error("unknown orientation kind");
}

IvtCheck check_ivt(const Graph& g, std::size_t edge_limit) {
  const auto sp = spectrum(g, edge_limit);
  IvtCheck r;
  for (const auto& [value, count] : sp.histogram) r.values.push_back(value);
  r.interval_ok = r.values.size() == sp.max_value - sp.min_value + 1;
  return r;
}

bool dom1_bipartite_condition(std::size_t r, std::size_t s) {
  if (r > s) std::swap(r, s);
  return r + s <= 4 || (r == 2 && (s == 3 || s == 4)) || (r == 3 && s == 3);
}

Dom1Check check_dom1_bipartite(std::size_t r, std::size_t s, std::size_t edge_limit) {
  require(r >= 1 && r <= s, "1 <= r <= s");
  Dom1Check c;
  c.dom = upper_orientable_number(complete_bipartite(r, s), edge_limit).value;
  c.condition = dom1_bipartite_condition(r, s);
  c.agrees = (c.dom == 1) == c.condition;
  return c;
}

std::size_t conjectured_dom(std::size_t r, std::size_t s) {
  if (r > s) std::swap(r, s);
  return s <= r + 2 ? 2 : ceil_half(s - r);
}

ConjectureVerdict check_conjecture(std::size_t r, std::size_t s, std::size_t edge_limit) {
  require(r >= 1 && r <= s, "1 <= r <= s");
  ConjectureVerdict v;
  v.r = r;
  v.s = s;
  v.computed_dom = upper_orientable_number(complete_bipartite(r, s), edge_limit).value;
  v.conjectured = conjectured_dom(r, s);
  v.applicable = v.computed_dom != 1;
  v.agrees = v.applicable && v.computed_dom == v.conjectured;
  return v;
}

std::optional<std::size_t> closed_form_lower(const FamilySpec& spec) {
  const auto& z = spec.sizes;
  switch (spec.family) {
    case Family::path:
    case Family::cycle: return (z[0] + 5) / 6;
    case Family::complete:
    case Family::star:
    case Family::doublestar:
    case Family::wheel:
    case Family::bipartite: return 1;
    default: return std::nullopt;
  }
}

std::optional<std::size_t> closed_form_upper(const FamilySpec& spec) {
  const auto& z = spec.sizes;
  switch (spec.family) {
    case Family::path:
    case Family::cycle: return (z[0] + 3) / 4;
    case Family::complete: return 1;
    case Family::star: return z[0] <= 2 ? 1 : (z[0] - 1) / 2;
    case Family::doublestar: {
      const std::size_t n = z[0] + z[1] + 2;
      if (n <= 4) return 1;
      return n <= 8 ? 2 : 2 + ceil_half(n - 8);
    }
    case Family::wheel: return (z[0] + 1) / 4;
    case Family::bipartite: {
      const std::size_t r = std::min(z[0], z[1]);
      const std::size_t s = std::max(z[0], z[1]);
      if (dom1_bipartite_condition(r, s)) return 1;
      if (r == 1) return s / 2;
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

}  // namespace mods
