#include "mods/families.hpp"

#include <array>
#include <charconv>
#include <utility>

#include "mods/error.hpp"
#include "mods/random.hpp"

namespace mods {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::size_t arity;  // number of integer size parameters
  bool directed;
};

constexpr std::array<FamilyInfo, 12> kFamilies{{
    {Family::dipath, "dipath", 1, true},
    {Family::dicycle, "dicycle", 1, true},
    {Family::figure1, "figure1", 1, true},
    {Family::empty, "empty", 1, true},
    {Family::path, "path", 1, false},
    {Family::cycle, "cycle", 1, false},
    {Family::complete, "complete", 1, false},
    {Family::star, "star", 1, false},
    {Family::doublestar, "doublestar", 2, false},
    {Family::wheel, "wheel", 1, false},
    {Family::bipartite, "bipartite", 2, false},
    {Family::randdigraph, "randdigraph", 1, true},
}};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  fail(ErrorCode::invalid_argument, "unknown family");
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(std::string_view field, std::string_view spec) {
  T value{};
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last) {
    fail(ErrorCode::parse_error,
         "bad parameter '" + std::string(field) + "' in family spec '" + std::string(spec) + "'");
  }
  return value;
}

void require(bool ok, const std::string& constraint) {
  if (!ok) fail(ErrorCode::invalid_argument, "family parameter out of range: requires " + constraint);
}

}  // namespace

std::optional<FamilySpec> FamilySpec::try_parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto name = text.substr(0, colon);
  const FamilyInfo* found = nullptr;
  for (const auto& i : kFamilies) {
    if (i.name == name) found = &i;
  }
  if (found == nullptr) return std::nullopt;

  const auto fields = split(text.substr(colon + 1), ',');
  FamilySpec spec;
  spec.family = found->family;
  if (spec.family == Family::randdigraph) {
    if (fields.size() != 3) {
      fail(ErrorCode::parse_error, "randdigraph expects <n>,<p>,<seed>, got '" + std::string(text) + "'");
    }
    spec.sizes = {parse_number<std::size_t>(fields[0], text)};
    spec.probability = parse_number<double>(fields[1], text);
    spec.seed = parse_number<std::uint64_t>(fields[2], text);
    return spec;
  }
  if (fields.size() != found->arity) {
    fail(ErrorCode::parse_error, std::string(found->name) + " expects " + std::to_string(found->arity) +
                                     " parameter(s), got '" + std::string(text) + "'");
  }
  for (auto f : fields) spec.sizes.push_back(parse_number<std::size_t>(f, text));
  return spec;
}

FamilySpec FamilySpec::parse(std::string_view text) {
  auto spec = try_parse(text);
  if (!spec) fail(ErrorCode::parse_error, "unknown family spec '" + std::string(text) + "'");
  return *spec;
}

bool FamilySpec::directed() const noexcept {
  for (const auto& i : kFamilies) {
    if (i.family == family) return i.directed;
  }
  return true;
}

std::string FamilySpec::to_string() const {
  std::string out(info(family).name);
  out += ':';
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(sizes[i]);
  }
  if (family == Family::randdigraph) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), probability);
    out += ',';
    out.append(buf.data(), res.ptr);
    out += ',' + std::to_string(seed);
  }
  return out;
}

Instance make_family(const FamilySpec& spec) {
  const auto& p = spec.sizes;
  auto arg = [&](std::size_t i) {
    if (i >= p.size()) fail(ErrorCode::invalid_argument, "missing family parameter");
    return p[i];
  };
  switch (spec.family) {
    case Family::dipath: return directed_path(arg(0));
    case Family::dicycle: return directed_cycle(arg(0));
    case Family::figure1: return figure1_digraph(arg(0));
    case Family::empty: return empty_digraph(arg(0));
    case Family::path: return path_graph(arg(0));
    case Family::cycle: return cycle_graph(arg(0));
    case Family::complete: return complete_graph(arg(0));
    case Family::star: return star_graph(arg(0));
    case Family::doublestar: return double_star(arg(0), arg(1));
    case Family::wheel: return wheel_graph(arg(0));
    case Family::bipartite: return complete_bipartite(arg(0), arg(1));
    case Family::randdigraph: return random_digraph(arg(0), spec.probability, spec.seed);
  }
  fail(ErrorCode::invalid_argument, "unknown family");
}

Digraph directed_path(std::size_t n) {
  require(n >= 1, "dipath n >= 1");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i + 1 < n; ++i) arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return Digraph(n, arcs);
}

Digraph directed_cycle(std::size_t n) {
  require(n >= 3, "dicycle n >= 3");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  }
  return Digraph(n, arcs);
}

Digraph empty_digraph(std::size_t n) {
  require(n >= 1, "empty n >= 1");
  return Digraph(n, std::span<const Arc>{});
}

Digraph figure1_digraph(std::size_t k) {
  require(k >= 3, "figure1 k >= 3");
  using namespace figure1_layout;
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < k; ++i) {
    arcs.push_back({s(i), u});
    arcs.push_back({s(i), v});
  }
  for (std::size_t j = 0; j < k + 2; ++j) arcs.push_back({t(k, j), v});
  return Digraph(2 * k + 4, arcs);
}

Graph path_graph(std::size_t n) {
  require(n >= 1, "path n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  require(n >= 2, "star n >= 2");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph(n, edges);
}

Graph double_star(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "doublestar a >= 1 and b >= 1");
  std::vector<Edge> edges{{0, 1}};
  for (std::size_t i = 0; i < a; ++i) edges.emplace_back(0, static_cast<Vertex>(2 + i));
  for (std::size_t i = 0; i < b; ++i) edges.emplace_back(1, static_cast<Vertex>(2 + a + i));
  return Graph(a + b + 2, edges);
}

Graph wheel_graph(std::size_t n) {
  require(n >= 4, "wheel n >= 4");
  std::vector<Edge> edges;
  const std::size_t rim = n - 1;
  for (std::size_t i = 0; i < rim; ++i) {
    edges.emplace_back(0, static_cast<Vertex>(1 + i));
    edges.emplace_back(static_cast<Vertex>(1 + i), static_cast<Vertex>(1 + (i + 1) % rim));
  }
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t r, std::size_t s) {
  require(r >= 1 && s >= 1, "bipartite r >= 1 and s >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(r + j));
  }
  return Graph(r + s, edges);
}

}  // namespace mods
