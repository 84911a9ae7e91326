#include "mods/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "mods/error.hpp"

namespace mods {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, comment-stripped line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse_error, "line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

struct Header {
  bool directed = true;
  std::size_t n = 0;
  std::size_t m = 0;
};

Header read_header(LineReader& reader) {
  std::string line;
  if (!reader.next(line)) fail(ErrorCode::parse_error, "empty input: expected 'digraph <n> <m>' or 'graph <n> <m>'");
  std::istringstream fields(line);
  std::string kind;
  long long n = -1;
  long long m = -1;
  std::string extra;
  if (!(fields >> kind >> n >> m) || (fields >> extra)) reader.error("expected '<digraph|graph> <n> <m>'");
  if (kind != "digraph" && kind != "graph") reader.error("unknown instance kind '" + kind + "'");
  if (n < 1) reader.error("vertex count must be at least 1");
  if (m < 0) reader.error("arc count must be non-negative");
  return {kind == "digraph", static_cast<std::size_t>(n), static_cast<std::size_t>(m)};
}

std::vector<std::pair<Vertex, Vertex>> read_pairs(LineReader& reader, const Header& h) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::string line;
  while (reader.next(line)) {
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) reader.error("expected '<u> <v>'");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= h.n || static_cast<std::size_t>(v) >= h.n) {
      reader.error("vertex out of range 0.." + std::to_string(h.n - 1));
    }
    if (u == v) reader.error("loop at vertex " + std::to_string(u));
    if (pairs.size() == h.m) reader.error("more than the declared " + std::to_string(h.m) + " pairs");
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (pairs.size() != h.m) {
    fail(ErrorCode::parse_error,
         "declared " + std::to_string(h.m) + " pairs but found " + std::to_string(pairs.size()));
  }
  return pairs;
}

Instance build(const Header& h, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  try {
    if (h.directed) {
      std::vector<Arc> arcs;
      for (auto [u, v] : pairs) arcs.push_back({u, v});
      return Digraph(h.n, arcs);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.emplace_back(u, v);
    return Graph(h.n, edges);
  } catch (const Error& e) {
    fail(ErrorCode::parse_error, e.what());
  }
}

}  // namespace

Instance read_instance(std::istream& in) {
  LineReader reader(in);
  const Header h = read_header(reader);
  return build(h, read_pairs(reader, h));
}

Digraph read_digraph(std::istream& in) {
  auto instance = read_instance(in);
  if (auto* d = std::get_if<Digraph>(&instance)) return std::move(*d);
  fail(ErrorCode::parse_error, "expected a digraph, found an undirected graph");
}

Graph read_graph(std::istream& in) {
  auto instance = read_instance(in);
  if (auto* g = std::get_if<Graph>(&instance)) return std::move(*g);
  fail(ErrorCode::parse_error, "expected an undirected graph, found a digraph");
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << "digraph " << d.order() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.lo << ' ' << e.hi << '\n';
}

void write_instance(std::ostream& out, const Instance& instance) {
  std::visit(
      [&](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Digraph>) {
          write_digraph(out, x);
        } else {
          write_graph(out, x);
        }
      },
      instance);
}

Instance load_instance(std::string_view source) {
  if (auto spec = FamilySpec::try_parse(source)) return make_family(*spec);
  std::ifstream file{std::string(source)};
  if (!file) fail(ErrorCode::parse_error, "cannot open '" + std::string(source) + "' and it is not a family spec");
  return read_instance(file);
}

}  // namespace mods
