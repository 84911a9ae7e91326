#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "mods/bounds.hpp"
#include "mods/error.hpp"
#include "mods/families.hpp"
#include "mods/io.hpp"
#include "mods/orientation.hpp"
#include "mods/perturbation.hpp"
#include "mods/solver.hpp"
#include "report.hpp"
#include "suite.hpp"

namespace mods::cli {

namespace {

struct Common {
  std::string format = "table";
  std::size_t limit_n = 64;
  std::size_t limit_edges = kDefaultEdgeLimit;
  std::size_t limit_dp = kDefaultDpLimit;
  std::size_t cap = 1'000'000;
  std::uint64_t seed = 1;

  Format fmt() const { return format == "structured" ? Format::structured : Format::table; }
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string members(const VertexSet& s) { return array(s.to_vector()); }

Digraph need_digraph(const Instance& inst, std::string_view command) {
  if (const auto* d = std::get_if<Digraph>(&inst)) return *d;
  fail(ErrorCode::invalid_argument, std::string(command) + " needs a directed instance");
}

Graph need_graph(const Instance& inst, std::string_view command) {
  if (const auto* g = std::get_if<Graph>(&inst)) return *g;
  fail(ErrorCode::invalid_argument, std::string(command) + " needs an undirected instance");
}

void check_order(std::size_t n, const Common& c) {
  if (n > c.limit_n) {
    fail(ErrorCode::limit_exceeded,
         "instance has n = " + std::to_string(n) + " > " + std::to_string(c.limit_n) + "; raise --limit-n");
  }
}

VertexSet make_set(std::size_t n, const std::vector<std::size_t>& elems) {
  VertexSet s(n);
  for (auto v : elems) {
    if (v >= n) fail(ErrorCode::invalid_argument, "vertex " + std::to_string(v) + " out of range");
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}

// "u,v" -> Arc{u, v}.
Arc make_arc(const std::string& text) {
  const auto comma = text.find(',');
  Vertex ends[2] = {0, 0};
  const std::string parts[2] = {text.substr(0, comma), comma == std::string::npos ? "" : text.substr(comma + 1)};
  for (int i = 0; i < 2; ++i) {
    const auto* first = parts[i].data();
    const auto* last = first + parts[i].size();
    const auto [ptr, ec] = std::from_chars(first, last, ends[i]);
    if (ec != std::errc{} || ptr != last || parts[i].empty()) {
      fail(ErrorCode::parse_error, "expected an arc 'u,v', got '" + text + "'");
    }
  }
  return Arc{ends[0], ends[1]};
}

std::string target_text(const PerturbTarget& t) {
  if (const auto* a = std::get_if<Arc>(&t)) return a->to_string();
  return std::to_string(std::get<Vertex>(t));
}

std::size_t instance_size(const Instance& inst) {
  return std::visit([](const auto& x) { return x.order(); }, inst);
}

// --- commands ---------------------------------------------------------------

struct SolveArgs {
  std::string source;
  std::string method = "exact";
  bool undirected = false;
  bool out_domination = false;
};

Report cmd_solve(const SolveArgs& a, const Common& c) {
  const Instance inst = load_instance(a.source);
  const Method method = parse_method(a.method);
  const std::size_t n = instance_size(inst);
  check_order(n, c);
  Report r("solve");
  r.add("instance", a.source);
  r.add("n", std::uint64_t{n});

  if (std::holds_alternative<Graph>(inst) || a.undirected) {
    const Graph g = need_graph(inst, "solve --undirected");
    if (a.out_domination) fail(ErrorCode::invalid_argument, "--out-domination needs a directed instance");
    const SolveResult s = gamma_m_undirected(g, method);
    r.add("problem", "gamma_m");
    r.add("threshold", std::uint64_t{majority_threshold(n)});
    r.add("method", std::string(to_string(s.method)));
    r.add("value", std::uint64_t{s.value});
    r.add("witness", members(s.witness));
    r.add("covered", std::uint64_t{closed_neighborhood(g, s.witness).count()});
    r.add("verified", is_majority_dominating(g, s.witness));
    r.add("explored", s.explored);
    return r;
  }

  const Digraph d = std::get<Digraph>(inst);
  SolveResult s;
  if (a.out_domination) {
    s = gamma_plus(d, method);
  } else if (method == Method::greedy) {
    s = greedy_mods(d);
  } else {
    s = gamma_m_plus(d, method);
  }
  r.add("problem", a.out_domination ? "gamma_plus" : "gamma_m_plus");
  r.add("threshold", std::uint64_t{a.out_domination ? n : majority_threshold(n)});
  r.add("method", std::string(to_string(s.method)));
  r.add("value", std::uint64_t{s.value});
  r.add("witness", members(s.witness));
  r.add("covered", std::uint64_t{closed_out_neighborhood(d, s.witness).count()});
  r.add("verified", a.out_domination ? is_out_dominating(d, s.witness) : is_mods(d, s.witness));
  r.add("explored", s.explored);
  return r;
}

Report cmd_bounds(const std::string& source, const Common& c) {
  const Digraph d = need_digraph(load_instance(source), "bounds");
  check_order(d.order(), c);
  const BoundReport b = bound_report(d, c.limit_dp);
  Report r("bounds");
  r.add("instance", source);
  r.add("n", std::uint64_t{b.n});
  r.add("delta_plus", std::uint64_t{b.delta_plus});
  r.add("gamma_m_plus", std::uint64_t{b.gamma_m_plus});
  r.add("gamma_plus", std::uint64_t{b.gamma_plus});
  r.add("longest_path", std::uint64_t{b.path.length});
  r.add("path_witness", array(b.path.witness));
  r.add("longest_cycle", std::uint64_t{b.cycle.length});
  r.add("cycle_witness", b.cycle.witness ? array(*b.cycle.witness) : std::string("none"));
  r.add("all_hold", b.all_hold());
  Table& t = r.table("bound", {"name", "relation", "lhs", "rhs", "applicable", "holds", "tight", "note"});
  for (const auto& e : b.entries) {
    t.rows.push_back({e.name, std::string(to_string(e.relation)), e.lhs.to_string(), e.rhs.to_string(),
                      yes_no(e.applicable), yes_no(e.holds), yes_no(e.tight), e.note.empty() ? "-" : e.note});
  }
  return r;
}

Report cmd_minimal_check(const std::string& source, const std::vector<std::size_t>& set, const Common& c) {
  const Digraph d = need_digraph(load_instance(source), "minimal check");
  check_order(d.order(), c);
  const VertexSet s = make_set(d.order(), set);
  Report r("minimal-check");
  r.add("instance", source);
  r.add("set", members(s));
  r.add("covered", std::uint64_t{closed_out_neighborhood(d, s).count()});
  r.add("threshold", std::uint64_t{majority_threshold(d.order())});
  const bool mods = is_mods(d, s);
  r.add("is_mods", mods);
  if (mods) {
    const bool direct = is_minimal_mods_direct(d, s);
    const bool characterized = is_minimal_mods_characterized(d, s);
    r.add("minimal_direct", direct);
    r.add("minimal_characterized", characterized);
    r.add("agree", direct == characterized);
    r.add("literal_reading", minimality_conditions_literal(d, s));
  }
  return r;
}

Report cmd_minimal_enumerate(const std::string& source, const Common& c) {
  const Digraph d = need_digraph(load_instance(source), "minimal enumerate");
  check_order(d.order(), c);
  const MinimalModsList list = enumerate_minimal_mods(d, c.cap);
  Report r("minimal-enumerate");
  r.add("instance", source);
  r.add("count", std::uint64_t{list.sets.size()});
  r.add("truncated", list.truncated);
  Table& t = r.table("set", {"size", "members"});
  for (const auto& s : list.sets) t.rows.push_back({std::to_string(s.count()), members(s)});
  return r;
}

struct PerturbArgs {
  std::string source;
  std::string remove_arc;
  std::optional<std::size_t> remove_vertex;
  std::string add_arc;
  std::string reverse_arc;
};

Report cmd_perturb(const PerturbArgs& a, const Common& c) {
  const Digraph d = need_digraph(load_instance(a.source), "perturb");
  check_order(d.order(), c);
  PerturbKind kind = PerturbKind::arc_removal;
  PerturbTarget target = Arc{};
  if (!a.remove_arc.empty()) {
    target = make_arc(a.remove_arc);
  } else if (a.remove_vertex) {
    kind = PerturbKind::vertex_removal;
    target = static_cast<Vertex>(*a.remove_vertex);
  } else if (!a.add_arc.empty()) {
    kind = PerturbKind::arc_addition;
    target = make_arc(a.add_arc);
  } else {
    kind = PerturbKind::arc_reversal;
    target = make_arc(a.reverse_arc);
  }
  const PerturbationRecord p = perturb(d, kind, target);
  Report r("perturb");
  r.add("instance", a.source);
  r.add("kind", std::string(to_string(p.kind)));
  r.add("target", target_text(p.target));
  r.add("before", std::uint64_t{p.before});
  r.add("after", std::uint64_t{p.after});
  r.add("bound_low", std::uint64_t{p.bound_low});
  r.add("bound_high", std::uint64_t{p.bound_high});
  r.add("within_bounds", p.within_bounds);
  if (p.removed_out_degree) r.add("removed_out_degree", std::uint64_t{*p.removed_out_degree});
  return r;
}

Report cmd_critical(const std::string& source, const Common& c) {
  const Digraph d = need_digraph(load_instance(source), "critical");
  check_order(d.order(), c);
  Report r("critical");
  r.add("instance", source);
  r.add("gamma_m_plus", std::uint64_t{gamma_m_plus(d).value});
  r.add("arcs", std::uint64_t{d.arc_count()});
  std::size_t critical = 0;
  bool all_agree = true;
  std::vector<std::vector<std::string>> rows;
  for (const Arc& a : d.arcs()) {
    const bool direct = is_critical_arc_direct(d, a);
    const bool characterized = is_critical_arc_characterized(d, a);
    critical += direct ? 1 : 0;
    all_agree = all_agree && direct == characterized;
    rows.push_back({a.to_string(), yes_no(direct), yes_no(characterized), yes_no(direct == characterized)});
  }
  r.add("critical", std::uint64_t{critical});
  r.add("all_agree", all_agree);
  r.table("arc", {"arc", "direct", "characterized", "agree"}).rows = std::move(rows);
  return r;
}

std::string arcs_text(const std::vector<Arc>& arcs) {
  std::string out = "[";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0) out += ' ';
    out += arcs[i].to_string();
  }
  return out + "]";
}

struct OrientArgs {
  std::string source;
  std::vector<std::size_t> majority_set;
};

Report cmd_orient(const OrientArgs& a, const Common& c) {
  Report r("orient");
  r.add("instance", a.source);
  if (auto named = NamedOrientation::try_parse(a.source)) {
    const Orientation o = construct_named_orientation(*named);
    const SolveResult s = gamma_m_plus(o.digraph());
    r.add("n", std::uint64_t{o.base().order()});
    r.add("m", std::uint64_t{o.base().edge_count()});
    r.add("code", o.base().edge_count() <= 63 ? std::to_string(o.code()) : std::string("-"));
    r.add("arcs", arcs_text(o.arcs()));
    r.add("gamma_m_plus", std::uint64_t{s.value});
    r.add("witness", members(s.witness));
    return r;
  }
  const Graph g = need_graph(load_instance(a.source), "orient");
  check_order(g.order(), c);
  r.add("n", std::uint64_t{g.order()});
  r.add("m", std::uint64_t{g.edge_count()});
  if (!a.majority_set.empty()) {
    const Orientation o = orient_from_majority_set(g, make_set(g.order(), a.majority_set), c.seed);
    const VertexSet m = make_set(g.order(), a.majority_set);
    r.add("majority_set", members(m));
    r.add("seed", c.seed);
    r.add("arcs", arcs_text(o.arcs()));
    r.add("set_is_mods", is_mods(o.digraph(), m));
    r.add("gamma_m_plus", std::uint64_t{orientation_gamma(o)});
    return r;
  }
  const OrientationSpectrum sp = spectrum(g, c.limit_edges);
  r.add("orientations", sp.total());
  r.add("dom", std::uint64_t{sp.min_value});
  r.add("DOM", std::uint64_t{sp.max_value});
  r.add("gamma_m", std::uint64_t{dom_via_theorem(g).value});
  r.add("intermediate_values", check_ivt(g, c.limit_edges).interval_ok);
  r.add("min_witness_code", sp.min_witness.code());
  r.add("min_witness", arcs_text(sp.min_witness.arcs()));
  r.add("max_witness_code", sp.max_witness.code());
  r.add("max_witness", arcs_text(sp.max_witness.arcs()));
  if (auto spec = FamilySpec::try_parse(a.source)) {
    const auto lo = closed_form_lower(*spec);
    const auto hi = closed_form_upper(*spec);
    r.add("formula_dom", lo ? std::to_string(*lo) : std::string("-"));
    r.add("formula_DOM", hi ? std::to_string(*hi) : std::string("-"));
  }
  Table& t = r.table("histogram", {"value", "count"});
  for (const auto& [value, count] : sp.histogram) t.rows.push_back({std::to_string(value), std::to_string(count)});
  return r;
}

Report cmd_conjecture(std::size_t rr, std::size_t ss, const Common& c) {
  const ConjectureVerdict v = check_conjecture(rr, ss, c.limit_edges);
  Report r("conjecture");
  r.add("r", std::uint64_t{v.r});
  r.add("s", std::uint64_t{v.s});
  r.add("computed", std::uint64_t{v.computed_dom});
  r.add("conjectured", std::uint64_t{v.conjectured});
  r.add("applicable", v.applicable);
  r.add("agrees", v.agrees);
  r.add("method", v.method);
  return r;
}

Report cmd_suite(const SuiteConfig& config, bool& passed) {
  const SuiteResult s = run_suite(config);
  passed = s.passed();
  Report r("suite");
  r.add("families", config.families);
  r.add("random", std::uint64_t{config.random});
  r.add("random_graphs", std::uint64_t{config.random_graphs});
  r.add("seed", config.seed);
  r.add("max_n", std::uint64_t{config.max_n});
  r.add("max_edges", std::uint64_t{config.max_edges});
  r.add("digraphs", std::uint64_t{s.digraphs});
  r.add("graphs", std::uint64_t{s.graphs});
  r.add("passed", passed);
  Table& t = r.table("row", {"name", "instances", "checks", "failures", "status", "example"});
  for (const auto& row : s.rows) {
    t.rows.push_back({row.name, std::to_string(row.instances), std::to_string(row.checks),
                      std::to_string(row.failures), row.status(), row.example.empty() ? "-" : row.example});
  }
  return r;
}

int cmd_gen(const std::string& source, const std::string& output, std::ostream& out) {
  const Instance inst = load_instance(source);
  if (output.empty() || output == "-") {
    write_instance(out, inst);
    return kExitOk;
  }
  std::ofstream file(output);
  if (!file) fail(ErrorCode::invalid_argument, "cannot write '" + output + "'");
  write_instance(file, inst);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver and theorem checker for majority out-dominating sets", "mods"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "structured"}));
  app.add_option("--limit-n", c.limit_n, "Largest instance order accepted by the solvers")
      ->check(CLI::PositiveNumber);
  app.add_option("--limit-edges", c.limit_edges, "Largest edge count for orientation enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--limit-dp", c.limit_dp, "Largest order for longest path/cycle")->check(CLI::PositiveNumber);
  app.add_option("--cap", c.cap, "Largest number of minimal sets listed")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "Seed for random choices");

  const std::string instance_help = "Instance file or family spec (e.g. dipath:8)";

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Minimum MODS (or out-dominating / undirected majority set)");
  solve_cmd->add_option("instance", solve.source, instance_help)->required();
  solve_cmd->add_option("--method", solve.method, "exact, oracle or greedy")
      ->check(CLI::IsMember({"exact", "oracle", "greedy"}));
  solve_cmd->add_flag("--undirected", solve.undirected, "Solve gamma_m of an undirected instance");
  solve_cmd->add_flag("--out-domination", solve.out_domination, "Solve gamma+ (cover every vertex)");

  std::string bounds_source;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate every bound on a digraph");
  bounds_cmd->add_option("instance", bounds_source, instance_help)->required();

  auto* minimal_cmd = app.add_subcommand("minimal", "Minimal MODS checks");
  minimal_cmd->require_subcommand(1);
  std::string check_source;
  std::vector<std::size_t> check_set;
  auto* check_cmd = minimal_cmd->add_subcommand("check", "Is a set a minimal MODS");
  check_cmd->add_option("instance", check_source, instance_help)->required();
  check_cmd->add_option("--set", check_set, "Comma-separated vertices")->delimiter(',')->required();
  std::string enum_source;
  auto* enum_cmd = minimal_cmd->add_subcommand("enumerate", "List every minimal MODS");
  enum_cmd->add_option("instance", enum_source, instance_help)->required();

  PerturbArgs perturb_args;
  auto* perturb_cmd = app.add_subcommand("perturb", "gamma_m+ before and after one edit");
  perturb_cmd->add_option("instance", perturb_args.source, instance_help)->required();
  auto* edit = perturb_cmd->add_option_group("edit");
  edit->add_option("--remove-arc", perturb_args.remove_arc, "u,v");
  edit->add_option("--remove-vertex", perturb_args.remove_vertex, "v");
  edit->add_option("--add-arc", perturb_args.add_arc, "u,v");
  edit->add_option("--reverse-arc", perturb_args.reverse_arc, "u,v");
  edit->require_option(1);

  std::string critical_source;
  auto* critical_cmd = app.add_subcommand("critical", "Critical arcs by definition and by characterization");
  critical_cmd->add_option("instance", critical_source, instance_help)->required();

  OrientArgs orient_args;
  auto* orient_cmd = app.add_subcommand("orient", "Orientation spectrum of a graph, or a named orientation");
  orient_cmd->add_option("instance", orient_args.source, "Graph file, graph family or named orientation")
      ->required();
  orient_cmd->add_option("--majority-set", orient_args.majority_set, "Orient away from this set (uses --seed)")
      ->delimiter(',');

  std::size_t conj_r = 0;
  std::size_t conj_s = 0;
  auto* conj_cmd = app.add_subcommand("conjecture", "Exhaustive DOM of K_{r,s} against the conjectured value");
  conj_cmd->add_option("r", conj_r, "Smaller part")->required()->check(CLI::PositiveNumber);
  conj_cmd->add_option("s", conj_s, "Larger part")->required()->check(CLI::PositiveNumber);

  SuiteConfig suite;
  auto* suite_cmd = app.add_subcommand("suite", "Check every theorem over a corpus");
  suite_cmd->add_option("--families", suite.families, "default, none, or comma-separated family names");
  suite_cmd->add_option("--random", suite.random, "Number of random digraphs");
  suite_cmd->add_option("--random-graphs", suite.random_graphs, "Number of random graphs (n <= 7)");
  suite_cmd->add_option("--max-n", suite.max_n, "Largest family / random order")->check(CLI::PositiveNumber);
  suite_cmd->add_option("--max-edges", suite.max_edges, "Largest edge count for orientation rows")
      ->check(CLI::PositiveNumber);

  std::string gen_source;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Write a family instance in the file format");
  gen_cmd->add_option("instance", gen_source, "Family spec")->required();
  gen_cmd->add_option("-o,--output", gen_output, "Output path (default stdout)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  check_cmd->fallthrough();
  enum_cmd->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::optional<Report> report;
    int code = kExitOk;
    if (*solve_cmd) {
      report = cmd_solve(solve, c);
    } else if (*bounds_cmd) {
      report = cmd_bounds(bounds_source, c);
    } else if (*check_cmd) {
      report = cmd_minimal_check(check_source, check_set, c);
    } else if (*enum_cmd) {
      report = cmd_minimal_enumerate(enum_source, c);
    } else if (*perturb_cmd) {
      report = cmd_perturb(perturb_args, c);
    } else if (*critical_cmd) {
      report = cmd_critical(critical_source, c);
    } else if (*orient_cmd) {
      report = cmd_orient(orient_args, c);
    } else if (*conj_cmd) {
      report = cmd_conjecture(conj_r, conj_s, c);
    } else if (*suite_cmd) {
      suite.seed = c.seed;
      suite.dp_limit = c.limit_dp;
      bool passed = false;
      report = cmd_suite(suite, passed);
      code = passed ? kExitOk : kExitSuiteFailure;
    } else if (*gen_cmd) {
      return cmd_gen(gen_source, gen_output, out);
    }
    if (report) report->render(out, c.fmt());
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::limit_exceeded ? kExitLimit : kExitUsage;
  }
}

}  // namespace mods::cli
