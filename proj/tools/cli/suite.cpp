#include "suite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mods/bounds.hpp"
#include "mods/error.hpp"
#include "mods/families.hpp"
#include "mods/orientation.hpp"
#include "mods/perturbation.hpp"
#include "mods/random.hpp"
#include "mods/solver.hpp"

namespace mods::cli {

namespace {

constexpr std::size_t kOracleLimit = 12;
constexpr std::size_t kPerturbLimit = 9;
constexpr std::size_t kRandomModsPerInstance = 10;
constexpr std::size_t kSpanningSamples = 3;

struct RowSpec {
  const char* name;
  const char* statement;
  bool gating;
};

const RowSpec kRows[] = {
    {"oracle_equivalence", "exact and oracle agree on value and witness", true},
    {"greedy_upper_bound", "greedy set is a MODS no smaller than the optimum", true},
    {"spanning_monotonicity", "gamma_m+(D) <= gamma_m+(H) for spanning H", true},
    {"bound.hamiltonian_cycle", "gamma_m+ <= ceil(n/4) when c(D) = n", true},
    {"bound.longest_path", "gamma_m+ <= ceil((2n - l - 1)/4)", true},
    {"bound.longest_cycle", "gamma_m+ <= ceil((2n - c)/4)", true},
    {"bound.half_out_domination", "gamma_m+ <= ceil(gamma+/2)", true},
    {"bound.degree_lower", "gamma_m+ >= ceil(n/(2(D+ + 1)))", true},
    {"bound.degree_upper", "gamma_m+ = 1 or gamma_m+ <= ceil(n/2) - D+", true},
    {"bound.degree_upper_corollary", "gamma_m+ <= (n - D+ + 1)/2", true},
    {"bound.equality_iff_full_degree", "gamma_m+ = gamma+ <=> D+ = n - 1", true},
    {"bound.unit_iff_degree", "gamma_m+ = 1 <=> D+ >= ceil(n/2) - 1", true},
    {"bound_sandwich", "lower bound <= gamma_m+ <= every applicable upper bound", true},
    {"minimality_characterization", "direct minimality = private-neighbor conditions", true},
    {"minimality_literal_reading", "literal reading of the conditions (reported only)", false},
    {"complement_of_minimal", "V \\ S is a MODS for minimal S", true},
    {"complement_of_minimum", "V \\ S is a MODS for minimum S (reported only)", false},
    {"perturb.arc-removal", "k <= gamma_m+(D - e) <= k + 1", true},
    {"perturb.vertex-removal", "k - 1 <= gamma_m+(D - v) <= max(k, k - 1 + d+(v))", true},
    {"perturb.arc-addition", "k - 1 <= gamma_m+(D + e) <= k", true},
    {"perturb.arc-reversal", "k - 1 <= gamma_m+ after reversal <= k + 1", true},
    {"critical_arc_characterization", "critical by definition = critical by characterization", true},
    {"directed_closed_forms", "paths, cycles, empty and figure1 values", true},
    {"dom_equals_gamma_m", "min over orientations = gamma_m(G)", true},
    {"intermediate_values", "every value between dom and DOM is attained", true},
    {"pruned_upper_search", "pruned DOM search = spectrum maximum", true},
    {"closed_form.dom", "published dom+_m values", true},
    {"closed_form.DOM", "published DOM+_m values", true},
    {"small_graph_unit", "DOM+_m = 1 when n <= 4 and m >= 1", true},
    {"tournament_out_degree", "every tournament has d+(v) >= ceil((n-1)/2)", true},
    {"named_constructions", "explicit orientations reach their stated values", true},
    {"dom1_bipartite", "DOM+_m(K_{r,s}) = 1 iff the listed cases", true},
    {"conjecture", "K_{r,s} conjectured DOM+_m (reported only)", false},
};

class Tracker {
 public:
  Tracker() {
    for (const auto& r : kRows) {
      index_.emplace(r.name, rows_.size());
      rows_.push_back(SuiteRow{r.name, r.statement, r.gating, 0, 0, 0, {}});
      last_.push_back(0);
    }
  }

  void begin(std::string label) {
    ++instance_;
    label_ = std::move(label);
  }

  void check(const std::string& row, bool ok, const std::string& detail = {}) {
    SuiteRow& r = rows_.at(index_.at(row));
    std::size_t& last = last_[index_.at(row)];
    if (last != instance_) {
      last = instance_;
      ++r.instances;
    }
    ++r.checks;
    if (!ok) {
      if (r.failures == 0) r.example = detail.empty() ? label_ : label_ + " " + detail;
      ++r.failures;
    }
  }

  std::vector<SuiteRow> take() { return std::move(rows_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<SuiteRow> rows_;
  std::vector<std::size_t> last_;
  std::size_t instance_ = 0;
  std::string label_;
};

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::string arc_text(const Arc& a) { return a.to_string(); }

VertexSet complement_of(const VertexSet& s) { return s.complement(); }

void check_minimality(Tracker& t, const Digraph& d, const VertexSet& s) {
  const bool direct = is_minimal_mods_direct(d, s);
  t.check("minimality_characterization", direct == is_minimal_mods_characterized(d, s), "S=" + s.to_string());
  t.check("minimality_literal_reading", direct == minimality_conditions_literal(d, s), "S=" + s.to_string());
}

std::vector<VertexSet> random_mods(const Digraph& d, Rng& rng) {
  const std::size_t n = d.order();
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < kRandomModsPerInstance; ++i) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t j = n; j > 1; --j) std::swap(order[j - 1], order[rng.below(j)]);
    VertexSet s(n);
    std::size_t used = 0;
    while (!is_mods(d, s)) s.insert(order[used++]);
    // Every other sample carries one extra vertex, so non-minimal sets show up.
    if (i % 2 == 1 && used < n) s.insert(order[used]);
    out.push_back(std::move(s));
  }
  return out;
}

void check_bounds(Tracker& t, const Digraph& d, std::size_t dp_limit) {
  if (d.order() > dp_limit) return;
  const BoundReport r = bound_report(d, dp_limit);
  Fraction upper(static_cast<std::int64_t>(d.order()));
  Fraction lower(0);
  for (const auto& e : r.entries) {
    if (!e.applicable) continue;
    t.check("bound." + e.name, e.holds, e.lhs.to_string() + " vs " + e.rhs.to_string());
    if (e.relation == Relation::at_most) upper = std::min(upper, e.rhs);
    if (e.relation == Relation::unit_or_at_most && e.lhs != Fraction(1)) upper = std::min(upper, e.rhs);
    if (e.relation == Relation::at_least) lower = std::max(lower, e.rhs);
  }
  const Fraction g(static_cast<std::int64_t>(r.gamma_m_plus));
  t.check("bound_sandwich", lower <= g && g <= upper);
}

void check_perturbations(Tracker& t, const Digraph& d) {
  if (d.order() > kPerturbLimit) return;
  auto run = [&](PerturbKind kind, PerturbTarget target, const std::string& where) {
    const auto r = perturb(d, kind, target);
    t.check("perturb." + std::string(to_string(kind)), r.within_bounds,
            where + ": " + std::to_string(r.before) + " -> " + std::to_string(r.after) + " not in [" +
                std::to_string(r.bound_low) + "," + std::to_string(r.bound_high) + "]");
  };
  for (const Arc& a : d.arcs()) {
    run(PerturbKind::arc_removal, a, "e=" + arc_text(a));
    if (!d.has_arc(a.head, a.tail)) run(PerturbKind::arc_reversal, a, "e=" + arc_text(a));
    t.check("critical_arc_characterization", is_critical_arc_direct(d, a) == is_critical_arc_characterized(d, a),
            "e=" + arc_text(a));
  }
  const auto n = static_cast<Vertex>(d.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && !d.has_arc(u, v)) run(PerturbKind::arc_addition, Arc{u, v}, "e=" + arc_text(Arc{u, v}));
    }
  }
  if (n >= 2) {
    for (Vertex v = 0; v < n; ++v) run(PerturbKind::vertex_removal, v, "v=" + std::to_string(v));
  }
}

void check_directed_family(Tracker& t, const FamilySpec& spec, const Digraph& d) {
  const std::size_t n = d.order();
  const std::size_t g = gamma_m_plus(d).value;
  switch (spec.family) {
    case Family::dipath:
    case Family::dicycle:
      t.check("directed_closed_forms", g == ceil_div(n, 4) && gamma_plus(d).value == ceil_div(n, 2));
      break;
    case Family::empty: t.check("directed_closed_forms", g == majority_threshold(n)); break;
    case Family::figure1: t.check("directed_closed_forms", g == spec.sizes[0]); break;
    default: break;
  }
}

void check_digraph(Tracker& t, const Digraph& d, Rng& rng, const SuiteConfig& config) {
  const std::size_t n = d.order();
  const SolveResult exact = gamma_m_plus(d);
  if (n <= kOracleLimit) {
    const SolveResult oracle = gamma_m_plus(d, Method::oracle);
    t.check("oracle_equivalence", exact.value == oracle.value && exact.witness == oracle.witness);
  }
  const SolveResult greedy = greedy_mods(d);
  t.check("greedy_upper_bound", is_mods(d, greedy.witness) && greedy.value >= exact.value);

  for (std::size_t i = 0; i < kSpanningSamples; ++i) {
    std::vector<Arc> kept;
    for (const Arc& a : d.arcs()) {
      if (rng.bernoulli(0.5)) kept.push_back(a);
    }
    t.check("spanning_monotonicity", exact.value <= gamma_m_plus(Digraph(n, kept)).value);
  }

  check_bounds(t, d, config.dp_limit);

  const MinimalModsList minimal = enumerate_minimal_mods(d, config.cap);
  const bool odd_empty = d.arc_count() == 0 && n % 2 == 1;
  for (const VertexSet& s : minimal.sets) {
    check_minimality(t, d, s);
    if (!odd_empty) t.check("complement_of_minimal", is_mods(d, complement_of(s)), "S=" + s.to_string());
  }
  for (const VertexSet& s : random_mods(d, rng)) check_minimality(t, d, s);
  if (!odd_empty) {
    for (const VertexSet& s : enumerate_minimum_mods(d)) {
      t.check("complement_of_minimum", is_mods(d, complement_of(s)), "S=" + s.to_string());
    }
  }

  check_perturbations(t, d);
}

void construction_check(Tracker& t, const FamilySpec& spec) {
  const auto& z = spec.sizes;
  auto gamma_of = [](const std::string& text) {
    return orientation_gamma(construct_named_orientation(NamedOrientation::parse(text)));
  };
  auto sizes = [&](std::size_t a, std::size_t b) { return std::to_string(a) + "," + std::to_string(b); };
  switch (spec.family) {
    case Family::path:
      if (z[0] >= 2) {
        t.check("named_constructions", gamma_of("pathdom:" + std::to_string(z[0])) == ceil_div(z[0], 6), "pathdom");
      }
      break;
    case Family::star:
      if (z[0] >= 3) {
        t.check("named_constructions", gamma_of("starsink:" + std::to_string(z[0])) == (z[0] - 1) / 2, "starsink");
      }
      break;
    case Family::doublestar: {
      const std::size_t n = z[0] + z[1] + 2;
      if (n >= 5) {
        t.check("named_constructions", gamma_of("doublestarsink:" + sizes(z[0], z[1])) == closed_form_upper(spec),
                "doublestarsink");
      }
      t.check("named_constructions", gamma_of("doublestarsource:" + sizes(z[0], z[1])) == 1, "doublestarsource");
      break;
    }
    case Family::wheel:
      t.check("named_constructions", gamma_of("wheelsink:" + std::to_string(z[0])) == ceil_div(z[0] - 2, 4),
              "wheelsink");
      break;
    case Family::bipartite: {
      const std::size_t r = std::min(z[0], z[1]);
      const std::size_t s = std::max(z[0], z[1]);
      if (s > r + 2) t.check("named_constructions", gamma_of("bipsink:" + sizes(r, s)) > 1, "bipsink");
      if (s <= r + 2 && !dom1_bipartite_condition(r, s)) {
        t.check("named_constructions", gamma_of("biptwoout:" + sizes(r, s)) > 1, "biptwoout");
      }
      break;
    }
    default: break;
  }
}

void check_graph(Tracker& t, const Graph& g, const std::optional<FamilySpec>& spec, const SuiteConfig& config) {
  const OrientationSpectrum sp = spectrum(g, config.max_edges);
  t.check("dom_equals_gamma_m", sp.min_value == dom_via_theorem(g).value);
  t.check("intermediate_values", check_ivt(g, config.max_edges).interval_ok);
  const UpperOrientable up = upper_orientable_number(g, config.max_edges);
  t.check("pruned_upper_search", up.value == sp.max_value && orientation_gamma(*up.witness) == up.value);
  if (g.order() <= 4 && g.edge_count() >= 1) t.check("small_graph_unit", sp.max_value == 1);
  if (!spec) return;

  if (auto lo = closed_form_lower(*spec)) {
    t.check("closed_form.dom", *lo == sp.min_value,
            std::to_string(sp.min_value) + " vs formula " + std::to_string(*lo));
  }
  if (auto hi = closed_form_upper(*spec)) {
    t.check("closed_form.DOM", *hi == sp.max_value,
            std::to_string(sp.max_value) + " vs formula " + std::to_string(*hi));
  }
  if (spec->family == Family::complete) {
    const std::size_t need = g.order() / 2;  // ceil((n-1)/2)
    for_each_orientation(
        g,
        [&](const Orientation& o) {
          t.check("tournament_out_degree", o.digraph().max_out_degree() >= need);
          return true;
        },
        config.max_edges);
  }
  construction_check(t, *spec);
  if (spec->family == Family::bipartite) {
    const std::size_t r = std::min(spec->sizes[0], spec->sizes[1]);
    const std::size_t s = std::max(spec->sizes[0], spec->sizes[1]);
    t.check("dom1_bipartite", (sp.max_value == 1) == dom1_bipartite_condition(r, s));
    if (sp.max_value != 1) {
      t.check("conjecture", sp.max_value == conjectured_dom(r, s),
              std::to_string(sp.max_value) + " vs conjectured " + std::to_string(conjectured_dom(r, s)));
    }
  }
}

constexpr std::string_view kCorpusFamilies[] = {"dipath", "dicycle", "empty",    "figure1",    "path",     "cycle",
                                               "complete", "star", "doublestar", "wheel", "bipartite"};

bool wanted(const std::set<std::string>& names, bool all, const char* name) { return all || names.count(name) > 0; }

std::vector<FamilySpec> family_corpus(const SuiteConfig& config) {
  std::set<std::string> names;
  bool all = config.families == "default";
  if (!all && config.families != "none") {
    std::stringstream ss(config.families);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (std::find(std::begin(kCorpusFamilies), std::end(kCorpusFamilies), name) == std::end(kCorpusFamilies)) {
        fail(ErrorCode::parse_error, "unknown corpus family '" + name + "'");
      }
      names.insert(name);
    }
  }
  const std::size_t max_n = config.max_n;
  std::vector<FamilySpec> out;
  auto add = [&](Family f, std::vector<std::size_t> sizes) {
    FamilySpec s;
    s.family = f;
    s.sizes = std::move(sizes);
    out.push_back(std::move(s));
  };
  if (wanted(names, all, "dipath")) {
    for (std::size_t n = 1; n <= max_n; ++n) add(Family::dipath, {n});
  }
  if (wanted(names, all, "dicycle")) {
    for (std::size_t n = 3; n <= max_n; ++n) add(Family::dicycle, {n});
  }
  if (wanted(names, all, "empty")) {
    for (std::size_t n = 1; n <= max_n; ++n) add(Family::empty, {n});
  }
  if (wanted(names, all, "figure1")) {
    for (std::size_t k = 3; 2 * k + 4 <= max_n; ++k) add(Family::figure1, {k});
  }
  if (wanted(names, all, "path")) {
    for (std::size_t n = 2; n <= max_n; ++n) add(Family::path, {n});
  }
  if (wanted(names, all, "cycle")) {
    for (std::size_t n = 3; n <= max_n; ++n) add(Family::cycle, {n});
  }
  if (wanted(names, all, "complete")) {
    for (std::size_t n = 2; n <= max_n; ++n) add(Family::complete, {n});
  }
  if (wanted(names, all, "star")) {
    for (std::size_t n = 2; n <= max_n; ++n) add(Family::star, {n});
  }
  if (wanted(names, all, "doublestar")) {
    for (std::size_t a = 1; a + a + 2 <= max_n; ++a) {
      for (std::size_t b = a; a + b + 2 <= max_n; ++b) add(Family::doublestar, {a, b});
    }
  }
  if (wanted(names, all, "wheel")) {
    for (std::size_t n = 4; n <= max_n; ++n) add(Family::wheel, {n});
  }
  if (wanted(names, all, "bipartite")) {
    for (std::size_t r = 1; r + r <= max_n; ++r) {
      for (std::size_t s = r; r + s <= max_n; ++s) add(Family::bipartite, {r, s});
    }
  }
  return out;
}

}  // namespace

std::string SuiteRow::status() const {
  if (!gating) return "info";
  return failures == 0 ? "pass" : "FAIL";
}

bool SuiteResult::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return !r.gating || r.failures == 0; });
}

SuiteResult run_suite(const SuiteConfig& config) {
  if (config.max_n == 0) fail(ErrorCode::invalid_argument, "--max-n must be positive");
  Tracker t;
  SuiteResult result;
  std::size_t index = 0;
  auto instance_rng = [&] { return Rng(config.seed ^ (0x9E3779B97F4A7C15ULL * ++index)); };

  for (const FamilySpec& spec : family_corpus(config)) {
    const Instance inst = make_family(spec);
    Rng rng = instance_rng();
    if (const auto* d = std::get_if<Digraph>(&inst)) {
      t.begin(spec.to_string());
      ++result.digraphs;
      check_directed_family(t, spec, *d);
      check_digraph(t, *d, rng, config);
    } else {
      const Graph& g = std::get<Graph>(inst);
      if (g.edge_count() > config.max_edges) continue;
      t.begin(spec.to_string());
      ++result.graphs;
      check_graph(t, g, spec, config);
    }
  }

  static constexpr double kProbabilities[] = {0.1, 0.3, 0.5};
  Rng corpus(config.seed);
  for (std::size_t i = 0; i < config.random; ++i) {
    FamilySpec spec;
    spec.family = Family::randdigraph;
    const std::size_t n = config.max_n < 2 ? 1 : 2 + corpus.below(config.max_n - 1);
    spec.sizes = {n};
    spec.probability = kProbabilities[corpus.below(3)];
    spec.seed = corpus.next() >> 32;
    const Digraph d = std::get<Digraph>(make_family(spec));
    Rng rng = instance_rng();
    t.begin(spec.to_string());
    ++result.digraphs;
    check_digraph(t, d, rng, config);
  }

  static constexpr double kGraphProbabilities[] = {0.3, 0.5, 0.7};
  const std::size_t graph_max_n = std::min<std::size_t>(config.max_n, 7);
  for (std::size_t i = 0; i < config.random_graphs; ++i) {
    const std::size_t n = graph_max_n < 2 ? 1 : 2 + corpus.below(graph_max_n - 1);
    const double p = kGraphProbabilities[corpus.below(3)];
    const std::uint64_t seed = corpus.next() >> 32;
    const Graph g = random_graph(n, p, seed);
    if (g.edge_count() > config.max_edges) continue;
    std::ostringstream label;
    label << "randgraph(" << n << "," << p << "," << seed << ")";
    t.begin(label.str());
    ++result.graphs;
    check_graph(t, g, std::nullopt, config);
  }

  result.rows = t.take();
  return result;
}

}  // namespace mods::cli
