// Acceptance gate: one PASS/FAIL line per criterion. Run all criteria or
// pick some with --criterion N (repeatable). Exit status is nonzero when any
// selected gating criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mods/bounds.hpp"
#include "mods/families.hpp"
#include "mods/orientation.hpp"
#include "mods/perturbation.hpp"
#include "mods/random.hpp"
#include "mods/solver.hpp"

using namespace mods;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kCriterion1Seconds = 10.0;
constexpr double kCriterion7Seconds = 600.0;
constexpr std::size_t kCorpusSize = 500;
constexpr std::size_t kRandomModsPerInstance = 50;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool line(const std::string& id, bool pass, const std::string& detail) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " (" << detail << ")\n";
  return pass;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

struct CorpusEntry {
  std::string label;
  Digraph digraph;
};

// 500 seeded digraphs, n = 1..10, p cycling through 0.1, 0.3, 0.5.
const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    static constexpr double kP[] = {0.1, 0.3, 0.5};
    std::vector<CorpusEntry> out;
    for (std::size_t i = 0; i < kCorpusSize; ++i) {
      FamilySpec spec;
      spec.family = Family::randdigraph;
      spec.sizes = {1 + i % 10};
      spec.probability = kP[(i / 10) % 3];
      spec.seed = 20'000 + i;
      out.push_back({spec.to_string(), std::get<Digraph>(make_family(spec))});
    }
    return out;
  }();
  return entries;
}

std::string first_or(const std::string& example) { return example.empty() ? "" : "; first: " + example; }

bool criterion1() {
  const auto start = Clock::now();
  std::size_t mismatches = 0;
  std::string example;
  for (std::size_t n = 3; n <= 16; ++n) {
    for (const Digraph& d : {directed_path(n), directed_cycle(n)}) {
      const bool ok = gamma_m_plus(d).value == ceil_div(n, 4) && gamma_plus(d).value == ceil_div(n, 2);
      if (!ok && mismatches++ == 0) example = "n=" + std::to_string(n);
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream detail;
  detail << "28 digraphs, " << mismatches << " mismatches, " << secs << " s of " << kCriterion1Seconds
         << first_or(example);
  return line("1", mismatches == 0 && secs < kCriterion1Seconds, detail.str());
}

bool criterion2() {
  std::string values;
  bool ok = true;
  for (std::size_t k = 3; k <= 5; ++k) {
    const std::size_t g = gamma_m_plus(figure1_digraph(k)).value;
    ok = ok && g == k;
    values += (k == 3 ? "" : ", ") + std::string("k=") + std::to_string(k) + " -> " + std::to_string(g);
  }
  return line("2", ok, values);
}

bool criterion3() {
  std::size_t mismatches = 0;
  std::string example;
  for (const auto& [label, d] : corpus()) {
    const auto exact = gamma_m_plus(d);
    const auto oracle = gamma_m_plus(d, Method::oracle);
    if (exact.value != oracle.value || exact.witness != oracle.witness) {
      if (mismatches++ == 0) example = label;
    }
  }
  return line("3", mismatches == 0,
              std::to_string(corpus().size()) + " digraphs, " + std::to_string(mismatches) + " mismatches" +
                  first_or(example));
}

std::vector<VertexSet> random_mods(const Digraph& d, Rng& rng) {
  const std::size_t n = d.order();
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < kRandomModsPerInstance; ++i) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t j = n; j > 1; --j) std::swap(order[j - 1], order[rng.below(j)]);
    VertexSet s(n);
    const std::size_t prefix = rng.below(n + 1);
    std::size_t used = 0;
    while (used < prefix) s.insert(order[used++]);
    while (!is_mods(d, s)) s.insert(order[used++]);
    out.push_back(std::move(s));
  }
  return out;
}

bool criterion4() {
  std::size_t tested = 0;
  std::size_t mismatches = 0;
  std::size_t literal_mismatches = 0;
  std::string example;
  std::size_t index = 0;
  for (const auto& [label, d] : corpus()) {
    Rng rng(9'000 + index++);
    std::vector<VertexSet> sets = enumerate_minimal_mods(d).sets;
    const auto extra = random_mods(d, rng);
    sets.insert(sets.end(), extra.begin(), extra.end());
    for (const VertexSet& s : sets) {
      ++tested;
      const bool direct = is_minimal_mods_direct(d, s);
      if (direct != is_minimal_mods_characterized(d, s) && mismatches++ == 0) {
        example = label + " S=" + s.to_string();
      }
      if (direct != minimality_conditions_literal(d, s)) ++literal_mismatches;
    }
  }
  std::cout << "info 4: literal reading of the conditions disagrees with direct minimality on "
            << literal_mismatches << " of " << tested << " sets\n";
  return line("4", mismatches == 0,
              std::to_string(tested) + " sets, " + std::to_string(mismatches) + " mismatches" + first_or(example));
}

bool criterion5() {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string example;
  auto check_all = [&](const std::string& label, const Digraph& d) {
    ++instances;
    const auto r = bound_report(d);
    for (const auto& e : r.entries) {
      if (e.applicable && !e.holds && violations++ == 0) example = label + " " + e.name;
    }
  };
  for (const auto& [label, d] : corpus()) check_all(label, d);
  for (std::size_t n = 1; n <= 16; ++n) {
    check_all("dipath:" + std::to_string(n), directed_path(n));
    check_all("empty:" + std::to_string(n), empty_digraph(n));
    if (n >= 3) check_all("dicycle:" + std::to_string(n), directed_cycle(n));
  }
  for (std::size_t k = 3; k <= 5; ++k) check_all("figure1:" + std::to_string(k), figure1_digraph(k));

  std::size_t tight_checks = 0;
  std::size_t not_tight = 0;
  std::string tight_example;
  auto expect_tight = [&](const std::string& label, const Digraph& d, const char* bound) {
    ++tight_checks;
    check_all(label, d);
    if (!bound_report(d).entry(bound).tight && not_tight++ == 0) tight_example = label + " " + bound;
  };
  for (std::size_t n = 2; n <= 16; ++n) {
    const std::string ns = std::to_string(n);
    expect_tight("dipath:" + ns, directed_path(n), "longest_path");
    expect_tight("dipath:" + ns, directed_path(n), "half_out_domination");
    if (n >= 3) {
      expect_tight("dicycle:" + ns, directed_cycle(n), "longest_cycle");
      expect_tight("dicycle:" + ns, directed_cycle(n), "hamiltonian_cycle");
      expect_tight("dicycle:" + ns, directed_cycle(n), "half_out_domination");
    }
  }
  expect_tight("dipath:6", directed_path(6), "degree_upper");
  std::size_t sink_tight = 0;
  std::size_t sink_total = 0;
  for (std::size_t a = 1; a <= 6; ++a) {
    for (std::size_t b = a; b <= 8; ++b) {
      const std::string sizes = std::to_string(a) + "," + std::to_string(b);
      const Digraph src = construct_named_orientation(NamedOrientation::parse("doublestarsource:" + sizes)).digraph();
      expect_tight("doublestarsource:" + sizes, src, "degree_lower");
      const Digraph sink = construct_named_orientation(NamedOrientation::parse("doublestarsink:" + sizes)).digraph();
      ++sink_total;
      sink_tight += bound_report(sink).entry("degree_lower").tight ? 1 : 0;
    }
  }
  std::cout << "info 5: lower bound tight on " << sink_tight << " of " << sink_total
            << " sink-stem double stars (tightness asserted on source-stem double stars)\n";
  return line("5", violations == 0 && not_tight == 0,
              std::to_string(instances) + " reports, " + std::to_string(violations) + " violations, " +
                  std::to_string(not_tight) + " of " + std::to_string(tight_checks) + " tightness checks missed" +
                  first_or(example) + first_or(tight_example));
}

bool criterion6() {
  struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string example;
    void add(bool ok, const std::string& where) {
      ++checks;
      if (!ok && failures++ == 0) example = where;
    }
  };
  Tally removal, vertex, addition, reversal, critical;
  std::size_t instances = 0;
  for (const auto& [label, d] : corpus()) {
    if (d.order() > 9) continue;
    ++instances;
    auto where = [&](const PerturbationRecord& r, const std::string& target) {
      return label + " " + target + ": " + std::to_string(r.before) + " -> " + std::to_string(r.after) +
             " outside [" + std::to_string(r.bound_low) + "," + std::to_string(r.bound_high) + "]";
    };
    for (const Arc& a : d.arcs()) {
      const auto r = perturb(d, PerturbKind::arc_removal, a);
      removal.add(r.within_bounds, where(r, a.to_string()));
      if (!d.has_arc(a.head, a.tail)) {
        const auto v = perturb(d, PerturbKind::arc_reversal, a);
        reversal.add(v.within_bounds, where(v, a.to_string()));
      }
      critical.add(is_critical_arc_direct(d, a) == is_critical_arc_characterized(d, a), label + " " + a.to_string());
    }
    for (Vertex u = 0; u < d.order(); ++u) {
      for (Vertex v = 0; v < d.order(); ++v) {
        if (u == v || d.has_arc(u, v)) continue;
        const auto r = perturb(d, PerturbKind::arc_addition, Arc{u, v});
        addition.add(r.within_bounds, where(r, Arc{u, v}.to_string()));
      }
      if (d.order() >= 2) {
        const auto r = perturb(d, PerturbKind::vertex_removal, u);
        vertex.add(r.within_bounds, where(r, "v=" + std::to_string(u)));
      }
    }
  }
  auto sub = [](const std::string& id, const char* what, const Tally& t) {
    return line(id, t.failures == 0,
                std::string(what) + ": " + std::to_string(t.checks) + " checks, " + std::to_string(t.failures) +
                    " violations" + first_or(t.example));
  };
  bool ok = sub("6a", "arc removal", removal);
  ok = sub("6b", "vertex removal", vertex) && ok;
  ok = sub("6c", "arc addition", addition) && ok;
  ok = sub("6d", "arc reversal", reversal) && ok;
  ok = sub("6e", "critical arcs direct vs characterized", critical) && ok;
  return line("6", ok, std::to_string(instances) + " digraphs with n <= 9");
}

bool criterion7() {
  const auto start = Clock::now();
  std::vector<std::pair<std::string, std::optional<FamilySpec>>> graphs;
  auto add = [&](const std::string& text) { graphs.emplace_back(text, FamilySpec::parse(text)); };
  for (std::size_t n = 2; n <= 17; ++n) add("path:" + std::to_string(n));
  for (std::size_t n = 3; n <= 16; ++n) add("cycle:" + std::to_string(n));
  for (std::size_t n = 2; n <= 17; ++n) add("star:" + std::to_string(n));
  for (std::size_t a = 1; a + a + 1 <= 16; ++a) {
    for (std::size_t b = a; a + b + 1 <= 16; ++b) add("doublestar:" + std::to_string(a) + "," + std::to_string(b));
  }
  for (std::size_t n = 4; 2 * (n - 1) <= 16; ++n) add("wheel:" + std::to_string(n));
  for (std::size_t r = 1; r * r <= 16; ++r) {
    for (std::size_t s = r; r * s <= 16; ++s) add("bipartite:" + std::to_string(r) + "," + std::to_string(s));
  }
  static constexpr double kP[] = {0.3, 0.5, 0.7};
  std::vector<Graph> randoms;
  for (std::size_t i = 0; i < 50; ++i) randoms.push_back(random_graph(2 + i % 6, kP[i % 3], 7'000 + i));

  std::size_t theorem_fail = 0;
  std::size_t ivt_fail = 0;
  std::size_t form_checks = 0;
  std::size_t form_fail = 0;
  std::string example;
  auto run = [&](const std::string& label, const Graph& g, const std::optional<FamilySpec>& spec) {
    const auto sp = spectrum(g);
    if (sp.min_value != dom_via_theorem(g).value && theorem_fail++ == 0) example = label + " dom";
    if (!check_ivt(g).interval_ok && ivt_fail++ == 0) example = label + " ivt";
    if (g.order() <= 4 && g.edge_count() >= 1) {
      ++form_checks;
      if (sp.max_value != 1 && form_fail++ == 0) example = label + " small-graph DOM";
    }
    if (!spec) return;
    if (auto lo = closed_form_lower(*spec)) {
      ++form_checks;
      if (*lo != sp.min_value && form_fail++ == 0) example = label + " dom formula";
    }
    if (auto hi = closed_form_upper(*spec)) {
      ++form_checks;
      if (*hi != sp.max_value && form_fail++ == 0) example = label + " DOM formula";
    }
  };
  for (const auto& [label, spec] : graphs) run(label, std::get<Graph>(make_family(*spec)), spec);
  for (std::size_t i = 0; i < randoms.size(); ++i) run("random graph " + std::to_string(i), randoms[i], std::nullopt);
  const double secs = seconds_since(start);
  std::ostringstream detail;
  detail << graphs.size() << " family graphs + " << randoms.size() << " random graphs; dom theorem "
         << theorem_fail << " violations, ivt " << ivt_fail << " violations, closed forms " << form_fail << " of "
         << form_checks << " mismatched; " << secs << " s of " << kCriterion7Seconds << first_or(example);
  return line("7", theorem_fail == 0 && ivt_fail == 0 && form_fail == 0 && secs < kCriterion7Seconds, detail.str());
}

bool criterion8() {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::string example;
  for (std::size_t r = 1; r * r <= 16; ++r) {
    for (std::size_t s = r; r * s <= 16; ++s) {
      ++checked;
      const auto c = check_dom1_bipartite(r, s);
      if (!c.agrees && mismatches++ == 0) example = "K_{" + std::to_string(r) + "," + std::to_string(s) + "}";
    }
  }
  return line("8", mismatches == 0,
              std::to_string(checked) + " pairs, " + std::to_string(mismatches) + " mismatches" + first_or(example));
}

bool criterion9() {
  std::size_t emitted = 0;
  std::size_t agreeing = 0;
  for (std::size_t r = 1; r * r <= 20; ++r) {
    for (std::size_t s = r; r * s <= 20; ++s) {
      const auto v = check_conjecture(r, s);
      if (!v.applicable) continue;
      ++emitted;
      agreeing += v.agrees ? 1 : 0;
      std::cout << "report 9: K_{" << r << "," << s << "} computed " << v.computed_dom << ", conjectured "
                << v.conjectured << ", " << (v.agrees ? "agrees" : "differs") << " (" << v.method << ")\n";
    }
  }
  std::cout << "criterion 9: REPORT (" << emitted << " verdicts emitted, " << agreeing
            << " agree; exploratory, not gating)\n";
  return true;
}

bool criterion10() {
  const std::vector<std::string> args{"--format", "structured", "--seed", "7", "suite", "--random", "200",
                                      "--max-n", "10"};
  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream err;
  cli::run_cli(args, a, err);
  cli::run_cli(args, b, err);
  const bool same = a.str() == b.str() && !a.str().empty();
  return line("10", same, std::to_string(a.str().size()) + " bytes, runs " + (same ? "identical" : "differ"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Criterion number (1-10); repeatable")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) {
    selected.resize(10);
    std::iota(selected.begin(), selected.end(), 1);
  }
  const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  bool ok = true;
  for (int c : selected) ok = criteria[static_cast<std::size_t>(c - 1)]() && ok;
  std::cout.flush();
  return ok ? 0 : 1;
}
