#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "mods/families.hpp"
#include "mods/io.hpp"
#include "mods/solver.hpp"
#include "report.hpp"

using namespace mods;
using namespace mods::cli;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Structured structured(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "structured"});
  const CliRun r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return Structured::parse(r.out);
}

}  // namespace

TEST(Cli, SolveRoundTrip) {
  for (const char* spec : {"dipath:8", "figure1:3", "randdigraph:9,0.3,5", "dicycle:11"}) {
    const auto s = structured({"solve", spec});
    EXPECT_EQ(s.at("format_version"), "1");
    EXPECT_EQ(s.at("command"), "solve");
    const Digraph d = std::get<Digraph>(load_instance(spec));
    const auto w = parse_array(s.at("witness"));
    VertexSet set(d.order());
    for (auto v : w) set.insert(static_cast<Vertex>(v));
    EXPECT_TRUE(is_mods(d, set));
    EXPECT_EQ(std::stoul(s.at("value")), w.size());
  }
}

TEST(Cli, SolveExamples) {
  EXPECT_EQ(structured({"solve", "dipath:8"}).at("witness"), "[0 2]");
  EXPECT_EQ(structured({"solve", "figure1:3"}).at("value"), "3");
  const auto u = structured({"solve", "--undirected", "star:9"});
  EXPECT_EQ(u.at("value"), "1");
  EXPECT_EQ(u.at("problem"), "gamma_m");
  EXPECT_EQ(structured({"solve", "--method", "oracle", "dipath:8"}).at("witness"), "[0 2]");
  EXPECT_EQ(structured({"solve", "--out-domination", "dipath:8"}).at("value"), "4");
  EXPECT_EQ(structured({"solve", "--method", "greedy", "dipath:8"}).at("method"), "greedy");
}

TEST(Cli, BoundsExamples) {
  const auto p = structured({"bounds", "dipath:8"});
  EXPECT_EQ(p.at("all_hold"), "true");
  EXPECT_EQ(p.at("bound[1].name"), "longest_path");
  EXPECT_EQ(p.at("bound[1].tight"), "true");
  const auto c = structured({"bounds", "dicycle:8"});
  EXPECT_EQ(c.at("bound[2].name"), "longest_cycle");
  EXPECT_EQ(c.at("bound[2].tight"), "true");
  const auto e = structured({"bounds", "empty:5"});
  EXPECT_EQ(e.at("bound[2].applicable"), "false");
  EXPECT_EQ(e.at("bound[2].note"), "not applicable: acyclic");
}

TEST(Cli, CriticalAndPerturb) {
  const auto c = structured({"critical", "dipath:4"});
  EXPECT_EQ(c.at("critical"), "0");
  const auto star = structured({"critical", MODS_TEST_DATA "/two_arc_star.txt"});
  EXPECT_EQ(star.at("critical"), "2");
  EXPECT_EQ(star.at("all_agree"), "true");
  const auto p = structured({"perturb", "--remove-vertex", "0", "dicycle:4"});
  EXPECT_EQ(p.at("before"), "1");
  EXPECT_EQ(p.at("after"), "1");
  EXPECT_EQ(p.at("bound_low"), "0");
  EXPECT_EQ(p.at("bound_high"), "1");
  EXPECT_EQ(p.at("within_bounds"), "true");
  EXPECT_EQ(structured({"perturb", "--remove-arc", "0,1", "dipath:4"}).at("target"), "(0,1)");
  EXPECT_EQ(run({"perturb", "dipath:4"}).code, kExitUsage);
  EXPECT_EQ(run({"perturb", "--remove-arc", "1,0", "dipath:4"}).code, kExitUsage);
}

TEST(Cli, Minimal) {
  const auto ok = structured({"minimal", "check", "dipath:8", "--set", "0,2"});
  EXPECT_EQ(ok.at("minimal_direct"), "true");
  EXPECT_EQ(ok.at("agree"), "true");
  EXPECT_EQ(structured({"minimal", "check", "dipath:8", "--set", "0"}).at("is_mods"), "false");
  const auto all = structured({"--cap", "3", "minimal", "enumerate", "empty:4"});
  EXPECT_EQ(all.at("count"), "3");
  EXPECT_EQ(all.at("truncated"), "true");
  EXPECT_EQ(all.at("set[0].members"), "[0 1]");
}

TEST(Cli, OrientAndConjecture) {
  const auto o = structured({"orient", "cycle:5"});
  EXPECT_EQ(o.at("orientations"), "32");
  EXPECT_EQ(o.at("dom"), "1");
  EXPECT_EQ(o.at("DOM"), "2");
  EXPECT_EQ(o.at("histogram[0].count"), "30");
  EXPECT_EQ(structured({"orient", "pathdom:8"}).at("gamma_m_plus"), "2");
  EXPECT_EQ(structured({"orient", "--majority-set", "1,4", "path:8"}).at("set_is_mods"), "true");
  const auto c = structured({"conjecture", "2", "8"});
  EXPECT_EQ(c.at("conjectured"), "3");
  EXPECT_EQ(c.at("method"), "exhaustive");
}

TEST(Cli, Gen) {
  const CliRun r = run({"gen", "dipath:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "digraph 3 2\n0 1\n1 2\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"solve"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "nosuch.txt"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--method", "fast", "dipath:3"}).code, kExitUsage);
  EXPECT_EQ(run({"--limit-n", "0", "solve", "dipath:3"}).code, kExitUsage);
  const CliRun limit = run({"--limit-n", "5", "solve", "dipath:8"});
  EXPECT_EQ(limit.code, kExitLimit);
  EXPECT_NE(limit.err.find("--limit-n"), std::string::npos);
  EXPECT_EQ(run({"--limit-dp", "5", "bounds", "dipath:8"}).code, kExitLimit);
  EXPECT_EQ(run({"--limit-edges", "4", "orient", "cycle:5"}).code, kExitLimit);
  EXPECT_EQ(run({"bounds", "cycle:5"}).code, kExitUsage);
  EXPECT_EQ(run({"suite", "--families", "dipath", "--random", "0", "--random-graphs", "0"}).code, kExitOk);
  // Random sparse digraphs include instances where vertex removal leaves the stated range.
  EXPECT_EQ(run({"suite", "--random", "60", "--seed", "7"}).code, kExitSuiteFailure);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"--format", "structured", "--seed", "11", "suite", "--random", "40"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Report, StructuredParsing) {
  const auto s = Structured::parse("format_version 1\nname value with spaces\nempty\n");
  EXPECT_EQ(s.at("name"), "value with spaces");
  EXPECT_EQ(s.at("empty"), "");
  EXPECT_FALSE(s.get("missing").has_value());
  EXPECT_EQ(parse_array("[]"), std::vector<std::uint64_t>{});
  EXPECT_EQ(parse_array("[3 10]"), (std::vector<std::uint64_t>{3, 10}));
  EXPECT_THROW(parse_array("3 10"), std::exception);
  EXPECT_THROW(parse_array("[3 x]"), std::exception);
}
