#include <gtest/gtest.h>

#include "mods/error.hpp"
#include "mods/families.hpp"
#include "mods/random.hpp"
#include "mods/solver.hpp"
#include "oracle.hpp"

using namespace mods;

namespace {

std::vector<Digraph> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t base_seed) {
  static constexpr double kP[] = {0.1, 0.3, 0.5};
  std::vector<Digraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_digraph(1 + i % max_n, kP[i % 3], base_seed + i));
  }
  return out;
}

std::vector<Vertex> as_vertices(const std::vector<std::uint32_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Solver, MajorityThreshold) {
  EXPECT_EQ(majority_threshold(1), 1u);
  EXPECT_EQ(majority_threshold(7), 4u);
  EXPECT_EQ(majority_threshold(8), 4u);
  EXPECT_THROW(majority_threshold(0), Error);
}

TEST(Solver, DocumentedExamples) {
  const auto p8 = gamma_m_plus(directed_path(8));
  EXPECT_EQ(p8.value, 2u);
  EXPECT_EQ(p8.witness.to_vector(), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(gamma_m_plus(figure1_digraph(3)).value, 3u);
  EXPECT_EQ(gamma_m_undirected(star_graph(9)).value, 1u);
  EXPECT_EQ(gamma_plus(directed_path(8)).value, 4u);
  EXPECT_EQ(gamma_m_plus(empty_digraph(5)).value, 3u);
  EXPECT_EQ(gamma_m_plus(empty_digraph(1)).value, 1u);
  EXPECT_EQ(gamma_m_plus(Digraph(2, {{0, 1}})).witness.to_vector(), (std::vector<Vertex>{0}));
}

TEST(Solver, DirectedPathAndCycleClosedForms) {
  for (std::size_t n = 3; n <= 16; ++n) {
    EXPECT_EQ(gamma_m_plus(directed_path(n)).value, (n + 3) / 4) << n;
    EXPECT_EQ(gamma_m_plus(directed_cycle(n)).value, (n + 3) / 4) << n;
    EXPECT_EQ(gamma_plus(directed_path(n)).value, (n + 1) / 2) << n;
    EXPECT_EQ(gamma_plus(directed_cycle(n)).value, (n + 1) / 2) << n;
  }
}

TEST(Solver, ExactOracleAndBruteForceAgree) {
  for (const Digraph& d : random_corpus(150, 10, 500)) {
    const auto exact = gamma_m_plus(d);
    const auto oracle = gamma_m_plus(d, Method::oracle);
    const auto brute = oracle::gamma_m_plus(d);
    ASSERT_EQ(exact.value, brute.value);
    ASSERT_EQ(exact.witness.to_vector(), as_vertices(brute.witness));
    ASSERT_EQ(oracle.witness, exact.witness);
    EXPECT_EQ(gamma_plus(d).value, oracle::gamma_plus(d).value);
    EXPECT_EQ(gamma_plus(d).witness, gamma_plus(d, Method::oracle).witness);
  }
}

TEST(Solver, UndirectedAgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_graph(2 + seed % 10, 0.3, seed);
    const auto r = gamma_m_undirected(g);
    const auto b = oracle::gamma_m(g);
    EXPECT_EQ(r.value, b.value);
    EXPECT_EQ(r.witness.to_vector(), as_vertices(b.witness));
    EXPECT_TRUE(is_majority_dominating(g, r.witness));
  }
}

TEST(Solver, MultiWordInstances) {
  // Crosses the 64/128-vertex mask widths.
  for (std::size_t n : {63u, 64u, 65u, 130u, 600u}) {
    EXPECT_EQ(gamma_m_plus(directed_cycle(n)).value, (n + 3) / 4) << n;
  }
  const Digraph d = random_digraph(70, 0.08, 3);
  const auto r = gamma_m_plus(d);
  EXPECT_TRUE(is_mods(d, r.witness));
  EXPECT_FALSE(has_mods_within(d, r.value - 1));
}

TEST(Solver, GreedyIsAnUpperBound) {
  for (const Digraph& d : random_corpus(100, 12, 900)) {
    const auto g = greedy_mods(d);
    EXPECT_TRUE(is_mods(d, g.witness));
    EXPECT_EQ(g.witness.count(), g.value);
    EXPECT_GE(g.value, gamma_m_plus(d).value);
  }
  EXPECT_THROW(gamma_m_plus(directed_path(3), Method::greedy), Error);
}

TEST(Solver, HasModsWithin) {
  const Digraph d = figure1_digraph(4);
  EXPECT_FALSE(has_mods_within(d, 3));
  EXPECT_TRUE(has_mods_within(d, 4));
  EXPECT_FALSE(has_mods_within(d, 0));
}

TEST(Solver, UnitCharacterizationAndEqualityTheorem) {
  for (const Digraph& d : random_corpus(200, 10, 40)) {
    const std::size_t n = d.order();
    const std::size_t g = gamma_m_plus(d).value;
    EXPECT_EQ(g == 1, d.max_out_degree() + 1 >= majority_threshold(n));
    EXPECT_EQ(g == gamma_plus(d).value, d.max_out_degree() == n - 1);
    EXPECT_LE(g, (gamma_plus(d).value + 1) / 2);
  }
}

TEST(Solver, SpanningSubdigraphMonotonicity) {
  for (const Digraph& d : random_corpus(60, 10, 77)) {
    Rng rng(d.arc_count());
    std::vector<Arc> kept;
    for (const Arc& a : d.arcs()) {
      if (rng.bernoulli(0.6)) kept.push_back(a);
    }
    const Digraph h(d.order(), kept);
    EXPECT_LE(gamma_m_plus(d).value, gamma_m_plus(h).value);
    // Every MODS of H is a MODS of D.
    EXPECT_TRUE(is_mods(d, gamma_m_plus(h).witness));
  }
}

TEST(Minimality, DirectMatchesBruteForce) {
  for (const Digraph& d : random_corpus(80, 9, 1200)) {
    for (oracle::Mask s = 1; s < (oracle::Mask{1} << d.order()); ++s) {
      if (!oracle::is_mods(d, s)) continue;
      const auto m = oracle::members(s);
      const VertexSet set(d.order(), std::span<const Vertex>(as_vertices(m)));
      ASSERT_EQ(is_minimal_mods_direct(d, set), oracle::is_minimal_mods(d, s));
      ASSERT_EQ(is_minimal_mods_characterized(d, set), oracle::is_minimal_mods(d, s)) << set.to_string();
    }
  }
}

TEST(Minimality, LiteralReadingCounterexamples) {
  // Literal conditions accept S = {0,1}, yet {0} alone covers 3 of 5.
  const Digraph a(5, {{0, 1}, {0, 3}, {1, 2}});
  const VertexSet sa(5, {0, 1});
  EXPECT_FALSE(is_minimal_mods_direct(a, sa));
  EXPECT_TRUE(minimality_conditions_literal(a, sa));
  EXPECT_FALSE(is_minimal_mods_characterized(a, sa));

  // S = {0,1} is minimal but has an arc inside, so the literal reading rejects it.
  const Digraph b(6, {{0, 1}, {1, 2}});
  const VertexSet sb(6, {0, 1});
  EXPECT_TRUE(is_minimal_mods_direct(b, sb));
  EXPECT_FALSE(minimality_conditions_literal(b, sb));
  EXPECT_TRUE(is_minimal_mods_characterized(b, sb));
}

TEST(Minimality, NotAModsThrows) {
  const Digraph d = directed_path(8);
  try {
    is_minimal_mods_direct(d, VertexSet(8, {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_a_mods);
  }
  EXPECT_THROW(is_minimal_mods_characterized(d, VertexSet(8, {7})), Error);
}

TEST(Minimality, EnumerationMatchesBruteForce) {
  for (const Digraph& d : random_corpus(80, 10, 300)) {
    const auto list = enumerate_minimal_mods(d);
    EXPECT_FALSE(list.truncated);
    std::vector<std::vector<Vertex>> got;
    for (const auto& s : list.sets) got.push_back(s.to_vector());
    std::vector<std::vector<Vertex>> want;
    for (auto s : oracle::minimal_mods(d)) want.push_back(as_vertices(oracle::members(s)));
    std::sort(want.begin(), want.end());
    ASSERT_EQ(got, want);
  }
}

TEST(Minimality, EnumerationCap) {
  const auto list = enumerate_minimal_mods(empty_digraph(8), 5);
  EXPECT_EQ(list.sets.size(), 5u);
  EXPECT_TRUE(list.truncated);
  EXPECT_EQ(enumerate_minimal_mods(empty_digraph(8)).sets.size(), 70u);
  EXPECT_THROW(enumerate_minimal_mods(empty_digraph(3), 0), Error);
}

TEST(Minimality, ComplementHoldsForMinimumSets) {
  for (const Digraph& d : random_corpus(100, 10, 4000)) {
    if (d.arc_count() == 0 && d.order() % 2 == 1) continue;
    const auto w = gamma_m_plus(d).witness;
    EXPECT_TRUE(is_mods(d, w.complement())) << w.to_string();
  }
}

TEST(Minimality, ComplementFailsForSomeMinimalSet) {
  const Digraph d(5, {{0, 1}});
  const VertexSet s(5, {2, 3, 4});
  EXPECT_TRUE(is_minimal_mods_direct(d, s));
  EXPECT_FALSE(is_mods(d, s.complement()));
}
