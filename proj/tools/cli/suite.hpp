#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mods/bounds.hpp"

namespace mods::cli {

struct SuiteConfig {
  // "default", "none", or a comma-separated list of family names.
  std::string families = "default";
  std::size_t random = 50;
  std::size_t random_graphs = 20;
  std::uint64_t seed = 1;
  std::size_t max_n = 10;
  // Graphs with more edges are left out of the orientation rows.
  std::size_t max_edges = 12;
  std::size_t dp_limit = kDefaultDpLimit;
  std::size_t cap = 2000;
};

struct SuiteRow {
  std::string name;
  std::string statement;
  // Non-gating rows are reported but never fail the run.
  bool gating = true;
  std::size_t instances = 0;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  // First failing instance and detail.
  std::string example;

  std::string status() const;
};

struct SuiteResult {
  std::size_t digraphs = 0;
  std::size_t graphs = 0;
  std::vector<SuiteRow> rows;

  bool passed() const;
};

// Deterministic for a fixed config; runs sequentially.
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace mods::cli
