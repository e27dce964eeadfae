#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pgv/checks.hpp"

namespace pgv {

struct SuiteOptions {
  std::string catalog = "builtin";
  std::string filter = "all";       // tag expression
  std::vector<std::string> checks;  // empty: every registered check
  std::uint64_t seed = 1;
  std::uint64_t budget_ms = 0;  // per (group, check, sample); 0 for none
  std::size_t samples = 1;
  ModuleSpec module;
  /// Recompute every COUNTEREXAMPLE with the dense solver.
  bool reverify_counterexamples = true;
};

struct SuiteRecord {
  CheckVerdict verdict;
  bool reverified = false;
  bool reverify_agrees = false;
};

struct SuiteReport {
  std::vector<SuiteRecord> records;
  std::map<std::string, std::map<std::string, std::size_t>> counts;  // check -> status -> count
  std::size_t groups = 0;

  std::size_t count(const std::string& check, Status s) const;
  std::size_t total(Status s) const;
  /// Deterministic JSON: options, counts and every verdict, no timings.
  std::string to_json(const SuiteOptions& opts) const;
};

/// Seed for one (entry, check, sample) triple, derived from the suite seed.
std::uint64_t pair_seed(std::uint64_t seed, const std::string& entry, const std::string& check, std::size_t sample);

/// Runs every selected check on every selected catalog entry, in catalog then registry order.
SuiteReport run_suite(const SuiteOptions& opts);

}  // namespace pgv
