#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cei/graph.hpp"
#include "cei/linear_algebra.hpp"

namespace cei {

// Exhaustive checks over labeled graphs. Every suite enumerates the graphs
// on n vertices by ascending edge bitmask, evaluates one graph at a time and
// reports counterexamples instead of stopping at the first one.

struct SweepOptions {
  std::optional<int> n_min;  // defaults come from the suite
  std::optional<int> n_max;
  std::optional<int> kmax;
  FieldSpec field = FieldSpec::prime(2);
  unsigned jobs = 1;  // 0 = hardware concurrency
};

struct Counterexample {
  int n = 0;
  std::uint64_t bitmask = 0;
  int k = 0;  // 0 when the check has no power
  std::string field;
  std::string message;
};

struct SweepRow {
  int n = 0;
  std::uint64_t bitmask = 0;
  bool pass = true;
  bool guarded = false;  // a resource guard stopped the computation
  std::vector<std::string> values;
};

struct SweepCounts {
  std::uint64_t enumerated = 0;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t guarded = 0;
};

struct SweepReport {
  std::string suite;
  int n_min = 0;
  int n_max = 0;
  int kmax = 0;
  std::string field;
  std::vector<std::string> columns;
  std::vector<SweepRow> rows;
  std::vector<Counterexample> counterexamples;
  std::map<int, SweepCounts> per_n;

  SweepCounts totals() const;
  bool passed() const { return counterexamples.empty(); }
  // One line per n plus a total line.
  std::string summary() const;
  // Header "n,bitmask,pass,<columns>" and one row per checked graph.
  std::string csv() const;
};

struct SuiteInfo {
  std::string name;
  std::vector<std::string> aliases;
  std::string description;
  int default_n_min;
  int default_n_max;
  int default_kmax;  // 0 when the suite has no power parameter
};

const std::vector<SuiteInfo>& suite_catalog();

// Accepts the primary name or an alias; nullptr when unknown.
const SuiteInfo* find_suite(const std::string& name);

// Throws InvalidInput for an unknown suite or an n outside 1..8.
SweepReport run_suite(const std::string& name, const SweepOptions& options);

}  // namespace cei
