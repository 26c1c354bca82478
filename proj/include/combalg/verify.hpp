#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combalg/rational.hpp"

namespace combalg {

struct Violation {
  std::string case_id;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  int cap = 0;
  std::uint64_t seed = 0;
  bool report_only = false;
  long long cases = 0;
  std::vector<Violation> violations;
  double millis = 0;

  bool passed() const { return violations.empty(); }
  std::string to_json() const;
};

// Registered suite names, in battery order.
std::vector<std::string> suite_names();
bool suite_exists(const std::string& name);
bool suite_report_only(const std::string& name);
int suite_default_cap(const std::string& name);

// Runs one suite; cap <= 0 selects the suite default.  Deterministic for a
// fixed (cap, seed).
SuiteReport run_suite(const std::string& name, int cap, std::uint64_t seed);

// The whole battery; exit-code semantics: all non-report-only must pass.
std::vector<SuiteReport> run_battery(std::uint64_t seed);

// Dimension table: per degree, the rank of the Euler idempotent against the
// combinatorial predictions.
struct DimsRow {
  std::string family;
  int degree = 0;
  BigInt computed;
  BigInt expected;
  bool match = false;
};
std::vector<DimsRow> dims_report(int cap);

}  // namespace combalg
