#pragma once

#include <bqg/io.hpp>

#include <functional>
#include <string>
#include <vector>

namespace bqg {

struct CheckOutcome {
  bool passed = false;
  std::string detail;
};

struct AcceptanceCheck {
  int id = 0;
  std::string title;
  double budget_seconds = 0;
  std::function<CheckOutcome()> run;
};

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;  // values match and the run fit its budget
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// The fixed list of end-to-end checks run by `verify --suite paper`.
const std::vector<AcceptanceCheck>& acceptance_checks();
/// Runs one check; exceptions are reported as failures.
CheckResult run_check(const AcceptanceCheck& c);
std::vector<CheckResult> run_suite(const std::string& suite = "paper");

Json to_json(const std::vector<CheckResult>& results);
/// One "PASS|FAIL  <id>  <title>  (<seconds>)" line per check.
std::string render_suite(const std::vector<CheckResult>& results);

}  // namespace bqg
