#pragma once

#include <functional>
#include <string>
#include <vector>

namespace matroots {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool ran = false;       // false when skipped (slow check without the flag)
  double seconds = 0;
  double budget_sec = 0;  // pinned per-check runtime budget (part of pass)
  std::string detail;
};

struct ReferenceCheck {
  int id;             // stable 1-based id
  std::string name;
  bool slow;          // only run when explicitly requested
  double budget_sec;
  std::function<std::string(int workers)> run;  // "" on success, else what failed
};

// the published-results checklist (ids 1..15); each check recomputes its
// claims from scratch and fails on any mismatch, including budget overrun
const std::vector<ReferenceCheck>& reference_checks();

CheckResult run_reference_check(const ReferenceCheck& chk, int workers);
std::vector<CheckResult> run_reference_suite(bool include_slow, int workers);

}  // namespace matroots
