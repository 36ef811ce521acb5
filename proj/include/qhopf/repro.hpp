#pragma once

// The reproduction suite: acceptance criteria 1-10 as named steps.

#include <filesystem>
#include <iosfwd>

#include "qhopf/report.hpp"

namespace qhopf {

struct ReproOptions {
  std::filesystem::path fixtures;
  /// Step keys or criterion numbers; empty runs everything.
  std::vector<std::string> only;
  /// Adds the larger fixtures (A(q) for all p = 5 roots, sl2 with n = 5).
  bool stretch = false;
  /// Progress lines are written here as steps finish.
  std::ostream* log = nullptr;
};

struct ReproStep {
  int criterion = 0;
  std::string key;
  std::string title;
  Report report;
  double timing_ms = 0;

  bool pass() const { return report.all_pass(); }
};

struct ReproResult {
  std::vector<ReproStep> steps;

  bool all_pass() const;
  /// Steps grouped by criterion; a criterion passes when all its steps pass.
  std::vector<std::pair<int, bool>> criteria() const;
  json to_json() const;
};

struct StepInfo {
  int criterion;
  const char* key;
  const char* title;
  bool stretch;
};
const std::vector<StepInfo>& repro_steps();

/// Fixture files a selection needs, relative to the fixture directory.
std::vector<std::string> required_fixtures(const ReproOptions& opts);

/// Throws InputError for unknown step names or missing fixtures.
ReproResult run_repro(const ReproOptions& opts);

}  // namespace qhopf
