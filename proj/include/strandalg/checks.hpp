#pragma once

// The verification suite shared by the `check` subcommand and the acceptance
// test binary. Each criterion clips its own natural range to the scope.

#include <functional>
#include <string>
#include <vector>

#include "strandalg/exactla.hpp"

namespace strandalg {

struct CheckScope {
  int n_max = 8;
  int d_max = 4;
  std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
  /// Directory holding hom_pattern_n5_d*.txt; criterion 9 fails without it.
  std::string golden_dir;
  /// Command line used by criterion 10; skipped (and reported) when empty.
  std::string cli_path;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;  // summary on success, first counterexample on failure
  double seconds = 0;
};

/// Criteria 1 to 10.
CheckResult run_check(int id, const CheckScope& scope);
std::string check_name(int id);
constexpr int kCheckCount = 10;

/// Golden file name for the n = 5 hom-pattern table at d.
std::string golden_file_name(int d);

}  // namespace strandalg
