#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "codecalc_cli/json_io.hpp"

namespace codecalc::cli {

struct VerifyFailure {
  std::string suite;
  Json input;  // {"op":...,"args":...}, the same shape as a corpus line
  Json expected;
  Json got;
};

struct VerifyReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<VerifyFailure> failures;
  double seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

struct SweepBounds {
  int max_part = 6;
  int max_len = 5;
};

/// codes, bernstein, qvertex, shifted, oracle.
const std::vector<std::string>& sweep_suites();

/// Runs one named sweep ("all" runs every sweep as one report). Failures come
/// back sorted by input. Throws UsageError for an unknown suite.
VerifyReport run_sweep(std::string_view suite, const SweepBounds& bounds);

/// {"suite":...,"input":...,"expected":...,"got":...}
Json failure_line(const VerifyFailure& f);

}  // namespace codecalc::cli
