#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mzv/eval_result.hpp"
#include "mzv/series.hpp"

namespace mzv::verify {

struct RunOptions {
  series::TruncationOptions trunc;
  int precision = 192;
  /// Worker threads; 0 picks the hardware concurrency.
  int jobs = 1;
  /// Multiplies every per-case tolerance.
  double tolerance_scale = 1.0;
};

struct Summary {
  int total = 0;
  int passed = 0;
  int failed = 0;
};

struct Report {
  std::string selector;
  RunOptions options;
  std::vector<VerdictRecord> cases;  // registry order
  Summary summary;
};

/// Runs every case of a suite (or "all"). Case exceptions become failed
/// records carrying the message in `note`. Throws UnknownSuiteError.
Report run_suite(std::string_view selector, const RunOptions& options = {});

}  // namespace mzv::verify
