#pragma once

#include <string>
#include <vector>

namespace arcforge {

// Crossing bound at which the maximal-system search stabilized during
// development: searching at this bound and at bound + 2 yields identical
// catalogs.  The CLI defaults to it.
inline constexpr int kDefaultBound = 10;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CriterionResult> results;
  bool all_pass = false;
  std::string text;          // rendered report, deterministic byte-for-byte
  double search_seconds = 0;  // wall time of the two searches; not in text
};

// Runs the full battery at the bound pair (bound, bound + 2).  Thread count
// never changes any reported byte.
VerifyReport run_verification(int bound, int threads);

}  // namespace arcforge
