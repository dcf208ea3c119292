#pragma once

#include <string>
#include <vector>

namespace booleq {

struct CheckResult {
  std::string name;
  unsigned d = 0;
  bool pass = false;
  std::string witness;
};

struct VerifyReport {
  unsigned d_min = 1;
  unsigned d_max = 1;
  std::vector<CheckResult> checks;
  bool overall = false;
};

// Runs, for every d <= max_d: symbolic idempotency, partition of unity,
// pairwise orthogonality mod the ideal, Kronecker evaluation and numeric
// completeness; then the (d-independent) Bell suite once. Results are
// ordered by ascending d. Throws std::domain_error for max_d = 0.
VerifyReport run_verify(unsigned max_d);

}  // namespace booleq
