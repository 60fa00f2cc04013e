#pragma once

#include <string>
#include <vector>

#include "qjack/structure.hpp"
#include "qjack/virasoro.hpp"

namespace qjack {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::string detail;  // first failure, empty when clean
  bool passed() const { return failures == 0; }
};

struct SelfCheckReport {
  int max_weight = 0;
  bool fault_injected = false;
  std::vector<SuiteResult> suites;
  bool all_passed() const;
};

// Cross-checks the whole stack on small weights: field arithmetic, partition
// combinatorics, basis duality, the operator shift identity, agreement of the
// expansion methods, product pairings, integrality, and the lowering family.
// With inject_fault set, one off-diagonal table coefficient is perturbed
// before the method-agreement suite, which must then report failures — a
// sensitivity probe for the whole pipeline.  Failures are data, not errors:
// the call never throws because of them.
SelfCheckReport run_selfcheck(int max_weight = 6, bool inject_fault = false);

// Timing probe for the triangular sweep on the least dominant shape (1^w):
// its cone is every partition of w, making it the heaviest single expansion.
// The table is built (or reused) first and timed separately, so
// sweep_seconds measures the sweep alone against a warm table.
struct ShapeBench {
  int weight = 0;
  double table_seconds = 0.0;
  double sweep_seconds = 0.0;
  int terms = 0;
};

ShapeBench run_shape_bench(int weight);

} // namespace qjack
