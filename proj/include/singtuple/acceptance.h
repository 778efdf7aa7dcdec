// The acceptance battery: eight end-to-end checks, each with a time limit.
// Shared by the acceptance test binary and `singtuple reproduce-paper`.

#ifndef SINGTUPLE_ACCEPTANCE_H_
#define SINGTUPLE_ACCEPTANCE_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace singtuple {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  int threads = 1;
  std::set<int> only;  // empty runs everything
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// Number of criteria in the battery.
inline constexpr int kNumCriteria = 8;

}  // namespace singtuple

#endif  // SINGTUPLE_ACCEPTANCE_H_
