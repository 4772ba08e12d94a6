#pragma once

// Self-check battery behind `rindler verify`.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rindler/entanglement.hpp"
#include "rindler/states.hpp"

namespace rindler {

// The closed-form pieces the battery checks. Tests swap in deliberately
// broken versions to confirm the matching check trips.
struct VerificationModel {
  std::function<ConcurrenceResult(Family, double, AccelerationParam, double)> closed;
  std::function<double(AccelerationParam, double)> boundary_theta1;
  std::function<std::optional<double>(AccelerationParam, double)> boundary_theta2;

  static VerificationModel standard();
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_verification(const VerificationModel& model = VerificationModel::standard());

bool all_passed(const std::vector<CheckResult>& results);

void print_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace rindler
