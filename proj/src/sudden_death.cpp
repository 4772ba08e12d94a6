#include "rindler/sudden_death.hpp"

#include <cmath>
#include <string>

#include "rindler/entanglement.hpp"
#include "rindler/errors.hpp"

namespace rindler {

namespace {

constexpr double kScanStep = 1e-3;
constexpr int kScanSteps = 1000;
// Roots closer than this to P = 1 are round-off of a root at P = 1 (e.g. the
// Bell state alpha = 1/sqrt2, where C = (1-P)^2 touches zero only at P = 1).
constexpr double kFullDecayMargin = 1e-9;

void require_boundary_probability(double p) {
  if (!std::isfinite(p) || !(p > 0.0) || p > 1.0) {
    throw ValidationError("boundary: P = " + std::to_string(p) + " outside (0, 1]");
  }
}

double cos2r_of(AccelerationParam r) { return std::max(0.0, std::cos(2.0 * r.value())); }

}  // namespace

double boundary_alpha_theta1(AccelerationParam r, double p) {
  require_boundary_probability(p);
  const double c2 = cos2r_of(r);
  const double numerator = 1.0 - p + c2 + p * c2;
  const double denominator = 1.0 - p + 2.0 * p * p + c2 + p * c2;
  if (!(denominator > 0.0)) throw InternalError("boundary_alpha_theta1: non-positive denominator");
  return std::sqrt(numerator / denominator);
}

std::optional<double> boundary_alpha_theta2(AccelerationParam r, double p) {
  require_boundary_probability(p);
  if (r.value() == 0.0) return std::nullopt;
  const double c2 = cos2r_of(r);
  const double c4 = std::cos(4.0 * r.value());
  const double numerator = 1.0 - p + c2 + p * c2;
  const double denominator = 4.0 - 3.0 * p + 3.0 * p * p + 4.0 * (1.0 + p - p * p) * c2 + (p - 1.0) * p * c4;
  if (!(denominator > 0.0)) throw InternalError("boundary_alpha_theta2: non-positive denominator");
  return 2.0 * std::sqrt(numerator / denominator);
}

bool DeathRange::contains(double alpha) const {
  const double a = std::abs(alpha);
  return a > alpha_min && a < alpha_max;
}

DeathRange death_range(Family family, AccelerationParam r) {
  const double c2 = cos2r_of(r);
  const double alpha_min = family == Family::Theta1 ? std::sqrt(c2) / std::sqrt(1.0 + c2)
                                                    : std::sqrt(c2) / std::cos(r.value());
  return DeathRange{family, r, alpha_min};
}

DeathPoint find_death_point(Family family, double alpha, AccelerationParam r) {
  auto raw = [&](double p) { return concurrence_closed(family, alpha, r, p).raw; };

  if (raw(0.0) <= 0.0) return DeathPoint{0.0, true};

  // raw carries a (1 - P) factor, so the last probe sits just below P = 1.
  const double last = 1.0 - kFullDecayMargin;
  double lo = 0.0;
  double hi = -1.0;
  for (int k = 1; k <= kScanSteps; ++k) {
    const double p = k == kScanSteps ? last : k * kScanStep;
    if (raw(p) <= 0.0) {
      hi = p;
      break;
    }
    lo = p;
  }
  if (hi < 0.0) return DeathPoint{1.0, false};

  // Keep raw(lo) > 0 >= raw(hi) and shrink to adjacent doubles.
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (raw(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return DeathPoint{hi, hi < 1.0};
}

DeathRangeComparison compare_death_ranges(AccelerationParam r) {
  const DeathRangeComparison out{death_range(Family::Theta1, r).alpha_min, death_range(Family::Theta2, r).alpha_min};
  if (!(out.theta1_alpha_min <= out.theta2_alpha_min)) {
    throw InternalError("compare_death_ranges: Theta1 death range does not contain Theta2's at r = " +
                        std::to_string(r.value()));
  }
  return out;
}

}  // namespace rindler
