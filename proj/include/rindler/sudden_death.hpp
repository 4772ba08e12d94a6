#pragma once

// Where the concurrence of the evolved families first reaches zero.

#include <optional>

#include "rindler/states.hpp"

namespace rindler {

// |alpha| on the C_s1 = 0 surface:
//   sqrt((1 - P + cos2r + P cos2r) / (1 - P + 2P^2 + cos2r + P cos2r)).
// Requires 0 < p <= 1.
double boundary_alpha_theta1(AccelerationParam r, double p);

// |alpha| on the C_s2 = 0 surface:
//   2 sqrt((1 - P + cos2r + P cos2r)
//          / (4 - 3P + 3P^2 + 4(1 + P - P^2) cos2r + (P - 1) P cos4r)).
// Requires 0 < p <= 1. Returns nullopt at r = 0, where C_s2 has no root in
// alpha for any P < 1.
std::optional<double> boundary_alpha_theta2(AccelerationParam r, double p);

// Sudden death is possible for alpha_min < |alpha| < alpha_max = 1.
// alpha_min is 0 at r = pi/4 and, for Theta2, 1 (empty) at r = 0.
struct DeathRange {
  Family family;
  AccelerationParam r;
  double alpha_min;
  double alpha_max = 1.0;

  bool contains(double alpha) const;
};

// Theta1: sqrt(cos2r) / sqrt(1 + cos2r). Theta2: sqrt(cos2r) / cos r.
DeathRange death_range(Family family, AccelerationParam r);

struct DeathPoint {
  double p_star = 1.0;                    // inf {P : C(P) = 0}
  bool exists_before_full_decay = false;  // p_star < 1
};

// Scans P in steps of 1e-3 for the first sign change of the closed-form
// bracket, then bisects until |raw| <= 1e-12 or the bracket collapses.
DeathPoint find_death_point(Family family, double alpha, AccelerationParam r);

struct DeathRangeComparison {
  double theta1_alpha_min;
  double theta2_alpha_min;
};

// Throws InternalError unless death_range(Theta1) contains death_range(Theta2).
DeathRangeComparison compare_death_ranges(AccelerationParam r);

}  // namespace rindler
