#pragma once

// Wootters concurrence three ways: the general spectral definition, the
// X-state shortcut, and closed forms for the two evolved families.

#include <string_view>

#include "rindler/matcore.hpp"
#include "rindler/states.hpp"

namespace rindler {

enum class ConcurrenceMethod { Eigen, XState, ClosedForm };

std::string_view to_string(ConcurrenceMethod method);

struct ConcurrenceResult {
  double value = 0.0;  // max(0, raw)
  double raw = 0.0;    // pre-clamp expression; negative inside the death region
  ConcurrenceMethod method = ConcurrenceMethod::Eigen;
};

// C = max(0, s1 - s2 - s3 - s4) where s_i are the square roots of the
// eigenvalues of rho * rho~, rho~ = (Y (x) Y) rho* (Y (x) Y), in descending order.
ConcurrenceResult concurrence_eigen(const DensityMatrix& rho);

// 2 max(0, |rho_03| - sqrt(rho_11 rho_22), |rho_12| - sqrt(rho_00 rho_33)).
// Throws ValidationError if any entry off the diagonal and anti-diagonal
// exceeds 1e-12.
ConcurrenceResult concurrence_xstate(const DensityMatrix& rho);

// 2|a|(1-P) [ sqrt(1-a^2) cos r - sqrt(P (P a^2 + (1-a^2) sin^2 r)) ]
ConcurrenceResult c_s1_closed(double alpha, AccelerationParam r, double p);

// 2|a|(1-P) [ sqrt(1-a^2) cos r - sin r sqrt(P ((1-a^2) + a^2 (cos^2 r + P sin^2 r))) ]
ConcurrenceResult c_s2_closed(double alpha, AccelerationParam r, double p);

ConcurrenceResult concurrence_closed(Family family, double alpha, AccelerationParam r, double p);

}  // namespace rindler
