#include "rindler/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rindler/errors.hpp"

namespace rindler {

namespace {

constexpr double kXStateTolerance = 1e-12;

// sigma_y (x) sigma_y is real: the anti-diagonal (-1, 1, 1, -1).
ComplexMatrix spin_flip_operator() {
  ComplexMatrix y(4);
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

void require_closed_form_domain(double alpha, double p) {
  if (!std::isfinite(alpha) || alpha < -1.0 || alpha > 1.0) {
    throw ValidationError("closed-form concurrence: alpha outside [-1, 1]");
  }
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw ValidationError("closed-form concurrence: P outside [0, 1]");
  }
}

ConcurrenceResult clamp(double raw, ConcurrenceMethod method) { return {std::max(0.0, raw), raw, method}; }

}  // namespace

std::string_view to_string(ConcurrenceMethod method) {
  switch (method) {
    case ConcurrenceMethod::Eigen:
      return "eigen";
    case ConcurrenceMethod::XState:
      return "xstate";
    case ConcurrenceMethod::ClosedForm:
      return "closed";
  }
  return "unknown";
}

ConcurrenceResult concurrence_eigen(const DensityMatrix& rho) {
  // With A = sqrt(rho) Y sqrt(rho)*, A A^H = sqrt(rho) rho~ sqrt(rho), which is
  // similar to rho rho~. Its singular values are therefore the sqrt(lambda_i),
  // obtained without taking square roots of near-zero eigenvalues.
  const ComplexMatrix root = sqrt_psd(rho.matrix());
  const ComplexMatrix a = root * spin_flip_operator() * root.conjugate();
  const std::vector<double> s = singular_values(a);
  return clamp(s[0] - s[1] - s[2] - s[3], ConcurrenceMethod::Eigen);
}

ConcurrenceResult concurrence_xstate(const DensityMatrix& rho) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(rho(i, j)) > kXStateTolerance) {
        throw ValidationError("concurrence_xstate: entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") breaks the X pattern");
      }
    }
  auto pop = [&](std::size_t k) { return std::max(0.0, rho(k, k).real()); };
  const double outer = std::abs(rho(0, 3)) - std::sqrt(pop(1) * pop(2));
  const double inner = std::abs(rho(1, 2)) - std::sqrt(pop(0) * pop(3));
  return clamp(2.0 * std::max(outer, inner), ConcurrenceMethod::XState);
}

ConcurrenceResult c_s1_closed(double alpha, AccelerationParam r, double p) {
  require_closed_form_domain(alpha, p);
  const double a2 = alpha * alpha;
  const double gamma = 1.0 - a2;
  const double abs_a = std::abs(alpha);
  const double s = std::sin(r.value());
  // |a| sqrt(1-a^2) is formed first so that a and sqrt(1-a^2) enter symmetrically.
  const double coherence = abs_a * std::sqrt(gamma) * std::cos(r.value());
  const double competitor = abs_a * std::sqrt(p * (p * a2 + gamma * s * s));
  return clamp(2.0 * (1.0 - p) * (coherence - competitor), ConcurrenceMethod::ClosedForm);
}

ConcurrenceResult c_s2_closed(double alpha, AccelerationParam r, double p) {
  require_closed_form_domain(alpha, p);
  const double a2 = alpha * alpha;
  const double gamma = 1.0 - a2;
  const double c = std::cos(r.value());
  const double s = std::sin(r.value());
  const double abs_a = std::abs(alpha);
  const double coherence = abs_a * std::sqrt(gamma) * c;
  const double competitor = abs_a * s * std::sqrt(p * (gamma + a2 * (c * c + p * s * s)));
  return clamp(2.0 * (1.0 - p) * (coherence - competitor), ConcurrenceMethod::ClosedForm);
}

ConcurrenceResult concurrence_closed(Family family, double alpha, AccelerationParam r, double p) {
  return family == Family::Theta1 ? c_s1_closed(alpha, r, p) : c_s2_closed(alpha, r, p);
}

}  // namespace rindler
