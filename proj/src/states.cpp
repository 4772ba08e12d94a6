#include "rindler/states.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "rindler/errors.hpp"

namespace rindler {

void validate(const StateSpec& spec) {
  const double a = spec.alpha;
  if (!std::isfinite(a)) throw ValidationError("alpha must be finite");
  if (spec.allow_degenerate) {
    if (a < -1.0 || a > 1.0) throw ValidationError("alpha must lie in [-1, 1]");
    return;
  }
  if (!(a > -1.0 && a < 1.0) || a == 0.0) {
    throw ValidationError("alpha must lie in (-1, 1) and be nonzero (set allow_degenerate for product states)");
  }
}

std::string_view to_string(Family family) { return family == Family::Theta1 ? "theta1" : "theta2"; }

Family parse_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "theta1" || lower == "1") return Family::Theta1;
  if (lower == "theta2" || lower == "2") return Family::Theta2;
  throw ValidationError("unknown state family '" + std::string(text) + "'");
}

AccelerationParam::AccelerationParam(double r) : r_(r) {
  if (!std::isfinite(r) || r < 0.0 || r > kMax) {
    throw ValidationError("acceleration parameter r = " + std::to_string(r) + " outside [0, pi/4]");
  }
}

TripartiteKet::TripartiteKet(const std::array<Complex, 8>& amplitudes) : amplitudes_(amplitudes) {
  double norm = 0.0;
  for (const auto& z : amplitudes_) norm += std::norm(z);
  if (std::abs(norm - 1.0) > 1e-12) throw ValidationError("TripartiteKet: amplitudes are not unit norm");
}

TwoQubitKet build_initial(const StateSpec& spec) {
  validate(spec);
  const double a = spec.alpha;
  const double rest = std::sqrt(1.0 - a * a);
  if (spec.family == Family::Theta1) return {rest, 0.0, 0.0, a};
  return {0.0, rest, a, 0.0};
}

AccelerationParam acceleration_to_r(double acceleration, double omega, double c) {
  if (!(acceleration > 0.0) || !(omega > 0.0) || !(c > 0.0)) {
    throw ValidationError("acceleration_to_r: acceleration, omega and c must be positive");
  }
  const double cos_r = 1.0 / std::sqrt(std::exp(-2.0 * std::numbers::pi * omega * c / acceleration) + 1.0);
  return AccelerationParam(std::min(std::acos(cos_r), AccelerationParam::kMax));
}

TripartiteKet rindler_expand(const StateSpec& spec, AccelerationParam r) {
  const TwoQubitKet initial = build_initial(spec);
  const double cos_r = std::cos(r.value());
  const double sin_r = std::sin(r.value());

  std::array<Complex, 8> out{};
  for (std::size_t alice = 0; alice < 2; ++alice) {
    const Complex vacuum = initial[2 * alice + 0];
    const Complex excited = initial[2 * alice + 1];
    out[4 * alice + 0] += cos_r * vacuum;   // |alice, 0, 0>
    out[4 * alice + 3] += sin_r * vacuum;   // |alice, 1, 1>
    out[4 * alice + 2] += excited;          // |alice, 1, 0>
  }
  return TripartiteKet(out);
}

DensityMatrix reduced_state(const StateSpec& spec, AccelerationParam r) {
  const TripartiteKet ket = rindler_expand(spec, r);
  return DensityMatrix(partial_trace_last(projector(ket.amplitudes())));
}

DensityMatrix reduced_state_closed_form(const StateSpec& spec, AccelerationParam r) {
  validate(spec);
  const double a = spec.alpha;
  const double a2 = a * a;
  const double gamma = 1.0 - a2;
  const double c = std::cos(r.value());
  const double s = std::sin(r.value());
  const double coherence = a * std::sqrt(gamma) * c;

  ComplexMatrix m(4);
  if (spec.family == Family::Theta1) {
    m(0, 0) = gamma * c * c;
    m(1, 1) = gamma * s * s;
    m(3, 3) = a2;
    m(0, 3) = coherence;
    m(3, 0) = coherence;
  } else {
    m(1, 1) = gamma;
    m(2, 2) = a2 * c * c;
    m(3, 3) = a2 * s * s;
    m(1, 2) = coherence;
    m(2, 1) = coherence;
  }
  return DensityMatrix(std::move(m));
}

}  // namespace rindler
