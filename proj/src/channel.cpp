#include "rindler/channel.hpp"

#include <array>
#include <cmath>
#include <string>

#include "rindler/errors.hpp"

namespace rindler {

namespace {

void require_probability(double p, const char* what) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw ValidationError(std::string(what) + ": decay probability " + std::to_string(p) + " outside [0, 1]");
  }
}

}  // namespace

NoiseSpec NoiseSpec::from_probability(double p) {
  require_probability(p, "NoiseSpec");
  return NoiseSpec(p);
}

NoiseSpec NoiseSpec::from_rate(double gamma, double t) {
  if (!std::isfinite(gamma) || gamma < 0.0) throw ValidationError("NoiseSpec: decay rate must be >= 0");
  if (!std::isfinite(t) || t < 0.0) throw ValidationError("NoiseSpec: time must be >= 0");
  return NoiseSpec(-std::expm1(-gamma * t));
}

KrausPair kraus_amplitude_damping(double p) {
  require_probability(p, "kraus_amplitude_damping");
  KrausPair k{ComplexMatrix(2), ComplexMatrix(2)};
  k.m0(0, 0) = 1.0;
  k.m0(1, 1) = std::sqrt(1.0 - p);
  k.m1(0, 1) = std::sqrt(p);
  return k;
}

DensityMatrix apply_local_channel(const DensityMatrix& rho, double p_alice, double p_rob) {
  const KrausPair alice = kraus_amplitude_damping(p_alice);
  const KrausPair rob = kraus_amplitude_damping(p_rob);
  const std::array<const ComplexMatrix*, 2> alice_ops{&alice.m0, &alice.m1};
  const std::array<const ComplexMatrix*, 2> rob_ops{&rob.m0, &rob.m1};

  ComplexMatrix out(4);
  for (const auto* ma : alice_ops)
    for (const auto* mr : rob_ops) {
      const ComplexMatrix k = tensor(*ma, *mr);
      out += k * rho.matrix() * k.adjoint();
    }

  try {
    return DensityMatrix(std::move(out));
  } catch (const ValidationError& e) {
    throw InternalError(std::string("apply_local_channel produced an invalid state: ") + e.what());
  }
}

DensityMatrix evolved_closed_form(const StateSpec& spec, AccelerationParam r, double p) {
  validate(spec);
  require_probability(p, "evolved_closed_form");
  const double a = spec.alpha;
  const double a2 = a * a;
  const double gamma = 1.0 - a2;
  const double beta = 1.0 - p;
  const double c = std::cos(r.value());
  const double s = std::sin(r.value());
  const double c2 = c * c;
  const double s2 = s * s;
  const double coherence = a * beta * std::sqrt(gamma) * c;

  ComplexMatrix m(4);
  if (spec.family == Family::Theta1) {
    m(0, 0) = p * p * a2 + gamma * (c2 + p * s2);
    m(1, 1) = beta * (p * a2 + gamma * s2);
    m(2, 2) = p * beta * a2;
    m(3, 3) = beta * beta * a2;
    m(0, 3) = coherence;
    m(3, 0) = coherence;
  } else {
    m(0, 0) = p * gamma + p * a2 * (c2 + p * s2);
    m(1, 1) = beta * (gamma + p * a2 * s2);
    m(2, 2) = beta * a2 * (c2 + p * s2);
    m(3, 3) = beta * beta * a2 * s2;
    m(1, 2) = coherence;
    m(2, 1) = coherence;
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix evolved_state(const StateSpec& spec, AccelerationParam r, double p) {
  return apply_local_channel(reduced_state(spec, r), p);
}

}  // namespace rindler
