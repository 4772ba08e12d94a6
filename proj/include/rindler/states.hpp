#pragma once

// Initial two-qubit states, the single-mode fermionic Unruh expansion of
// Rob's mode, and the Alice-Rob state left after tracing out region II.

#include <array>
#include <numbers>
#include <string>
#include <string_view>

#include "rindler/matcore.hpp"

namespace rindler {

enum class Family { Theta1, Theta2 };

// Theta1 = sqrt(1-a^2)|00> + a|11>, Theta2 = sqrt(1-a^2)|01> + a|10>.
struct StateSpec {
  Family family = Family::Theta1;
  double alpha = std::numbers::sqrt2 / 2.0;
  // Admits alpha in {0, +-1} (product states). Without it alpha must lie in
  // (-1, 1) \ {0}.
  bool allow_degenerate = false;
};

// Throws ValidationError if the spec is outside its domain.
void validate(const StateSpec& spec);

std::string_view to_string(Family family);
// Accepts "theta1"/"theta2" (case-insensitive, "1"/"2" also work).
Family parse_family(std::string_view text);

// Acceleration parameter r in radians, 0 <= r <= pi/4. cos r ranges over
// [1/sqrt2, 1]; r = 0 is the inertial limit.
class AccelerationParam {
 public:
  static constexpr double kMax = std::numbers::pi / 4.0;

  explicit AccelerationParam(double r);
  double value() const noexcept { return r_; }

 private:
  double r_;
};

using TwoQubitKet = std::array<Complex, 4>;

// Amplitudes over |A, I, II>, index 4*A + 2*I + II. Unit norm within 1e-12.
class TripartiteKet {
 public:
  explicit TripartiteKet(const std::array<Complex, 8>& amplitudes);
  const std::array<Complex, 8>& amplitudes() const noexcept { return amplitudes_; }

 private:
  std::array<Complex, 8> amplitudes_;
};

TwoQubitKet build_initial(const StateSpec& spec);

// r = arccos((exp(-2 pi omega c / a) + 1)^(-1/2)). Natural units by default;
// any consistent unit system works since only omega*c/a enters.
AccelerationParam acceleration_to_r(double acceleration, double omega, double c = 1.0);

// |0>_M -> cos r |0>_I|0>_II + sin r |1>_I|1>_II and |1>_M -> |1>_I|0>_II on
// Rob's mode; Alice's mode is untouched.
TripartiteKet rindler_expand(const StateSpec& spec, AccelerationParam r);

// Projector on rindler_expand, partial-traced over region II.
DensityMatrix reduced_state(const StateSpec& spec, AccelerationParam r);

// Hard-coded reduced matrices, built entry by entry. Independent of the
// expansion pipeline so the two can be compared.
DensityMatrix reduced_state_closed_form(const StateSpec& spec, AccelerationParam r);

}  // namespace rindler
