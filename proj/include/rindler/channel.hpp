#pragma once

// Local amplitude-damping noise acting independently on Alice's and Rob's
// qubits.

#include "rindler/matcore.hpp"
#include "rindler/states.hpp"

namespace rindler {

// Decay probability, either given directly or from the Markov model
// P = 1 - exp(-gamma t). Everything downstream sees only probability().
class NoiseSpec {
 public:
  static NoiseSpec from_probability(double p);
  static NoiseSpec from_rate(double gamma, double t);

  double probability() const noexcept { return p_; }

 private:
  explicit NoiseSpec(double p) : p_(p) {}
  double p_;
};

// M0 = [[1, 0], [0, sqrt(1-p)]], M1 = [[0, sqrt(p)], [0, 0]].
struct KrausPair {
  ComplexMatrix m0;
  ComplexMatrix m1;
};

KrausPair kraus_amplitude_damping(double p);

// sum_{mu,nu} (M_mu^A (x) M_nu^R) rho (M_mu^A (x) M_nu^R)^H. Throws
// InternalError if the output fails the DensityMatrix invariants.
DensityMatrix apply_local_channel(const DensityMatrix& rho, double p_alice, double p_rob);

inline DensityMatrix apply_local_channel(const DensityMatrix& rho, double p) {
  return apply_local_channel(rho, p, p);
}

// Evolved state written out entry by entry for pA = pR = p. Oracle partner of
// apply_local_channel(reduced_state(spec, r), p).
DensityMatrix evolved_closed_form(const StateSpec& spec, AccelerationParam r, double p);

// Full numeric pipeline: expansion, trace over region II, channel.
DensityMatrix evolved_state(const StateSpec& spec, AccelerationParam r, double p);

}  // namespace rindler
