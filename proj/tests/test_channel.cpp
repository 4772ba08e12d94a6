#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rindler/channel.hpp"
#include "rindler/errors.hpp"

using namespace rindler;

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

ComplexMatrix completeness(const KrausPair& k) { return k.m0.adjoint() * k.m0 + k.m1.adjoint() * k.m1; }

DensityMatrix random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix a(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = {n(rng), n(rng)};
  ComplexMatrix rho = a * a.adjoint();
  rho *= 1.0 / rho.trace().real();
  for (std::size_t i = 0; i < 4; ++i) rho(i, i) = rho(i, i).real();
  return DensityMatrix(rho);
}

}  // namespace

TEST_CASE("Kraus pair examples") {
  const auto k0 = kraus_amplitude_damping(0.0);
  CHECK(k0.m0 == ComplexMatrix::identity(2));
  CHECK(k0.m1 == ComplexMatrix(2));
  const auto k1 = kraus_amplitude_damping(1.0);
  CHECK(k1.m0 == ComplexMatrix::diagonal({1.0, 0.0}));
  CHECK(k1.m1(0, 1) == Complex{1.0});
  const auto k = kraus_amplitude_damping(0.36);
  CHECK(std::abs(k.m0(1, 1) - 0.8) < 1e-15);
  CHECK(std::abs(k.m1(0, 1) - 0.6) < 1e-15);
  CHECK(k.m1(1, 0) == Complex{});
  CHECK_THROWS_AS(kraus_amplitude_damping(-0.1), ValidationError);
  CHECK_THROWS_AS(kraus_amplitude_damping(1.1), ValidationError);
}

TEST_CASE("Kraus completeness") {
  for (int i = 0; i <= 100; ++i) {
    const auto k = kraus_amplitude_damping(i / 100.0);
    CHECK(max_abs_diff(completeness(k), ComplexMatrix::identity(2)) < 1e-12);
  }
}

TEST_CASE("noise parametrisations") {
  CHECK(NoiseSpec::from_probability(0.3).probability() == 0.3);
  CHECK(std::abs(NoiseSpec::from_rate(2.0, 0.5).probability() - (1.0 - std::exp(-1.0))) < 1e-15);
  CHECK(NoiseSpec::from_rate(1.0, 0.0).probability() == 0.0);
  CHECK_THROWS_AS(NoiseSpec::from_rate(-1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(NoiseSpec::from_probability(2.0), ValidationError);
}

TEST_CASE("P=0 is the exact identity") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = random_density(rng);
    CHECK(apply_local_channel(rho, 0.0).matrix() == rho.matrix());
  }
}

TEST_CASE("trace and positivity with unequal probabilities") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = random_density(rng);
    const auto out = apply_local_channel(rho, u(rng), u(rng));
    CHECK(std::abs(out.matrix().trace() - 1.0) < 1e-12);
    CHECK(eig_hermitian(out.matrix()).values.back() > -1e-12);
  }
}

TEST_CASE("semigroup law") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = random_density(rng);
    const double p1 = u(rng), p2 = u(rng);
    const double combined = 1.0 - (1.0 - p1) * (1.0 - p2);
    const auto twice = apply_local_channel(apply_local_channel(rho, p1), p2);
    CHECK(max_abs_diff(twice.matrix(), apply_local_channel(rho, combined).matrix()) < 1e-12);
  }
}

TEST_CASE("ground state is a fixed point and full decay reaches it") {
  const auto ground = DensityMatrix(ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0}));
  CHECK(max_abs_diff(apply_local_channel(ground, 0.7).matrix(), ground.matrix()) < 1e-15);
  std::mt19937_64 rng(6);
  CHECK(max_abs_diff(apply_local_channel(random_density(rng), 1.0).matrix(), ground.matrix()) < 1e-14);
}

TEST_CASE("evolved Bell state at P=0.5") {
  const auto rho = evolved_closed_form({Family::Theta1, kInvSqrt2}, AccelerationParam(0.0), 0.5);
  CHECK(std::abs(rho(0, 0) - 0.625) < 1e-15);
  CHECK(std::abs(rho(1, 1) - 0.125) < 1e-15);
  CHECK(std::abs(rho(2, 2) - 0.125) < 1e-15);
  CHECK(std::abs(rho(3, 3) - 0.125) < 1e-15);
  CHECK(std::abs(rho(0, 3) - 0.25) < 1e-15);
  CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-15);
}

TEST_CASE("evolved Theta1 at P=0 is the initial projector") {
  const StateSpec spec{Family::Theta1, 0.6};
  const auto ket = build_initial(spec);
  CHECK(max_abs_diff(evolved_closed_form(spec, AccelerationParam(0.0), 0.0).matrix(), projector(ket)) < 1e-15);
}

TEST_CASE("Theta2 at full decay") {
  for (double alpha : {-0.9, 0.3, 0.7})
    for (double r : {0.0, 0.4, AccelerationParam::kMax}) {
      const auto rho = evolved_closed_form({Family::Theta2, alpha}, AccelerationParam(r), 1.0);
      CHECK(max_abs_diff(rho.matrix(), ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0})) < 1e-15);
    }
}

TEST_CASE("evolved entries match the printed form") {
  const double alpha = 0.6, p = 0.3, r = std::numbers::pi / 6.0;
  const double g = 1.0 - alpha * alpha, b = 1.0 - p;
  const double c = std::cos(r), s = std::sin(r);
  const auto rho1 = evolved_state({Family::Theta1, alpha}, AccelerationParam(r), p);
  CHECK(std::abs(rho1(0, 0) - (p * p * alpha * alpha + g * (c * c + p * s * s))) < 1e-15);
  CHECK(std::abs(rho1(1, 1) - b * (p * alpha * alpha + g * s * s)) < 1e-15);
  CHECK(std::abs(rho1(2, 2) - b * p * alpha * alpha) < 1e-15);
  CHECK(std::abs(rho1(3, 3) - b * b * alpha * alpha) < 1e-15);
  CHECK(std::abs(rho1(0, 3) - alpha * b * std::sqrt(g) * c) < 1e-15);

  const auto rho2 = evolved_state({Family::Theta2, alpha}, AccelerationParam(r), p);
  CHECK(std::abs(rho2(0, 0) - (p * g + p * alpha * alpha * (c * c + p * s * s))) < 1e-15);
  CHECK(std::abs(rho2(1, 1) - b * (g + p * alpha * alpha * s * s)) < 1e-15);
  CHECK(std::abs(rho2(2, 2) - b * alpha * alpha * (c * c + p * s * s)) < 1e-15);
  CHECK(std::abs(rho2(3, 3) - b * b * alpha * alpha * s * s) < 1e-15);
  CHECK(std::abs(rho2(1, 2) - alpha * b * std::sqrt(g) * c) < 1e-15);
}

TEST_CASE("pipeline agrees with closed form") {
  for (auto family : {Family::Theta1, Family::Theta2})
    for (int i = 1; i <= 9; ++i)
      for (int j = 0; j <= 8; ++j)
        for (int k = 0; k <= 10; ++k) {
          const StateSpec spec{family, i / 10.0};
          const AccelerationParam r(AccelerationParam::kMax * j / 8.0);
          CHECK(max_abs_diff(evolved_state(spec, r, k / 10.0).matrix(),
                             evolved_closed_form(spec, r, k / 10.0).matrix()) < 1e-14);
        }
}

TEST_CASE("evolved eigenvalues are a probability vector") {
  const auto rho = evolved_state({Family::Theta1, 0.6}, AccelerationParam(std::numbers::pi / 6.0), 0.3);
  const auto values = eig_hermitian(rho.matrix()).values;
  const double expected[] = {0.7170201371120151, 0.1876, 0.0756, 0.01977986288798515};
  double sum = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(values[k] >= 0.0);
    CHECK(std::abs(values[k] - expected[k]) < 1e-14);
    sum += values[k];
  }
  CHECK(std::abs(sum - 1.0) < 1e-14);

  const auto rho2 = evolved_state({Family::Theta2, 0.7}, AccelerationParam(std::numbers::pi / 6.0), 0.2);
  const auto root = sqrt_psd(rho2.matrix());
  CHECK(max_abs_diff(root * root, rho2.matrix()) < 1e-9);
}
