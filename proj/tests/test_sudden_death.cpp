#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rindler/entanglement.hpp"
#include "rindler/errors.hpp"
#include "rindler/sudden_death.hpp"

using namespace rindler;

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("Theta1 boundary") {
  CHECK(std::abs(boundary_alpha_theta1(AccelerationParam(0.0), 1.0) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(boundary_alpha_theta1(AccelerationParam(0.0), 1e-9) - 1.0) < 1e-8);
  const double a = boundary_alpha_theta1(AccelerationParam(kPi / 6.0), 0.5);
  CHECK(std::abs(a - 0.8451542547285166) < 1e-12);
  CHECK(std::abs(c_s1_closed(a, AccelerationParam(kPi / 6.0), 0.5).raw) < 1e-12);
  CHECK_THROWS_AS(boundary_alpha_theta1(AccelerationParam(0.0), 0.0), ValidationError);
}

TEST_CASE("Theta2 boundary") {
  const auto collapsed = boundary_alpha_theta2(AccelerationParam(kPi / 4.0), 1.0);
  REQUIRE(collapsed.has_value());
  CHECK(std::abs(*collapsed) < 1e-7);
  const auto edge = boundary_alpha_theta2(AccelerationParam(kPi / 6.0), 1.0);
  REQUIRE(edge.has_value());
  CHECK(std::abs(*edge - 0.816496580927726) < 1e-12);
  const auto a = boundary_alpha_theta2(AccelerationParam(kPi / 8.0), 0.3);
  REQUIRE(a.has_value());
  CHECK(std::abs(*a - 0.976503768450378) < 1e-12);
  CHECK(std::abs(c_s2_closed(*a, AccelerationParam(kPi / 8.0), 0.3).raw) < 1e-12);
  CHECK_FALSE(boundary_alpha_theta2(AccelerationParam(0.0), 0.5).has_value());
}

TEST_CASE("death ranges") {
  CHECK(std::abs(death_range(Family::Theta1, AccelerationParam(0.0)).alpha_min - kInvSqrt2) < 1e-15);
  CHECK(death_range(Family::Theta2, AccelerationParam(0.0)).alpha_min == 1.0);
  CHECK(death_range(Family::Theta2, AccelerationParam(0.0)).contains(0.99) == false);
  for (auto family : {Family::Theta1, Family::Theta2})
    CHECK(std::abs(death_range(family, AccelerationParam(kPi / 4.0)).alpha_min) < 1e-7);
  const auto t1 = death_range(Family::Theta1, AccelerationParam(0.0));
  CHECK(t1.contains(0.9));
  CHECK(t1.contains(-0.9));
  CHECK_FALSE(t1.contains(0.5));
}

TEST_CASE("range endpoints are the full-decay boundary") {
  for (int k = 1; k < 100; ++k) {
    const AccelerationParam r(AccelerationParam::kMax * k / 100.0);
    const double c2 = std::cos(2.0 * r.value());
    CHECK(std::abs(death_range(Family::Theta1, r).alpha_min - std::sqrt(c2) / std::sqrt(1 + c2)) < 1e-12);
    CHECK(std::abs(death_range(Family::Theta2, r).alpha_min - std::sqrt(c2) / std::cos(r.value())) < 1e-12);
    CHECK(std::abs(boundary_alpha_theta1(r, 1.0) - death_range(Family::Theta1, r).alpha_min) < 1e-10);
    CHECK(std::abs(*boundary_alpha_theta2(r, 1.0) - death_range(Family::Theta2, r).alpha_min) < 1e-10);
  }
}

TEST_CASE("death points") {
  const auto bell = find_death_point(Family::Theta1, kInvSqrt2, AccelerationParam(0.0));
  CHECK(bell.p_star == 1.0);
  CHECK_FALSE(bell.exists_before_full_decay);

  const auto early = find_death_point(Family::Theta1, 0.9, AccelerationParam(0.0));
  CHECK(early.exists_before_full_decay);
  CHECK(std::abs(early.p_star - 0.48432210483785254) < 1e-12);
  CHECK(std::abs(boundary_alpha_theta1(AccelerationParam(0.0), early.p_star) - 0.9) < 1e-8);

  const auto none = find_death_point(Family::Theta2, 0.5, AccelerationParam(0.0));
  CHECK(none.p_star == 1.0);
  CHECK_FALSE(none.exists_before_full_decay);

  const auto accelerated = find_death_point(Family::Theta2, 0.9, AccelerationParam(kPi / 6.0));
  CHECK(accelerated.exists_before_full_decay);
  CHECK(std::abs(*boundary_alpha_theta2(AccelerationParam(kPi / 6.0), accelerated.p_star) - 0.9) < 1e-8);
}

TEST_CASE("death point is monotone in acceleration") {
  for (auto family : {Family::Theta1, Family::Theta2}) {
    double previous = 2.0;
    for (double r : {0.0, kPi / 12.0, kPi / 6.0, kPi / 4.0}) {
      const double p = find_death_point(family, 0.9, AccelerationParam(r)).p_star;
      CHECK(p <= previous);
      previous = p;
    }
  }
}

TEST_CASE("range comparison") {
  const auto inertial = compare_death_ranges(AccelerationParam(0.0));
  CHECK(std::abs(inertial.theta1_alpha_min - kInvSqrt2) < 1e-15);
  CHECK(inertial.theta2_alpha_min == 1.0);
  const auto maximal = compare_death_ranges(AccelerationParam(kPi / 4.0));
  CHECK(std::abs(maximal.theta1_alpha_min) < 1e-7);
  CHECK(std::abs(maximal.theta2_alpha_min) < 1e-7);
  const auto mid = compare_death_ranges(AccelerationParam(kPi / 6.0));
  CHECK(std::abs(mid.theta1_alpha_min - std::sqrt(0.5) / std::sqrt(1.5)) < 1e-15);
  CHECK(std::abs(mid.theta2_alpha_min - std::sqrt(0.5) / std::cos(kPi / 6.0)) < 1e-15);
  CHECK(mid.theta1_alpha_min <= mid.theta2_alpha_min);
}
