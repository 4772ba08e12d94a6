#include "rindler/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "rindler/channel.hpp"
#include "rindler/sudden_death.hpp"

namespace rindler {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr Family kFamilies[] = {Family::Theta1, Family::Theta2};

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  if (n > 1) out.back() = hi;
  return out;
}

// alpha grid inside the open domain, r over [0, pi/4], P over [0, 1].
std::vector<double> alpha_grid(std::size_t n) { return linspace(0.05, 0.95, n); }
std::vector<double> r_grid(std::size_t n) { return linspace(0.0, kQuarterPi, n); }
std::vector<double> p_grid(std::size_t n) { return linspace(0.0, 1.0, n); }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

CheckResult bounded(std::string name, double worst, double limit) {
  return {std::move(name), worst <= limit, "max error " + sci(worst) + " (limit " + sci(limit) + ")"};
}

CheckResult oracle_equivalence(const VerificationModel& model) {
  double state_err = 0.0;
  double conc_err = 0.0;
  for (const Family family : kFamilies)
    for (const double a : alpha_grid(10))
      for (const double r : r_grid(10))
        for (const double p : p_grid(10)) {
          const StateSpec spec{family, a};
          const AccelerationParam accel(r);
          const DensityMatrix numeric = evolved_state(spec, accel, p);
          state_err = std::max(state_err, max_abs_diff(numeric.matrix(), evolved_closed_form(spec, accel, p).matrix()));
          const double closed = model.closed(family, a, accel, p).value;
          conc_err = std::max(conc_err, std::abs(concurrence_eigen(numeric).value - closed));
          conc_err = std::max(conc_err, std::abs(concurrence_xstate(numeric).value - closed));
        }
  CheckResult out = bounded("oracle_equivalence", conc_err, 1e-10);
  out.passed = out.passed && state_err <= 1e-12;
  out.detail += "; evolved-state error " + sci(state_err) + " (limit 1e-12)";
  return out;
}

CheckResult reduced_state_oracle() {
  double worst = 0.0;
  for (const Family family : kFamilies)
    for (const double a : alpha_grid(20))
      for (const double r : r_grid(20)) {
        const StateSpec spec{family, a};
        const AccelerationParam accel(r);
        worst = std::max(worst, max_abs_diff(reduced_state(spec, accel).matrix(),
                                             reduced_state_closed_form(spec, accel).matrix()));
      }
  return bounded("reduced_state_oracle", worst, 1e-12);
}

CheckResult channel_properties() {
  double completeness = 0.0;
  for (const double p : p_grid(11)) {
    const KrausPair k = kraus_amplitude_damping(p);
    const ComplexMatrix sum = k.m0.adjoint() * k.m0 + k.m1.adjoint() * k.m1;
    completeness = std::max(completeness, max_abs_diff(sum, ComplexMatrix::identity(2)));
  }

  double trace_err = 0.0;
  double semigroup_err = 0.0;
  bool identity_exact = true;
  const std::vector<double> ps = {0.0, 0.13, 0.5, 0.77, 1.0};
  for (const Family family : kFamilies)
    for (const double a : alpha_grid(5))
      for (const double r : r_grid(4)) {
        const DensityMatrix rho = reduced_state({family, a}, AccelerationParam(r));
        identity_exact = identity_exact && apply_local_channel(rho, 0.0).matrix() == rho.matrix();
        for (const double p1 : ps)
          for (const double p2 : ps) {
            const DensityMatrix once = apply_local_channel(rho, p1, p2);
            trace_err = std::max(trace_err, std::abs(once.matrix().trace() - Complex{1.0, 0.0}));
            const DensityMatrix twice = apply_local_channel(apply_local_channel(rho, p1), p2);
            const DensityMatrix combined = apply_local_channel(rho, 1.0 - (1.0 - p1) * (1.0 - p2));
            semigroup_err = std::max(semigroup_err, max_abs_diff(twice.matrix(), combined.matrix()));
          }
      }

  const double worst = std::max({completeness, trace_err, semigroup_err});
  CheckResult out = bounded("channel_properties", worst, 1e-12);
  out.passed = out.passed && identity_exact;
  out.detail += identity_exact ? "; P=0 is the identity" : "; P=0 changed the state";
  return out;
}

CheckResult symmetries(const VerificationModel& model) {
  bool sign_ok = true;
  bool partner_ok = true;
  for (const Family family : kFamilies)
    for (const double a : alpha_grid(10))
      for (const double r : r_grid(5))
        for (const double p : p_grid(6)) {
          const AccelerationParam accel(r);
          const auto plus = model.closed(family, a, accel, p);
          const auto minus = model.closed(family, -a, accel, p);
          sign_ok = sign_ok && plus.value == minus.value && plus.raw == minus.raw;
        }
  // b = sqrt(1 - a^2) is a bitwise partner only when sqrt(1 - b^2) == a in
  // floating point; those pairs must agree exactly, the rest to round-off.
  int exact_pairs = 0;
  double rounded_err = 0.0;
  for (const double a : linspace(0.05, 0.95, 91)) {
    const double b = std::sqrt(1.0 - a * a);
    const bool consistent = std::sqrt(1.0 - b * b) == a;
    exact_pairs += consistent ? 1 : 0;
    for (const double p : p_grid(11)) {
      const double ca = model.closed(Family::Theta2, a, AccelerationParam(0.0), p).value;
      const double cb = model.closed(Family::Theta2, b, AccelerationParam(0.0), p).value;
      if (consistent)
        partner_ok = partner_ok && ca == cb;
      else
        rounded_err = std::max(rounded_err, std::abs(ca - cb));
    }
  }
  partner_ok = partner_ok && exact_pairs > 0 && rounded_err <= 1e-14;
  return {"symmetries", sign_ok && partner_ok,
          std::string(sign_ok ? "C(a) = C(-a)" : "C(a) != C(-a)") +
              (partner_ok ? ", Theta2 partner curves coincide at r=0" : ", Theta2 partner curves differ at r=0") + " (" +
              std::to_string(exact_pairs) + " bitwise pairs, others within " + sci(rounded_err) + ")"};
}

CheckResult p0_equivalence(const VerificationModel& model) {
  double worst = 0.0;
  for (const double a : alpha_grid(10))
    for (const double r : r_grid(10)) {
      const AccelerationParam accel(r);
      const double expected = 2.0 * a * std::sqrt(1.0 - a * a) * std::cos(r);
      worst = std::max(worst, std::abs(model.closed(Family::Theta1, a, accel, 0.0).value - expected));
      worst = std::max(worst, std::abs(model.closed(Family::Theta2, a, accel, 0.0).value - expected));
    }
  return bounded("p0_equivalence", worst, 1e-12);
}

CheckResult range_and_monotone_decay(const VerificationModel& model) {
  double below = 0.0;
  double above = 0.0;
  double increase = 0.0;
  const std::vector<double> ps = p_grid(401);
  for (const Family family : kFamilies)
    for (const double a : alpha_grid(19))
      for (const double r : r_grid(10)) {
        const AccelerationParam accel(r);
        double prev = model.closed(family, a, accel, 0.0).value;
        for (const double p : ps) {
          const double c = model.closed(family, a, accel, p).value;
          below = std::max(below, -c);
          above = std::max(above, c - 1.0);
          increase = std::max(increase, c - prev);
          prev = c;
        }
      }
  const bool ok = below <= 0.0 && above <= 1e-10 && increase <= 0.0;
  return {"range_and_monotone_decay", ok,
          "min C " + sci(-below) + ", max C - 1 " + sci(above) + ", largest increase in P " + sci(increase)};
}

// At r = 0, Theta1 dies before P = 1 exactly when |a| > 1/sqrt2 and then stays
// at zero; Theta2 never dies before P = 1.
CheckResult inertial_dichotomy(const VerificationModel& model) {
  const AccelerationParam inertial(0.0);
  std::string failures;
  for (const double a : {0.5, 0.7, 0.71, 0.9}) {
    bool died = false;
    bool stayed_zero = true;
    bool theta2_alive = true;
    for (int k = 0; k < 1000; ++k) {
      const double p = k / 1000.0;
      const double c1 = model.closed(Family::Theta1, a, inertial, p).value;
      if (died && c1 != 0.0) stayed_zero = false;
      if (c1 == 0.0) died = true;
      if (!(model.closed(Family::Theta2, a, inertial, p).value > 0.0)) theta2_alive = false;
    }
    const bool expect_death = a > std::numbers::sqrt2 / 2.0;
    if (died != expect_death) failures += " theta1 a=" + sci(a) + (died ? " died" : " survived");
    if (died && !stayed_zero) failures += " theta1 a=" + sci(a) + " left zero after death";
    if (!theta2_alive) failures += " theta2 a=" + sci(a) + " died";
  }
  return {"inertial_dichotomy", failures.empty(), failures.empty() ? "alpha in {0.5, 0.7, 0.71, 0.9}" : failures};
}

CheckResult root_consistency(const VerificationModel& model) {
  double worst = 0.0;
  const std::vector<double> ps = linspace(0.02, 1.0, 50);
  for (const double r : r_grid(50)) {
    const AccelerationParam accel(r);
    for (const double p : ps) {
      const double a1 = model.boundary_theta1(accel, p);
      worst = std::max(worst, std::abs(c_s1_closed(a1, accel, p).raw));
      const double a2 = model.boundary_theta2(accel, p).value_or(1.0);
      worst = std::max(worst, std::abs(c_s2_closed(a2, accel, p).raw));
    }
  }
  return bounded("root_consistency", worst, 1e-10);
}

CheckResult range_endpoints(const VerificationModel& model) {
  double worst = 0.0;
  bool contained = true;
  for (const double r : r_grid(100)) {
    const AccelerationParam accel(r);
    const double c2 = std::max(0.0, std::cos(2.0 * r));
    const double t1 = death_range(Family::Theta1, accel).alpha_min;
    const double t2 = death_range(Family::Theta2, accel).alpha_min;
    worst = std::max(worst, std::abs(t1 - std::sqrt(c2) / std::sqrt(1.0 + c2)));
    worst = std::max(worst, std::abs(t2 - std::sqrt(c2) / std::cos(r)));
    worst = std::max(worst, std::abs(model.boundary_theta1(accel, 1.0) - t1));
    if (r > 0.0) worst = std::max(worst, std::abs(model.boundary_theta2(accel, 1.0).value_or(1.0) - t2));
    contained = contained && t1 <= t2;
  }
  CheckResult out = bounded("range_endpoints", worst, 1e-10);
  out.passed = out.passed && contained;
  out.detail += contained ? "; Theta1 range contains Theta2 range" : "; containment violated";
  return out;
}

CheckResult acceleration_monotonicity() {
  std::string failures;
  const double rs[] = {0.0, std::numbers::pi / 12.0, std::numbers::pi / 6.0, kQuarterPi};
  for (const Family family : kFamilies) {
    double prev = 2.0;
    for (const double r : rs) {
      const double p_star = find_death_point(family, 0.9, AccelerationParam(r)).p_star;
      if (p_star > prev) failures += " " + std::string(to_string(family)) + " r=" + sci(r);
      prev = p_star;
    }
  }
  return {"acceleration_monotonicity", failures.empty(),
          failures.empty() ? "p* non-increasing in r at alpha=0.9" : "p* increased at" + failures};
}

CheckResult order_of_death() {
  int violations = 0;
  for (const double a : linspace(0.05, 0.86, 12))
    for (const double r : r_grid(12)) {
      const AccelerationParam accel(r);
      if (find_death_point(Family::Theta1, a, accel).p_star > find_death_point(Family::Theta2, a, accel).p_star)
        ++violations;
    }
  return {"order_of_death", violations == 0,
          violations == 0 ? "Theta1 dies no later than Theta2 for sampled alpha < sqrt(3)/2"
                          : std::to_string(violations) + " sampled points where Theta2 dies first"};
}

template <typename Fn>
CheckResult guarded(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {name, false, std::string("threw: ") + e.what()};
  }
}

}  // namespace

VerificationModel VerificationModel::standard() {
  return {concurrence_closed, boundary_alpha_theta1, boundary_alpha_theta2};
}

std::vector<CheckResult> run_verification(const VerificationModel& model) {
  return {
      guarded("oracle_equivalence", [&] { return oracle_equivalence(model); }),
      guarded("reduced_state_oracle", [] { return reduced_state_oracle(); }),
      guarded("channel_properties", [] { return channel_properties(); }),
      guarded("symmetries", [&] { return symmetries(model); }),
      guarded("p0_equivalence", [&] { return p0_equivalence(model); }),
      guarded("range_and_monotone_decay", [&] { return range_and_monotone_decay(model); }),
      guarded("inertial_dichotomy", [&] { return inertial_dichotomy(model); }),
      guarded("root_consistency", [&] { return root_consistency(model); }),
      guarded("range_endpoints", [&] { return range_endpoints(model); }),
      guarded("acceleration_monotonicity", [] { return acceleration_monotonicity(); }),
      guarded("order_of_death", [] { return order_of_death(); }),
  };
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
  std::size_t width = 0;
  for (const auto& c : results) width = std::max(width, c.name.size());
  for (const auto& c : results) {
    out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
        << c.detail << '\n';
  }
}

}  // namespace rindler
