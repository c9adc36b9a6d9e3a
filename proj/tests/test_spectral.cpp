#include "doctest.h"

#include <cmath>

#include "casimir/matsubara.hpp"
#include "casimir/quantities.hpp"
#include "casimir/spectral.hpp"

using namespace casimir;

namespace {
constexpr auto S = Polarization::s;
constexpr auto P = Polarization::p;
}  // namespace

TEST_CASE("bose factor") {
  CHECK(std::abs(bose_factor(1e-6) - 999999.5) < 1e-6);
  CHECK(bose_factor(std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bose_factor(60.0) == doctest::Approx(8.7565e-27).epsilon(1e-4));
  for (double u = 1e-14; u < 1e-3; u *= 1.7) {
    const double direct = 1.0 / std::expm1(u);
    CHECK(bose_factor(u, 1e-3) == doctest::Approx(direct).epsilon(1e-9));
  }
  CHECK_THROWS(bose_factor(0.0));
}

TEST_CASE("evanescent integrand") {
  CHECK(ew_integrand(ideal_metal(), ideal_metal(), 1.0, 1.0, S, 1.0, 300.0) == 0.0);
  CHECK(ew_integrand(gold(), constant_eps(1.0), 1.0, 1.0, P, 1.0, 300.0) == 0.0);
  CHECK(ew_integrand(gold(), gold(), 1e-10, 1.0, S, 50.0, 300.0) < 0.0);
}

TEST_CASE("reflection series against the summed kernel") {
  const double v = distance_ratio(10.0, 300.0);
  for (auto pol : {S, P}) {
    const auto sv = pw_integrand_series(gold(), gold(), 1.0, 1.0, pol, 10.0, 300.0, 100000, 1e-10);
    CHECK_FALSE(sv.capped);
    CHECK(sv.value == doctest::Approx(pw_integrand_resummed(gold(), gold(), 1.0, 1.0, pol, 10.0, 300.0))
                          .epsilon(1e-8));
    CHECK(v > 1.0);
  }
  // R = 0: nothing to sum
  const auto zero = pw_integrand_series(gold(), constant_eps(1.0), 1.0, 0.5, S, 10.0, 300.0, 256);
  CHECK(zero.value == 0.0);
  // one term: y^2 Re(R e^{iy})
  const auto one = pw_integrand_series(ideal_metal(), ideal_metal(), 1.0, 0.7, S, 10.0, 300.0, 1);
  CHECK(one.value == doctest::Approx(0.49 * std::cos(0.7)));
  CHECK(one.capped);
}

TEST_CASE("ideal plates") {
  const double a = 50.0, T = 300.0, fn = force_norm(a, T);
  const auto f = force_components(ideal_metal(), ideal_metal(), a, T);
  const double expect = fn - 0.5 * zero_temperature_pressure(a);
  CHECK(f.pw_s == doctest::Approx(expect).epsilon(1e-9));
  CHECK(f.pw_p == doctest::Approx(expect).epsilon(1e-9));
  CHECK(f.ew_s == 0.0);
  CHECK(f.ew_p == 0.0);
  // the imaginary-axis sum minus the zero-point part
  CHECK(f.total() == doctest::Approx(thermal_force_oracle(ideal_metal(), ideal_metal(), a, T)).epsilon(1e-8));
}

TEST_CASE("gold at large distance") {
  const double a = 50.0, T = 300.0, fn = force_norm(a, T);
  const auto f = force_components(gold(), gold(), a, T);
  CHECK(f.ew_s / fn == doctest::Approx(-1.0).epsilon(0.05));
  CHECK(f.ew_p > 0.0);
  CHECK(std::abs(f.total() - thermal_force_oracle(gold(), gold(), a, T)) < 1e-6 * fn);
  // bit-identical to the individual calls
  CHECK(f.pw_s == force_pw(gold(), gold(), a, T, S).value);
  CHECK(f.ew_p == force_ew(gold(), gold(), a, T, P).value);
  CHECK(f.err_total() > 0.0);
  CHECK(f.err_total() < 1e-5 * fn);
}

TEST_CASE("oracle identity") {
  const struct {
    Material m1, m2;
    double a, T;
  } cases[] = {{gold(), gold(), 0.2, 300.0},
               {gold(), gold(), 1.0, 300.0},
               {ideal_metal(), constant_eps(100.0), 1.0, 300.0},
               {gold(), constant_eps(10.0), 3.0, 100.0}};
  for (const auto& c : cases) {
    const auto f = force_components(c.m1, c.m2, c.a, c.T);
    const double fn = force_norm(c.a, c.T);
    CHECK(std::abs(f.total() - thermal_force_oracle(c.m1, c.m2, c.a, c.T)) < 1e-6 * fn);
  }
}

TEST_CASE("tolerance refinement stays within the reported error") {
  QuadratureSettings coarse, fine;
  coarse.rel_tol = 1e-5;
  fine.rel_tol = 5e-6;
  for (auto pol : {S, P}) {
    const auto c = force_ew(gold(), gold(), 2.0, 300.0, pol, coarse);
    const auto f = force_ew(gold(), gold(), 2.0, 300.0, pol, fine);
    CHECK(std::abs(c.value - f.value) <= c.error + f.error);
    const auto cp = force_pw(gold(), gold(), 2.0, 300.0, pol, coarse);
    const auto fp = force_pw(gold(), gold(), 2.0, 300.0, pol, fine);
    CHECK(std::abs(cp.value - fp.value) <= cp.error + fp.error);
  }
}

TEST_CASE("normalized components depend on a/lambda_T alone for scale-free plates") {
  const auto f1 = force_components(ideal_metal(), constant_eps(100.0), 1.0, 300.0);
  const auto f2 = force_components(ideal_metal(), constant_eps(100.0), 2.0, 150.0);
  const double n1 = force_norm(1.0, 300.0), n2 = force_norm(2.0, 150.0);
  CHECK(f1.pw_s / n1 == doctest::Approx(f2.pw_s / n2).epsilon(1e-5));
  CHECK(f1.pw_p / n1 == doctest::Approx(f2.pw_p / n2).epsilon(1e-5));
  CHECK(f1.ew_s / n1 == doctest::Approx(f2.ew_s / n2).epsilon(1e-5));
  CHECK(f1.ew_p / n1 == doctest::Approx(f2.ew_p / n2).epsilon(1e-5));
}

TEST_CASE("s evanescent force is insensitive to the relaxation frequency at large distance") {
  const double a = 10.0 * thermal_wavelength(300.0);
  const double base = force_ew(gold(), gold(), a, 300.0, S).value;
  for (double k : {0.1, 10.0}) {
    const auto m = drude(9.0, 0.035 * k);
    CHECK(force_ew(m, m, a, 300.0, S).value / base == doctest::Approx(1.0).epsilon(0.02));
  }
}

TEST_CASE("propagating waves at a micron are close to the black-body estimate") {
  const double bb = 2.0 * blackbody_pressure(300.0);  // both polarizations
  const auto f = force_components(gold(), gold(), 1.0, 300.0);
  CHECK(f.pw_total() == doctest::Approx(bb).epsilon(0.25));
}

TEST_CASE("settings validation") {
  QuadratureSettings s;
  CHECK(validate(s).empty());
  s.rel_tol = 0.0;
  CHECK_FALSE(validate(s).empty());
  s = {};
  s.u_min = 1.0;
  CHECK_FALSE(validate(s).empty());
  CHECK(settings_hash(QuadratureSettings{}) == settings_hash(QuadratureSettings{}));
  QuadratureSettings t;
  t.y_max_ew = 61.0;
  CHECK(settings_hash(t) != settings_hash(QuadratureSettings{}));
  CHECK_THROWS_AS(force_components(gold(), gold(), 1.0, 300.0, s), std::invalid_argument);
}
