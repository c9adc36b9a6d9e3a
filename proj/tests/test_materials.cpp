#include "doctest.h"

#include <cmath>
#include <random>

#include "casimir/materials.hpp"

using namespace casimir;

namespace {

Material lorentz320() {
  return lorentz(5.1, {{312.9, 0.011, 0.002}, {2.0, 0.068, 0.004}}, "lorentz320");
}

}  // namespace

TEST_CASE("real-axis permittivity") {
  CHECK(permittivity_real_axis(constant_eps(100.0), 0.3) == complex(100.0, 0.0));

  const complex e = permittivity_real_axis(gold(), 9.0);
  const complex expect = 1.0 - 81.0 / (9.0 * complex(9.0, 0.035));
  CHECK(std::abs(e - expect) < 1e-14);
  CHECK(e.imag() > 0.0);

  CHECK(std::abs(permittivity_real_axis(gold(), 1e6) - 1.0) < 1e-10);
  CHECK_THROWS_AS(permittivity_real_axis(gold(), 0.0), std::domain_error);
  CHECK_THROWS_AS(permittivity_real_axis(ideal_metal(), 1.0), UnsupportedEvaluation);
}

TEST_CASE("imaginary-axis permittivity") {
  CHECK(permittivity_imag_axis(gold(), 1.0) == doctest::Approx(1.0 + 81.0 / 1.035));
  CHECK(permittivity_imag_axis(gold(), 1.0) == doctest::Approx(79.26).epsilon(1e-4));
  CHECK(permittivity_imag_axis(constant_eps(320.0), 0.01) == 320.0);
  CHECK(permittivity_imag_axis(lorentz320(), 1e-9) == doctest::Approx(320.0).epsilon(1e-6));
  CHECK_THROWS_AS(permittivity_imag_axis(ideal_metal(), 1.0), UnsupportedEvaluation);

  // xi^2 (eps(i xi) - 1) -> omega_p^2
  CHECK(1e8 * susceptibility_imag_axis(gold(), 1e4) == doctest::Approx(81.0).epsilon(0.01));
}

TEST_CASE("imaginary-axis permittivity is real, >= 1 and non-increasing") {
  for (const auto& m : {gold(), drude(3.0, 0.5), constant_eps(7.0), lorentz320()}) {
    double prev = INFINITY;
    for (double xi = 1e-8; xi < 1e4; xi *= 1.3) {
      const double e = permittivity_imag_axis(m, xi);
      CHECK(e >= 1.0);
      CHECK(e <= prev);
      prev = e;
    }
  }
}

TEST_CASE("passivity on the real axis") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lw(-8.0, 3.0);
  for (const auto& m : {gold(), drude(1.0, 1e-4), constant_eps(1.0), lorentz320()}) {
    for (int i = 0; i < 2000; ++i) {
      const double w = std::pow(10.0, lw(rng));
      CHECK(permittivity_real_axis(m, w).imag() >= 0.0);
    }
  }
}

TEST_CASE("validation") {
  CHECK(validate(gold()).empty());
  CHECK(validate(ideal_metal()).empty());
  CHECK(validate(lorentz320()).empty());

  const auto lossless = validate(drude(9.0, 0.0));
  REQUIRE(lossless.size() == 1);
  CHECK(lossless[0] == "omega_tau must be strictly positive");

  const auto thin = validate(constant_eps(0.5));
  REQUIRE(thin.size() == 1);
  CHECK(thin[0] == "eps must be >= 1");

  CHECK(validate(lorentz(0.5, {{-1.0, 0.0, -2.0}})).size() == 4);
  CHECK(validate(drude(NAN, 1.0)).size() == 1);
  CHECK_THROWS_AS(require_valid(drude(9.0, 0.0)), std::invalid_argument);
}

TEST_CASE("static permittivity and penetration depth") {
  CHECK(std::isinf(static_permittivity(gold())));
  CHECK(std::isinf(static_permittivity(ideal_metal())));
  CHECK(static_permittivity(constant_eps(100.0)) == 100.0);
  CHECK(static_permittivity(lorentz320()) == doctest::Approx(320.0));
  CHECK(penetration_depth(gold()) == doctest::Approx(0.1973269804 / 9.0));
  CHECK(penetration_depth(constant_eps(4.0)) == 0.0);
}
