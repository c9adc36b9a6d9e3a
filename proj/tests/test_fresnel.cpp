#include "doctest.h"

#include <cmath>
#include <random>

#include "casimir/fresnel.hpp"
#include "casimir/quantities.hpp"

using namespace casimir;

namespace {

constexpr auto PW = Regime::propagating;
constexpr auto EW = Regime::evanescent;

Material lorentz320() {
  return lorentz(5.1, {{312.9, 0.011, 0.002}, {2.0, 0.068, 0.004}}, "lorentz320");
}

}  // namespace

TEST_CASE("longitudinal parameter") {
  for (double y : {0.0, 0.3, 17.0}) CHECK(longitudinal_param(1.0, 2.0, y, PW) == complex(y, 0.0));
  CHECK(longitudinal_param(1.0, 2.0, 2.0, EW) == complex(0.0, 2.0));
  const complex s = longitudinal_param(4.0, 1.0, 1.0, EW);
  CHECK(s.real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(s.imag() == 0.0);
  // branch rule on the negative real axis, including a negative zero
  CHECK(principal_sqrt(complex(-4.0, -0.0)) == complex(0.0, 2.0));
  CHECK(principal_sqrt(complex(-4.0, -1e-300)).imag() < 0.0);
}

TEST_CASE("reflection examples") {
  const SpectralPoint pt{0.7, 0.1, PW, 1.0, 300.0};
  const SpectralPoint ew{0.7, 5.0, EW, 1.0, 300.0};
  for (const auto& p : {pt, ew}) {
    CHECK(reflect(ideal_metal(), p, Polarization::s) == complex(-1.0, 0.0));
    CHECK(reflect(ideal_metal(), p, Polarization::p) == complex(1.0, 0.0));
    for (auto pol : polarizations) {
      CHECK(reflect(constant_eps(1.0), p, pol) == complex(0.0, 0.0));
      CHECK(pair_product(ideal_metal(), constant_eps(1.0), p, pol) == complex(0.0, 0.0));
    }
  }
  CHECK(pair_product(ideal_metal(), ideal_metal(), pt, Polarization::s) == complex(1.0, 0.0));

  // s-polarized EW on a Drude plate becomes transparent as omega -> 0
  double prev = 1.0;
  for (double u = 1e-2; u > 1e-14; u /= 100.0) {
    const double r = std::abs(reflect(gold(), {u, 1.0, EW, 50.0, 300.0}, Polarization::s));
    CHECK(r < prev);
    prev = r;
  }
  CHECK(prev < 1e-5);

  CHECK_THROWS_AS(reflect(gold(), {1.0, 1e3, PW, 1.0, 300.0}, Polarization::s), std::domain_error);
  CHECK_THROWS_AS(reflect(gold(), {0.0, 0.0, PW, 1.0, 300.0}, Polarization::s), std::domain_error);
}

TEST_CASE("Fresnel forms match the textbook ratios") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ud(0.05, 3.0);
  for (const auto& m : {gold(), constant_eps(7.0), lorentz320()}) {
    for (int i = 0; i < 200; ++i) {
      const double u = ud(rng);
      const double v = u * distance_ratio(2.0, 300.0);
      const double y = v * ud(rng) / 3.0;
      for (auto regime : {PW, EW}) {
        const SpectralPoint p{u, y, regime, 2.0, 300.0};
        const complex eps = permittivity_real_axis(m, p.omega());
        const complex Y = regime == PW ? complex(y, 0.0) : complex(0.0, y);
        const complex s = longitudinal_param(eps, v, y, regime);
        const complex rs = (Y - s) / (Y + s), rp = (eps * Y - s) / (eps * Y + s);
        CHECK(std::abs(reflect(m, p, Polarization::s) - rs) < 1e-12);
        CHECK(std::abs(reflect(m, p, Polarization::p) - rp) < 1e-12);
      }
    }
  }
}

TEST_CASE("no cancellation at large y") {
  // chi v^2 << y^2: r_s = -t/4 (1 - t/2 + ...) with t = v^2 chi/y^2
  const double chi = 1e-3, v = 1.0, y = 1e4;
  const double t = v * v * chi / (y * y);
  const complex r = reflect_chi(chi, v, y, PW, Polarization::s);
  CHECK(r.real() == doctest::Approx(-t / 4.0 * (1.0 - t / 2.0)).epsilon(1e-12));
  // r_p = t/4 (eps + 1 - 1/(...)) to first order: chi ((eps+1) y^2 - v^2)/(eps y + s)^2
  const complex rp = reflect_chi(chi, v, y, PW, Polarization::p);
  const double eps = 1.0 + chi;
  const double s = y * std::sqrt(1.0 + t);
  CHECK(rp.real() == doctest::Approx(chi * ((eps + 1.0) * y * y - v * v) / ((eps * y + s) * (eps * y + s))).epsilon(1e-14));
  CHECK(rp.real() > 0.0);
}

TEST_CASE("passivity on random points") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lu(-10.0, 1.7), frac(0.0, 1.0), la(-1.5, 3.0), ly(-3.0, 2.5);
  const Material mats[] = {gold(), drude(1.0, 1e-3), constant_eps(100.0), constant_eps(1.5), lorentz320()};
  int modulus = 0, absorption = 0, samples = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto& m = mats[i % 5];
    const double u = std::pow(10.0, lu(rng));
    const double a = std::pow(10.0, la(rng));
    const double T = 10.0 + 990.0 * frac(rng);
    const double v = u * distance_ratio(a, T);
    const bool pw = i % 2 == 0;
    const double y = pw ? v * frac(rng) : std::pow(10.0, ly(rng));
    const SpectralPoint p{u, y, pw ? PW : EW, a, T};
    for (auto pol : polarizations) {
      const complex r = reflect(m, p, pol);
      if (!pw && r.imag() < 0.0) ++absorption;
      // |r_p| of an evanescent wave may exceed 1 on any absorbing plate
      if (!pw && pol == Polarization::p) continue;
      ++samples;
      if (std::abs(r) > 1.0 + 1e-12) ++modulus;
    }
  }
  CHECK(samples == 15000);
  CHECK(modulus == 0);
  CHECK(absorption == 0);
}

TEST_CASE("evanescent p reflection of a lossy dielectric exceeds 1 deep in the TIR zone") {
  // Im(eps conj s) > 0 once y^2 < v^2 (Re eps/2 - 1)
  const complex chi(99.0, 1e-3);
  CHECK(std::abs(reflect_chi(chi, 1.0, 1.0, EW, Polarization::p)) > 1.0);
  CHECK(std::abs(reflect_chi(chi, 1.0, 9.9, EW, Polarization::p)) < 1.0);
}

TEST_CASE("evanescent p waves on a metal exceed unit modulus near the surface plasmon") {
  // eps Y + s = 0 near eps = -1; scan y at a frequency where Re eps < -1
  double worst = 0.0;
  for (double y = 0.01; y < 100.0; y *= 1.01) {
    worst = std::max(worst, std::abs(reflect_chi(complex(-3.0, 0.01), 1.0, y, EW, Polarization::p)));
  }
  CHECK(worst > 1.0);
}

TEST_CASE("total internal reflection zone") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double eps = 1.0 + 300.0 * frac(rng);
    const double v = 0.01 + 10.0 * frac(rng);
    const double edge = v * std::sqrt(eps - 1.0);
    for (auto pol : polarizations) {
      const double inside = edge * frac(rng);
      CHECK(std::abs(std::abs(reflect_chi(eps - 1.0, v, inside, EW, pol)) - 1.0) < 1e-12);
      const double outside = edge * (1.0 + 5.0 * frac(rng)) + 1e-9;
      CHECK(std::abs(reflect_chi(eps - 1.0, v, outside, EW, pol).imag()) < 1e-12);
    }
  }
  // ideal metal against eps = 100: |R| = 1 across the zone
  for (double y = 0.01; y < 9.9; y += 0.1) {
    const SpectralPoint p{1.0, y, EW, 3.8164, 300.0};  // v close to 1
    CHECK(std::abs(std::abs(pair_product(ideal_metal(), constant_eps(100.0), p, Polarization::s)) - 1.0) < 1e-12);
  }
}

TEST_CASE("longitudinal parameter is continuous along the integration paths") {
  for (double u : {1e-8, 1e-3, 0.5, 5.0}) {
    const SpectralPoint base{u, 0.0, PW, 3.0, 300.0};
    const complex chi = susceptibility_real_axis(gold(), base.omega());
    const double v = base.omega_over_omega_c();
    for (auto regime : {PW, EW}) {
      const double top = regime == PW ? v : 50.0 + 2.0 * v * std::sqrt(std::abs(chi));
      const int n = 20000;
      const double h = top / n;
      complex prev = longitudinal_param_chi(chi, v, 0.0, regime);
      for (int i = 1; i <= n; ++i) {
        const double y = h * i;
        const complex s = longitudinal_param_chi(chi, v, y, regime);
        // |ds/dy| = y/|s|; a branch flip would jump by ~2|s|
        const double bound = 4.0 * h * y / std::min(std::abs(s), std::abs(prev)) + 1e-12 * std::abs(s);
        CHECK(std::abs(s - prev) <= bound);
        prev = s;
      }
    }
  }
}

TEST_CASE("plate pair slices match pair_product") {
  const Material m1 = gold(), m2 = lorentz320();
  const PlatePair pair(m1, m2);
  for (double u : {1e-6, 0.1, 3.0}) {
    const SpectralPoint p{u, 0.5 * u * distance_ratio(5.0, 100.0), PW, 5.0, 100.0};
    const auto slice = pair.at(p.omega(), p.omega_over_omega_c());
    for (auto pol : polarizations) {
      CHECK(PlatePair::product(slice, p.y, PW, pol) == pair_product(m1, m2, p, pol));
    }
  }
}
