#include "casimir/matsubara.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "casimir/quadrature.hpp"
#include "casimir/quantities.hpp"
#include "casimir/spectral.hpp"

namespace casimir {

namespace {

constexpr double pi = units::pi;

// A reflection coefficient together with 1 - r, which is kept separately so
// that R -> 1 does not cancel in the denominator.
struct Reflection {
  double r;
  double one_minus_r;
};

struct PlateResponse {
  Reflection s, p;
};

PlateResponse plate_response(const Material& m, double xi, double v, double x) {
  if (is_ideal(m)) return {{-1.0, 2.0}, {1.0, 0.0}};
  if (xi == 0.0) {
    const double eps0 = static_permittivity(m);
    if (std::isinf(eps0)) return {{0.0, 1.0}, {1.0, 0.0}};
    return {{0.0, 1.0}, {(eps0 - 1.0) / (eps0 + 1.0), 2.0 / (eps0 + 1.0)}};
  }
  const double chi = susceptibility_imag_axis(m, xi);
  const double eps = 1.0 + chi;
  const double X = std::sqrt(x * x + chi * v * v);
  const double ds = x + X;
  const double dp = eps * x + X;
  return {{-chi * v * v / (ds * ds), 2.0 * X / ds},
          {chi * ((eps + 1.0) * x * x - v * v) / (dp * dp), 2.0 * X / dp}};
}

// x^2 R e^{-x}/(1 - R e^{-x}) = x^2 R/(expm1(x) + 1 - R)
double mode_term(const Reflection& a, const Reflection& b, double x) {
  const double R = a.r * b.r;
  if (R == 0.0) return 0.0;
  const double one_minus_R = a.one_minus_r + a.r * b.one_minus_r;
  return x * x * R / (std::expm1(x) + one_minus_R);
}

void check(const Material& m1, const Material& m2, double a_um, const MatsubaraSettings& s) {
  if (!(a_um > 0.0) || !std::isfinite(a_um)) throw std::domain_error("distance must be positive");
  require_valid(m1);
  require_valid(m2);
  if (const auto errs = validate(s); !errs.empty()) {
    std::string msg = "invalid Matsubara settings:";
    for (const auto& e : errs) msg += " " + e + ";";
    throw std::invalid_argument(msg);
  }
}

}  // namespace

std::vector<std::string> validate(const MatsubaraSettings& s) {
  std::vector<std::string> errors;
  if (s.n_max != 0 && s.n_max < 10) errors.emplace_back("n_max must be 0 (automatic) or >= 10");
  if (!(s.tolerance > 0.0 && s.tolerance <= 1e-4)) errors.emplace_back("tolerance must lie in (0, 1e-4]");
  if (!(s.t0_s_first > 0.0 && s.t0_s_first < 1.0)) errors.emplace_back("t0_s_first must lie in (0, 1)");
  if (!(s.t0_s_max >= 30.0)) errors.emplace_back("t0_s_max must be >= 30");
  return errors;
}

int matsubara_n_max(double a_um, double T_K, const MatsubaraSettings& s) {
  if (s.n_max > 0) return s.n_max;
  const double T = thermal_energy(T_K);
  const double top = 50.0 * std::max(characteristic_frequency(a_um), T);
  return std::max(10, static_cast<int>(std::floor(top / (2.0 * pi * T))) + 1);
}

double matsubara_transverse(const Material& m1, const Material& m2, double a_um, double xi,
                            double tolerance) {
  const double v = xi / characteristic_frequency(a_um);
  const auto f = [&](double x) {
    const auto r1 = plate_response(m1, xi, v, x);
    const auto r2 = plate_response(m2, xi, v, x);
    return mode_term(r1.s, r2.s, x) + mode_term(r1.p, r2.p, x);
  };

  std::vector<double> br;
  for (double d : {0.0, 0.5, 2.0, 5.0, 10.0, 20.0, 40.0, 70.0}) br.push_back(v + d);
  // skin-depth scale of each plate, where sqrt(x^2 + chi v^2) turns over
  for (const auto* m : {&m1, &m2}) {
    if (is_ideal(*m) || xi == 0.0) continue;
    const double x0 = std::sqrt(susceptibility_imag_axis(*m, xi)) * v;
    if (x0 > v && x0 < v + 70.0) br.push_back(x0);
  }
  std::sort(br.begin(), br.end());

  const auto r = quadrature::integrate(f, br, {0.0, 0.1 * tolerance, true}, 4000);
  if (!r.converged || !std::isfinite(r.value)) {
    throw IntegrationError("Matsubara transverse integral at xi = " + std::to_string(xi) +
                           " eV did not converge (error " + std::to_string(r.error) + ")");
  }
  return r.value;
}

double matsubara_total(const Material& m1, const Material& m2, double a_um, double T_K,
                       const MatsubaraSettings& settings) {
  check(m1, m2, a_um, settings);
  const double T = thermal_energy(T_K);
  const int n_max = matsubara_n_max(a_um, T_K, settings);

  std::vector<double> terms(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    terms[n] = matsubara_transverse(m1, m2, a_um, 2.0 * pi * n * T, settings.tolerance);
  }
  terms[0] *= 0.5;

  double sum = 0.0;
  for (int n = n_max; n >= 0; --n) sum += terms[n];
  if (std::abs(terms[n_max]) > 1e-3 * settings.tolerance * std::abs(sum)) {
    throw IntegrationError("Matsubara sum not converged at n_max = " + std::to_string(n_max) +
                           ": last term " + std::to_string(terms[n_max]) + " of total " +
                           std::to_string(sum));
  }
  return units::to_pascal(T / (8.0 * pi * a_um * a_um * a_um) * sum);
}

double zero_point_force(const Material& m1, const Material& m2, double a_um,
                        const MatsubaraSettings& settings) {
  check(m1, m2, a_um, settings);
  const double wc = characteristic_frequency(a_um);
  const auto f = [&](double s) { return matsubara_transverse(m1, m2, a_um, s * wc, settings.tolerance); };

  std::vector<double> br{0.0};
  for (double s = settings.t0_s_first; s < 1.0; s *= 10.0) br.push_back(s);
  for (double s : {1.0, 2.0, 5.0, 10.0, 20.0, 40.0}) {
    if (s < settings.t0_s_max) br.push_back(s);
  }
  br.push_back(settings.t0_s_max);

  const auto r = quadrature::integrate(f, br, {0.0, settings.tolerance, true}, 4000);
  if (!r.converged || !std::isfinite(r.value)) {
    throw IntegrationError("zero-point frequency integral did not converge (error " +
                           std::to_string(r.error) + ")");
  }
  return units::to_pascal(wc * r.value / (16.0 * pi * pi * a_um * a_um * a_um));
}

double thermal_force_oracle(const Material& m1, const Material& m2, double a_um, double T_K,
                            const MatsubaraSettings& settings) {
  return matsubara_total(m1, m2, a_um, T_K, settings) - zero_point_force(m1, m2, a_um, settings);
}

}  // namespace casimir
