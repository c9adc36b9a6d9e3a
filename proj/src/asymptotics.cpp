#include "casimir/asymptotics.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <variant>

#include "casimir/quadrature.hpp"
#include "casimir/quantities.hpp"

namespace casimir {

namespace {

constexpr double pi = units::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

std::string um(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g um", x);
  return buf;
}

AsymptoticResult make(double eV_per_um3, double a_um, double T_K, bool valid, std::string validity,
                      std::string id, bool slow = false) {
  AsymptoticResult r;
  r.value = units::to_pascal(eV_per_um3);
  r.normalized = r.value / force_norm(a_um, T_K);
  r.valid = valid;
  r.validity = std::move(validity);
  r.formula_id = std::move(id);
  r.slow_convergence = slow;
  return r;
}

// T zeta(3)/(8 pi a^3) in eV/um^3
double norm(double a_um, double T_K) {
  return thermal_energy(T_K) * units::zeta3 / (8.0 * pi * a_um * a_um * a_um);
}

// pi^2 T^4/(90 (hbar c)^3) in eV/um^3: black-body pressure of one polarization
double black_body(double T_K) {
  const double t = thermal_energy(T_K) / units::hbar_c;
  return pi * pi * units::hbar_c * t * t * t * t / 90.0;
}

// (eps - 1)/(eps + 1), 1 for conductors
double static_ratio(double eps) {
  if (std::isinf(eps)) return 1.0;
  return (eps - 1.0) / (eps + 1.0);
}

void check_eps(double eps) {
  if (!(eps >= 1.0)) throw std::domain_error("static permittivity must be >= 1");
}

void check_geometry(double a_um, double T_K) {
  if (!(a_um > 0.0) || !std::isfinite(a_um)) throw std::domain_error("distance must be positive");
  thermal_energy(T_K);
}

bool conductor(const Material& m) {
  return std::holds_alternative<Drude>(m.model) || std::holds_alternative<IdealMetal>(m.model);
}

double plasma_frequency(const Material& m) {
  if (const auto* d = std::get_if<Drude>(&m.model)) return d->omega_p;
  return inf;
}

}  // namespace

std::optional<double> AsymptoticSet::total() const {
  double sum = 0.0;
  for (const auto* e : {&pw_s, &pw_p, &ew_s, &ew_p}) {
    if (!*e || !(*e)->valid) return std::nullopt;
    sum += (*e)->value;
  }
  return sum;
}

double lifshitz_integral(double eps1, double eps2) {
  check_eps(eps1);
  check_eps(eps2);
  const double q = static_ratio(eps1) * static_ratio(eps2);
  if (q == 0.0) return 0.0;
  // x^2 q e^{-x}/(1 - q e^{-x}), written to stay accurate as x -> 0 with q = 1
  const auto f = [q](double x) { return x * x * q / (std::expm1(x) + (1.0 - q)); };
  const std::array<double, 9> br{0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 40.0, 80.0};
  const auto r = quadrature::integrate(f, std::span<const double>(br), {0.0, 1e-14, false});
  // tail beyond 80 is below 80^2 e^{-80}
  return r.value;
}

double lifshitz_limit(double eps1, double eps2, double a_um, double T_K) {
  check_geometry(a_um, T_K);
  if (std::isinf(eps1) && std::isinf(eps2)) return units::to_pascal(norm(a_um, T_K));
  const double T = thermal_energy(T_K);
  return units::to_pascal(T / (16.0 * pi * a_um * a_um * a_um) * lifshitz_integral(eps1, eps2));
}

AsymptoticSet metal_metal_large(double a_um, double T_K) {
  check_geometry(a_um, T_K);
  const double lt = thermal_wavelength(T_K);
  const bool ok = a_um > 5.0 * lt;
  const std::string when = "a > 5 lambda_T = " + um(5.0 * lt);
  const double n = norm(a_um, T_K);
  AsymptoticSet s;
  s.pw_s = make(n, a_um, T_K, ok, when, "metal_metal_large.pw");
  s.pw_p = make(n, a_um, T_K, ok, when, "metal_metal_large.pw");
  s.ew_s = make(-n, a_um, T_K, ok, when, "metal_metal_large.ew_s");
  s.ew_p = make(0.0, a_um, T_K, ok, when, "metal_metal_large.ew_p");
  return s;
}

AsymptoticSet metal_metal_small(double a_um, double T_K, double omega_p) {
  check_geometry(a_um, T_K);
  if (!(omega_p > 0.0)) throw std::domain_error("omega_p must be positive");
  const double lt = thermal_wavelength(T_K);
  const double lo = 10.0 * units::hbar_c / omega_p;
  const bool ok = a_um > lo && a_um < lt / 5.0;
  const std::string when = um(lo) + " = 10 c/omega_p < a < lambda_T/5 = " + um(lt / 5.0);
  AsymptoticSet s;
  s.pw_s = make(black_body(T_K), a_um, T_K, ok, when, "metal_metal_small.pw");
  s.pw_p = make(black_body(T_K), a_um, T_K, ok, when, "metal_metal_small.pw");
  s.ew_s = make(-norm(a_um, T_K), a_um, T_K, ok, when, "metal_metal_small.ew_s");
  return s;
}

AsymptoticSet metal_dielectric_large(double eps2, double a_um, double T_K) {
  check_geometry(a_um, T_K);
  check_eps(eps2);
  const double lt = thermal_wavelength(T_K);
  const double root = std::sqrt(eps2);
  const bool s_ok = a_um > 5.0 * lt / root;
  const bool p_ok = a_um > 5.0 * lt * root;
  const std::string s_when = "a > 5 lambda_T/sqrt(eps2) = " + um(5.0 * lt / root);
  const std::string p_when = "a > 5 lambda_T sqrt(eps2) = " + um(5.0 * lt * root);
  const double n = norm(a_um, T_K);
  AsymptoticSet s;
  s.pw_s = make(n, a_um, T_K, s_ok, s_when, "metal_dielectric_large.pw_s");
  s.ew_s = make(-n, a_um, T_K, s_ok, s_when, "metal_dielectric_large.ew_s");
  s.pw_p = make(-0.75 * n, a_um, T_K, p_ok, p_when, "metal_dielectric_large.pw_p", true);
  s.ew_p = make(1.75 * n, a_um, T_K, p_ok, p_when, "metal_dielectric_large.ew_p", true);
  return s;
}

AsymptoticSet metal_dielectric_small(double eps2, double a_um, double T_K) {
  check_geometry(a_um, T_K);
  check_eps(eps2);
  const double lt = thermal_wavelength(T_K);
  const double root = std::sqrt(eps2);
  const double bb = black_body(T_K);
  const bool s_ok = a_um < lt / (5.0 * root);
  const std::string s_when = "a < lambda_T/(5 sqrt(eps2)) = " + um(lt / (5.0 * root));
  const double p_lo = 5.0 * lt / (eps2 * root);
  const double p_hi = lt / (5.0 * root);
  const bool p_ok = a_um > p_lo && a_um < p_hi;
  const std::string p_when = um(p_lo) + " = 5 lambda_T eps2^{-3/2} < a < lambda_T eps2^{-1/2}/5 = " + um(p_hi);

  AsymptoticSet s;
  s.pw_s = make(-bb * 1.5 * root, a_um, T_K, s_ok, s_when, "metal_dielectric_small.pw_s");
  s.ew_s = make(-bb * eps2 * root, a_um, T_K, s_ok, s_when, "metal_dielectric_small.ew_s");
  s.pw_p = make(-bb * 0.75 * root, a_um, T_K, p_ok, p_when, "metal_dielectric_small.pw_p");

  const double arg = eps2 * root * a_um / lt;
  const double T = thermal_energy(T_K);
  if (arg > 1.0) {
    const double ew_p = T * T * std::log(arg) / (24.0 * a_um * a_um * units::hbar_c * root);
    s.ew_p = make(ew_p, a_um, T_K, p_ok, p_when, "metal_dielectric_small.ew_p");
  } else {
    s.ew_p = make(0.0, a_um, T_K, false, p_when + "; logarithm argument <= 1",
                  "metal_dielectric_small.ew_p");
  }
  return s;
}

AsymptoticSet asymptotics_for(const Material& m1, const Material& m2, double a_um, double T_K) {
  const double lt = thermal_wavelength(T_K);
  const bool c1 = conductor(m1), c2 = conductor(m2);
  if (c1 && c2) {
    if (a_um >= lt) return metal_metal_large(a_um, T_K);
    return metal_metal_small(a_um, T_K, std::min(plasma_frequency(m1), plasma_frequency(m2)));
  }
  if (c1 != c2) {
    const double eps2 = static_permittivity(c1 ? m2 : m1);
    if (a_um >= lt) return metal_dielectric_large(eps2, a_um, T_K);
    return metal_dielectric_small(eps2, a_um, T_K);
  }
  return {};
}

}  // namespace casimir
