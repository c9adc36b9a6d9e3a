#include "casimir/quantities.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace casimir {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::domain_error(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

double thermal_energy(double T_K) {
  require_positive(T_K, "temperature");
  return units::k_B * T_K;
}

double thermal_wavelength(double T_K) { return units::hbar_c / thermal_energy(T_K); }

double characteristic_frequency(double a_um) {
  require_positive(a_um, "distance");
  return units::hbar_c / (2.0 * a_um);
}

double force_norm(double a_um, double T_K) {
  require_positive(a_um, "distance");
  const double T = thermal_energy(T_K);
  return units::to_pascal(T * units::zeta3 / (8.0 * units::pi * a_um * a_um * a_um));
}

double zero_temperature_pressure(double a_um) {
  require_positive(a_um, "distance");
  const double a2 = a_um * a_um;
  return units::to_pascal(units::pi * units::pi * units::hbar_c / (240.0 * a2 * a2));
}

double blackbody_pressure(double T_K) {
  const double x = thermal_energy(T_K) / units::hbar_c;
  return units::to_pascal(units::pi * units::pi * units::hbar_c * x * x * x * x / 90.0);
}

double distance_ratio(double a_um, double T_K) {
  require_positive(a_um, "distance");
  return 2.0 * a_um / thermal_wavelength(T_K);
}

ThermalScales thermal_scales(double a_um, double T_K) {
  return {thermal_wavelength(T_K), characteristic_frequency(a_um), force_norm(a_um, T_K)};
}

}  // namespace casimir
