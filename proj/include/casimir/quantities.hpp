#pragma once

// Unit system and derived thermal scales.
//
// Internally energies and frequencies are in eV (hbar = 1), lengths in um,
// temperatures in K. Pressures come out of the integrators in eV/um^3 and are
// converted to Pa at the public boundary.

#include <numbers>

namespace casimir {

namespace units {

/// hbar*c in eV*um.
inline constexpr double hbar_c = 0.1973269804;
/// Boltzmann constant in eV/K.
inline constexpr double k_B = 8.617333262e-5;
/// 1 eV/um^3 expressed in Pa (1.602176634e-19 J / 1e-18 m^3).
inline constexpr double pascal_per_eV_um3 = 0.1602176634;

inline constexpr double zeta3 = 1.2020569031595943;
inline constexpr double pi = std::numbers::pi;

constexpr double to_pascal(double eV_per_um3) { return eV_per_um3 * pascal_per_eV_um3; }
constexpr double from_pascal(double pa) { return pa / pascal_per_eV_um3; }

}  // namespace units

struct ThermalScales {
  double lambda_T_um;   // hbar c / k_B T
  double omega_c_eV;    // hbar c / 2a
  double force_norm_pa; // T zeta(3) / 8 pi a^3
  double zeta3 = units::zeta3;
};

/// k_B*T in eV. Throws std::domain_error for T <= 0.
double thermal_energy(double T_K);

/// hbar*c/(k_B*T) in um. No 2*pi factor.
double thermal_wavelength(double T_K);

/// hbar*omega_c = hbar*c/(2a) in eV.
double characteristic_frequency(double a_um);

/// k_B*T*zeta(3)/(8*pi*a^3) in Pa.
double force_norm(double a_um, double T_K);

/// Ideal-metal zero-temperature pressure pi^2 hbar c/(240 a^4) in Pa.
double zero_temperature_pressure(double a_um);

/// Black-body pressure of one polarization, pi^2 T^4/(90 hbar^3 c^3), in Pa.
double blackbody_pressure(double T_K);

/// Dimensionless 2a/lambda_T, the ratio omega/omega_c per unit hbar*omega/T.
double distance_ratio(double a_um, double T_K);

ThermalScales thermal_scales(double a_um, double T_K);

}  // namespace casimir
