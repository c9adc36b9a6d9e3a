#pragma once

// Lifshitz pressure on the imaginary frequency axis: the Matsubara sum, its
// zero-temperature continuum limit, and their difference.

#include <string>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir {

struct MatsubaraSettings {
  // Highest Matsubara index; 0 picks the smallest n with xi_n > 50 max(omega_c, T).
  int n_max = 0;
  // Relative tolerance of each transverse integral and of the zero-point
  // frequency integral.
  double tolerance = 1e-9;
  // Zero-point grid in s = xi/omega_c: [0, s_first], then decades up to s_max.
  double t0_s_first = 1e-12;
  double t0_s_max = 60.0;
};

std::vector<std::string> validate(const MatsubaraSettings& s);

/// Index used for the sum at (a, T) under `s`.
int matsubara_n_max(double a_um, double T_K, const MatsubaraSettings& s = {});

/// Pressure in Pa, attractive positive, zero-point content included.
double matsubara_total(const Material& m1, const Material& m2, double a_um, double T_K,
                       const MatsubaraSettings& settings = {});

/// T = 0 pressure in Pa.
double zero_point_force(const Material& m1, const Material& m2, double a_um,
                        const MatsubaraSettings& settings = {});

/// matsubara_total - zero_point_force: the thermal part alone.
double thermal_force_oracle(const Material& m1, const Material& m2, double a_um, double T_K,
                            const MatsubaraSettings& settings = {});

/// Transverse integral at imaginary frequency xi (eV), summed over
/// polarizations, in the variable x = 2 kappa a:
///   Int_{xi/omega_c}^inf x^2 sum_mu R e^{-x}/(1 - R e^{-x}) dx.
/// xi = 0 uses the static reflection limits.
double matsubara_transverse(const Material& m1, const Material& m2, double a_um, double xi,
                            double tolerance = 1e-9);

}  // namespace casimir
