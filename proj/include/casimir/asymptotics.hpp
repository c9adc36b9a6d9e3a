#pragma once

// Closed-form limits of the thermal force components. Pressures are in Pa
// with attraction positive; `normalized` divides by force_norm(a, T).

#include <optional>
#include <string>

#include "casimir/materials.hpp"

namespace casimir {

struct AsymptoticResult {
  double value = 0.0;       // Pa
  double normalized = 0.0;  // value / force_norm(a, T)
  bool valid = false;       // whether (a, T, eps) lies inside the regime
  std::string validity;     // the regime, with its numeric bounds
  std::string formula_id;
  // Approached only at distances far beyond the validity bound.
  bool slow_convergence = false;
};

/// One limit per component; components a regime does not cover are empty.
struct AsymptoticSet {
  std::optional<AsymptoticResult> pw_s, pw_p, ew_s, ew_p;

  /// Sum of the present entries; empty unless all four are present and valid.
  std::optional<double> total() const;
};

/// Int_0^inf x^2 [A e^x - 1]^{-1} dx with A = (eps1+1)(eps2+1)/((eps1-1)(eps2-1)).
/// Either permittivity may be +infinity; 2 zeta(3) for two conductors.
double lifshitz_integral(double eps1, double eps2);

/// Large-distance thermal pressure between plates with static permittivities
/// eps1, eps2 (>= 1 or +infinity), in Pa.
double lifshitz_limit(double eps1, double eps2, double a_um, double T_K);

/// Two conductors, a > 5 lambda_T.
AsymptoticSet metal_metal_large(double a_um, double T_K);

/// Two Drude conductors, 10 c/omega_p < a < lambda_T/5. Only the PW entries
/// and ew_s are covered.
AsymptoticSet metal_metal_small(double a_um, double T_K, double omega_p);

/// Conductor facing a dielectric of static permittivity eps2.
AsymptoticSet metal_dielectric_large(double eps2, double a_um, double T_K);
AsymptoticSet metal_dielectric_small(double eps2, double a_um, double T_K);

/// Picks the limits matching the pair and distance: metal-metal or
/// metal-dielectric, large or small. Empty for dielectric pairs.
AsymptoticSet asymptotics_for(const Material& m1, const Material& m2, double a_um, double T_K);

}  // namespace casimir
