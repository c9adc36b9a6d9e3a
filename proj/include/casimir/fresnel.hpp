#pragma once

// Single-interface Fresnel coefficients in the gap variables (u, y).
//
// u = hbar*omega/T, y = 2a*k0 (propagating) or y = 2a*|k0| (evanescent),
// v = omega/omega_c = u * 2a/lambda_T. With Y = y (PW) or Y = i*y (EW) and
// s = sqrt(v^2 (eps - 1) + Y^2) on the principal branch,
//
//   r_s = (Y - s)/(Y + s),   r_p = (eps*Y - s)/(eps*Y + s).

#include "casimir/materials.hpp"

namespace casimir {

enum class Regime { propagating, evanescent };
enum class Polarization { s, p };

inline constexpr Polarization polarizations[] = {Polarization::s, Polarization::p};

const char* to_string(Polarization pol);

struct SpectralPoint {
  double u;  // hbar*omega / k_B T
  double y;
  Regime regime;
  double a_um;
  double T_K;

  double omega() const;             // eV
  double omega_over_omega_c() const;
};

/// Principal square root: Re >= 0, and Im >= 0 when Re == 0. A signed-zero
/// imaginary part on the negative real axis is treated as +0.
complex principal_sqrt(complex z);

/// s = sqrt(v^2 chi + y^2) (PW) or sqrt(v^2 chi - y^2) (EW), chi = eps - 1.
complex longitudinal_param_chi(complex chi, double omega_over_omega_c, double y, Regime regime);

complex longitudinal_param(complex eps, double omega_over_omega_c, double y, Regime regime);

/// Reflection coefficient for susceptibility chi at frequency ratio v.
complex reflect_chi(complex chi, double v, double y, Regime regime, Polarization pol);

complex reflect(const Material& m, const SpectralPoint& pt, Polarization pol);

/// R = r1 * r2.
complex pair_product(const Material& m1, const Material& m2, const SpectralPoint& pt,
                     Polarization pol);

/// Reflection of a symbolic ideal metal.
constexpr double ideal_reflection(Polarization pol) { return pol == Polarization::s ? -1.0 : 1.0; }

/// Pair of plates evaluated at a fixed frequency, hoisting the permittivity
/// evaluation out of inner transverse loops.
class PlatePair {
 public:
  PlatePair(const Material& m1, const Material& m2);

  /// Prepares the susceptibilities at omega (eV) with v = omega/omega_c.
  struct Slice {
    complex chi1, chi2;
    bool ideal1, ideal2;
    double v;
  };

  Slice at(double omega, double v) const;

  static complex product(const Slice& slice, double y, Regime regime, Polarization pol);

  bool both_ideal() const { return ideal1_ && ideal2_; }
  const Material& first() const { return *m1_; }
  const Material& second() const { return *m2_; }

 private:
  const Material* m1_;
  const Material* m2_;
  bool ideal1_, ideal2_;
};

}  // namespace casimir
