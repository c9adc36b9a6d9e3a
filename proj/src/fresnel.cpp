#include "casimir/fresnel.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/quantities.hpp"

namespace casimir {

const char* to_string(Polarization pol) { return pol == Polarization::s ? "s" : "p"; }

double SpectralPoint::omega() const { return u * thermal_energy(T_K); }

double SpectralPoint::omega_over_omega_c() const { return u * distance_ratio(a_um, T_K); }

complex principal_sqrt(complex z) {
  if (z.imag() == 0.0) z = complex(z.real(), 0.0);
  return std::sqrt(z);
}

complex longitudinal_param_chi(complex chi, double v, double y, Regime regime) {
  const double y2 = regime == Regime::propagating ? y * y : -y * y;
  return principal_sqrt(v * v * chi + y2);
}

complex longitudinal_param(complex eps, double v, double y, Regime regime) {
  return longitudinal_param_chi(eps - 1.0, v, y, regime);
}

complex reflect_chi(complex chi, double v, double y, Regime regime, Polarization pol) {
  if (chi == complex(0.0, 0.0)) return {0.0, 0.0};
  const complex Y = regime == Regime::propagating ? complex(y, 0.0) : complex(0.0, y);
  const complex s = longitudinal_param_chi(chi, v, y, regime);
  const complex v2chi = v * v * chi;
  if (pol == Polarization::s) {
    // Y^2 - s^2 = -v^2 chi exactly, so (Y - s)/(Y + s) = -v^2 chi/(Y + s)^2
    // without the cancellation of the naive form when |s| ~ |Y|.
    const complex d = Y + s;
    return -v2chi / (d * d);
  }
  // eps^2 Y^2 - s^2 = chi ((eps + 1) Y^2 - v^2)
  const complex eps = 1.0 + chi;
  const complex d = eps * Y + s;
  return chi * ((eps + 1.0) * Y * Y - v * v) / (d * d);
}

complex reflect(const Material& m, const SpectralPoint& pt, Polarization pol) {
  if (!(pt.u > 0.0) || !(pt.y >= 0.0)) throw std::domain_error("spectral point requires u > 0, y >= 0");
  const double v = pt.omega_over_omega_c();
  if (pt.regime == Regime::propagating && pt.y > v * (1.0 + 1e-12)) {
    throw std::domain_error("propagating point requires y <= omega/omega_c");
  }
  if (is_ideal(m)) return ideal_reflection(pol);
  return reflect_chi(susceptibility_real_axis(m, pt.omega()), v, pt.y, pt.regime, pol);
}

complex pair_product(const Material& m1, const Material& m2, const SpectralPoint& pt,
                     Polarization pol) {
  return reflect(m1, pt, pol) * reflect(m2, pt, pol);
}

PlatePair::PlatePair(const Material& m1, const Material& m2)
    : m1_(&m1), m2_(&m2), ideal1_(is_ideal(m1)), ideal2_(is_ideal(m2)) {}

PlatePair::Slice PlatePair::at(double omega, double v) const {
  Slice s{{}, {}, ideal1_, ideal2_, v};
  if (!ideal1_) s.chi1 = susceptibility_real_axis(*m1_, omega);
  if (!ideal2_) s.chi2 = susceptibility_real_axis(*m2_, omega);
  return s;
}

complex PlatePair::product(const Slice& sl, double y, Regime regime, Polarization pol) {
  const complex r1 = sl.ideal1 ? complex(ideal_reflection(pol)) : reflect_chi(sl.chi1, sl.v, y, regime, pol);
  const complex r2 = sl.ideal2 ? complex(ideal_reflection(pol)) : reflect_chi(sl.chi2, sl.v, y, regime, pol);
  return r1 * r2;
}

}  // namespace casimir
