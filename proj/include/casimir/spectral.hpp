#pragma once

// Real-frequency thermal Casimir pressure, split into propagating (PW) and
// evanescent (EW) waves per polarization.
//
//   F_PW = -(T / 8 pi^2 a^3) Re Int du b(u) Int_0^{u L} dy y^2 sum_mu R e^{iy}/(1 - R e^{iy})
//   F_EW = +(T / 8 pi^2 a^3) Im Int du b(u) Int_0^inf  dy y^2 sum_mu R e^{-y}/(1 - R e^{-y})
//
// with b(u) = 1/(e^u - 1), L = 2a/lambda_T and R = r1 r2. Positive pressure
// is attraction.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/fresnel.hpp"
#include "casimir/materials.hpp"

namespace casimir {

struct QuadratureSettings {
  double rel_tol = 1e-6;
  double u_min = 1e-14;
  double u_max = 60.0;
  double y_max_ew = 60.0;
  int n_reflect_max = 256;
  double bose_series_threshold = 1e-4;
  bool tail_check = true;
};

std::vector<std::string> validate(const QuadratureSettings& s);

/// FNV-1a over the settings fields; stable across runs of the same build.
std::uint64_t settings_hash(const QuadratureSettings& s);

class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ComponentResult {
  double value = 0.0;  // Pa
  double error = 0.0;  // Pa
};

struct ForceComponents {
  double pw_s = 0, pw_p = 0, ew_s = 0, ew_p = 0;
  double err_pw_s = 0, err_pw_p = 0, err_ew_s = 0, err_ew_p = 0;

  double a_um = 0, T_K = 0;
  std::string material1, material2;
  std::uint64_t settings_hash = 0;
  std::vector<std::string> warnings;

  double pw_total() const { return pw_s + pw_p; }
  double ew_total() const { return ew_s + ew_p; }
  double total() const { return pw_total() + ew_total(); }
  double err_total() const { return err_pw_s + err_pw_p + err_ew_s + err_ew_p; }
};

/// 1/(e^u - 1); Laurent series 1/u - 1/2 + u/12 - u^3/720 below `threshold`.
double bose_factor(double u, double threshold = 1e-4);

/// y^2 Im[R e^{-y}/(1 - R e^{-y})] at the evanescent point (u, y).
double ew_integrand(const Material& m1, const Material& m2, double u, double y, Polarization pol,
                    double a_um, double T_K);

struct SeriesValue {
  double value = 0.0;     // y^2 Re sum_{n<=N} R^n e^{iny}
  double residual = 0.0;  // y^2 |R|^{N+1}/(1-|R|); infinite when |R| >= 1
  int terms = 0;
  bool capped = false;
};

/// Multiple-reflection expansion of the PW kernel, truncated once the
/// geometric tail bound drops below rel_tol/100 or at n_reflect_max terms.
SeriesValue pw_integrand_series(const Material& m1, const Material& m2, double u, double y,
                                Polarization pol, double a_um, double T_K, int n_reflect_max,
                                double rel_tol = 1e-6);

/// Resummed PW kernel y^2 Re[R e^{iy}/(1 - R e^{iy})], valid for |R| < 1.
double pw_integrand_resummed(const Material& m1, const Material& m2, double u, double y,
                             Polarization pol, double a_um, double T_K);

ComponentResult force_ew(const Material& m1, const Material& m2, double a_um, double T_K,
                         Polarization pol, const QuadratureSettings& settings = {});

ComponentResult force_pw(const Material& m1, const Material& m2, double a_um, double T_K,
                         Polarization pol, const QuadratureSettings& settings = {});

ForceComponents force_components(const Material& m1, const Material& m2, double a_um, double T_K,
                                 const QuadratureSettings& settings = {});

/// PW integral for two ideal plates (R = 1): the multiple-reflection series
/// integrated term by term, in units where force_norm corresponds to pi*zeta(3).
double ideal_pair_pw_integral(double distance_ratio);

}  // namespace casimir
