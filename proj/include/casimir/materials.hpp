#pragma once

// Dielectric response of a plate on the real and imaginary frequency axes.

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace casimir {

using complex = std::complex<double>;

struct Drude {
  double omega_p;    // eV
  double omega_tau;  // eV
};

struct ConstantEps {
  double eps;
};

struct Oscillator {
  double strength;  // dimensionless
  double omega_0;   // eV
  double gamma;     // eV
};

struct LorentzOscillators {
  double eps_inf = 1.0;
  std::vector<Oscillator> oscillators;
};

/// Perfect reflector. Resolved symbolically (r_s = -1, r_p = +1); its
/// permittivity is never evaluated.
struct IdealMetal {};

using MaterialModel = std::variant<Drude, ConstantEps, LorentzOscillators, IdealMetal>;

struct Material {
  MaterialModel model;
  std::string label;
};

/// Thrown when a permittivity is requested for a symbolic material.
class UnsupportedEvaluation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Material drude(double omega_p, double omega_tau, std::string label = "drude");
Material constant_eps(double eps, std::string label = "dielectric");
Material lorentz(double eps_inf, std::vector<Oscillator> oscillators, std::string label = "lorentz");
Material ideal_metal(std::string label = "ideal");

/// Gold with omega_p = 9.0 eV, omega_tau = 0.035 eV.
Material gold();

bool is_ideal(const Material& m);

/// epsilon(omega) - 1 on the real axis. Computed directly from the model so
/// that small susceptibilities keep their relative precision.
complex susceptibility_real_axis(const Material& m, double omega);

/// epsilon(i xi) - 1 on the imaginary axis.
double susceptibility_imag_axis(const Material& m, double xi);

complex permittivity_real_axis(const Material& m, double omega);
double permittivity_imag_axis(const Material& m, double xi);

/// epsilon(0); +infinity for conductors.
double static_permittivity(const Material& m);

/// c/omega_p in um for Drude plates, 0 otherwise.
double penetration_depth(const Material& m);

/// Every invariant violation, empty when the material is usable.
std::vector<std::string> validate(const Material& m);

/// Throws std::invalid_argument listing the violations, if any.
void require_valid(const Material& m);

std::string describe(const Material& m);

}  // namespace casimir
