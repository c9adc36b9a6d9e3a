#include "casimir/materials.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "casimir/quantities.hpp"

namespace casimir {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive_frequency(double w) {
  if (!(w > 0.0)) throw std::domain_error("frequency must be positive");
}

}  // namespace

Material drude(double omega_p, double omega_tau, std::string label) {
  return {Drude{omega_p, omega_tau}, std::move(label)};
}

Material constant_eps(double eps, std::string label) { return {ConstantEps{eps}, std::move(label)}; }

Material lorentz(double eps_inf, std::vector<Oscillator> oscillators, std::string label) {
  return {LorentzOscillators{eps_inf, std::move(oscillators)}, std::move(label)};
}

Material ideal_metal(std::string label) { return {IdealMetal{}, std::move(label)}; }

Material gold() { return drude(9.0, 0.035, "Au"); }

bool is_ideal(const Material& m) { return std::holds_alternative<IdealMetal>(m.model); }

complex susceptibility_real_axis(const Material& m, double omega) {
  require_positive_frequency(omega);
  return std::visit(
      overloaded{
          [&](const Drude& d) -> complex {
            return -d.omega_p * d.omega_p / (omega * complex(omega, d.omega_tau));
          },
          [](const ConstantEps& c) -> complex { return {c.eps - 1.0, 0.0}; },
          [&](const LorentzOscillators& l) -> complex {
            complex chi(l.eps_inf - 1.0, 0.0);
            for (const auto& o : l.oscillators) {
              const double w02 = o.omega_0 * o.omega_0;
              chi += o.strength * w02 / complex(w02 - omega * omega, -o.gamma * omega);
            }
            return chi;
          },
          [](const IdealMetal&) -> complex {
            throw UnsupportedEvaluation("ideal metal permittivity is not evaluated numerically");
          },
      },
      m.model);
}

double susceptibility_imag_axis(const Material& m, double xi) {
  require_positive_frequency(xi);
  return std::visit(
      overloaded{
          [&](const Drude& d) { return d.omega_p * d.omega_p / (xi * (xi + d.omega_tau)); },
          [](const ConstantEps& c) { return c.eps - 1.0; },
          [&](const LorentzOscillators& l) {
            double chi = l.eps_inf - 1.0;
            for (const auto& o : l.oscillators) {
              const double w02 = o.omega_0 * o.omega_0;
              chi += o.strength * w02 / (w02 + xi * xi + o.gamma * xi);
            }
            return chi;
          },
          [](const IdealMetal&) -> double {
            throw UnsupportedEvaluation("ideal metal permittivity is not evaluated numerically");
          },
      },
      m.model);
}

complex permittivity_real_axis(const Material& m, double omega) {
  return 1.0 + susceptibility_real_axis(m, omega);
}

double permittivity_imag_axis(const Material& m, double xi) {
  return 1.0 + susceptibility_imag_axis(m, xi);
}

double static_permittivity(const Material& m) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(overloaded{
                        [](const Drude&) { return inf; },
                        [](const ConstantEps& c) { return c.eps; },
                        [](const LorentzOscillators& l) {
                          double eps = l.eps_inf;
                          for (const auto& o : l.oscillators) eps += o.strength;
                          return eps;
                        },
                        [](const IdealMetal&) { return inf; },
                    },
                    m.model);
}

double penetration_depth(const Material& m) {
  if (const auto* d = std::get_if<Drude>(&m.model)) return units::hbar_c / d->omega_p;
  return 0.0;
}

std::vector<std::string> validate(const Material& m) {
  std::vector<std::string> errors;
  const auto finite = [](double v) { return std::isfinite(v); };
  std::visit(overloaded{
                 [&](const Drude& d) {
                   if (!(d.omega_p > 0.0) || !finite(d.omega_p))
                     errors.emplace_back("omega_p must be strictly positive");
                   if (!(d.omega_tau > 0.0) || !finite(d.omega_tau))
                     errors.emplace_back("omega_tau must be strictly positive");
                 },
                 [&](const ConstantEps& c) {
                   if (!(c.eps >= 1.0) || !finite(c.eps)) errors.emplace_back("eps must be >= 1");
                 },
                 [&](const LorentzOscillators& l) {
                   if (!(l.eps_inf >= 1.0) || !finite(l.eps_inf))
                     errors.emplace_back("eps_inf must be >= 1");
                   for (std::size_t i = 0; i < l.oscillators.size(); ++i) {
                     const auto& o = l.oscillators[i];
                     const std::string at = "oscillator " + std::to_string(i) + ": ";
                     if (!(o.strength >= 0.0) || !finite(o.strength))
                       errors.push_back(at + "strength must be >= 0");
                     if (!(o.omega_0 > 0.0) || !finite(o.omega_0))
                       errors.push_back(at + "omega_0 must be strictly positive");
                     if (!(o.gamma >= 0.0) || !finite(o.gamma))
                       errors.push_back(at + "gamma must be >= 0");
                   }
                 },
                 [](const IdealMetal&) {},
             },
             m.model);
  return errors;
}

void require_valid(const Material& m) {
  const auto errors = validate(m);
  if (errors.empty()) return;
  std::string msg = "invalid material '" + m.label + "':";
  for (const auto& e : errors) msg += " " + e + ";";
  throw std::invalid_argument(msg);
}

std::string describe(const Material& m) {
  std::ostringstream out;
  out.precision(17);
  std::visit(overloaded{
                 [&](const Drude& d) { out << "drude:" << d.omega_p << ',' << d.omega_tau; },
                 [&](const ConstantEps& c) { out << "eps:" << c.eps; },
                 [&](const LorentzOscillators& l) {
                   out << "lorentz:" << l.eps_inf;
                   for (const auto& o : l.oscillators)
                     out << ';' << o.strength << ',' << o.omega_0 << ',' << o.gamma;
                 },
                 [&](const IdealMetal&) { out << "ideal"; },
             },
             m.model);
  return out.str();
}

}  // namespace casimir
