#include "casimir/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <limits>

#include "casimir/quadrature.hpp"
#include "casimir/quantities.hpp"

namespace casimir {

namespace {

using quadrature::Estimate;
using quadrature::Tolerance;
constexpr double pi = units::pi;

// T/(8 pi^2 a^3) in eV/um^3. Integrals in these units put force_norm at
// pi*zeta(3).
double prefactor(double a_um, double T_K) {
  return thermal_energy(T_K) / (8.0 * pi * pi * a_um * a_um * a_um);
}

double norm_integral() { return pi * units::zeta3; }

void check_inputs(const Material& m1, const Material& m2, double a_um, double T_K,
                  const QuadratureSettings& settings) {
  if (!(a_um > 0.0) || !std::isfinite(a_um)) throw std::domain_error("distance must be positive");
  if (!(T_K > 0.0) || !std::isfinite(T_K)) {
    throw std::domain_error("temperature must be positive; the thermal force vanishes at T = 0");
  }
  require_valid(m1);
  require_valid(m2);
  if (const auto errs = validate(settings); !errs.empty()) {
    std::string msg = "invalid quadrature settings:";
    for (const auto& e : errs) msg += " " + e + ";";
    throw std::invalid_argument(msg);
  }
}

std::string component_name(const char* wave, Polarization pol) {
  return std::string(wave) + " " + to_string(pol) + "-polarization";
}

void require_converged(const quadrature::Result& r, const char* wave, Polarization pol) {
  if (!r.converged || !std::isfinite(r.value)) {
    throw IntegrationError(component_name(wave, pol) + ": quadrature did not reach tolerance (error " +
                           std::to_string(r.error) + ", value " + std::to_string(r.value) + ")");
  }
}

// Integral of y^2 e^{-y}/(1 - e^{-y}) over [y0, inf), bounding the EW tail.
double ew_tail_bound(double y0) {
  const double e = std::exp(-y0);
  return e * (y0 * y0 + 2.0 * y0 + 2.0) / (1.0 - e);
}

void hash_bytes(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
}

}  // namespace

std::vector<std::string> validate(const QuadratureSettings& s) {
  std::vector<std::string> errors;
  if (!(s.u_min > 0.0)) errors.emplace_back("u_min must be positive");
  if (!(s.u_min < s.bose_series_threshold)) errors.emplace_back("u_min must be below bose_series_threshold");
  if (!(s.bose_series_threshold < 1.0)) errors.emplace_back("bose_series_threshold must be below 1");
  if (!(s.u_max > 1.0)) errors.emplace_back("u_max must exceed 1");
  if (s.n_reflect_max < 1) errors.emplace_back("n_reflect_max must be >= 1");
  if (!(s.y_max_ew > 1.0)) errors.emplace_back("y_max_ew must exceed 1");
  if (!(s.rel_tol > 0.0 && s.rel_tol <= 1e-2)) errors.emplace_back("rel_tol must lie in (0, 1e-2]");
  return errors;
}

std::uint64_t settings_hash(const QuadratureSettings& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (double v : {s.rel_tol, s.u_min, s.u_max, s.y_max_ew, s.bose_series_threshold}) {
    hash_bytes(h, &v, sizeof v);
  }
  const std::int64_t n = s.n_reflect_max;
  hash_bytes(h, &n, sizeof n);
  const unsigned char t = s.tail_check ? 1 : 0;
  hash_bytes(h, &t, 1);
  return h;
}

double bose_factor(double u, double threshold) {
  if (!(u > 0.0)) throw std::domain_error("bose_factor requires u > 0");
  if (u < threshold) return 1.0 / u - 0.5 + u / 12.0 - u * u * u / 720.0;
  return 1.0 / std::expm1(u);
}

double ew_integrand(const Material& m1, const Material& m2, double u, double y, Polarization pol,
                    double a_um, double T_K) {
  const complex R = pair_product(m1, m2, {u, y, Regime::evanescent, a_um, T_K}, pol);
  const complex z = R * std::exp(-y);
  return y * y * std::imag(z / (1.0 - z));
}

SeriesValue pw_integrand_series(const Material& m1, const Material& m2, double u, double y,
                                Polarization pol, double a_um, double T_K, int n_reflect_max,
                                double rel_tol) {
  const complex R = pair_product(m1, m2, {u, y, Regime::propagating, a_um, T_K}, pol);
  const double absR = std::abs(R);
  SeriesValue out;
  if (absR == 0.0) return out;

  int n = n_reflect_max;
  if (absR < 1.0) {
    // smallest N with |R|^{N+1}/(1 - |R|) < rel_tol/100
    const double need = std::log(rel_tol * 1e-2 * (1.0 - absR)) / std::log(absR) - 1.0;
    n = std::max(1, static_cast<int>(std::ceil(need)));
    if (n > n_reflect_max) {
      n = n_reflect_max;
      out.capped = true;
    }
    out.residual = y * y * std::pow(absR, n + 1) / (1.0 - absR);
  } else {
    out.capped = true;
    out.residual = std::numeric_limits<double>::infinity();
  }

  const complex z = R * std::polar(1.0, y);
  complex term = z, acc = 0.0;
  for (int k = 1; k <= n; ++k) {
    acc += term;
    term *= z;
  }
  out.value = y * y * acc.real();
  out.terms = n;
  return out;
}

double pw_integrand_resummed(const Material& m1, const Material& m2, double u, double y,
                             Polarization pol, double a_um, double T_K) {
  const complex R = pair_product(m1, m2, {u, y, Regime::propagating, a_um, T_K}, pol);
  const complex z = R * std::polar(1.0, y);
  return y * y * std::real(z / (1.0 - z));
}

double ideal_pair_pw_integral(double L) {
  // With R = 1 the series sum_n cos(n y) is -1/2 + pi sum_k delta(y - 2 pi k).
  // Integrating term by term over 0 <= y <= u L and then over u with the Bose
  // weight leaves the black-body term plus one Bose tail per cavity mode:
  //   -L^3 pi^4/90 + 4 pi^3 sum_k k^2 (-ln(1 - e^{-2 pi k/L})).
  const long double h = 2.0L * pi / L;
  long double modes = 0.0L;
  for (long k = 1;; ++k) {
    const long double x = h * static_cast<long double>(k);
    const long double term = static_cast<long double>(k) * k * -std::log1p(-std::exp(-x));
    modes += term;
    if (x > 40.0L && term <= 1e-21L * modes) break;
    if (term == 0.0L) break;
  }
  const long double bb = static_cast<long double>(L) * L * L * std::pow(static_cast<long double>(pi), 4) / 90.0L;
  return static_cast<double>(-bb + 4.0L * std::pow(static_cast<long double>(pi), 3) * modes);
}

ComponentResult force_ew(const Material& m1, const Material& m2, double a_um, double T_K,
                         Polarization pol, const QuadratureSettings& settings) {
  check_inputs(m1, m2, a_um, T_K, settings);
  const PlatePair pair(m1, m2);
  if (pair.both_ideal()) return {0.0, 0.0};

  const double L = distance_ratio(a_um, T_K);
  const double Tev = thermal_energy(T_K);
  const double ymax = settings.y_max_ew;
  const double abs_floor = settings.rel_tol * 1e-6 * norm_integral();
  const double tail = ew_tail_bound(ymax);

  // g(u) = Int_0^ymax y^2 Im[R e^{-y}/(1 - R e^{-y})] dy
  const auto transverse = [&](double u) -> Estimate {
    const auto slice = pair.at(u * Tev, u * L);
    const auto f = [&](double y) {
      const complex z = PlatePair::product(slice, y, Regime::evanescent, pol) * std::exp(-y);
      return y * y * std::imag(z / (1.0 - z));
    };
    std::array<double, 6> br{0.0, std::min(2.0, ymax), std::min(10.0, ymax), ymax, ymax, ymax};
    std::size_t n = 4;
    // total internal reflection edge y = v sqrt(Re chi), where s changes character
    for (const auto* chi : {&slice.chi1, &slice.chi2}) {
      if ((chi == &slice.chi1 ? slice.ideal1 : slice.ideal2) || chi->real() <= 0.0) continue;
      const double edge = slice.v * std::sqrt(chi->real());
      if (edge > 0.0 && edge < ymax) br[n++] = edge;
    }
    std::sort(br.begin(), br.begin() + n);
    const auto r = quadrature::integrate(f, std::span<const double>(br.data(), n),
                                         Tolerance{abs_floor * 1e-6, settings.rel_tol * 1e-4, true}, 400);
    return {r.value, r.error + tail};
  };

  const auto integrand = [&](double t) -> Estimate {
    const double u = std::exp(t);
    const double w = bose_factor(u, settings.bose_series_threshold) * u;
    const Estimate g = transverse(u);
    return {w * g.value, w * g.error};
  };

  const Tolerance outer{abs_floor, settings.rel_tol, false};
  const double ln10 = std::log(10.0);

  std::vector<double> br;
  for (double t = std::log(settings.u_min) + ln10; t < 0.0; t += ln10) br.push_back(t);
  br.push_back(0.0);
  if (std::log(settings.u_max) > std::log(10.0)) br.push_back(std::log(10.0));
  br.push_back(std::log(settings.u_max));
  auto main = quadrature::integrate(integrand, br, outer, 20000);
  require_converged(main, "evanescent", pol);

  double lo = std::log(settings.u_min);
  auto last = quadrature::integrate(integrand, lo, lo + ln10, outer, 2000);
  require_converged(last, "evanescent", pol);
  double value = main.value + last.value;
  double error = main.error + last.error;

  // Extend below u_min while the lowest decade still matters.
  int extra = 0;
  while (settings.tail_check &&
         std::abs(last.value) > std::max(0.1 * settings.rel_tol * std::abs(value), 0.1 * abs_floor)) {
    if (extra == 20) {
      throw IntegrationError(component_name("evanescent", pol) +
                             ": low-frequency tail did not converge after 20 extra decades");
    }
    last = quadrature::integrate(integrand, lo - ln10, lo, outer, 2000);
    require_converged(last, "evanescent", pol);
    value += last.value;
    error += last.error;
    lo -= ln10;
    ++extra;
  }
  error += std::abs(last.value);

  const double scale = units::to_pascal(prefactor(a_um, T_K));
  return {scale * value, scale * error};
}

ComponentResult force_pw(const Material& m1, const Material& m2, double a_um, double T_K,
                         Polarization pol, const QuadratureSettings& settings) {
  check_inputs(m1, m2, a_um, T_K, settings);
  const PlatePair pair(m1, m2);
  const double L = distance_ratio(a_um, T_K);
  const double scale = -units::to_pascal(prefactor(a_um, T_K));

  if (pair.both_ideal()) {
    const double I = ideal_pair_pw_integral(L);
    const double bb = L * L * L * std::pow(pi, 4) / 90.0;
    return {scale * I, std::abs(scale) * 1e-15 * (bb + std::abs(I))};
  }

  const double Tev = thermal_energy(T_K);
  const double u_lo = settings.u_min;
  const double abs_floor = settings.rel_tol * 1e-6 * norm_integral();
  // Frequencies above u are bounded by the black-body weight beyond it. The
  // cut moves below u_max once that bound is far under the requested accuracy.
  const auto cut_bound = [L](double u) {
    return L * L * L * std::exp(-u) * (u * u * u + 3 * u * u + 6 * u + 6);
  };
  // At small L the components scale with the black-body volume instead.
  const double bb = L * L * L * std::pow(pi, 4) / 90.0;
  const double cut_target = 1e-3 * settings.rel_tol * std::min(norm_integral(), bb);
  double u_hi = settings.u_max;
  while (u_hi > 10.0 && cut_bound(u_hi - 1.0) < cut_target) u_hi -= 1.0;
  const double ymax = L * u_hi;
  const double inner_abs = abs_floor * 1e-3 / std::max(1.0, ymax * ymax * ymax);
  // The outer integral cancels the black-body volume ~ L^3 pi^4/90 down to
  // O(pi zeta(3)); inner errors add up against the former.
  const double inner_rel =
      std::max(1e-14, std::min(settings.rel_tol * 1e-4, 0.1 * settings.rel_tol * norm_integral() / bb));

  // The kernel R e^{iy}/(1 - R e^{iy}) is the summed multiple-reflection
  // series. Near-poles sit at y + arg R = 2 pi k with width ~ 1 - |R|; the
  // outer panels are cut at every multiple of pi so each near-pole lands on a
  // panel edge, and the inner frequency integral runs at fixed y where the
  // phase e^{iy} is constant.
  const auto kernel = [&](double u, double y) {
    const auto slice = pair.at(u * Tev, u * L);
    const complex z = PlatePair::product(slice, y, Regime::propagating, pol) * std::polar(1.0, y);
    return std::real(z / (1.0 - z));
  };

  const auto frequency_integral = [&](double y) -> Estimate {
    const double lo = std::max(y / L, u_lo);
    if (!(lo < u_hi)) return {};
    Estimate acc;
    const Tolerance tol{inner_abs, inner_rel, true};
    if (lo < 1.0) {
      const auto f = [&](double t) {
        const double u = std::exp(t);
        return bose_factor(u, settings.bose_series_threshold) * u * kernel(u, y);
      };
      const auto r = quadrature::integrate(f, std::log(lo), 0.0, tol, 1000);
      acc.value += r.value;
      acc.error += r.error;
    }
    const auto g = [&](double u) { return bose_factor(u, settings.bose_series_threshold) * kernel(u, y); };
    const auto r = quadrature::integrate(g, std::max(lo, 1.0), u_hi, tol, 1000);
    acc.value += r.value;
    acc.error += r.error;
    return acc;
  };

  const auto integrand = [&](double y) -> Estimate {
    const Estimate h = frequency_integral(y);
    return {y * y * h.value, y * y * h.error};
  };

  std::vector<double> br{0.0};
  for (long k = 1; k * pi < ymax; ++k) br.push_back(k * pi);
  br.push_back(ymax);

  const auto r = quadrature::integrate(integrand, br, Tolerance{abs_floor, settings.rel_tol, false},
                                       static_cast<int>(br.size()) + 400000);
  require_converged(r, "propagating", pol);
  return {scale * r.value, std::abs(scale) * (r.error + cut_bound(u_hi))};
}

ForceComponents force_components(const Material& m1, const Material& m2, double a_um, double T_K,
                                 const QuadratureSettings& settings) {
  ForceComponents out;
  out.a_um = a_um;
  out.T_K = T_K;
  out.material1 = m1.label;
  out.material2 = m2.label;
  out.settings_hash = settings_hash(settings);

  const auto pws = force_pw(m1, m2, a_um, T_K, Polarization::s, settings);
  const auto pwp = force_pw(m1, m2, a_um, T_K, Polarization::p, settings);
  const auto ews = force_ew(m1, m2, a_um, T_K, Polarization::s, settings);
  const auto ewp = force_ew(m1, m2, a_um, T_K, Polarization::p, settings);
  out.pw_s = pws.value;
  out.err_pw_s = pws.error;
  out.pw_p = pwp.value;
  out.err_pw_p = pwp.error;
  out.ew_s = ews.value;
  out.err_ew_s = ews.error;
  out.ew_p = ewp.value;
  out.err_ew_p = ewp.error;

  for (const auto* m : {&m1, &m2}) {
    const double depth = penetration_depth(*m);
    if (depth > 0.0 && a_um < depth) {
      out.warnings.push_back("distance below the penetration depth of '" + m->label + "' (" +
                             std::to_string(depth) + " um)");
    }
  }
  return out;
}

}  // namespace casimir
