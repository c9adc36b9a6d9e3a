#pragma once

// Distance/temperature sweeps: configuration, evaluation and CSV output.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/asymptotics.hpp"
#include "casimir/materials.hpp"
#include "casimir/matsubara.hpp"
#include "casimir/spectral.hpp"

namespace casimir {

enum class Normalization { pascal, force_norm, ratio_T0 };

std::optional<Normalization> parse_normalization(const std::string& s);
const char* to_string(Normalization n);

struct SweepSpec {
  double a_min = 0.2;  // um
  double a_max = 200.0;
  int points = 40;
  std::vector<double> temperatures{300.0};
  Material material1 = gold();
  Material material2 = gold();
  Normalization normalization = Normalization::force_norm;
  bool include_asymptotics = false;
  bool include_oracle = false;
  std::string output_path = "-";  // "-" is stdout
  QuadratureSettings settings;
  MatsubaraSettings oracle_settings;
  int threads = 0;  // 0: one per hardware thread
};

/// Violations of the SweepSpec invariants, empty when usable.
std::vector<std::string> validate(const SweepSpec& spec);

struct ParseResult {
  std::optional<SweepSpec> spec;
  std::vector<std::string> errors;
};

/// Reads the INI schema documented in the README. Relative lorentz: paths are
/// resolved against `base_dir`.
ParseResult parse_config(const std::string& text, const std::string& base_dir = ".");

/// Material shorthand: drude:<omega_p>,<omega_tau> | eps:<value> | ideal |
/// gold | lorentz:<json file>.
Material parse_material(const std::string& shorthand, const std::string& base_dir = ".");

/// Oscillator model from a JSON document:
///   {"label": ..., "eps_inf": ..., "oscillators": [{"strength", "omega_0", "gamma"}, ...]}
Material lorentz_from_json(const std::string& text);

/// points log-spaced distances from a_min to a_max inclusive.
std::vector<double> distance_grid(const SweepSpec& spec);

struct SweepRow {
  double a_um = 0.0;
  double T_K = 0.0;
  ForceComponents forces;  // Pa
  AsymptoticSet asymptotics;
  std::optional<double> oracle;  // Pa
  bool ok = true;
  std::string message;  // failure description when !ok
};

/// Rows ordered by temperature (as listed) then distance.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// The CSV document for `rows`, values in spec.normalization.
std::string format_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec);

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes format_csv to `path` ("-" for stdout); throws OutputError.
void emit_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec, const std::string& path);

}  // namespace casimir
