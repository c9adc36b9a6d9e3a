// Thermal Casimir pressure sweeps over distance and temperature, written as CSV.
//
// Exit codes: 0 success, 2 configuration error, 3 integration failure,
// 4 output failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "casimir/sweep.hpp"

namespace {

constexpr int exit_config = 2;
constexpr int exit_integration = 3;
constexpr int exit_output = 4;

}  // namespace

int main(int argc, char** argv) {
  using namespace casimir;

  CLI::App app{"Thermal Casimir pressure between parallel plates, split into propagating and evanescent waves"};
  std::string config_path;
  std::optional<double> a_min, a_max;
  std::optional<int> points, threads;
  std::vector<double> temperatures;
  std::string material1, material2, normalization, out;
  bool asymptotics = false, oracle = false;

  app.add_option("--config", config_path, "INI configuration file")->check(CLI::ExistingFile);
  app.add_option("--a-min", a_min, "smallest distance, um");
  app.add_option("--a-max", a_max, "largest distance, um");
  app.add_option("--points", points, "log-spaced distances");
  app.add_option("--T", temperatures, "temperature in K (repeatable)");
  app.add_option("--material1", material1, "drude:wp,wt | eps:x | ideal | gold | lorentz:file.json");
  app.add_option("--material2", material2, "as --material1");
  app.add_option("--normalize", normalization, "pascal | force_norm | ratio_T0");
  app.add_flag("--asymptotics", asymptotics, "add asym_* columns");
  app.add_flag("--oracle", oracle, "add the imaginary-frequency oracle column");
  app.add_option("--out", out, "output path, - for stdout");
  app.add_option("--threads", threads, "worker threads, 0 for all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_config;
  }

  SweepSpec spec;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    std::stringstream text;
    text << in.rdbuf();
    const auto base = std::filesystem::path(config_path).parent_path().string();
    auto parsed = parse_config(text.str(), base.empty() ? "." : base);
    if (!parsed.spec) {
      for (const auto& e : parsed.errors) std::cerr << config_path << ": " << e << "\n";
      return exit_config;
    }
    spec = std::move(*parsed.spec);
  }

  try {
    if (a_min) spec.a_min = *a_min;
    if (a_max) spec.a_max = *a_max;
    if (points) spec.points = *points;
    if (threads) spec.threads = *threads;
    if (!temperatures.empty()) spec.temperatures = temperatures;
    if (!material1.empty()) spec.material1 = parse_material(material1);
    if (!material2.empty()) spec.material2 = parse_material(material2);
    if (!normalization.empty()) {
      const auto n = parse_normalization(normalization);
      if (!n) throw std::invalid_argument("--normalize: expected pascal, force_norm or ratio_T0");
      spec.normalization = *n;
    }
    if (asymptotics) spec.include_asymptotics = true;
    if (oracle) spec.include_oracle = true;
    if (!out.empty()) spec.output_path = out;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  }
  if (const auto errs = validate(spec); !errs.empty()) {
    for (const auto& e : errs) std::cerr << "error: " << e << "\n";
    return exit_config;
  }

  const auto rows = run_sweep(spec);
  bool failed = false;
  for (const auto& r : rows) {
    if (!r.ok) {
      failed = true;
      std::cerr << "a=" << r.a_um << " um, T=" << r.T_K << " K: " << r.message << "\n";
    }
  }

  try {
    emit_csv(rows, spec, spec.output_path);
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_output;
  }
  return failed ? exit_integration : 0;
}
