#include "casimir/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include "json.hpp"

#include "casimir/quantities.hpp"

namespace casimir {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::optional<double> to_double(const std::string& raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || p != end) return std::nullopt;
  return v;
}

std::optional<int> to_int(const std::string& raw) {
  const std::string s = trim(raw);
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || p != end) return std::nullopt;
  return v;
}

std::optional<bool> to_bool(const std::string& raw) {
  std::string s = trim(raw);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "true" || s == "yes" || s == "on" || s == "1") return true;
  if (s == "false" || s == "no" || s == "off" || s == "0") return false;
  return std::nullopt;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"geometry", {"a_min", "a_max", "points", "temperatures"}},
      {"materials", {"material1", "material2"}},
      {"quadrature",
       {"rel_tol", "u_min", "u_max", "y_max_ew", "n_reflect_max", "bose_series_threshold", "tail_check"}},
      {"output", {"normalization", "asymptotics", "oracle", "path"}},
  };
  return s;
}

// Normalized value of a pressure for the requested column convention.
double normalize(double pa, double a_um, double T_K, Normalization n) {
  switch (n) {
    case Normalization::pascal:
      return pa;
    case Normalization::force_norm:
      return pa / force_norm(a_um, T_K);
    case Normalization::ratio_T0:
      return pa / zero_temperature_pressure(a_um);
  }
  return pa;
}

void put(std::string& line, double v) {
  char buf[32];
  if (std::isnan(v)) {
    std::snprintf(buf, sizeof buf, "nan");
  } else {
    std::snprintf(buf, sizeof buf, "%.8e", v);
  }
  line += ',';
  line += buf;
}

}  // namespace

std::optional<Normalization> parse_normalization(const std::string& s) {
  if (s == "pascal") return Normalization::pascal;
  if (s == "force_norm") return Normalization::force_norm;
  if (s == "ratio_T0") return Normalization::ratio_T0;
  return std::nullopt;
}

const char* to_string(Normalization n) {
  switch (n) {
    case Normalization::pascal:
      return "pascal";
    case Normalization::force_norm:
      return "force_norm";
    case Normalization::ratio_T0:
      return "ratio_T0";
  }
  return "?";
}

std::vector<std::string> validate(const SweepSpec& spec) {
  std::vector<std::string> errors;
  if (!(spec.a_min > 0.0)) errors.emplace_back("a_min must be positive");
  if (!(spec.a_max > spec.a_min)) errors.emplace_back("a_max must exceed a_min");
  if (spec.points < 2) errors.emplace_back("points must be >= 2");
  if (spec.temperatures.empty()) errors.emplace_back("at least one temperature is required");
  for (double T : spec.temperatures) {
    if (!(T > 0.0) || !std::isfinite(T)) errors.emplace_back("temperatures must be positive");
  }
  for (const auto* m : {&spec.material1, &spec.material2}) {
    for (const auto& e : validate(*m)) errors.push_back(m->label + ": " + e);
  }
  for (const auto& e : validate(spec.settings)) errors.push_back("quadrature: " + e);
  for (const auto& e : validate(spec.oracle_settings)) errors.push_back("oracle: " + e);
  if (spec.threads < 0) errors.emplace_back("threads must be >= 0");
  return errors;
}

Material lorentz_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<Oscillator> osc;
  for (const auto& o : j.at("oscillators")) {
    osc.push_back({o.at("strength").get<double>(), o.at("omega_0").get<double>(), o.at("gamma").get<double>()});
  }
  return lorentz(j.value("eps_inf", 1.0), std::move(osc), j.value("label", std::string("lorentz")));
}

Material parse_material(const std::string& shorthand, const std::string& base_dir) {
  const std::string s = trim(shorthand);
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);

  if (kind == "ideal" && colon == std::string::npos) return ideal_metal();
  if (kind == "gold" && colon == std::string::npos) return gold();
  if (kind == "eps") {
    const auto v = to_double(arg);
    if (!v) throw std::invalid_argument("eps: expects a number, got '" + arg + "'");
    return constant_eps(*v, "eps" + trim(arg));
  }
  if (kind == "drude") {
    const auto parts = split(arg, ',');
    if (parts.size() != 2) throw std::invalid_argument("drude: expects <omega_p>,<omega_tau>");
    const auto wp = to_double(parts[0]), wt = to_double(parts[1]);
    if (!wp || !wt) throw std::invalid_argument("drude: omega_p and omega_tau must be numbers");
    return drude(*wp, *wt, "drude(" + parts[0] + "," + parts[1] + ")");
  }
  if (kind == "lorentz") {
    std::filesystem::path p(trim(arg));
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    std::ifstream in(p);
    if (!in) throw std::invalid_argument("lorentz: cannot read " + p.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return lorentz_from_json(buf.str());
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("lorentz: " + p.string() + ": " + e.what());
    }
  }
  throw std::invalid_argument("unknown material '" + s + "' (drude:wp,wt | eps:x | ideal | gold | lorentz:file)");
}

ParseResult parse_config(const std::string& text, const std::string& base_dir) {
  namespace pt = boost::property_tree;
  ParseResult out;
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    out.errors.push_back("line " + std::to_string(e.line()) + ": " + e.message());
    return out;
  }

  SweepSpec spec;
  auto& errors = out.errors;
  const auto number = [&](const std::string& path, const std::string& raw, auto& target) {
    using T = std::remove_reference_t<decltype(target)>;
    std::optional<T> v;
    if constexpr (std::is_same_v<T, int>) {
      v = to_int(raw);
    } else {
      v = to_double(raw);
    }
    if (!v) {
      errors.push_back(path + ": expected a number, got '" + raw + "'");
    } else {
      target = *v;
    }
  };
  const auto flag = [&](const std::string& path, const std::string& raw, bool& target) {
    if (const auto v = to_bool(raw)) {
      target = *v;
    } else {
      errors.push_back(path + ": expected true or false, got '" + raw + "'");
    }
  };

  for (const auto& [section, body] : tree) {
    const auto known = schema().find(section);
    if (known == schema().end()) {
      errors.push_back(body.empty() ? section + ": key outside any section"
                                    : "[" + section + "]: unknown section");
      continue;
    }
    for (const auto& [key, node] : body) {
      const std::string path = section + "." + key;
      const std::string raw = node.data();
      if (!known->second.count(key)) {
        errors.push_back(path + ": unknown key");
        continue;
      }
      if (path == "geometry.a_min") number(path, raw, spec.a_min);
      if (path == "geometry.a_max") number(path, raw, spec.a_max);
      if (path == "geometry.points") number(path, raw, spec.points);
      if (path == "geometry.temperatures") {
        spec.temperatures.clear();
        for (const auto& t : split(raw, ',')) {
          double T = 0.0;
          number(path, t, T);
          spec.temperatures.push_back(T);
        }
      }
      if (section == "materials") {
        try {
          (key == "material1" ? spec.material1 : spec.material2) = parse_material(raw, base_dir);
        } catch (const std::exception& e) {
          errors.push_back(path + ": " + e.what());
        }
      }
      if (path == "quadrature.rel_tol") number(path, raw, spec.settings.rel_tol);
      if (path == "quadrature.u_min") number(path, raw, spec.settings.u_min);
      if (path == "quadrature.u_max") number(path, raw, spec.settings.u_max);
      if (path == "quadrature.y_max_ew") number(path, raw, spec.settings.y_max_ew);
      if (path == "quadrature.n_reflect_max") number(path, raw, spec.settings.n_reflect_max);
      if (path == "quadrature.bose_series_threshold") number(path, raw, spec.settings.bose_series_threshold);
      if (path == "quadrature.tail_check") flag(path, raw, spec.settings.tail_check);
      if (path == "output.normalization") {
        if (const auto n = parse_normalization(trim(raw))) {
          spec.normalization = *n;
        } else {
          errors.push_back(path + ": expected pascal, force_norm or ratio_T0, got '" + raw + "'");
        }
      }
      if (path == "output.asymptotics") flag(path, raw, spec.include_asymptotics);
      if (path == "output.oracle") flag(path, raw, spec.include_oracle);
      if (path == "output.path") spec.output_path = trim(raw);
    }
  }
  if (!errors.empty()) return out;

  errors = validate(spec);
  if (errors.empty()) out.spec = std::move(spec);
  return out;
}

std::vector<double> distance_grid(const SweepSpec& spec) {
  std::vector<double> a(spec.points);
  const double step = std::log(spec.a_max / spec.a_min) / (spec.points - 1);
  for (int i = 0; i < spec.points; ++i) a[i] = spec.a_min * std::exp(step * i);
  a.back() = spec.a_max;
  return a;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (const auto errs = validate(spec); !errs.empty()) throw std::invalid_argument(errs.front());
  const auto grid = distance_grid(spec);
  std::vector<SweepRow> rows;
  for (double T : spec.temperatures) {
    for (double a : grid) {
      SweepRow r;
      r.a_um = a;
      r.T_K = T;
      rows.push_back(r);
    }
  }

  const auto evaluate = [&](SweepRow& row) {
    try {
      row.forces = force_components(spec.material1, spec.material2, row.a_um, row.T_K, spec.settings);
      if (spec.include_asymptotics) {
        row.asymptotics = asymptotics_for(spec.material1, spec.material2, row.a_um, row.T_K);
      }
      if (spec.include_oracle) {
        row.oracle = thermal_force_oracle(spec.material1, spec.material2, row.a_um, row.T_K, spec.oracle_settings);
      }
    } catch (const IntegrationError& e) {
      row.ok = false;
      row.message = e.what();
    }
  };

  // Each worker takes the next unclaimed row; rows stay in grid order.
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n = std::min<std::size_t>(spec.threads > 0 ? spec.threads : hw, rows.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) evaluate(rows[i]);
  };
  if (n <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

std::string format_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec) {
  std::string out = "a_um,T_K,pw_s,pw_p,ew_s,ew_p,pw_total,ew_total,total,err_total";
  if (spec.include_asymptotics) out += ",asym_pw_s,asym_pw_p,asym_ew_s,asym_ew_p,asym_total";
  if (spec.include_oracle) out += ",oracle_total";
  out += ",status\n";

  const double nan = std::nan("");
  for (const auto& r : rows) {
    const auto norm = [&](double pa) { return r.ok ? normalize(pa, r.a_um, r.T_K, spec.normalization) : nan; };
    std::string line;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", r.a_um);
    line += buf;
    put(line, r.T_K);
    const auto& f = r.forces;
    for (double v : {f.pw_s, f.pw_p, f.ew_s, f.ew_p, f.pw_total(), f.ew_total(), f.total(), f.err_total()}) {
      put(line, norm(v));
    }
    if (spec.include_asymptotics) {
      const auto& s = r.asymptotics;
      for (const auto* e : {&s.pw_s, &s.pw_p, &s.ew_s, &s.ew_p}) {
        put(line, *e && (*e)->valid ? norm((*e)->value) : nan);
      }
      const auto t = s.total();
      put(line, t ? norm(*t) : nan);
    }
    if (spec.include_oracle) put(line, r.oracle ? norm(*r.oracle) : nan);
    line += r.ok ? ",ok\n" : ",integration_error\n";
    out += line;
  }
  return out;
}

void emit_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec, const std::string& path) {
  const std::string doc = format_csv(rows, spec);
  if (path == "-") {
    std::cout.write(doc.data(), static_cast<std::streamsize>(doc.size()));
    std::cout.flush();
    if (!std::cout) throw OutputError("cannot write to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open " + path + " for writing");
  out.write(doc.data(), static_cast<std::streamsize>(doc.size()));
  out.close();
  if (!out) throw OutputError("write to " + path + " failed");
}

}  // namespace casimir
