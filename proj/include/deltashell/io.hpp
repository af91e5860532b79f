#pragma once

// Config parsing and the serialization used by the CLI.  Output is
// deterministic: floats are printed with 17 significant digits in CSV,
// JSON objects keep alphabetically sorted keys, and column order is fixed.

#include <complex>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doubleshell.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "smatrix.hpp"
#include "spectral.hpp"

namespace deltashell {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline ShellConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("radii") || !j.contains("alphas"))
    throw ConfigError("config must be an object with \"radii\" and \"alphas\" arrays");
  try {
    return validate(j.at("radii").get<std::vector<double>>(),
                    j.at("alphas").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

inline ShellConfig parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  return config_from_json(j);
}

inline nlohmann::json config_to_json(const ShellConfig& cfg) {
  return nlohmann::json{{"radii", cfg.radii}, {"alphas", cfg.alphas}};
}

inline nlohmann::json to_json(const ThresholdReport& rep) {
  nlohmann::json j{{"c0", rep.c0},
                   {"gamma0", rep.gamma0},
                   {"c2", rep.c2},
                   {"regime", to_string(rep.regime)}};
  if (rep.scattering_length) j["scattering_length"] = *rep.scattering_length;
  return j;
}

inline nlohmann::json to_json(const ZeroEnergySolution& z) {
  return nlohmann::json{{"a", z.a}, {"b", z.b}, {"c", z.c}, {"d", z.d}, {"e", z.e}};
}

inline nlohmann::json to_json(const std::vector<BoundState>& states) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BoundState& s : states)
    arr.push_back({{"ell", s.ell},
                   {"kappa", s.kappa},
                   {"energy", s.energy},
                   {"det_residual", s.det_residual}});
  return arr;
}

inline nlohmann::json to_json(std::complex<double> z) {
  return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

// ---- sweep grids ----

enum class Spacing { Linear, Log };

struct SweepSpec {
  double k_min = 0.0;
  double k_max = 0.0;
  int points = 0;
  Spacing spacing = Spacing::Linear;
};

inline std::vector<double> make_grid(const SweepSpec& spec) {
  if (!(spec.k_min > 0.0)) throw ConfigError("sweep: kmin must be positive");
  if (!(spec.k_min < spec.k_max)) throw ConfigError("sweep: kmin must be below kmax");
  if (spec.points < 2) throw ConfigError("sweep: need at least 2 points");
  std::vector<double> grid(spec.points);
  if (spec.spacing == Spacing::Log) {
    const double ratio = std::log(spec.k_max / spec.k_min);
    for (int i = 0; i < spec.points; ++i)
      grid[i] = spec.k_min * std::exp(ratio * double(i) / double(spec.points - 1));
  } else {
    const double step = (spec.k_max - spec.k_min) / double(spec.points - 1);
    for (int i = 0; i < spec.points; ++i) grid[i] = spec.k_min + step * double(i);
  }
  grid.front() = spec.k_min;
  grid.back() = spec.k_max;
  return grid;
}

// ---- CSV writers ----

inline void write_phase_curve_csv(std::ostream& os, const ShellConfig& cfg,
                                  const PhaseCurve& pc) {
  os << "k,delta,re_S,im_S,abs_det\n";
  for (std::size_t i = 0; i < pc.k_grid.size(); ++i) {
    const ChannelResult r = s_coefficient(cfg, pc.ell, pc.k_grid[i]);
    os << format_double(pc.k_grid[i]) << ',' << format_double(pc.deltas[i]) << ','
       << format_double(r.s_value.real()) << ',' << format_double(r.s_value.imag()) << ','
       << format_double(std::abs(r.det_plus)) << '\n';
  }
}

inline void write_cross_section_csv(std::ostream& os, const std::vector<CrossSection>& rows,
                                    int ell_max) {
  os << "k,sigma_total";
  for (int l = 0; l <= ell_max; ++l) os << ",sigma_l" << l;
  os << '\n';
  for (const CrossSection& cs : rows) {
    os << format_double(cs.k) << ',' << format_double(cs.total);
    for (double term : cs.terms) os << ',' << format_double(term);
    os << '\n';
  }
}

}  // namespace deltashell
