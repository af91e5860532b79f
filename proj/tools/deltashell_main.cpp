// deltashell: partial-wave scattering data for concentric delta-shell
// potentials.  Subcommands sweep phase shifts and cross sections, report
// threshold data for the double-shell model, locate bound states, and
// cross-check the independent evaluation routes.
//
// Exit status: 0 success, 1 numerical error (or failed oracle comparison),
// 2 usage/config error.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deltashell/deltashell.hpp"

namespace ds = deltashell;
using nlohmann::json;

namespace {

ds::ShellConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ds::ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ds::parse_config(buf.str());
}

// all output goes through a string so a run is written atomically either to
// stdout or to --out
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ds::ConfigError("cannot open output file: " + out_path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

constexpr double kOracleGate = 1e-8;    // S-route pairwise deviation gate
constexpr double kNumerovGate = 1e-4;   // Numerov route works at lower accuracy

int run_oracle_compare(const ds::ShellConfig& cfg, int ell, double k, bool with_numerov,
                       long steps, const std::string& out_path) {
  const std::complex<double> s_det = ds::s_coefficient(cfg, ell, k).s_value;
  const std::complex<double> s_dir = ds::s_coefficient_direct(cfg, ell, k).s_value;
  const std::complex<double> s_tm = ds::transfer_matrix_s(cfg, ell, k);

  const double dd = std::abs(s_det - s_dir);
  const double dt = std::abs(s_det - s_tm);
  const double td = std::abs(s_dir - s_tm);
  const double max_dev = std::max({dd, dt, td});

  json j{{"ell", ell},
         {"k", k},
         {"s_det_ratio", ds::to_json(s_det)},
         {"s_direct", ds::to_json(s_dir)},
         {"s_transfer", ds::to_json(s_tm)},
         {"deviations",
          {{"det_vs_direct", dd}, {"det_vs_transfer", dt}, {"direct_vs_transfer", td}}},
         {"max_s_deviation", max_dev}};

  bool pass = max_dev <= kOracleGate;
  if (with_numerov) {
    const double r_max = cfg.empty() ? 10.0 : 2.5 * cfg.outer_radius();
    const double analytic = ds::s_coefficient(cfg, ell, k).delta;
    const double numer = ds::numerov_phase_shift(cfg, ell, k, r_max, steps);
    double diff = std::fmod(numer - analytic, std::numbers::pi);
    if (diff > 0.5 * std::numbers::pi) diff -= std::numbers::pi;
    if (diff < -0.5 * std::numbers::pi) diff += std::numbers::pi;
    j["numerov"] = {{"delta_mod_pi", numer},
                    {"delta_analytic", analytic},
                    {"deviation_mod_pi", std::abs(diff)},
                    {"r_max", r_max},
                    {"steps", steps}};
    pass = pass && std::abs(diff) <= kNumerovGate;
  }
  j["pass"] = pass;
  emit(dump(j), out_path);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial-wave scattering for concentric delta-shell potentials"};
  app.require_subcommand(1);
  app.fallthrough();  // --out/--threads may follow the subcommand

  std::string config_path, out_path;
  unsigned threads = 1;
  app.add_option("--threads", threads, "parallel sweep evaluation threads")->capture_default_str();
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  // phase-shift
  auto* ps = app.add_subcommand("phase-shift", "CSV sweep of delta_l(k) and S_l(k)");
  int ps_ell = 0, ps_points = 0;
  double ps_kmin = 0, ps_kmax = 0;
  bool ps_log = false;
  ps->add_option("--config", config_path, "shell config JSON file")->required();
  ps->add_option("--ell", ps_ell, "channel")->required();
  ps->add_option("--kmin", ps_kmin)->required();
  ps->add_option("--kmax", ps_kmax)->required();
  ps->add_option("--points", ps_points)->required();
  ps->add_flag("--log", ps_log, "logarithmic grid spacing");

  // cross-section
  auto* cs = app.add_subcommand("cross-section", "CSV sweep of the total cross section");
  int cs_points = 0, cs_lmax = -1;
  double cs_kmin = 0, cs_kmax = 0;
  bool cs_log = false;
  cs->add_option("--config", config_path)->required();
  cs->add_option("--kmin", cs_kmin)->required();
  cs->add_option("--kmax", cs_kmax)->required();
  cs->add_option("--points", cs_points)->required();
  cs->add_option("--lmax", cs_lmax, "channel cutoff (default: ceil(k_max R_N) + 8, capped at 64)");
  cs->add_flag("--log", cs_log, "logarithmic grid spacing");

  // scattering-length
  auto* sl = app.add_subcommand("scattering-length", "threshold report for a double shell");
  sl->add_option("--config", config_path)->required();

  // threshold
  auto* th = app.add_subcommand("threshold", "critical coupling for fixed R1, R2, theta1");
  double th_r1 = 0, th_r2 = 0, th_t1 = 0;
  th->add_option("--R1", th_r1)->required();
  th->add_option("--R2", th_r2)->required();
  th->add_option("--theta1", th_t1)->required();

  // bound-states
  auto* bs = app.add_subcommand("bound-states", "negative spectrum per channel");
  int bs_ell = 0, bs_grid = 512;
  double bs_kappa_max = 0;
  bs->add_option("--config", config_path)->required();
  bs->add_option("--ell", bs_ell)->required();
  bs->add_option("--kappa-max", bs_kappa_max)->required();
  bs->add_option("--grid-points", bs_grid, "scan resolution")->capture_default_str();

  // zero-energy
  auto* ze = app.add_subcommand("zero-energy", "piecewise-harmonic zero-energy solution");
  ze->add_option("--config", config_path)->required();

  // oracle-compare
  auto* oc = app.add_subcommand("oracle-compare", "cross-check the evaluation routes");
  int oc_ell = 0;
  double oc_k = 0;
  bool oc_numerov = false;
  long oc_steps = 100000;
  oc->add_option("--config", config_path)->required();
  oc->add_option("--ell", oc_ell)->required();
  oc->add_option("--k", oc_k)->required();
  oc->add_flag("--numerov", oc_numerov, "include the ODE-integration route");
  oc->add_option("--steps", oc_steps, "Numerov steps")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ps->parsed()) {
      const ds::ShellConfig cfg = load_config(config_path);
      const auto grid =
          ds::make_grid({ps_kmin, ps_kmax, ps_points, ps_log ? ds::Spacing::Log : ds::Spacing::Linear});
      const ds::PhaseCurve pc = ds::phase_curve(cfg, ps_ell, grid, threads);
      std::ostringstream os;
      ds::write_phase_curve_csv(os, cfg, pc);
      emit(os.str(), out_path);
    } else if (cs->parsed()) {
      const ds::ShellConfig cfg = load_config(config_path);
      const auto grid =
          ds::make_grid({cs_kmin, cs_kmax, cs_points, cs_log ? ds::Spacing::Log : ds::Spacing::Linear});
      int lmax = cs_lmax;
      if (lmax < 0) lmax = std::min(ds::default_ell_max(cfg, cs_kmax), ds::kMaxBesselOrder);
      std::vector<ds::CrossSection> rows(grid.size());
      ds::parallel_for(grid.size(), threads,
                       [&](std::size_t i) { rows[i] = ds::total_cross_section(cfg, grid[i], lmax); });
      std::ostringstream os;
      ds::write_cross_section_csv(os, rows, lmax);
      emit(os.str(), out_path);
    } else if (sl->parsed()) {
      const ds::ShellConfig cfg = load_config(config_path);
      const auto rep = ds::threshold_constants(ds::DoubleShellConfig::from(cfg));
      emit(dump(ds::to_json(rep)), out_path);
    } else if (th->parsed()) {
      if (!(th_r1 > 0.0) || !(th_r2 > th_r1))
        throw ds::ConfigError("threshold requires 0 < R1 < R2");
      json j{{"R1", th_r1}, {"R2", th_r2}, {"theta1", th_t1}};
      const auto t2 = ds::critical_theta2(th_r1, th_r2, th_t1);
      if (t2) {
        const auto rep = ds::threshold_constants(ds::make_double_shell(th_r1, th_r2, th_t1, *t2));
        j["theta2_critical"] = *t2;
        j["C2"] = rep.c2;
        j["Gamma0"] = rep.gamma0;
        j["regime_at_critical"] = ds::to_string(rep.regime);
      } else {
        j["theta2_critical"] = nullptr;
      }
      emit(dump(j), out_path);
    } else if (bs->parsed()) {
      const ds::ShellConfig cfg = load_config(config_path);
      const auto states = ds::find_bound_states(cfg, bs_ell, bs_kappa_max, bs_grid);
      emit(dump(ds::to_json(states)), out_path);
    } else if (ze->parsed()) {
      const ds::ShellConfig cfg = load_config(config_path);
      json j;
      if (cfg.size() == 2) {
        const auto sol = ds::zero_energy_solution(ds::DoubleShellConfig::from(cfg), 1.0);
        j = ds::to_json(sol);
      } else {
        const auto ext = ds::zero_energy_exterior(cfg);
        j = json{{"d", ext.d}, {"e", ext.e}};
      }
      emit(dump(j), out_path);
    } else if (oc->parsed()) {
      const ds::ShellConfig cfg = load_config(config_path);
      return run_oracle_compare(cfg, oc_ell, oc_k, oc_numerov, oc_steps, out_path);
    }
  } catch (const ds::Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ds::ErrorKind::Config ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
