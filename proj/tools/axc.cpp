// Copyright 2026 The axc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "axc/coherence.hpp"
#include "axc/config.hpp"
#include "axc/report.hpp"
#include "axc/sweep.hpp"
#include "axc/verify.hpp"
#include "axc/version.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 verification/numerical failure, 2 input error,
// 3 physics-regime error.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitRegime = 3;

void add_physics_options(CLI::App* cmd, std::map<std::string, std::string>& store) {
  static const std::map<std::string, std::string> help = {
      {"m_a", "axion mass (e.g. '1e-6 eV')"},
      {"rho_DM", "local dark-matter density (e.g. '0.3 GeV/cm3')"},
      {"v_a", "axion speed as a fraction of c"},
      {"theta", "initial phase of the oscillation, radians"},
      {"Omega", "detector energy gap (e.g. '1e-6 eV'); default: exact resonance"},
      {"T", "interaction duration (e.g. '1 s', or bare value in 1/eV)"},
      {"R", "detector smearing radius (e.g. '1 cm'; 0 = point detector)"},
      {"lambda", "detector coupling (bare value in 1/eV^2)"},
      {"v_det", "detector speed along the mode momentum"},
      {"gamma", "detector Lorentz factor (alternative to v_det)"},
  };
  for (const auto& key : axc::settings_keys()) {
    cmd->add_option("--" + key, store[key], help.at(key));
  }
}

axc::Settings collect_settings(const std::string& config_flag,
                               const std::map<std::string, std::string>& flags) {
  axc::Settings s;
  std::string path = config_flag;
  if (path.empty()) {
    if (const char* env = std::getenv("AXC_CONFIG")) path = env;
  }
  if (!path.empty()) s = axc::parse_config_file(path);
  axc::Settings overlay;
  for (const auto& [key, value] : flags) {
    if (!value.empty()) axc::apply_key(overlay, key, value);
  }
  s.merge_from(overlay);
  return s;
}

json units_for_background() {
  return json{{"m_a", "eV"},         {"rho_DM", "eV^4"},
              {"rho_DM_lab", "GeV/cm^3"}, {"v_a", "c"},
              {"amplitude", "eV"},   {"amplitude_GeV", "GeV"},
              {"omega_p", "eV"},     {"momentum", "eV"},
              {"occupation", "1"},   {"de_broglie_cm", "cm"},
              {"de_broglie_nat", "1/eV"}};
}

int cmd_background(const axc::Settings& s, bool as_json, std::ostream& os) {
  const axc::PhysicsInputs in = axc::materialize(s);
  const axc::AxionBackground& bg = in.background;
  const axc::Quantity amplitude = axc::axion_amplitude(bg);
  const axc::Quantity rho_back = axc::axion_energy_density(amplitude, bg.mass);
  const double rho_lab = axc::density_ev4_to_gev_cm3(bg.rho_dm);
  // occupation and de Broglie wavelength diverge for a resting background
  const bool moving = bg.speed > 0.0;
  const double occupation = moving ? axc::occupation_number(bg) : 0.0;
  const double de_broglie_cm = moving ? axc::de_broglie_wavelength_cm(bg) : 0.0;
  const double de_broglie_nat = moving ? 2.0 * M_PI / bg.momentum().value : 0.0;

  if (as_json) {
    json outputs{{"amplitude", amplitude.value},
                 {"amplitude_GeV", amplitude.value * 1e-9},
                 {"rho_roundtrip", rho_back.value},
                 {"rho_DM_lab", rho_lab},
                 {"omega_p", bg.energy().value},
                 {"momentum", bg.momentum().value}};
    if (moving) {
      outputs["occupation"] = occupation;
      outputs["de_broglie_cm"] = de_broglie_cm;
      outputs["de_broglie_nat"] = de_broglie_nat;
    }
    os << axc::make_run_record("background", axc::inputs_to_json(in),
                               std::move(outputs), units_for_background())
              .dump(2)
       << "\n";
    return kExitOk;
  }

  os << "axion dark-matter background\n";
  char line[160];
  std::snprintf(line, sizeof(line), "  m_a          = %.6g eV\n", bg.mass.value);
  os << line;
  std::snprintf(line, sizeof(line), "  rho_DM       = %.6g GeV/cm3 (%.6g eV^4)\n",
                rho_lab, bg.rho_dm.value);
  os << line;
  std::snprintf(line, sizeof(line), "  v_a          = %.6g\n", bg.speed);
  os << line;
  std::snprintf(line, sizeof(line), "  amplitude A  = %.6g eV (%.6g GeV)\n",
                amplitude.value, amplitude.value * 1e-9);
  os << line;
  std::snprintf(line, sizeof(line),
                "  rho(A, m_a)  = %.6g eV^4 (round trip of rho_DM)\n",
                rho_back.value);
  os << line;
  std::snprintf(line, sizeof(line), "  omega_p      = %.9g eV, |p| = %.6g eV\n",
                bg.energy().value, bg.momentum().value);
  os << line;
  if (moving) {
    std::snprintf(line, sizeof(line), "  occupation   = %.6g\n", occupation);
    os << line;
    std::snprintf(line, sizeof(line), "  de Broglie   = %.6g cm (%.6g 1/eV)\n",
                  de_broglie_cm, de_broglie_nat);
    os << line;
  } else {
    os << "  occupation   = undefined (v_a = 0)\n";
    os << "  de Broglie   = undefined (v_a = 0)\n";
  }
  return kExitOk;
}

json units_for_coherence() {
  return json{{"C", "1"},           {"C_max", "1"},
              {"C_min", "1"},       {"logC", "1"},
              {"theta", "rad"},     {"omega_tilde", "eV"},
              {"exponent_res", "1"}, {"exponent_off", "1"},
              {"kappa", "1"},       {"estimate", "1"},
              {"electron_C", "1"},  {"T_obs", "s"}};
}

int cmd_coherence(const axc::Settings& s, bool electron, bool as_json,
                  std::ostream& os) {
  const axc::PhysicsInputs in = axc::materialize(s);
  const axc::CoherentAmplitude amp = axc::coherent_amplitude(in.background);
  const axc::ResponsePair resp = axc::response_analytic(in.detector, amp);
  const axc::ReducedState reduced =
      axc::reduced_density_matrix(in.detector, amp, resp);
  if (reduced.perturbative_warning) {
    std::fprintf(stderr,
                 "warning: expansion parameter lambda|tr(Phi sigma)| = %.3g "
                 "exceeds 0.1; leading order is marginal\n",
                 reduced.kappa);
  }
  const axc::CoherenceResult ex = axc::coherence_exact(in.detector, amp);
  const double x = 0.5 * (ex.exponent_resonant - ex.exponent_off);
  std::optional<axc::CoherenceResult> lt;
  if (x >= 10.0) lt = axc::coherence_longtime(in.detector, amp);

  // The headline formula's resonant working point is Omega = m_a gamma (it
  // drops the v_a^2 kinetic shift). When the gap was defaulted, evaluate the
  // estimate at its own working point instead of inheriting the exact one.
  double estimate = 0.0;
  if (in.omega_defaulted) {
    const axc::DetectorConfig est_cfg(
        axc::ev(in.background.mass.value * in.detector.lorentz_gamma()),
        in.detector.duration, in.detector.smearing_radius, in.detector.velocity,
        in.detector.coupling);
    estimate = axc::coherence_estimate(est_cfg, in.background);
  } else {
    estimate = axc::coherence_estimate(in.detector, in.background);
  }

  std::optional<double> electron_c;
  double t_obs = 0.0;
  if (electron) {
    t_obs = axc::inverse_ev_to_seconds(in.detector.duration);
    electron_c = axc::electron_detector_coherence(
        t_obs, in.detector.lorentz_gamma(),
        axc::density_ev4_to_gev_cm3(in.background.rho_dm));
  }

  if (as_json) {
    json outputs{{"C", ex.c},
                 {"C_max", ex.c_max},
                 {"C_min", ex.c_min},
                 {"logC", ex.log_c},
                 {"theta", ex.theta},
                 {"omega_tilde", ex.omega_tilde},
                 {"exponent_res", ex.exponent_resonant},
                 {"exponent_off", ex.exponent_off},
                 {"X", x},
                 {"kappa", reduced.kappa},
                 {"estimate", estimate}};
    if (lt) outputs["C_longtime"] = lt->c;
    if (electron_c) {
      outputs["electron_C"] = *electron_c;
      outputs["T_obs"] = t_obs;
    }
    os << axc::make_run_record("coherence", axc::inputs_to_json(in),
                               std::move(outputs), units_for_coherence())
              .dump(2)
       << "\n";
    return kExitOk;
  }

  char line[200];
  os << "harvested coherence (l1 measure)\n";
  std::snprintf(line, sizeof(line), "  omega_tilde  = %.9g eV%s\n",
                ex.omega_tilde,
                in.omega_defaulted ? " (energy gap tuned to resonance)" : "");
  os << line;
  std::snprintf(line, sizeof(line), "  C(theta)     = %.6g (theta = %.6g)\n",
                ex.c, ex.theta);
  os << line;
  std::snprintf(line, sizeof(line), "  C_max        = %.6g (theta = 0)\n",
                ex.c_max);
  os << line;
  std::snprintf(line, sizeof(line), "  C_min        = %.6g (theta = pi/2)\n",
                ex.c_min);
  os << line;
  std::snprintf(line, sizeof(line), "  log C        = %.6g\n", ex.log_c);
  os << line;
  std::snprintf(line, sizeof(line), "  exponents    = %.6g (res), %.6g (off)\n",
                ex.exponent_resonant, ex.exponent_off);
  os << line;
  if (lt) {
    std::snprintf(line, sizeof(line),
                  "  long-T value = %.6g (X = %.6g >= 10)\n", lt->c, x);
    os << line;
  }
  std::snprintf(line, sizeof(line), "  kappa        = %.6g (expansion parameter)\n",
                reduced.kappa);
  os << line;
  std::snprintf(line, sizeof(line),
                "  estimate     = %.6g (resonant headline formula)\n", estimate);
  os << line;
  if (electron_c) {
    std::snprintf(line, sizeof(line),
                  "  electron detector: C = %.6g (T = %.6g s, gamma = %.6g)\n",
                  *electron_c, t_obs, in.detector.lorentz_gamma());
    os << line;
  }
  return kExitOk;
}

int cmd_sweep(const axc::Settings& s, const axc::SweepSpec& spec, bool as_json,
              std::ostream& os) {
  const auto rows = axc::run_sweep(s, spec);
  if (as_json) {
    json jrows = json::array();
    for (const auto& row : rows) {
      jrows.push_back({{"value", row.value},
                       {"C", row.result.c},
                       {"C_max", row.result.c_max},
                       {"C_min", row.result.c_min},
                       {"logC", row.result.log_c},
                       {"omega_tilde", row.result.omega_tilde},
                       {"exponent_res", row.result.exponent_resonant},
                       {"exponent_off", row.result.exponent_off}});
    }
    json inputs{{"parameter", axc::sweep_parameter_name(spec.parameter)},
                {"start", spec.start},
                {"stop", spec.stop},
                {"points", spec.points},
                {"log", spec.log_scale}};
    json units{{"C", "1"},  {"logC", "1"},       {"omega_tilde", "eV"},
               {"value", "natural units"}, {"exponent_res", "1"}, {"exponent_off", "1"}};
    os << axc::make_run_record("sweep", std::move(inputs), {{"rows", jrows}},
                               std::move(units))
              .dump(2)
       << "\n";
    return kExitOk;
  }
  axc::write_sweep_csv(os, spec.parameter, rows);
  return kExitOk;
}

int cmd_verify(const axc::VerifyOptions& opts, bool as_json, std::ostream& os) {
  const auto results = axc::run_verification(opts);
  bool all_passed = true;
  if (as_json) {
    json suites = json::array();
    for (const auto& r : results) {
      all_passed = all_passed && r.passed;
      suites.push_back({{"name", r.name},
                        {"checked", r.checked},
                        {"skipped", r.skipped},
                        {"max_deviation", r.max_deviation},
                        {"tolerance", r.tolerance},
                        {"passed", r.passed},
                        {"worst", r.worst}});
    }
    json inputs{{"seed", opts.seed}, {"tuples", opts.tuples}};
    os << axc::make_run_record("verify", std::move(inputs),
                               {{"suites", suites}, {"passed", all_passed}},
                               json::object())
              .dump(2)
       << "\n";
    return all_passed ? kExitOk : kExitVerifyFailed;
  }
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    char line[256];
    std::snprintf(line, sizeof(line),
                  "%-32s checked %6zu  skipped %6zu  max dev %.3e  tol %.0e  %s\n",
                  r.name.c_str(), r.checked, r.skipped, r.max_deviation,
                  r.tolerance, r.passed ? "PASS" : "FAIL");
    os << line;
    if (!r.passed) {
      os << "    worst tuple: " << r.worst << "\n";
    }
  }
  os << (all_passed ? "verification passed" : "verification FAILED") << "\n";
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence harvested by an inertial two-level detector from the "
               "coherent axion dark-matter background"};
  app.set_version_flag("--version", axc::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  bool as_json = false;
  std::string out_path;
  app.add_option("--config", config_path,
                 "configuration file (overrides the AXC_CONFIG env var)");
  app.add_flag("--json", as_json, "machine-readable JSON run record");
  app.add_option("--out", out_path, "write the report to a file");

  std::map<std::string, std::string> bg_flags, coh_flags, sweep_flags;

  CLI::App* bg = app.add_subcommand(
      "background", "amplitude, occupation number and de Broglie wavelength");
  bg->fallthrough();
  add_physics_options(bg, bg_flags);

  CLI::App* coh = app.add_subcommand(
      "coherence", "harvested coherence, its extremes, limits and estimates");
  coh->fallthrough();
  add_physics_options(coh, coh_flags);
  bool electron = false;
  coh->add_flag("--electron", electron,
                "include the electron two-level detector scenario");

  CLI::App* sw = app.add_subcommand("sweep", "parameter sweep as CSV or JSON");
  sw->fallthrough();
  add_physics_options(sw, sweep_flags);
  std::string param_name, start_s, stop_s;
  int points = 0;
  bool log_scale = false;
  sw->add_option("--param", param_name,
                 "axion_mass | energy_gap | duration | lorentz_gamma | phase | "
                 "velocity")
      ->required();
  sw->add_option("--start", start_s, "grid start (unit suffixes allowed)")
      ->required();
  sw->add_option("--stop", stop_s, "grid stop")->required();
  sw->add_option("--points", points, "number of grid points (>= 2)")->required();
  sw->add_flag("--log", log_scale, "logarithmic grid");

  CLI::App* vf = app.add_subcommand(
      "verify", "run the quadrature and identity oracle suites");
  vf->fallthrough();
  axc::VerifyOptions vopts;
  vf->add_option("--tuples", vopts.tuples, "randomized tuples per suite");
  vf->add_option("--seed", vopts.seed, "random seed");
  vf->add_flag("--inject-fault-exponent-sign", vopts.fault_exponent_sign)
      ->group("");  // hidden: mutation hook for testing the oracle itself

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw axc::ConfigError("cannot open output file '" + out_path + "'");
      os = &file;
    }

    if (bg->parsed()) {
      return cmd_background(collect_settings(config_path, bg_flags), as_json, *os);
    }
    if (coh->parsed()) {
      return cmd_coherence(collect_settings(config_path, coh_flags), electron,
                           as_json, *os);
    }
    if (sw->parsed()) {
      const axc::Settings s = collect_settings(config_path, sweep_flags);
      axc::SweepSpec spec;
      spec.parameter = axc::parse_sweep_parameter(param_name);
      const int dim = axc::sweep_parameter_dim(spec.parameter);
      spec.start = dim == 0 ? axc::parse_double(start_s, "start")
                            : axc::parse_quantity(start_s, dim, "start").value;
      spec.stop = dim == 0 ? axc::parse_double(stop_s, "stop")
                           : axc::parse_quantity(stop_s, dim, "stop").value;
      spec.points = points;
      spec.log_scale = log_scale;
      return cmd_sweep(s, spec, as_json, *os);
    }
    if (vf->parsed()) {
      return cmd_verify(vopts, as_json, *os);
    }
    return kExitInput;
  } catch (const axc::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const axc::DimensionError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const axc::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const axc::RegimeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRegime;
  } catch (const axc::PerturbativityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRegime;
  } catch (const axc::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
