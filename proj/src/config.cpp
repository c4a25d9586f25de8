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

#include "axc/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace axc {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& text,
                            const std::string& why) {
  throw ConfigError("key '" + key + "': cannot parse value '" + text + "' (" +
                    why + ")");
}

}  // namespace

void Settings::merge_from(const Settings& higher) {
  if (higher.m_a) m_a = higher.m_a;
  if (higher.rho_dm) rho_dm = higher.rho_dm;
  if (higher.v_a) v_a = higher.v_a;
  if (higher.theta) theta = higher.theta;
  if (higher.omega) omega = higher.omega;
  if (higher.duration) duration = higher.duration;
  if (higher.radius) radius = higher.radius;
  if (higher.lambda) lambda = higher.lambda;
  if (higher.v_det) v_det = higher.v_det;
  if (higher.gamma) gamma = higher.gamma;
}

double parse_double(const std::string& text, const std::string& key) {
  const std::string t = trim(text);
  if (t.empty()) bad_value(key, text, "empty");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || trim(end).size() != 0) {
    bad_value(key, text, "not a number");
  }
  return v;
}

Quantity parse_quantity(const std::string& text, int expected_dim,
                        const std::string& key) {
  const std::string t = trim(text);
  if (t.empty()) bad_value(key, text, "empty");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str()) bad_value(key, text, "no numeric value");
  const std::string suffix = trim(end);

  Quantity q{0.0, 0};
  try {
    if (suffix.empty()) {
      q = Quantity(v, expected_dim);
    } else if (suffix == "eV") {
      q = ev(v);
    } else if (suffix == "GeV") {
      q = ev(v * 1e9);
    } else if (suffix == "s") {
      q = seconds_to_inverse_ev(v);
    } else if (suffix == "cm") {
      q = length_cm_to_inverse_ev(v);
    } else if (suffix == "GeV/cm3") {
      q = density_gev_cm3_to_ev4(v);
    } else {
      bad_value(key, text, "unknown unit suffix '" + suffix + "'");
    }
  } catch (const Error& e) {
    bad_value(key, text, e.what());
  }
  if (q.dim != expected_dim) {
    std::ostringstream msg;
    msg << "key '" << key << "': value '" << text << "' has dimension eV^"
        << q.dim << " but eV^" << expected_dim << " is required";
    throw ConfigError(msg.str());
  }
  return q;
}

const std::vector<std::string>& settings_keys() {
  static const std::vector<std::string> keys = {
      "m_a", "rho_DM", "v_a", "theta", "Omega", "T", "R", "lambda", "v_det",
      "gamma"};
  return keys;
}

void apply_key(Settings& s, const std::string& key, const std::string& value) {
  if (key == "m_a") {
    s.m_a = parse_quantity(value, 1, key);
  } else if (key == "rho_DM") {
    s.rho_dm = parse_quantity(value, 4, key);
  } else if (key == "v_a") {
    s.v_a = parse_double(value, key);
  } else if (key == "theta") {
    s.theta = parse_double(value, key);
  } else if (key == "Omega") {
    s.omega = parse_quantity(value, 1, key);
  } else if (key == "T") {
    s.duration = parse_quantity(value, -1, key);
  } else if (key == "R") {
    s.radius = parse_quantity(value, -1, key);
  } else if (key == "lambda") {
    s.lambda = parse_quantity(value, -2, key);
  } else if (key == "v_det") {
    s.v_det = parse_double(value, key);
  } else if (key == "gamma") {
    s.gamma = parse_double(value, key);
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

Settings parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  Settings s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << path << ":" << lineno << ": expected 'key = value'";
      throw ConfigError(msg.str());
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    try {
      apply_key(s, key, value);  // duplicate keys: last one wins
    } catch (const ConfigError& e) {
      std::ostringstream msg;
      msg << path << ":" << lineno << ": " << e.what();
      throw ConfigError(msg.str());
    }
  }
  return s;
}

PhysicsInputs materialize(const Settings& s) {
  const Quantity m_a = s.m_a.value_or(ev(1e-6));
  const Quantity rho = s.rho_dm.value_or(density_gev_cm3_to_ev4(0.3));
  const double v_a = s.v_a.value_or(0.5e-3);
  const double theta = s.theta.value_or(0.0);
  AxionBackground bg(m_a, rho, v_a, theta);

  if (s.v_det && s.gamma) {
    throw ConfigError("specify either v_det or gamma, not both");
  }
  double v_det = s.v_det.value_or(0.0);
  if (s.gamma) v_det = speed_from_gamma(*s.gamma);
  const Vec3 velocity = kZAxis * v_det;

  const Quantity duration = s.duration.value_or(seconds_to_inverse_ev(1.0));
  const Quantity radius = s.radius.value_or(inverse_ev(0.0));
  const Quantity lambda = s.lambda.value_or(Quantity(1.0, -2));

  bool omega_defaulted = false;
  Quantity omega{0.0, 1};
  if (s.omega) {
    omega = *s.omega;
  } else {
    // Exact resonance: energy gap equal to the Doppler-shifted mode frequency.
    const CoherentAmplitude amp = coherent_amplitude(bg);
    const double gamma = lorentz_gamma(v_det);
    omega = ev(gamma * (amp.omega_p_ev - amp.momentum_ev.dot(velocity)));
    omega_defaulted = true;
  }

  return {bg, DetectorConfig(omega, duration, radius, velocity, lambda),
          omega_defaulted};
}

}  // namespace axc
