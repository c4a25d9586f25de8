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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axc/axion.hpp"
#include "axc/detector.hpp"

namespace axc {

/// User-facing inputs. Every field is optional so the precedence chain
/// (built-in defaults < config file < command-line flags) stays explicit.
struct Settings {
  std::optional<Quantity> m_a;       // eV
  std::optional<Quantity> rho_dm;    // eV^4
  std::optional<double> v_a;
  std::optional<double> theta;
  std::optional<Quantity> omega;     // eV; unset means exact resonance
  std::optional<Quantity> duration;  // 1/eV
  std::optional<Quantity> radius;    // 1/eV
  std::optional<Quantity> lambda;    // 1/eV^2
  std::optional<double> v_det;       // detector speed along the mode momentum
  std::optional<double> gamma;       // alternative to v_det

  /// Overlay another settings object: present fields in `higher` win.
  void merge_from(const Settings& higher);
};

/// Parses "value [unit]" with the unit suffixes eV, GeV, s, cm, GeV/cm3.
/// A bare number is read in natural units (eV to the expected power).
/// `key` is used in diagnostics only.
Quantity parse_quantity(const std::string& text, int expected_dim,
                        const std::string& key);

double parse_double(const std::string& text, const std::string& key);

/// Flat `key = value` file, '#' comments. Unknown keys, empty values and
/// malformed lines raise ConfigError naming the file, line and key.
Settings parse_config_file(const std::string& path);

/// Applies one key/value pair (same key set as the config file).
void apply_key(Settings& s, const std::string& key, const std::string& value);

/// The full key list, in canonical order.
const std::vector<std::string>& settings_keys();

struct PhysicsInputs {
  AxionBackground background;
  DetectorConfig detector;
  bool omega_defaulted = false;
};

/// Fills in defaults (m_a = 1e-6 eV, rho_DM = 0.3 GeV/cm3, v_a = 5e-4,
/// theta = 0, T = 1 s, R = 0, lambda = 1/eV^2, resting detector) and builds
/// the validated domain objects. An unset energy gap is tuned to the exact
/// Doppler-shifted resonance.
PhysicsInputs materialize(const Settings& s);

}  // namespace axc
