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

#include <iosfwd>
#include <string>
#include <vector>

#include "axc/coherence.hpp"
#include "axc/config.hpp"

namespace axc {

enum class SweepParameter {
  kAxionMass,
  kEnergyGap,
  kDuration,
  kLorentzGamma,
  kPhase,
  kVelocity,  // axion speed v_a
};

SweepParameter parse_sweep_parameter(const std::string& name);
const char* sweep_parameter_name(SweepParameter p);
/// Mass dimension of the swept quantity, for unit-suffix parsing of the grid
/// endpoints (0 for the dimensionless parameters).
int sweep_parameter_dim(SweepParameter p);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::kEnergyGap;
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
  bool log_scale = false;
};

/// Throws ConfigError unless points >= 2, start < stop, and (for log scale)
/// start > 0.
void validate(const SweepSpec& spec);

struct SweepRow {
  double value;
  CoherenceResult result;
};

/// Evaluates the coherence measure over the grid, ascending. When the energy
/// gap comes from the resonance default it is frozen at the base
/// configuration's value, so sweeps move the system through the resonance
/// instead of retuning it at every point.
std::vector<SweepRow> run_sweep(const Settings& base, const SweepSpec& spec);

/// CSV with a fixed header and 17-significant-digit values; byte-identical
/// across runs of the same build and inputs.
void write_sweep_csv(std::ostream& os, SweepParameter p,
                     const std::vector<SweepRow>& rows);

}  // namespace axc
