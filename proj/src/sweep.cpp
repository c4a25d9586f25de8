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

#include "axc/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace axc {

SweepParameter parse_sweep_parameter(const std::string& name) {
  if (name == "axion_mass") return SweepParameter::kAxionMass;
  if (name == "energy_gap") return SweepParameter::kEnergyGap;
  if (name == "duration") return SweepParameter::kDuration;
  if (name == "lorentz_gamma") return SweepParameter::kLorentzGamma;
  if (name == "phase") return SweepParameter::kPhase;
  if (name == "velocity") return SweepParameter::kVelocity;
  throw ConfigError(
      "unknown sweep parameter '" + name +
      "' (expected axion_mass, energy_gap, duration, lorentz_gamma, phase or "
      "velocity)");
}

const char* sweep_parameter_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::kAxionMass: return "axion_mass";
    case SweepParameter::kEnergyGap: return "energy_gap";
    case SweepParameter::kDuration: return "duration";
    case SweepParameter::kLorentzGamma: return "lorentz_gamma";
    case SweepParameter::kPhase: return "phase";
    case SweepParameter::kVelocity: return "velocity";
  }
  return "?";
}

int sweep_parameter_dim(SweepParameter p) {
  switch (p) {
    case SweepParameter::kAxionMass:
    case SweepParameter::kEnergyGap:
      return 1;
    case SweepParameter::kDuration:
      return -1;
    default:
      return 0;
  }
}

void validate(const SweepSpec& spec) {
  if (spec.points < 2) throw ConfigError("sweep requires points >= 2");
  if (!(spec.start < spec.stop)) throw ConfigError("sweep requires start < stop");
  if (spec.log_scale && !(spec.start > 0.0)) {
    throw ConfigError("log-scale sweep requires start > 0");
  }
}

namespace {

double grid_point(const SweepSpec& spec, int i) {
  const double f = static_cast<double>(i) / (spec.points - 1);
  if (spec.log_scale) {
    return spec.start * std::pow(spec.stop / spec.start, f);
  }
  return spec.start + f * (spec.stop - spec.start);
}

}  // namespace

std::vector<SweepRow> run_sweep(const Settings& base, const SweepSpec& spec) {
  validate(spec);

  // Resolve the resonance default once so the sweep moves through it.
  Settings fixed = base;
  if (!fixed.omega) {
    fixed.omega = materialize(base).detector.energy_gap;
  }

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.points));
  for (int i = 0; i < spec.points; ++i) {
    const double v = grid_point(spec, i);
    Settings s = fixed;
    switch (spec.parameter) {
      case SweepParameter::kAxionMass: s.m_a = ev(v); break;
      case SweepParameter::kEnergyGap: s.omega = ev(v); break;
      case SweepParameter::kDuration: s.duration = inverse_ev(v); break;
      case SweepParameter::kLorentzGamma:
        s.v_det.reset();
        s.gamma = v;
        break;
      case SweepParameter::kPhase: s.theta = v; break;
      case SweepParameter::kVelocity: s.v_a = v; break;
    }
    const PhysicsInputs in = materialize(s);
    rows.push_back(
        {v, coherence_exact(in.detector, coherent_amplitude(in.background))});
  }
  return rows;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_sweep_csv(std::ostream& os, SweepParameter p,
                     const std::vector<SweepRow>& rows) {
  os << "param,value,C,C_max,C_min,logC,omega_tilde,exponent_res,exponent_off\n";
  const char* name = sweep_parameter_name(p);
  for (const auto& row : rows) {
    const CoherenceResult& r = row.result;
    os << name << ',' << fmt17(row.value) << ',' << fmt17(r.c) << ','
       << fmt17(r.c_max) << ',' << fmt17(r.c_min) << ',' << fmt17(r.log_c) << ','
       << fmt17(r.omega_tilde) << ',' << fmt17(r.exponent_resonant) << ','
       << fmt17(r.exponent_off) << '\n';
  }
}

}  // namespace axc
