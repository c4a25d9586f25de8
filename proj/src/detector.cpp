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

#include "axc/detector.hpp"

#include <cmath>
#include <string>

namespace axc {

DetectorConfig::DetectorConfig(Quantity omega, Quantity t, Quantity r, Vec3 v,
                               Quantity lambda)
    : energy_gap(omega),
      duration(t),
      smearing_radius(r),
      velocity(v),
      coupling(lambda) {
  if (energy_gap.dim != 1) throw DimensionError("energy gap must have dimension +1");
  if (duration.dim != -1) throw DimensionError("duration must have dimension -1");
  if (smearing_radius.dim != -1) {
    throw DimensionError("smearing radius must have dimension -1");
  }
  if (coupling.dim != -2) throw DimensionError("coupling must have dimension -2");
  if (!(energy_gap.value > 0.0)) throw DomainError("energy gap must be positive");
  if (!(duration.value > 0.0)) throw DomainError("duration must be positive");
  if (smearing_radius.value < 0.0) {
    throw DomainError("smearing radius must be non-negative");
  }
  if (coupling.value < 0.0) throw DomainError("coupling must be non-negative");
  if (!(velocity.norm() < 1.0)) {
    throw DomainError("detector speed must be below 1, got |v| = " +
                      std::to_string(velocity.norm()));
  }
}

double DetectorConfig::lorentz_gamma() const {
  return axc::lorentz_gamma(velocity.norm());
}

double lorentz_gamma(double speed) {
  if (!(speed >= 0.0 && speed < 1.0)) {
    throw DomainError("speed must satisfy 0 <= v < 1");
  }
  return 1.0 / std::sqrt((1.0 - speed) * (1.0 + speed));
}

double speed_from_gamma(double gamma) {
  if (!(gamma >= 1.0)) throw DomainError("Lorentz factor must be >= 1");
  return std::sqrt((gamma - 1.0) * (gamma + 1.0)) / gamma;
}

double switching(const DetectorConfig& cfg, double tau_inverse_ev) {
  const double t = cfg.duration.value;
  const double u = tau_inverse_ev / t;
  return std::exp(-u * u / M_PI) / (M_PI * t);
}

double smearing(const DetectorConfig& cfg, const Vec3& xi_inverse_ev) {
  const double r = cfg.smearing_radius.value;
  if (!(r > 0.0)) {
    throw DomainError(
        "smearing profile is a delta function at R = 0; use smearing_fourier "
        "(== 1) and the analytic point limit instead");
  }
  const double pr = M_PI * r;
  return std::exp(-xi_inverse_ev.norm2() / (pr * r)) / (pr * pr * pr);
}

std::complex<double> smearing_fourier(const DetectorConfig& cfg, const Vec3& k_ev) {
  const double r = cfg.smearing_radius.value;
  return {std::exp(-0.25 * M_PI * r * r * k_ev.norm2()), 0.0};
}

Quantity doppler_frequency(const DetectorConfig& cfg, const CoherentAmplitude& amp) {
  const double gamma = cfg.lorentz_gamma();
  return {gamma * (amp.omega_p_ev - amp.momentum_ev.dot(cfg.velocity)), 1};
}

}  // namespace axc
