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

#include "axc/axion.hpp"

#include <cmath>
#include <string>

namespace axc {

AxionBackground::AxionBackground(Quantity m_a, Quantity rho, double v_a,
                                 double theta, Vec3 dir)
    : mass(m_a), rho_dm(rho), speed(v_a), phase(theta), direction(dir) {
  if (mass.dim != 1) throw DimensionError("axion mass must have dimension +1");
  if (rho_dm.dim != 4) throw DimensionError("rho_DM must have dimension +4");
  if (!(mass.value > 0.0)) throw DomainError("axion mass must be positive");
  if (rho_dm.value < 0.0) throw DomainError("rho_DM must be non-negative");
  if (!(speed >= 0.0 && speed < 1.0)) {
    throw DomainError("axion speed must satisfy 0 <= v_a < 1, got " +
                      std::to_string(speed));
  }
  if (std::abs(direction.norm() - 1.0) > 1e-12) {
    throw DomainError("axion direction must be a unit vector");
  }
}

Quantity AxionBackground::energy() const {
  const double p = mass.value * speed;
  return {std::hypot(p, mass.value), 1};
}

Quantity axion_amplitude(const AxionBackground& bg) {
  return sqrt(2.0 * bg.rho_dm) / bg.mass;
}

Quantity axion_energy_density(Quantity amplitude, Quantity mass) {
  if (amplitude.dim != 1 || mass.dim != 1) {
    throw DimensionError("amplitude and mass must have dimension +1");
  }
  if (amplitude.value < 0.0) throw DomainError("amplitude must be non-negative");
  if (!(mass.value > 0.0)) throw DomainError("mass must be positive");
  return 0.5 * (amplitude * amplitude) * (mass * mass);
}

Quantity axion_pressure(Quantity amplitude, Quantity mass, Quantity time) {
  if (time.dim != -1) throw DimensionError("time must have dimension -1");
  const Quantity rho = axion_energy_density(amplitude, mass);
  return -std::cos(2.0 * mass.value * time.value) * rho;
}

double occupation_number(const AxionBackground& bg) {
  if (!(bg.speed > 0.0)) {
    throw DomainError(
        "occupation number diverges for v_a = 0 (zero momentum bin)");
  }
  const double k = bg.mass.value * bg.speed;
  return bg.rho_dm.value / (bg.mass.value * k * k * k);
}

double de_broglie_wavelength_cm(const AxionBackground& bg) {
  if (!(bg.speed > 0.0)) {
    throw DomainError("de Broglie wavelength diverges for v_a = 0");
  }
  const Quantity lambda{2.0 * M_PI / (bg.mass.value * bg.speed), -1};
  return length_inverse_ev_to_cm(lambda);
}

CoherentAmplitude coherent_amplitude(const AxionBackground& bg) {
  const double a = axion_amplitude(bg).value;
  return {std::polar(a, bg.phase), bg.direction * (bg.mass.value * bg.speed),
          bg.energy().value};
}

}  // namespace axc
