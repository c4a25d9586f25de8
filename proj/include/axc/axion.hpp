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

#include <complex>

#include "axc/units.hpp"
#include "axc/vec3.hpp"

namespace axc {

/// Coherently oscillating axion dark-matter background.
///
/// The background is a single classical mode: mass m_a, local energy density
/// rho_DM, speed v_a (fraction of c) along a unit direction, and an initial
/// phase. Derived kinematics: momentum p = m_a v_a, energy
/// omega_p = sqrt(p^2 + m_a^2).
struct AxionBackground {
  Quantity mass;        // m_a, eV
  Quantity rho_dm;      // local dark-matter density, eV^4
  double speed = 0.0;   // v_a
  double phase = 0.0;   // theta, radians
  Vec3 direction = kZAxis;

  AxionBackground(Quantity m_a, Quantity rho, double v_a, double theta,
                  Vec3 dir = kZAxis);

  Quantity momentum() const { return {mass.value * speed, 1}; }
  Quantity energy() const;  // omega_p
};

/// Single classical mode of the quantized field: complex amplitude
/// a0 = A e^{i theta}, momentum vector and energy. All mode integrals in the
/// detector response collapse onto this one momentum, so this is the full
/// field state as far as the detector is concerned.
struct CoherentAmplitude {
  std::complex<double> a0;  // eV
  Vec3 momentum_ev;
  double omega_p_ev = 0.0;
};

/// Oscillation amplitude A = sqrt(2 rho_DM) / m_a.
Quantity axion_amplitude(const AxionBackground& bg);

/// Energy density of the oscillating field, rho = A^2 m_a^2 / 2.
Quantity axion_energy_density(Quantity amplitude, Quantity mass);

/// Instantaneous pressure, p_a(t) = -(A^2 m_a^2 / 2) cos(2 m_a t).
/// Averages to zero over any whole number of half-periods.
Quantity axion_pressure(Quantity amplitude, Quantity mass, Quantity time);

/// Phase-space occupation estimate rho_DM / (m_a k^3) with k = m_a v_a.
/// Values far above one mean the mode is classical for all practical
/// purposes; order one means quantum coherence is manifest.
double occupation_number(const AxionBackground& bg);

/// de Broglie wavelength 2 pi / (m_a v_a), in centimeters.
double de_broglie_wavelength_cm(const AxionBackground& bg);

/// Packages the coherent-state mode (a0, p, omega_p) for the response
/// calculation.
CoherentAmplitude coherent_amplitude(const AxionBackground& bg);

}  // namespace axc
