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

#include "axc/axion.hpp"
#include "axc/units.hpp"
#include "axc/vec3.hpp"

namespace axc {

/// Two-level detector moving on an inertial worldline x(tau) = u tau.
///
/// The interaction is switched on for a duration T by a Gaussian profile and
/// (optionally) smeared over a region of size R. R = 0 is the point-detector
/// limit, in which the smearing drops out of every formula.
struct DetectorConfig {
  Quantity energy_gap;       // Omega, eV
  Quantity duration;         // T, 1/eV
  Quantity smearing_radius;  // R, 1/eV; 0 means point detector
  Vec3 velocity;             // |v| < 1
  Quantity coupling;         // lambda, 1/eV^2

  DetectorConfig(Quantity omega, Quantity t, Quantity r, Vec3 v, Quantity lambda);

  double lorentz_gamma() const;
};

double lorentz_gamma(double speed);
double speed_from_gamma(double gamma);

/// Gaussian switching profile chi(tau) = exp(-tau^2 / (pi T^2)) / (pi T).
/// Normalized: the integral over all tau is exactly 1.
double switching(const DetectorConfig& cfg, double tau_inverse_ev);

/// Gaussian smearing profile f(xi) = exp(-xi^2 / (pi R^2)) / (pi R)^3,
/// normalized to unit integral. Evaluation requires R > 0; the point limit is
/// a delta function and is handled analytically through smearing_fourier.
double smearing(const DetectorConfig& cfg, const Vec3& xi_inverse_ev);

/// Fourier transform of the smearing profile, exp(-pi R^2 k^2 / 4).
/// Real-valued since f is even; returns 1 in the point limit R = 0.
std::complex<double> smearing_fourier(const DetectorConfig& cfg, const Vec3& k_ev);

/// Frequency of the mode's phase along the detector worldline,
/// omega_tilde = gamma (omega_p - p . v). Positive whenever |v| < 1 and
/// m_a > 0; reduces to omega_p for a comoving detector and to gamma m_a for
/// an axion at rest.
Quantity doppler_frequency(const DetectorConfig& cfg, const CoherentAmplitude& amp);

}  // namespace axc
