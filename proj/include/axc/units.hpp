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

#include "axc/errors.hpp"

namespace axc {

// Natural units, hbar = c = 1. Every quantity is a real number times a power
// of eV; the integer exponent (mass dimension) is tracked explicitly so that
// mixing incompatible quantities is an error instead of a silent bug.
//
//   energy, mass, momentum   -> dim +1
//   time, length             -> dim -1
//   energy density           -> dim +4
//   couplings lambda         -> dim -2

namespace constants {

// CODATA 2018, fixed at 10 significant digits.
inline constexpr double kHbarEvS = 6.582119569e-16;     // hbar in eV s
inline constexpr double kHbarCEvCm = 1.973269804e-5;    // hbar c in eV cm

}  // namespace constants

/// A value in natural units together with its mass dimension.
struct Quantity {
  double value = 0.0;
  int dim = 0;

  constexpr Quantity() = default;
  constexpr Quantity(double v, int d) : value(v), dim(d) {}
};

Quantity operator+(Quantity a, Quantity b);
Quantity operator-(Quantity a, Quantity b);

constexpr Quantity operator*(Quantity a, Quantity b) {
  return {a.value * b.value, a.dim + b.dim};
}
constexpr Quantity operator/(Quantity a, Quantity b) {
  return {a.value / b.value, a.dim - b.dim};
}
constexpr Quantity operator*(double s, Quantity q) { return {s * q.value, q.dim}; }
constexpr Quantity operator*(Quantity q, double s) { return {s * q.value, q.dim}; }
constexpr Quantity operator/(Quantity q, double s) { return {q.value / s, q.dim}; }
constexpr Quantity operator-(Quantity q) { return {-q.value, q.dim}; }

/// Integer power; the dimension scales with the exponent.
Quantity pow(Quantity q, int n);

/// Square root; requires an even dimension and a non-negative value.
Quantity sqrt(Quantity q);

/// Convenience factories.
constexpr Quantity ev(double v) { return {v, 1}; }
constexpr Quantity inverse_ev(double v) { return {v, -1}; }
constexpr Quantity ev4(double v) { return {v, 4}; }

// Conversions between laboratory units and eV powers. Each conversion is a
// single multiplication or division by a CODATA constant, so round trips are
// exact to machine precision.

/// Time in seconds -> Quantity of dimension -1 (1/eV). Requires t > 0.
Quantity seconds_to_inverse_ev(double seconds);

/// Inverse of seconds_to_inverse_ev. Requires dim == -1 and value >= 0.
double inverse_ev_to_seconds(Quantity t);

/// Energy density in GeV/cm^3 -> Quantity of dimension +4 (eV^4).
/// Requires rho >= 0.
Quantity density_gev_cm3_to_ev4(double rho_gev_cm3);

/// Inverse of density_gev_cm3_to_ev4. Requires dim == +4 and value >= 0.
double density_ev4_to_gev_cm3(Quantity rho);

/// Length of dimension -1 (1/eV) -> centimeters. Requires value >= 0.
double length_inverse_ev_to_cm(Quantity length);

/// Length in centimeters -> Quantity of dimension -1 (1/eV).
Quantity length_cm_to_inverse_ev(double cm);

}  // namespace axc
