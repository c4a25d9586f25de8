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

#include "axc/units.hpp"

#include <cmath>
#include <string>

namespace axc {

namespace {

[[noreturn]] void throw_dim_mismatch(const char* op, int a, int b) {
  throw DimensionError(std::string("dimension mismatch in ") + op + ": eV^" +
                       std::to_string(a) + " vs eV^" + std::to_string(b));
}

}  // namespace

Quantity operator+(Quantity a, Quantity b) {
  if (a.dim != b.dim) throw_dim_mismatch("addition", a.dim, b.dim);
  return {a.value + b.value, a.dim};
}

Quantity operator-(Quantity a, Quantity b) {
  if (a.dim != b.dim) throw_dim_mismatch("subtraction", a.dim, b.dim);
  return {a.value - b.value, a.dim};
}

Quantity pow(Quantity q, int n) {
  return {std::pow(q.value, n), q.dim * n};
}

Quantity sqrt(Quantity q) {
  if (q.dim % 2 != 0) {
    throw DimensionError("sqrt of quantity with odd dimension eV^" +
                         std::to_string(q.dim));
  }
  if (q.value < 0.0) throw DomainError("sqrt of negative quantity");
  return {std::sqrt(q.value), q.dim / 2};
}

Quantity seconds_to_inverse_ev(double seconds) {
  if (!(seconds > 0.0)) {
    throw DomainError("time must be positive, got " + std::to_string(seconds) + " s");
  }
  return {seconds / constants::kHbarEvS, -1};
}

double inverse_ev_to_seconds(Quantity t) {
  if (t.dim != -1) throw DimensionError("expected a time (dimension -1)");
  if (t.value < 0.0) throw DomainError("negative time");
  return t.value * constants::kHbarEvS;
}

Quantity density_gev_cm3_to_ev4(double rho_gev_cm3) {
  if (rho_gev_cm3 < 0.0) throw DomainError("energy density must be non-negative");
  const double hc = constants::kHbarCEvCm;
  return {rho_gev_cm3 * 1e9 * (hc * hc * hc), 4};
}

double density_ev4_to_gev_cm3(Quantity rho) {
  if (rho.dim != 4) throw DimensionError("expected an energy density (dimension +4)");
  if (rho.value < 0.0) throw DomainError("negative energy density");
  const double hc = constants::kHbarCEvCm;
  return rho.value / (1e9 * hc * hc * hc);
}

double length_inverse_ev_to_cm(Quantity length) {
  if (length.dim != -1) throw DimensionError("expected a length (dimension -1)");
  if (length.value < 0.0) throw DomainError("negative length");
  return length.value * constants::kHbarCEvCm;
}

Quantity length_cm_to_inverse_ev(double cm) {
  if (cm < 0.0) throw DomainError("negative length");
  return {cm / constants::kHbarCEvCm, -1};
}

}  // namespace axc
