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

#include "axc/detector.hpp"

namespace axc {

enum class ResponseMethod { kAnalytic, kQuadrature };

/// Detector response to the coherent mode. The two branches multiply the
/// annihilation and creation parts of the mode respectively:
///
///   f_minus = i wt exp(-(pi/4) (wt - Omega)^2 T^2) * fourier
///   f_plus  = i wt exp(-(pi/4) (wt + Omega)^2 T^2) * fourier
///
/// with wt the Doppler-shifted mode frequency along the worldline. f_minus
/// carries the near-resonant factor, so |f_minus| >= |f_plus| always. Both
/// values are purely imaginary for an inertial point detector.
struct ResponsePair {
  std::complex<double> f_minus;
  std::complex<double> f_plus;
  ResponseMethod method = ResponseMethod::kAnalytic;
};

struct ResponseQuadratureOptions {
  double rel_tol = 1e-10;
  /// Absolute tolerance per branch; 0 selects the default reporting floor of
  /// 1e-21 * wt * fourier. Validation suites tighten these to resolve deeply
  /// suppressed branches.
  double abs_tol_minus = 0.0;
  double abs_tol_plus = 0.0;
};

/// Closed-form response.
ResponsePair response_analytic(const DetectorConfig& cfg, const CoherentAmplitude& amp);

/// Independent evaluation of the defining proper-time integral
///
///   F_branch = int chi(tau) e^{branch * i Omega tau} (i wt) e^{i wt tau} dtau * fourier
///
/// by adaptive panel quadrature. The switching Gaussian is integrated over a
/// window wide enough that the truncated tails sit below the requested
/// tolerance, panels are capped at a quarter of the fastest oscillation
/// period, and the arithmetic escalates double -> double-double -> quad-double
/// until the self-estimated error (panel refinement + roundoff floor +
/// window truncation) meets the target. Throws QuadratureError when the
/// target is unreachable.
ResponsePair response_quadrature(const DetectorConfig& cfg, const CoherentAmplitude& amp,
                                 const ResponseQuadratureOptions& opts = {});

namespace response_detail {

/// One closed-form branch with a signed gap; sign = -1 gives the near-resonant
/// branch exponent (wt - gap)^2.
std::complex<double> branch_analytic(double omega_tilde, double gap, double duration,
                                     int sign, double fourier);

struct QuadOutcome {
  std::complex<double> f_minus;
  std::complex<double> f_plus;
  double err_minus = 0.0;  // bound on |computed - exact|
  double err_plus = 0.0;
  const char* precision = "";
  long panels = 0;
};

/// Defining-integral evaluation of both branches for raw parameters.
QuadOutcome quad_pair(double omega_tilde, double gap, double duration, double fourier,
                      double abs_tol_minus, double abs_tol_plus, double rel_tol);

}  // namespace response_detail

}  // namespace axc
