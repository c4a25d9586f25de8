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
#include <cstddef>
#include <vector>

#include "axc/axion.hpp"
#include "axc/detector.hpp"
#include "axc/response.hpp"

namespace axc {

/// Square complex matrix, row-major. Only what the coherence measure needs.
struct ComplexMatrix {
  std::size_t n = 0;
  std::vector<std::complex<double>> a;

  explicit ComplexMatrix(std::size_t dim)
      : n(dim), a(dim * dim, std::complex<double>(0.0, 0.0)) {}

  std::complex<double>& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const std::complex<double>& at(std::size_t i, std::size_t j) const {
    return a[i * n + j];
  }
};

/// Density matrix of the maximally coherent pure state in dimension d; its
/// coherence measure is d - 1.
ComplexMatrix maximally_coherent_state(std::size_t d);

/// Sum of the moduli of the off-diagonal elements. Zero exactly for
/// incoherent (diagonal) states.
double l1_coherence(const ComplexMatrix& rho);

/// Reduced 2x2 state of the detector, basis order (ground, excited).
struct DensityMatrix2 {
  std::complex<double> gg, ge, eg, ee;

  std::complex<double> trace() const { return gg + ee; }
  double l1() const { return std::abs(ge) + std::abs(eg); }
  bool is_hermitian(double tol) const;
  /// Eigenvalues of the Hermitian part, ascending.
  std::pair<double, double> eigenvalues() const;
};

double l1_coherence(const DensityMatrix2& rho);

/// Expectation value of the interaction operator in the coherent state,
/// combining the two response branches with the mode amplitude. Both branches
/// carry the same i prefactor, so the creation-side term enters through the
/// conjugate of its Gaussian payload:
///
///   tr(Phi sigma) = (f_minus a0 - conj(f_plus) conj(a0)) / 2
///
/// This is the combination whose modulus reproduces the closed-form coherence
/// measure (see coherence_exact), with the maximum over the initial phase at
/// theta = 0.
std::complex<double> interaction_expectation(const ResponsePair& resp,
                                             std::complex<double> a0);

struct ReducedState {
  DensityMatrix2 rho;
  double kappa = 0.0;  // lambda |tr(Phi sigma)|, the expansion parameter
  bool perturbative_warning = false;
};

/// Leading-order reduced density matrix: off-diagonal i lambda tr(Phi sigma),
/// excited population lambda^2 |tr(Phi sigma)|^2 (coherent-signal part).
/// Warns for kappa > 0.1 and throws PerturbativityError for kappa > 1.
ReducedState reduced_density_matrix(const DetectorConfig& cfg,
                                    const CoherentAmplitude& amp,
                                    const ResponsePair& resp);

enum class CoherenceRegime { kExact, kLongTime };

struct CoherenceResult {
  double c = 0.0;
  double c_max = 0.0;
  double c_min = 0.0;
  double log_c = 0.0;  // natural log of c, finite even when c underflows
  double theta = 0.0;
  CoherenceRegime regime = CoherenceRegime::kExact;
  // diagnostics
  double omega_tilde = 0.0;
  double exponent_resonant = 0.0;  // -(pi/4) (wt - Omega)^2 T^2
  double exponent_off = 0.0;       // -(pi/4) (wt + Omega)^2 T^2
};

/// Closed-form coherence measure
///
///   C = lambda A wt e^{-(pi/4)(wt^2 + Omega^2) T^2}
///       * | e^{i theta + X} + e^{-i theta - X} | * fourier,
///
/// X = (pi/2) wt Omega T^2. Evaluated through the always-non-positive
/// exponents -(pi/4)(wt -+ Omega)^2 T^2, so no intermediate overflows even
/// when X is astronomically large; log_c is computed alongside in the log
/// domain. C_max is attained at theta = 0 (cosh branch) and C_min at
/// theta = pi/2 (sinh branch).
CoherenceResult coherence_exact(const DetectorConfig& cfg, const CoherentAmplitude& amp);

/// Long-duration limit C = lambda A wt e^{-(pi/4)(wt - Omega)^2 T^2}.
/// Requires X = (pi/2) wt Omega T^2 >= 10; throws RegimeError below that.
CoherenceResult coherence_longtime(const DetectorConfig& cfg, const CoherentAmplitude& amp);

/// Headline estimate at the resonant working point:
/// C = sqrt(2 rho_DM) lambda gamma exp(-(pi/4)(m_a gamma - Omega)^2 T^2).
double coherence_estimate(const DetectorConfig& cfg, const AxionBackground& bg);

/// Coherence route through the response pair, C = 2 lambda |tr(Phi sigma)|.
/// Algebraically identical to coherence_exact when resp is the closed form.
double coherence_from_response(const DetectorConfig& cfg, const CoherentAmplitude& amp,
                               const ResponsePair& resp);

/// Two-level electron in an atom as the detector: the axion-electron coupling
/// bound g = 3.3e-13 / m_e translates to lambda = g T, and at resonance
/// C = sqrt(2 rho_DM) lambda gamma. Scales linearly with the observation time.
double electron_detector_coherence(double t_obs_seconds, double gamma,
                                   double rho_dm_gev_cm3);

namespace coherence_constants {
inline constexpr double kElectronMassEv = 0.5e6;
inline constexpr double kAxionElectronCouplingBound = 3.3e-13;  // times 1/m_e
}  // namespace coherence_constants

}  // namespace axc
