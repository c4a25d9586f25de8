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

#include "axc/coherence.hpp"

#include <cmath>
#include <sstream>

namespace axc {

ComplexMatrix maximally_coherent_state(std::size_t d) {
  if (d == 0) throw DomainError("dimension must be positive");
  ComplexMatrix rho(d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      rho.at(i, j) = amp * amp;
    }
  }
  return rho;
}

double l1_coherence(const ComplexMatrix& rho) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rho.n; ++i) {
    for (std::size_t j = 0; j < rho.n; ++j) {
      if (i != j) sum += std::abs(rho.at(i, j));
    }
  }
  return sum;
}

double l1_coherence(const DensityMatrix2& rho) { return rho.l1(); }

bool DensityMatrix2::is_hermitian(double tol) const {
  return std::abs(gg.imag()) <= tol && std::abs(ee.imag()) <= tol &&
         std::abs(ge - std::conj(eg)) <= tol;
}

std::pair<double, double> DensityMatrix2::eigenvalues() const {
  const double a = gg.real();
  const double d = ee.real();
  const double mean = 0.5 * (a + d);
  const double disc = std::hypot(0.5 * (a - d), std::abs(ge));
  return {mean - disc, mean + disc};
}

std::complex<double> interaction_expectation(const ResponsePair& resp,
                                             std::complex<double> a0) {
  return 0.5 * (resp.f_minus * a0 - std::conj(resp.f_plus) * std::conj(a0));
}

ReducedState reduced_density_matrix(const DetectorConfig& cfg,
                                    const CoherentAmplitude& amp,
                                    const ResponsePair& resp) {
  const std::complex<double> tr_phi = interaction_expectation(resp, amp.a0);
  const double kappa = cfg.coupling.value * std::abs(tr_phi);
  if (kappa > 1.0) {
    std::ostringstream msg;
    msg << "perturbative expansion invalid: lambda |tr(Phi sigma)| = " << kappa
        << " > 1";
    throw PerturbativityError(msg.str());
  }
  ReducedState out;
  out.kappa = kappa;
  out.perturbative_warning = kappa > 0.1;
  const std::complex<double> ge =
      std::complex<double>(0.0, 1.0) * cfg.coupling.value * tr_phi;
  const double excited = kappa * kappa;
  out.rho.ge = ge;
  out.rho.eg = std::conj(ge);
  out.rho.ee = {excited, 0.0};
  out.rho.gg = {1.0 - excited, 0.0};
  return out;
}

namespace {

struct ExactTerms {
  double wt;         // Doppler frequency
  double amp;        // |a0|
  double theta;      // arg(a0)
  double lam;        // coupling
  double fourier;    // smearing factor at the mode momentum
  double p_res;      // -(pi/4)(wt - Omega)^2 T^2
  double p_off;      // -(pi/4)(wt + Omega)^2 T^2
  double x;          // (pi/2) wt Omega T^2
};

ExactTerms exact_terms(const DetectorConfig& cfg, const CoherentAmplitude& amp) {
  ExactTerms t;
  t.wt = doppler_frequency(cfg, amp).value;
  t.amp = std::abs(amp.a0);
  t.theta = std::arg(amp.a0);
  t.lam = cfg.coupling.value;
  t.fourier = smearing_fourier(cfg, amp.momentum_ev).real();
  const double om = cfg.energy_gap.value;
  const double T = cfg.duration.value;
  const double dres = (t.wt - om) * T;
  const double doff = (t.wt + om) * T;
  t.p_res = -0.25 * M_PI * dres * dres;
  t.p_off = -0.25 * M_PI * doff * doff;
  t.x = 0.5 * M_PI * t.wt * om * T * T;
  return t;
}

}  // namespace

CoherenceResult coherence_exact(const DetectorConfig& cfg, const CoherentAmplitude& amp) {
  const ExactTerms t = exact_terms(cfg, amp);
  CoherenceResult r;
  r.theta = t.theta;
  r.regime = CoherenceRegime::kExact;
  r.omega_tilde = t.wt;
  r.exponent_resonant = t.p_res;
  r.exponent_off = t.p_off;

  // Factor e^{p_res} out of the phase combination; the remaining suppressed
  // term is d = e^{p_off - p_res} = e^{-2X} <= 1, so nothing can overflow.
  const double lead = t.lam * t.amp * t.wt * t.fourier;
  const double d = std::exp(t.p_off - t.p_res);
  const double mod = std::hypot((1.0 + d) * std::cos(t.theta),
                                (1.0 - d) * std::sin(t.theta));
  const double e_res = std::exp(t.p_res);
  r.c = lead * e_res * mod;
  r.c_max = lead * e_res * (1.0 + d);
  r.c_min = lead * e_res * (1.0 - d);
  r.log_c = std::log(lead) + t.p_res + std::log(mod);
  return r;
}

CoherenceResult coherence_longtime(const DetectorConfig& cfg, const CoherentAmplitude& amp) {
  const ExactTerms t = exact_terms(cfg, amp);
  if (!(t.x >= 10.0)) {
    std::ostringstream msg;
    msg << "long-duration limit requires X = (pi/2) wt Omega T^2 >= 10, got "
        << t.x << "; use coherence_exact";
    throw RegimeError(msg.str());
  }
  CoherenceResult r;
  r.theta = t.theta;
  r.regime = CoherenceRegime::kLongTime;
  r.omega_tilde = t.wt;
  r.exponent_resonant = t.p_res;
  r.exponent_off = t.p_off;
  const double lead = t.lam * t.amp * t.wt * t.fourier;
  r.c = lead * std::exp(t.p_res);
  r.c_max = r.c;
  r.c_min = r.c;
  r.log_c = std::log(lead) + t.p_res;
  return r;
}

double coherence_estimate(const DetectorConfig& cfg, const AxionBackground& bg) {
  const double gamma = cfg.lorentz_gamma();
  const double root = sqrt(2.0 * bg.rho_dm).value;  // eV^2
  const double detune = (bg.mass.value * gamma - cfg.energy_gap.value) *
                        cfg.duration.value;
  return root * cfg.coupling.value * gamma *
         std::exp(-0.25 * M_PI * detune * detune);
}

double coherence_from_response(const DetectorConfig& cfg, const CoherentAmplitude& amp,
                               const ResponsePair& resp) {
  return 2.0 * cfg.coupling.value * std::abs(interaction_expectation(resp, amp.a0));
}

double electron_detector_coherence(double t_obs_seconds, double gamma,
                                   double rho_dm_gev_cm3) {
  if (!(gamma >= 1.0)) throw DomainError("Lorentz factor must be >= 1");
  const Quantity t_nat = seconds_to_inverse_ev(t_obs_seconds);
  const double lambda = coherence_constants::kAxionElectronCouplingBound /
                        coherence_constants::kElectronMassEv * t_nat.value;
  const Quantity rho = density_gev_cm3_to_ev4(rho_dm_gev_cm3);
  return sqrt(2.0 * rho).value * lambda * gamma;
}

}  // namespace axc
