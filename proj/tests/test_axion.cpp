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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "axc/axion.hpp"
#include "axc/quadrature.hpp"

using namespace axc;

namespace {

AxionBackground reference_bg(double m_a_ev = 1e-6, double v_a = 0.5e-3,
                             double theta = 0.0) {
  return AxionBackground(ev(m_a_ev), density_gev_cm3_to_ev4(0.3), v_a, theta);
}

}  // namespace

TEST_CASE("amplitude from the local density") {
  const Quantity a = axion_amplitude(reference_bg());
  CHECK(a.dim == 1);
  // headline value 2e-6 GeV, quoted to one significant figure
  CHECK(std::abs(a.value * 1e-9 - 2e-6) / 2e-6 < 0.10);
  // frozen hand-derived value sqrt(2 * 2.30505e-6) / 1e-6
  CHECK(a.value == doctest::Approx(2.1471151207e3).epsilon(1e-9));
  // A scales as 1/m_a
  const Quantity a_heavier = axion_amplitude(reference_bg(1e-3));
  CHECK(a_heavier.value * 1e-9 == doctest::Approx(2.1471151207e-9).epsilon(1e-9));
  // zero density
  AxionBackground zero(ev(1e-6), ev4(0.0), 0.5e-3, 0.0);
  CHECK(axion_amplitude(zero).value == 0.0);
}

TEST_CASE("energy density inverts the amplitude") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> logm(-10.0, 3.0);
  std::uniform_real_distribution<double> rho_lab(0.01, 10.0);
  for (int i = 0; i < 200; ++i) {
    AxionBackground bg(ev(std::pow(10.0, logm(rng))),
                       density_gev_cm3_to_ev4(rho_lab(rng)), 0.5e-3, 0.0);
    const Quantity a = axion_amplitude(bg);
    const Quantity rho = axion_energy_density(a, bg.mass);
    CHECK(rho.value == doctest::Approx(bg.rho_dm.value).epsilon(1e-12));
  }
  CHECK(axion_energy_density(ev(0.0), ev(1e-6)).value == 0.0);
  // plug-in cross-check against the lab-unit conversion
  const Quantity rho = axion_energy_density(ev(2.1471151207e3), ev(1e-6));
  CHECK(rho.value == doctest::Approx(2.3050516708e-6).epsilon(1e-9));
}

TEST_CASE("pressure oscillates and averages to zero") {
  const Quantity a = ev(2.0);
  const Quantity m = ev(3.0);
  const Quantity rho = axion_energy_density(a, m);
  // t = 0: most negative, equal to -rho
  CHECK(axion_pressure(a, m, inverse_ev(0.0)).value ==
        doctest::Approx(-rho.value).epsilon(1e-15));
  // quarter period of the cos(2 m t) oscillation: zero crossing
  CHECK(std::abs(axion_pressure(a, m, inverse_ev(M_PI / (4.0 * m.value))).value) <=
        1e-15 * rho.value);

  // uniform samples over one full period average to zero
  const double period = M_PI / m.value;
  const int n = 1000;
  double mean = 0.0;
  for (int i = 0; i < n; ++i) {
    mean += axion_pressure(a, m, inverse_ev((i + 0.5) * period / n)).value;
  }
  mean /= n;
  CHECK(std::abs(mean) <= 1e-9 * rho.value);

  // quadrature average over whole numbers of half-periods
  for (int halves : {1, 2, 5}) {
    const double t1 = halves * M_PI / (2.0 * m.value);
    const auto avg = integrate(
        [&](double t) { return axion_pressure(a, m, inverse_ev(t)).value; }, 0.0,
        t1, {1e-13, 1e-13, 32});
    CHECK(std::abs(avg.value / t1) <= 1e-10 * rho.value);
  }
}

TEST_CASE("occupation number") {
  const double occ = occupation_number(reference_bg());
  CHECK(occ == doctest::Approx(1.8440413367e28).epsilon(1e-9));
  CHECK(occ > 1e28);
  CHECK(occ < 4e28);  // within a factor of two of 2e28
  const double occ_heavy = occupation_number(reference_bg(10.0));
  CHECK(occ_heavy > 0.1);
  CHECK(occ_heavy < 10.0);
  // doubling the mass divides by 16
  CHECK(occupation_number(reference_bg(2e-6)) * 16.0 ==
        doctest::Approx(occ).epsilon(1e-12));
  AxionBackground resting(ev(1e-6), density_gev_cm3_to_ev4(0.3), 0.0, 0.0);
  CHECK_THROWS_AS(occupation_number(resting), DomainError);
}

TEST_CASE("occupation scaling in rho, mass and speed") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> f(0.5, 2.0);
  const AxionBackground base = reference_bg();
  const double occ0 = occupation_number(base);
  for (int i = 0; i < 100; ++i) {
    const double fr = f(rng), fm = f(rng), fv = f(rng);
    AxionBackground bg(base.mass * fm, base.rho_dm * fr, base.speed * fv,
                       0.0);
    const double expected = occ0 * fr / std::pow(fm, 4) / std::pow(fv, 3);
    CHECK(occupation_number(bg) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("de Broglie wavelength endpoints") {
  CHECK(de_broglie_wavelength_cm(reference_bg(1e-10)) ==
        doctest::Approx(2.4796839679e9).epsilon(1e-9));
  CHECK(de_broglie_wavelength_cm(reference_bg(1e3)) ==
        doctest::Approx(2.4796839679e-4).epsilon(1e-9));
  // halving the speed doubles the wavelength
  CHECK(de_broglie_wavelength_cm(reference_bg(1e-6, 0.25e-3)) ==
        doctest::Approx(2.0 * de_broglie_wavelength_cm(reference_bg())).epsilon(1e-12));
  AxionBackground resting(ev(1e-6), density_gev_cm3_to_ev4(0.3), 0.0, 0.0);
  CHECK_THROWS_AS(de_broglie_wavelength_cm(resting), DomainError);
}

TEST_CASE("coherent amplitude packaging") {
  const CoherentAmplitude amp = coherent_amplitude(reference_bg());
  CHECK(amp.a0.imag() == 0.0);
  CHECK(amp.a0.real() > 0.0);
  CHECK(amp.momentum_ev.z == doctest::Approx(5e-10).epsilon(1e-12));
  CHECK(amp.omega_p_ev >= 1e-6);

  const CoherentAmplitude flipped = coherent_amplitude(reference_bg(1e-6, 0.5e-3, M_PI));
  CHECK(flipped.a0.real() == doctest::Approx(-std::abs(amp.a0)).epsilon(1e-12));
  CHECK(std::abs(flipped.a0.imag()) <= 1e-12 * std::abs(amp.a0));

  // resting limit: omega_p = m_a exactly
  AxionBackground resting(ev(1e-6), density_gev_cm3_to_ev4(0.3), 0.0, 0.3);
  const CoherentAmplitude rest_amp = coherent_amplitude(resting);
  CHECK(rest_amp.omega_p_ev == 1e-6);
  CHECK(rest_amp.momentum_ev.norm() == 0.0);
}

TEST_CASE("dispersion relation stays non-relativistic at halo speeds") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> logm(-10.0, 3.0);
  std::uniform_real_distribution<double> v(0.0, 1e-3);
  for (int i = 0; i < 200; ++i) {
    AxionBackground bg(ev(std::pow(10.0, logm(rng))), density_gev_cm3_to_ev4(0.3),
                       v(rng), 0.0);
    const double w = bg.energy().value;
    CHECK(w >= bg.mass.value);
    CHECK((w - bg.mass.value) / bg.mass.value <= 1e-6);
    if (bg.speed == 0.0) CHECK(w == bg.mass.value);
  }
}

TEST_CASE("background validation") {
  CHECK_THROWS_AS(AxionBackground(ev(0.0), ev4(1.0), 0.1, 0.0), DomainError);
  CHECK_THROWS_AS(AxionBackground(ev(1.0), ev4(-1.0), 0.1, 0.0), DomainError);
  CHECK_THROWS_AS(AxionBackground(ev(1.0), ev4(1.0), 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(AxionBackground(ev(1.0), ev4(1.0), 0.1, 0.0, Vec3{0.0, 0.0, 2.0}),
                  DomainError);
  CHECK_THROWS_AS(AxionBackground(inverse_ev(1.0), ev4(1.0), 0.1, 0.0),
                  DimensionError);
}
