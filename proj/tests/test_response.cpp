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

#include "axc/response.hpp"

using namespace axc;

namespace {

DetectorConfig make_detector(double omega, double t, double lambda = 1.0,
                             double r = 0.0) {
  return DetectorConfig(ev(omega), inverse_ev(t), inverse_ev(r), Vec3{},
                        Quantity(lambda, -2));
}

CoherentAmplitude mode_at(double omega_tilde, double theta = 0.0, double a = 1.0) {
  return {std::polar(a, theta), Vec3{}, omega_tilde};
}

}  // namespace

TEST_CASE("closed form at resonance and off resonance") {
  const auto pair = response_analytic(make_detector(1.0, 1.0), mode_at(1.0));
  CHECK(pair.method == ResponseMethod::kAnalytic);
  // at resonance the near branch has unit Gaussian factor: F = i wt
  CHECK(pair.f_minus.real() == 0.0);
  CHECK(pair.f_minus.imag() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(pair.f_plus) == doctest::Approx(std::exp(-M_PI)).epsilon(1e-13));

  // strong Gaussian suppression for 20/T of detuning
  const auto far = response_analytic(make_detector(21.0, 1.0), mode_at(1.0));
  CHECK(std::abs(far.f_minus) < 1e-30);
  CHECK(std::abs(far.f_plus) < 1e-30);

  // |f_minus| >= |f_plus| always
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> box(0.1, 30.0);
  for (int i = 0; i < 300; ++i) {
    const auto p = response_analytic(make_detector(box(rng), 1.0), mode_at(box(rng)));
    CHECK(std::abs(p.f_minus) >= std::abs(p.f_plus));
  }
}

TEST_CASE("dimensional scaling of the closed form") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> box(0.3, 10.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double wt = box(rng), om = box(rng), t = box(rng), s = scale(rng);
    for (int sign : {-1, +1}) {
      const auto f = response_detail::branch_analytic(wt, om, t, sign, 1.0);
      const auto fs = response_detail::branch_analytic(s * wt, s * om, t / s, sign, 1.0);
      CHECK(fs.imag() == doctest::Approx(s * f.imag()).epsilon(1e-13));
    }
  }
}

TEST_CASE("defining integral reproduces the closed form at resonance") {
  const auto q = response_quadrature(make_detector(1.0, 1.0), mode_at(1.0));
  CHECK(q.method == ResponseMethod::kQuadrature);
  CHECK(std::abs(q.f_minus - std::complex<double>(0.0, 1.0)) < 1e-8);
  CHECK(std::abs(q.f_plus - std::complex<double>(0.0, std::exp(-M_PI))) < 1e-8);
  // the real part is pure noise
  CHECK(std::abs(q.f_minus.real()) < 1e-8 * std::abs(q.f_minus.imag()));
}

TEST_CASE("coupling does not enter the response") {
  const auto a = response_quadrature(make_detector(2.0, 1.5, 1.0), mode_at(1.7));
  const auto b = response_quadrature(make_detector(2.0, 1.5, 123.0), mode_at(1.7));
  CHECK(a.f_minus == b.f_minus);
  CHECK(a.f_plus == b.f_plus);
}

TEST_CASE("conjugation symmetry: plus branch equals minus branch at -Omega") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> box(0.2, 8.0);
  for (int i = 0; i < 20; ++i) {
    const double wt = box(rng), om = box(rng), t = 1.0;
    const auto plus = response_detail::quad_pair(wt, om, t, 1.0, 1e-12 * wt,
                                                 1e-12 * wt, 1e-10);
    const auto swapped = response_detail::quad_pair(wt, -om, t, 1.0, 1e-12 * wt,
                                                    1e-12 * wt, 1e-10);
    CHECK(std::abs(plus.f_plus - swapped.f_minus) <= 1e-9 * std::abs(plus.f_plus) + 1e-24);
    CHECK(std::abs(plus.f_minus - swapped.f_plus) <= 1e-9 * std::abs(plus.f_minus) + 1e-24);
  }
}

TEST_CASE("oracle equivalence on a randomized grid") {
  // A fast slice of the full acceptance suite: quadrature against the closed
  // form across the design envelope, including deeply suppressed branches.
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> box(0.1, 30.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double wt = box(rng), om = box(rng), t = 1.0;
    const auto am = response_detail::branch_analytic(wt, om, t, -1, 1.0);
    const auto ap = response_detail::branch_analytic(wt, om, t, +1, 1.0);
    const double abs_m = std::abs(am) >= 1e-30 * wt ? 1e-9 * std::abs(am) : 1e-21 * wt;
    const double abs_p = std::abs(ap) >= 1e-30 * wt ? 1e-9 * std::abs(ap) : 1e-21 * wt;
    const auto q = response_detail::quad_pair(wt, om, t, 1.0, abs_m, abs_p, 1e-10);
    if (std::abs(am) >= 1e-30 * wt) {
      worst = std::max(worst, std::abs(q.f_minus - am) / std::abs(am));
    } else {
      CHECK(std::abs(q.f_minus) < 1e-20 * wt);
    }
    if (std::abs(ap) >= 1e-30 * wt) {
      worst = std::max(worst, std::abs(q.f_plus - ap) / std::abs(ap));
    } else {
      CHECK(std::abs(q.f_plus) < 1e-20 * wt);
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("deep suppression needs the high-precision tiers") {
  // (wt - Omega) T = 9 puts the near branch around 1e-28 of its scale; a
  // double-precision integrator cannot see this value at all.
  const double wt = 14.0, om = 5.0, t = 1.0;
  const auto ana = response_detail::branch_analytic(wt, om, t, -1, 1.0);
  REQUIRE(std::abs(ana) < 1e-26 * wt);
  REQUIRE(std::abs(ana) > 1e-30 * wt);
  const auto q = response_detail::quad_pair(wt, om, t, 1.0, 1e-9 * std::abs(ana),
                                            1e-21 * wt, 1e-10);
  CHECK(std::abs(q.f_minus - ana) / std::abs(ana) < 1e-8);
  CHECK(std::string(q.precision) == "quad-double");
}

TEST_CASE("smearing factor multiplies both branches") {
  const double r = 0.8;
  const CoherentAmplitude amp{{1.0, 0.0}, {0.0, 0.0, 1.3}, std::hypot(1.3, 1.0)};
  const DetectorConfig with_r = make_detector(1.5, 2.0, 1.0, r);
  const DetectorConfig point = make_detector(1.5, 2.0, 1.0, 0.0);
  const auto a = response_analytic(with_r, amp);
  const auto b = response_analytic(point, amp);
  const double factor = smearing_fourier(with_r, amp.momentum_ev).real();
  CHECK(a.f_minus.imag() == doctest::Approx(b.f_minus.imag() * factor).epsilon(1e-14));
  CHECK(a.f_plus.imag() == doctest::Approx(b.f_plus.imag() * factor).epsilon(1e-14));

  const auto qa = response_quadrature(with_r, amp);
  CHECK(std::abs(qa.f_minus - a.f_minus) <= 1e-8 * std::abs(a.f_minus) + 1e-20);
}

TEST_CASE("unreachable oscillation counts are refused with diagnostics") {
  // omega_tilde T ~ 1e9 would need billions of panels.
  CHECK_THROWS_AS(response_quadrature(make_detector(1e-6, 1.5e15), mode_at(1e-6)),
                  QuadratureError);
}
