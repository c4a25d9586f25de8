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

#include "axc/quadrature.hpp"

using namespace axc;

TEST_CASE("gauss rule sums the right moments") {
  const auto& rule = gauss_rule<double>();
  double w_sum = 0.0, x2_sum = 0.0, x14_sum = 0.0;
  for (int j = 0; j < kGaussOrder; ++j) {
    w_sum += rule.w[static_cast<std::size_t>(j)];
    const double x = rule.x[static_cast<std::size_t>(j)];
    x2_sum += rule.w[static_cast<std::size_t>(j)] * x * x;
    x14_sum += rule.w[static_cast<std::size_t>(j)] * std::pow(x, 14);
  }
  CHECK(w_sum == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(x2_sum == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(x14_sum == doctest::Approx(2.0 / 15.0).epsilon(1e-13));

  // high-precision rules agree with the double rule at double precision
  const auto& rule_qd = gauss_rule<mp::QD>();
  mp::QD w_qd{};
  for (int j = 0; j < kGaussOrder; ++j) {
    w_qd = w_qd + rule_qd.w[static_cast<std::size_t>(j)];
    CHECK(mp::to_double(rule_qd.x[static_cast<std::size_t>(j)]) ==
          doctest::Approx(rule.x[static_cast<std::size_t>(j)]).epsilon(1e-15));
  }
  CHECK(std::abs(mp::to_double(w_qd - mp::QD(2.0))) < 1e-58);
}

TEST_CASE("adaptive integrator on known integrals") {
  // Gaussian times an oscillation: int exp(-x^2) cos(3x) = sqrt(pi) e^{-9/4}
  const auto res = integrate(
      [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); }, -6.5, 6.5,
      {1e-14, 1e-14, 32});
  const double expected = std::sqrt(M_PI) * std::exp(-9.0 / 4.0);
  CHECK(res.value == doctest::Approx(expected).epsilon(1e-13));

  // polynomial is integrated exactly by a single panel
  const auto poly =
      integrate([](double x) { return x * x * x - 2.0 * x + 1.0; }, -1.0, 3.0);
  CHECK(poly.value == doctest::Approx(16.0).epsilon(1e-14));

  CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 1.0), DomainError);
}

TEST_CASE("integrator reports non-convergence instead of a wrong answer") {
  // A discontinuity cannot be resolved within a shallow depth limit.
  CHECK_THROWS_AS(integrate([](double x) { return x < 0.3333 ? 0.0 : 1.0; },
                            0.0, 1.0, {1e-15, 1e-15, 6}),
                  QuadratureError);
}
