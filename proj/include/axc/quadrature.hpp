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

#include <array>
#include <functional>

#include "axc/errors.hpp"
#include "axc/multiprec.hpp"

namespace axc {

inline constexpr int kGaussOrder = 16;

/// Gauss-Legendre nodes/weights on [-1, 1], generated by Newton iteration at
/// the working precision of T, so the high-precision integrator tiers are not
/// limited by double-precision node tables.
template <class T>
struct GaussRule {
  std::array<T, kGaussOrder> x;
  std::array<T, kGaussOrder> w;
};

template <class T>
const GaussRule<T>& gauss_rule();

extern template const GaussRule<double>& gauss_rule<double>();
extern template const GaussRule<mp::DD>& gauss_rule<mp::DD>();
extern template const GaussRule<mp::QD>& gauss_rule<mp::QD>();

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_depth = 32;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// Adaptive Gauss-Legendre integration of a real integrand over [a, b].
/// Panels are bisected until the full-vs-halves discrepancy meets the
/// tolerance budget or drops below the roundoff floor of the panel.
/// Throws QuadratureError if the depth limit is hit with a genuine
/// (above-floor) discrepancy outstanding.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts = {});

}  // namespace axc
