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

#include "axc/quadrature.hpp"

#include <cmath>
#include <sstream>

namespace axc {

namespace {

// Legendre P_n(x) and P_{n-1}(x) by the three-term recurrence.
template <class T>
void legendre_pair(int n, const T& x, T& pn, T& pnm1) {
  T p0 = T(1.0);
  T p1 = x;
  for (int k = 1; k < n; ++k) {
    const T p2 = (x * p1 * (2.0 * k + 1.0) - p0 * static_cast<double>(k)) /
                 static_cast<double>(k + 1);
    p0 = p1;
    p1 = p2;
  }
  pn = p1;
  pnm1 = p0;
}

template <class T>
GaussRule<T> make_gauss_rule() {
  constexpr int n = kGaussOrder;
  GaussRule<T> rule;
  for (int i = 0; i < n / 2; ++i) {
    // Seed in double, then polish at working precision. Newton converges
    // quadratically, so a handful of iterations saturates each tier.
    double xd = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 8; ++it) {
      double pn, pnm1;
      legendre_pair<double>(n, xd, pn, pnm1);
      const double dp = n * (xd * pn - pnm1) / (xd * xd - 1.0);
      xd -= pn / dp;
    }
    T x = T(xd);
    for (int it = 0; it < 4; ++it) {
      T pn, pnm1;
      legendre_pair<T>(n, x, pn, pnm1);
      const T dp = (x * pn - pnm1) * static_cast<double>(n) / (x * x - 1.0);
      x = x - pn / dp;
    }
    T pn, pnm1;
    legendre_pair<T>(n, x, pn, pnm1);
    const T dp = (x * pn - pnm1) * static_cast<double>(n) / (x * x - 1.0);
    const T w = 2.0 / ((1.0 - x * x) * dp * dp);

    rule.x[static_cast<std::size_t>(i)] = -x;
    rule.w[static_cast<std::size_t>(i)] = w;
    rule.x[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.w[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

struct PanelEval {
  double integral;
  double abs_integral;
};

PanelEval eval_panel(const std::function<double(double)>& f, double a, double b,
                     long& evals) {
  const auto& rule = gauss_rule<double>();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0, abs_sum = 0.0;
  for (int j = 0; j < kGaussOrder; ++j) {
    const double v = f(mid + half * rule.x[static_cast<std::size_t>(j)]);
    const double wv = rule.w[static_cast<std::size_t>(j)] * v;
    sum += wv;
    abs_sum += std::abs(wv);
  }
  evals += kGaussOrder;
  return {half * sum, half * abs_sum};
}

struct Accumulator {
  double value = 0.0;
  double est = 0.0;
  double mass = 0.0;
};

void recurse(const std::function<double(double)>& f, double a, double b,
             const PanelEval& whole, double tol, int depth, int max_depth,
             Accumulator& acc, long& evals) {
  const double mid = 0.5 * (a + b);
  const PanelEval left = eval_panel(f, a, mid, evals);
  const PanelEval right = eval_panel(f, mid, b, evals);
  const double halves = left.integral + right.integral;
  const double mass = left.abs_integral + right.abs_integral;
  const double diff = std::abs(whole.integral - halves);
  const double floor = 64.0 * mp::FpTraits<double>::eps * mass;
  if (diff <= tol || diff <= floor) {
    acc.value += halves;
    acc.est += diff;
    acc.mass += mass;
    return;
  }
  if (depth >= max_depth) {
    std::ostringstream msg;
    msg << "adaptive quadrature failed on [" << a << ", " << b
        << "]: discrepancy " << diff << " > tolerance " << tol << " at depth "
        << depth;
    throw QuadratureError(msg.str());
  }
  recurse(f, a, mid, left, 0.5 * tol, depth + 1, max_depth, acc, evals);
  recurse(f, mid, b, right, 0.5 * tol, depth + 1, max_depth, acc, evals);
}

}  // namespace

template <class T>
const GaussRule<T>& gauss_rule() {
  static const GaussRule<T> rule = make_gauss_rule<T>();
  return rule;
}

template const GaussRule<double>& gauss_rule<double>();
template const GaussRule<mp::DD>& gauss_rule<mp::DD>();
template const GaussRule<mp::QD>& gauss_rule<mp::QD>();

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts) {
  if (!(b > a)) throw DomainError("integration interval must have b > a");
  long evals = 0;
  const PanelEval whole = eval_panel(f, a, b, evals);
  const double tol =
      std::max(opts.abs_tol, opts.rel_tol * std::abs(whole.integral));
  Accumulator acc;
  recurse(f, a, b, whole, tol, 0, opts.max_depth, acc, evals);
  const double floor = 64.0 * mp::FpTraits<double>::eps * acc.mass;
  return {acc.value, acc.est + floor, evals};
}

}  // namespace axc
