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

#include "axc/multiprec.hpp"

#include <limits>

namespace axc::mp {

namespace {

// Taylor series for atan(1/n), n >= 2. Converges geometrically with ratio
// 1/n^2; used only to seed the cached constants.
template <class T>
T atan_inv(int n) {
  const double eps = FpTraits<T>::eps;
  const T inv_n2 = T(1.0) / T(static_cast<double>(n) * static_cast<double>(n));
  T power = T(1.0) / T(static_cast<double>(n));
  T sum{};
  for (int k = 0; k < 500; ++k) {
    const T term = power / static_cast<double>(2 * k + 1);
    sum = (k % 2 == 0) ? sum + term : sum - term;
    power = power * inv_n2;
    if (std::abs(to_double(power)) < eps * 1e-3) break;
  }
  return sum;
}

// atanh(1/3) = ln(2)/2.
template <class T>
T atanh_inv3() {
  const double eps = FpTraits<T>::eps;
  const T inv9 = T(1.0) / T(9.0);
  T power = T(1.0) / T(3.0);
  T sum{};
  for (int k = 0; k < 500; ++k) {
    const T term = power / static_cast<double>(2 * k + 1);
    sum = sum + term;
    power = power * inv9;
    if (std::abs(to_double(power)) < eps * 1e-3) break;
  }
  return sum;
}

template <class T>
T exp_impl(const T& x) {
  const double xd = to_double(x);
  if (xd < -745.0) return T(0.0);
  if (xd > 709.0) return T(std::numeric_limits<double>::infinity());

  const double k = std::nearbyint(xd / 0.6931471805599453);
  T r = x - mp_ln2<T>() * k;
  constexpr int kScale = 9;  // Taylor argument scaled to |r| <= ln2 / 1024
  r = mp_ldexp(r, -kScale);

  const double eps = FpTraits<T>::eps;
  T p = r;  // accumulates e^r - 1
  T term = r;
  for (int i = 2; i < 64; ++i) {
    term = term * r / static_cast<double>(i);
    p = p + term;
    if (std::abs(to_double(term)) < eps * 1e-4) break;
  }
  for (int i = 0; i < kScale; ++i) {
    p = p * (p + 2.0);  // e^{2a} - 1 = (e^a - 1)(e^a + 1)
  }
  return mp_ldexp(p + 1.0, static_cast<int>(k));
}

template <class T>
void sincos_impl(const T& x, T& s_out, T& c_out) {
  const double xd = to_double(x);
  const T half_pi = mp_ldexp(mp_pi<T>(), -1);
  const double q = std::nearbyint(xd / 1.5707963267948966);
  const T r = x - half_pi * q;
  const int quadrant =
      static_cast<int>(((static_cast<long long>(q) % 4) + 4) % 4);

  const double eps = FpTraits<T>::eps;
  const T r2 = r * r;

  T s = r, term = r;
  for (int i = 1; i < 64; ++i) {
    term = term * r2 / ((2.0 * i) * (2.0 * i + 1.0));
    s = (i % 2 == 1) ? s - term : s + term;
    if (std::abs(to_double(term)) < eps * 1e-3) break;
  }

  T c = T(1.0), cterm = T(1.0);
  for (int i = 1; i < 64; ++i) {
    cterm = cterm * r2 / ((2.0 * i - 1.0) * (2.0 * i));
    c = (i % 2 == 1) ? c - cterm : c + cterm;
    if (std::abs(to_double(cterm)) < eps * 1e-3) break;
  }

  switch (quadrant) {
    case 0: s_out = s; c_out = c; break;
    case 1: s_out = c; c_out = -s; break;
    case 2: s_out = -s; c_out = -c; break;
    default: s_out = -c; c_out = s; break;
  }
}

template <class T>
T sqrt_impl(const T& x) {
  const double xd = to_double(x);
  if (xd == 0.0) return T(0.0);
  // Newton iteration on the reciprocal square root, seeded from double.
  T y = T(1.0 / std::sqrt(xd));
  for (int i = 0; i < 4; ++i) {
    y = y * (1.5 - mp_ldexp(x * y * y, -1));
  }
  return x * y;
}

}  // namespace

QD qd_atan_inv(int n) { return atan_inv<QD>(n); }

const QD& qd_pi() {
  static const QD v = atan_inv<QD>(5) * 16.0 - atan_inv<QD>(239) * 4.0;
  return v;
}

const QD& qd_ln2() {
  static const QD v = atanh_inv3<QD>() * 2.0;
  return v;
}

const DD& dd_pi() {
  // Truncating a canonical quad-double yields a valid double-double.
  static const DD v = [] {
    const QD& p = qd_pi();
    return DD{p[0], p[1]};
  }();
  return v;
}

const DD& dd_ln2() {
  static const DD v = [] {
    const QD& p = qd_ln2();
    return DD{p[0], p[1]};
  }();
  return v;
}

DD dd_exp(DD x) { return exp_impl<DD>(x); }
QD qd_exp(const QD& x) { return exp_impl<QD>(x); }
void dd_sincos(DD x, DD& s, DD& c) { sincos_impl<DD>(x, s, c); }
void qd_sincos(const QD& x, QD& s, QD& c) { sincos_impl<QD>(x, s, c); }
DD dd_sqrt(DD x) { return sqrt_impl<DD>(x); }
QD qd_sqrt(const QD& x) { return sqrt_impl<QD>(x); }

std::vector<double> exact_expansion_sum(const std::vector<double>& terms) {
  std::vector<double> e;  // nonoverlapping, least-significant first
  for (double t : terms) {
    if (t == 0.0) continue;
    std::vector<double> h;
    h.reserve(e.size() + 1);
    double q = t;
    for (double comp : e) {
      double err;
      q = two_sum(q, comp, err);
      if (err != 0.0) h.push_back(err);
    }
    h.push_back(q);
    e = std::move(h);
  }
  return e;
}

double exact_residual(const std::vector<double>& terms,
                      const std::vector<double>& approx) {
  std::vector<double> all = terms;
  all.reserve(all.size() + approx.size());
  for (double a : approx) all.push_back(-a);
  const auto e = exact_expansion_sum(all);
  double s = 0.0;
  for (double v : e) s += v;  // increasing significance; head dominates
  return s;
}

}  // namespace axc::mp
