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

// Compensated multi-word floating point: double-double (~31 digits) and
// quad-double (~62 digits) built on exact two_sum / two_prod transforms.
// The detector-response quadrature has to resolve integrals whose value sits
// thirty-plus orders of magnitude below the mass of the integrand; plain
// double (and even 128-bit floats) cannot reach that, so the integrator
// escalates through these types.
//
// The word-level algorithms follow the well-known double-double/quad-double
// arithmetic of Hida, Li and Bailey. A slow, provably exact expansion
// reference lives next to the fast kernels and the test suite checks one
// against the other over randomized inputs.

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace axc::mp {

// ---------------------------------------------------------------------------
// Error-free transforms.

inline double two_sum(double a, double b, double& err) {
  double s = a + b;
  double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
  return s;
}

/// Requires |a| >= |b| (or a == 0).
inline double quick_two_sum(double a, double b, double& err) {
  double s = a + b;
  err = b - (s - a);
  return s;
}

inline double two_prod(double a, double b, double& err) {
  double p = a * b;
  err = std::fma(a, b, -p);
  return p;
}

// ---------------------------------------------------------------------------
// Double-double.

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h) {}
  constexpr DD(double h, double l) : hi(h), lo(l) {}
};

inline DD dd_add(DD a, DD b) {
  double s1, s2, t1, t2;
  s1 = two_sum(a.hi, b.hi, s2);
  t1 = two_sum(a.lo, b.lo, t2);
  s2 += t1;
  s1 = quick_two_sum(s1, s2, s2);
  s2 += t2;
  s1 = quick_two_sum(s1, s2, s2);
  return {s1, s2};
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }
inline DD dd_sub(DD a, DD b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(DD a, DD b) {
  double p, e;
  p = two_prod(a.hi, b.hi, e);
  e += a.hi * b.lo + a.lo * b.hi;
  p = quick_two_sum(p, e, e);
  return {p, e};
}

inline DD dd_mul_d(DD a, double b) {
  double p, e;
  p = two_prod(a.hi, b, e);
  e += a.lo * b;
  p = quick_two_sum(p, e, e);
  return {p, e};
}

inline DD dd_add_d(DD a, double b) {
  double s1, s2;
  s1 = two_sum(a.hi, b, s2);
  s2 += a.lo;
  s1 = quick_two_sum(s1, s2, s2);
  return {s1, s2};
}

inline DD dd_div(DD a, DD b) {
  double q1 = a.hi / b.hi;
  DD r = dd_sub(a, dd_mul_d(b, q1));
  double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul_d(b, q2));
  double q3 = r.hi / b.hi;
  double s, e;
  s = quick_two_sum(q1, q2, e);
  DD q{s, e};
  return dd_add_d(q, q3);
}

// Operator sugar so templated code reads naturally.
inline DD operator+(DD a, DD b) { return dd_add(a, b); }
inline DD operator-(DD a, DD b) { return dd_sub(a, b); }
inline DD operator*(DD a, DD b) { return dd_mul(a, b); }
inline DD operator/(DD a, DD b) { return dd_div(a, b); }
inline DD operator+(DD a, double b) { return dd_add_d(a, b); }
inline DD operator+(double a, DD b) { return dd_add_d(b, a); }
inline DD operator-(DD a, double b) { return dd_add_d(a, -b); }
inline DD operator-(double a, DD b) { return dd_add_d(dd_neg(b), a); }
inline DD operator*(DD a, double b) { return dd_mul_d(a, b); }
inline DD operator*(double a, DD b) { return dd_mul_d(b, a); }
inline DD operator/(DD a, double b) { return dd_div(a, DD(b)); }
inline DD operator/(double a, DD b) { return dd_div(DD(a), b); }
inline DD operator-(DD a) { return dd_neg(a); }

// ---------------------------------------------------------------------------
// Quad-double.

struct QD {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

  constexpr QD() = default;
  constexpr QD(double x) : c{x, 0.0, 0.0, 0.0} {}
  constexpr QD(double a, double b, double cc, double d) : c{a, b, cc, d} {}
  explicit QD(DD x) : c{x.hi, x.lo, 0.0, 0.0} {}

  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
};

namespace detail {

inline void three_sum(double& a, double& b, double& c) {
  double t1, t2, t3;
  t1 = two_sum(a, b, t2);
  a = two_sum(c, t1, t3);
  b = two_sum(t2, t3, c);
}

inline void three_sum2(double& a, double& b, double c) {
  double t1, t2, t3;
  t1 = two_sum(a, b, t2);
  a = two_sum(c, t1, t3);
  b = t2 + t3;
}

/// Compress five overlapping words into a canonical four-word value.
inline void renorm(double& c0, double& c1, double& c2, double& c3, double& c4) {
  double s0, s1, s2 = 0.0, s3 = 0.0;
  if (std::isinf(c0)) return;

  s0 = quick_two_sum(c3, c4, c4);
  s0 = quick_two_sum(c2, s0, c3);
  s0 = quick_two_sum(c1, s0, c2);
  c0 = quick_two_sum(c0, s0, c1);

  s0 = c0;
  s1 = c1;
  if (s1 != 0.0) {
    s1 = quick_two_sum(s1, c2, s2);
    if (s2 != 0.0) {
      s2 = quick_two_sum(s2, c3, s3);
      if (s3 != 0.0)
        s3 += c4;
      else
        s2 = quick_two_sum(s2, c4, s3);
    } else {
      s1 = quick_two_sum(s1, c3, s2);
      if (s2 != 0.0)
        s2 = quick_two_sum(s2, c4, s3);
      else
        s1 = quick_two_sum(s1, c4, s2);
    }
  } else {
    s0 = quick_two_sum(s0, c2, s1);
    if (s1 != 0.0) {
      s1 = quick_two_sum(s1, c3, s2);
      if (s2 != 0.0)
        s2 = quick_two_sum(s2, c4, s3);
      else
        s1 = quick_two_sum(s1, c4, s2);
    } else {
      s0 = quick_two_sum(s0, c3, s1);
      if (s1 != 0.0)
        s1 = quick_two_sum(s1, c4, s2);
      else
        s0 = quick_two_sum(s0, c4, s1);
    }
  }
  c0 = s0;
  c1 = s1;
  c2 = s2;
  c3 = s3;
}

}  // namespace detail

inline QD qd_add(const QD& a, const QD& b) {
  double s0, s1, s2, s3;
  double t0, t1, t2, t3;

  s0 = two_sum(a[0], b[0], t0);
  s1 = two_sum(a[1], b[1], t1);
  s2 = two_sum(a[2], b[2], t2);
  s3 = two_sum(a[3], b[3], t3);

  s1 = two_sum(s1, t0, t0);
  detail::three_sum(s2, t0, t1);
  detail::three_sum2(s3, t0, t2);
  t0 = t0 + t1 + t3;

  detail::renorm(s0, s1, s2, s3, t0);
  return {s0, s1, s2, s3};
}

inline QD qd_neg(const QD& a) { return {-a[0], -a[1], -a[2], -a[3]}; }
inline QD qd_sub(const QD& a, const QD& b) { return qd_add(a, qd_neg(b)); }

inline QD qd_add_d(const QD& a, double b) {
  double c0, c1, c2, c3, e;
  c0 = two_sum(a[0], b, e);
  c1 = two_sum(a[1], e, e);
  c2 = two_sum(a[2], e, e);
  c3 = two_sum(a[3], e, e);
  detail::renorm(c0, c1, c2, c3, e);
  return {c0, c1, c2, c3};
}

inline QD qd_mul(const QD& a, const QD& b) {
  double p0, p1, p2, p3, p4, p5;
  double q0, q1, q2, q3, q4, q5;
  double p6, p7, p8, p9;
  double q6, q7, q8, q9;
  double r0, r1;
  double t0, t1, t2;
  double s0, s1, s2;

  p0 = two_prod(a[0], b[0], q0);
  p1 = two_prod(a[0], b[1], q1);
  p2 = two_prod(a[1], b[0], q2);
  p3 = two_prod(a[0], b[2], q3);
  p4 = two_prod(a[1], b[1], q4);
  p5 = two_prod(a[2], b[0], q5);

  detail::three_sum(p1, p2, q0);

  // six-three sum of (p2, q1, q2) and (p3, p4, p5)
  detail::three_sum(p2, q1, q2);
  detail::three_sum(p3, p4, p5);
  s0 = two_sum(p2, p3, t0);
  s1 = two_sum(q1, p4, t1);
  s2 = q2 + p5;
  s1 = two_sum(s1, t0, t0);
  s2 += (t0 + t1);

  p6 = two_prod(a[0], b[3], q6);
  p7 = two_prod(a[1], b[2], q7);
  p8 = two_prod(a[2], b[1], q8);
  p9 = two_prod(a[3], b[0], q9);

  // nine-two sum of q0, s1, q3, q4, q5, p6, p7, p8, p9
  q0 = two_sum(q0, q3, q3);
  q4 = two_sum(q4, q5, q5);
  p6 = two_sum(p6, p7, p7);
  p8 = two_sum(p8, p9, p9);
  t0 = two_sum(q0, q4, t2);
  t1 = q3 + q5 + t2;
  r0 = two_sum(p6, p8, t2);
  r1 = p7 + p9 + t2;
  q3 = two_sum(t0, r0, t2);
  q4 = t1 + r1 + t2;
  t0 = two_sum(q3, s1, t1);
  t1 += q4;

  // order eps^4 trailing terms
  t1 += a[1] * b[3] + a[2] * b[2] + a[3] * b[1] + q6 + q7 + q8 + q9 + s2;

  detail::renorm(p0, p1, s0, t0, t1);
  return {p0, p1, s0, t0};
}

inline QD qd_mul_d(const QD& a, double b) {
  double p0, p1, p2, p3;
  double q0, q1, q2;
  double s0, s1, s2, s3, s4;

  p0 = two_prod(a[0], b, q0);
  p1 = two_prod(a[1], b, q1);
  p2 = two_prod(a[2], b, q2);
  p3 = a[3] * b;

  s0 = p0;
  s1 = two_sum(q0, p1, s2);
  detail::three_sum(s2, q1, p2);
  detail::three_sum2(q1, q2, p3);
  s3 = q1;
  s4 = q2 + p2;
  detail::renorm(s0, s1, s2, s3, s4);
  return {s0, s1, s2, s3};
}

inline QD qd_div(const QD& a, const QD& b) {
  double q0 = a[0] / b[0];
  QD r = qd_sub(a, qd_mul_d(b, q0));
  double q1 = r[0] / b[0];
  r = qd_sub(r, qd_mul_d(b, q1));
  double q2 = r[0] / b[0];
  r = qd_sub(r, qd_mul_d(b, q2));
  double q3 = r[0] / b[0];
  r = qd_sub(r, qd_mul_d(b, q3));
  double q4 = r[0] / b[0];
  detail::renorm(q0, q1, q2, q3, q4);
  return {q0, q1, q2, q3};
}

inline QD operator+(const QD& a, const QD& b) { return qd_add(a, b); }
inline QD operator-(const QD& a, const QD& b) { return qd_sub(a, b); }
inline QD operator*(const QD& a, const QD& b) { return qd_mul(a, b); }
inline QD operator/(const QD& a, const QD& b) { return qd_div(a, b); }
inline QD operator+(const QD& a, double b) { return qd_add_d(a, b); }
inline QD operator+(double a, const QD& b) { return qd_add_d(b, a); }
inline QD operator-(const QD& a, double b) { return qd_add_d(a, -b); }
inline QD operator-(double a, const QD& b) { return qd_add_d(qd_neg(b), a); }
inline QD operator*(const QD& a, double b) { return qd_mul_d(a, b); }
inline QD operator*(double a, const QD& b) { return qd_mul_d(b, a); }
inline QD operator/(const QD& a, double b) { return qd_div(a, QD(b)); }
inline QD operator/(double a, const QD& b) { return qd_div(QD(a), b); }
inline QD operator-(const QD& a) { return qd_neg(a); }

// ---------------------------------------------------------------------------
// Conversions and scalar helpers.

inline double to_double(double x) { return x; }
inline double to_double(DD x) { return x.hi + x.lo; }
inline double to_double(const QD& x) { return ((x[3] + x[2]) + x[1]) + x[0]; }

template <class T>
T from_double(double x) {
  return T(x);
}

inline double mp_ldexp(double a, int n) { return std::ldexp(a, n); }
inline DD mp_ldexp(DD a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }
inline QD mp_ldexp(const QD& a, int n) {
  return {std::ldexp(a[0], n), std::ldexp(a[1], n), std::ldexp(a[2], n),
          std::ldexp(a[3], n)};
}

template <class T>
T mp_abs(const T& x) {
  return to_double(x) < 0.0 ? -x : x;
}

// ---------------------------------------------------------------------------
// Type traits: working precision and elementary-function term targets.

template <class T>
struct FpTraits;

template <>
struct FpTraits<double> {
  static constexpr double eps = 2.220446049250313e-16;  // 2^-52
  static constexpr const char* name = "double";
};

template <>
struct FpTraits<DD> {
  static constexpr double eps = 4.93038065763132e-32;  // 2^-104
  static constexpr const char* name = "double-double";
};

template <>
struct FpTraits<QD> {
  // Conservative working precision; the canonical representation carries
  // ~2^-211 but the fast kernels are a few ulps sloppier.
  static constexpr double eps = 6.2230152778611672e-61;  // 2^-200
  static constexpr const char* name = "quad-double";
};

// ---------------------------------------------------------------------------
// Constants and elementary functions.

const DD& dd_pi();
const DD& dd_ln2();
const QD& qd_pi();
const QD& qd_ln2();

/// Series value of atan(1/n); exposed so tests can cross-check the cached
/// constants through an independent identity.
QD qd_atan_inv(int n);

template <class T>
const T& mp_pi();
template <>
inline const double& mp_pi<double>() {
  static const double v = 3.14159265358979323846;
  return v;
}
template <>
inline const DD& mp_pi<DD>() {
  return dd_pi();
}
template <>
inline const QD& mp_pi<QD>() {
  return qd_pi();
}

template <class T>
const T& mp_ln2();
template <>
inline const double& mp_ln2<double>() {
  static const double v = 0.69314718055994530942;
  return v;
}
template <>
inline const DD& mp_ln2<DD>() {
  return dd_ln2();
}
template <>
inline const QD& mp_ln2<QD>() {
  return qd_ln2();
}

DD dd_exp(DD x);
QD qd_exp(const QD& x);
void dd_sincos(DD x, DD& s, DD& c);
void qd_sincos(const QD& x, QD& s, QD& c);
DD dd_sqrt(DD x);
QD qd_sqrt(const QD& x);

inline double mp_exp(double x) { return std::exp(x); }
inline DD mp_exp(DD x) { return dd_exp(x); }
inline QD mp_exp(const QD& x) { return qd_exp(x); }

inline void mp_sincos(double x, double& s, double& c) {
  s = std::sin(x);
  c = std::cos(x);
}
inline void mp_sincos(DD x, DD& s, DD& c) { dd_sincos(x, s, c); }
inline void mp_sincos(const QD& x, QD& s, QD& c) { qd_sincos(x, s, c); }

inline double mp_sqrt(double x) { return std::sqrt(x); }
inline DD mp_sqrt(DD x) { return dd_sqrt(x); }
inline QD mp_sqrt(const QD& x) { return qd_sqrt(x); }

// ---------------------------------------------------------------------------
// Minimal complex type over any of the word types.

template <class T>
struct Cplx {
  T re{};
  T im{};

  Cplx() = default;
  Cplx(T r, T i) : re(r), im(i) {}
};

template <class T>
Cplx<T> operator+(const Cplx<T>& a, const Cplx<T>& b) {
  return {a.re + b.re, a.im + b.im};
}
template <class T>
Cplx<T> operator-(const Cplx<T>& a, const Cplx<T>& b) {
  return {a.re - b.re, a.im - b.im};
}
template <class T>
Cplx<T> operator*(const Cplx<T>& a, const Cplx<T>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class T>
Cplx<T> conj(const Cplx<T>& a) {
  return {a.re, -a.im};
}
template <class T>
Cplx<T> scale(const Cplx<T>& a, const T& s) {
  return {a.re * s, a.im * s};
}
/// Cheap magnitude bound |re| + |im| (used for error bookkeeping only).
template <class T>
double abs_bound(const Cplx<T>& a) {
  return std::abs(to_double(a.re)) + std::abs(to_double(a.im));
}

// ---------------------------------------------------------------------------
// Exact expansion arithmetic (Shewchuk). Slow; used as the correctness
// reference for the fast kernels in the test suite.

/// Exact sum of a list of doubles as a nonoverlapping expansion
/// (least-significant component first).
std::vector<double> exact_expansion_sum(const std::vector<double>& terms);

/// Exact value comparison helper: |sum(terms) - approx| as a double, where
/// the subtraction is performed in exact expansion arithmetic.
double exact_residual(const std::vector<double>& terms, const std::vector<double>& approx);

}  // namespace axc::mp
