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

#include "axc/response.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "axc/quadrature.hpp"

namespace axc {

namespace response_detail {

namespace {

using mp::Cplx;
using mp::FpTraits;
using mp::QD;
using mp::DD;

constexpr double kFloorSafety = 64.0;
constexpr long kMaxPanels = 4'000'000;
constexpr int kMaxRefineDepth = 30;
constexpr long kMaxFlagged = 4096;

// The integrand in "S units" (the switching normalization 1/(pi T), the i wt
// prefactor and the smearing factor are folded back in at the end):
//
//   s(tau) = exp(-tau^2 / (pi T^2)) * e^{i wt tau} * e^{branch * i gap tau}
//
// Phases at the Gauss nodes advance by a constant rotation from one panel to
// the next and the Gaussian obeys a two-term multiplicative recurrence, so a
// sweep over the panel grid costs a handful of multiplications per node
// instead of three transcendental calls. This matters because the high
// tiers evaluate the same grid in software arithmetic.
template <class T>
class PanelWalker {
 public:
  PanelWalker(const T& left_edge, const T& width, const T& gauss_c, double wt,
              double gap)
      : h_(width), c_(gauss_c) {
    const auto& rule = gauss_rule<T>();
    const T half = mp::mp_ldexp(h_, -1);
    const T two_h = mp::mp_ldexp(h_, 1);
    q_ = mp::mp_exp(-(two_h * h_) / c_);
    T sw, cw;
    mp::mp_sincos(T(wt) * h_, sw, cw);
    step_w_ = {cw, sw};
    mp::mp_sincos(T(gap) * h_, sw, cw);
    step_o_ = {cw, sw};
    for (int j = 0; j < kGaussOrder; ++j) {
      const T tau0 = left_edge + half * (rule.x[static_cast<std::size_t>(j)] + 1.0);
      gauss_[j] = mp::mp_exp(-(tau0 * tau0) / c_);
      ratio_[j] = mp::mp_exp(-(two_h * tau0 + h_ * h_) / c_);
      wh_[j] = rule.w[static_cast<std::size_t>(j)] * half;
      mp::mp_sincos(T(wt) * tau0, sw, cw);
      rot_w_[j] = {cw, sw};
      mp::mp_sincos(T(gap) * tau0, sw, cw);
      rot_o_[j] = {cw, sw};
    }
  }

  struct Panel {
    Cplx<T> minus;
    Cplx<T> plus;
    T mass;
  };

  Panel next() {
    Panel p;
    p.mass = T(0.0);
    for (int j = 0; j < kGaussOrder; ++j) {
      const T m = wh_[j] * gauss_[j];
      const T p1 = rot_o_[j].re * rot_w_[j].re;
      const T p2 = rot_o_[j].im * rot_w_[j].im;
      const T p3 = rot_o_[j].re * rot_w_[j].im;
      const T p4 = rot_o_[j].im * rot_w_[j].re;
      // plus branch: e^{+i gap tau} e^{i wt tau}; minus branch the conjugate
      // rotation of the gap factor.
      p.plus.re = p.plus.re + m * (p1 - p2);
      p.plus.im = p.plus.im + m * (p3 + p4);
      p.minus.re = p.minus.re + m * (p1 + p2);
      p.minus.im = p.minus.im + m * (p3 - p4);
      p.mass = p.mass + m;

      gauss_[j] = gauss_[j] * ratio_[j];
      ratio_[j] = ratio_[j] * q_;
      rot_w_[j] = rot_w_[j] * step_w_;
      rot_o_[j] = rot_o_[j] * step_o_;
    }
    return p;
  }

 private:
  T h_, c_, q_;
  Cplx<T> step_w_, step_o_;
  std::array<Cplx<T>, kGaussOrder> rot_w_, rot_o_;
  std::array<T, kGaussOrder> gauss_, ratio_, wh_;
};

template <class T>
struct DirectPanel {
  Cplx<T> minus;
  Cplx<T> plus;
  T mass;
};

// Direct (transcendental-per-node) evaluation; only used to re-integrate the
// rare panel whose full-vs-halves discrepancy exceeds its budget.
template <class T>
DirectPanel<T> direct_eval(const T& a, const T& b, const T& c, double wt, double gap) {
  const auto& rule = gauss_rule<T>();
  DirectPanel<T> out;
  out.mass = T(0.0);
  const T mid = mp::mp_ldexp(a + b, -1);
  const T half = mp::mp_ldexp(b - a, -1);
  for (int j = 0; j < kGaussOrder; ++j) {
    const T tau = mid + half * rule.x[static_cast<std::size_t>(j)];
    const T g = mp::mp_exp(-(tau * tau) / c);
    T sw, cw, so, co;
    mp::mp_sincos(T(wt) * tau, sw, cw);
    mp::mp_sincos(T(gap) * tau, so, co);
    const T m = rule.w[static_cast<std::size_t>(j)] * half * g;
    const T p1 = co * cw, p2 = so * sw, p3 = co * sw, p4 = so * cw;
    out.plus.re = out.plus.re + m * (p1 - p2);
    out.plus.im = out.plus.im + m * (p3 + p4);
    out.minus.re = out.minus.re + m * (p1 + p2);
    out.minus.im = out.minus.im + m * (p3 - p4);
    out.mass = out.mass + m;
  }
  return out;
}

template <class T>
void refine_direct(const T& a, const T& b, const T& c, double wt, double gap,
                   const DirectPanel<T>& whole, double tol, int depth,
                   DirectPanel<T>& acc, double& est) {
  const T mid = mp::mp_ldexp(a + b, -1);
  const DirectPanel<T> left = direct_eval(a, mid, c, wt, gap);
  const DirectPanel<T> right = direct_eval(mid, b, c, wt, gap);
  DirectPanel<T> halves;
  halves.minus = left.minus + right.minus;
  halves.plus = left.plus + right.plus;
  halves.mass = left.mass + right.mass;
  const double diff = std::max(mp::abs_bound(whole.minus - halves.minus),
                               mp::abs_bound(whole.plus - halves.plus));
  const double floor =
      kFloorSafety * FpTraits<T>::eps * mp::to_double(halves.mass);
  if (diff <= tol || diff <= floor) {
    acc.minus = acc.minus + halves.minus;
    acc.plus = acc.plus + halves.plus;
    acc.mass = acc.mass + halves.mass;
    est += diff;
    return;
  }
  if (depth >= kMaxRefineDepth) {
    std::ostringstream msg;
    msg << "panel refinement stalled (discrepancy " << diff << " > tol " << tol
        << " at depth " << depth << ")";
    throw QuadratureError(msg.str());
  }
  refine_direct(a, mid, c, wt, gap, left, 0.5 * tol, depth + 1, acc, est);
  refine_direct(mid, b, c, wt, gap, right, 0.5 * tol, depth + 1, acc, est);
}

template <class T>
struct KahanSum {
  Cplx<T> sum;
  Cplx<T> comp;

  void add(const Cplx<T>& v) {
    T y = v.re - comp.re;
    T t = sum.re + y;
    comp.re = (t - sum.re) - y;
    sum.re = t;
    y = v.im - comp.im;
    t = sum.im + y;
    comp.im = (t - sum.im) - y;
    sum.im = t;
  }
};

template <class T>
struct TierOut {
  Cplx<T> minus;
  Cplx<T> plus;
  double mass = 0.0;
  double est_minus = 0.0;
  double est_plus = 0.0;
};

template <class T>
TierOut<T> run_tier(double wt, double gap, double duration, double window, long n_panels,
                    double abs_s_minus, double abs_s_plus) {
  const T neg_w = T(-window);
  const T h = mp::mp_ldexp(T(window), 1) / static_cast<double>(n_panels);
  const T c = mp::mp_pi<T>() * T(duration) * T(duration);

  PanelWalker<T> full(neg_w, h, c, wt, gap);
  PanelWalker<T> halves(neg_w, mp::mp_ldexp(h, -1), c, wt, gap);

  KahanSum<T> acc_minus, acc_plus;
  T mass = T(0.0);
  double est_m = 0.0, est_p = 0.0;

  struct Flagged {
    T a, b;
    typename PanelWalker<T>::Panel full_panel;
  };
  std::vector<Flagged> flagged;

  const double budget_m = 0.25 * abs_s_minus / static_cast<double>(n_panels);
  const double budget_p = 0.25 * abs_s_plus / static_cast<double>(n_panels);

  for (long k = 0; k < n_panels; ++k) {
    const auto fp = full.next();
    const auto h1 = halves.next();
    const auto h2 = halves.next();
    const Cplx<T> hm = h1.minus + h2.minus;
    const Cplx<T> hp = h1.plus + h2.plus;
    const T pmass = h1.mass + h2.mass;
    const double dm = mp::abs_bound(fp.minus - hm);
    const double dp = mp::abs_bound(fp.plus - hp);
    const double floor =
        kFloorSafety * FpTraits<T>::eps * mp::to_double(pmass);
    const bool flag = (dm > std::max(budget_m, 4.0 * floor)) ||
                      (dp > std::max(budget_p, 4.0 * floor));
    if (flag) {
      if (static_cast<long>(flagged.size()) >= kMaxFlagged) {
        throw QuadratureError(
            "panel error estimator indicates systematic failure (too many "
            "flagged panels)");
      }
      const T a = neg_w + h * static_cast<double>(k);
      const T b = neg_w + h * static_cast<double>(k + 1);
      flagged.push_back({a, b, fp});
    } else {
      acc_minus.add(hm);
      acc_plus.add(hp);
      est_m += dm;
      est_p += dp;
    }
    mass = mass + pmass;
  }

  for (const auto& f : flagged) {
    DirectPanel<T> acc;
    acc.mass = T(0.0);
    double est = 0.0;
    DirectPanel<T> whole;
    whole.minus = f.full_panel.minus;
    whole.plus = f.full_panel.plus;
    whole.mass = f.full_panel.mass;
    refine_direct(f.a, f.b, c, wt, gap, whole,
                  std::min(budget_m, budget_p), 0, acc, est);
    acc_minus.add(acc.minus);
    acc_plus.add(acc.plus);
    est_m += est;
    est_p += est;
  }

  TierOut<T> out;
  out.minus = acc_minus.sum;
  out.plus = acc_plus.sum;
  out.mass = mp::to_double(mass);
  out.est_minus = est_m;
  out.est_plus = est_p;
  return out;
}

struct TierResult {
  std::complex<double> f_minus, f_plus;
  double err_minus, err_plus;
};

template <class T>
TierResult run_tier_scaled(double wt, double gap, double duration, double fourier,
                           double window, long n_panels, double trunc_f,
                           double abs_f_minus, double abs_f_plus) {
  const double conv = wt * fourier / (M_PI * duration);
  const auto tier = run_tier<T>(wt, gap, duration, window, n_panels,
                                abs_f_minus / conv, abs_f_plus / conv);
  const double floor = kFloorSafety * FpTraits<T>::eps * tier.mass;
  TierResult r;
  // the defining integrand carries a leading factor i wt / (pi T)
  r.f_minus = {-conv * mp::to_double(tier.minus.im), conv * mp::to_double(tier.minus.re)};
  r.f_plus = {-conv * mp::to_double(tier.plus.im), conv * mp::to_double(tier.plus.re)};
  r.err_minus = conv * (tier.est_minus + floor) + trunc_f;
  r.err_plus = conv * (tier.est_plus + floor) + trunc_f;
  return r;
}

}  // namespace

std::complex<double> branch_analytic(double omega_tilde, double gap, double duration,
                                     int sign, double fourier) {
  const double arg = (omega_tilde + sign * gap) * duration;
  return {0.0, omega_tilde * std::exp(-0.25 * M_PI * arg * arg) * fourier};
}

QuadOutcome quad_pair(double omega_tilde, double gap, double duration, double fourier,
                      double abs_tol_minus, double abs_tol_plus, double rel_tol) {
  if (!(omega_tilde > 0.0) || !(duration > 0.0)) {
    throw DomainError("quad_pair requires omega_tilde > 0 and duration > 0");
  }
  if (!(fourier > 0.0)) {
    // the smearing factor multiplies the whole integrand
    return {{0.0, 0.0}, {0.0, 0.0}, 0.0, 0.0, "exact", 0};
  }
  const double scale = omega_tilde * fourier;
  const double abs_m = abs_tol_minus > 0.0 ? abs_tol_minus : 1e-21 * scale;
  const double abs_p = abs_tol_plus > 0.0 ? abs_tol_plus : 1e-21 * scale;
  const double abs_min = std::min(abs_m, abs_p);

  // Window: truncated switching tails must sit below the absolute target.
  const double log_need = std::log(4.0 * scale / abs_min) + 2.0;
  const double window = duration * std::sqrt(M_PI * std::max(log_need, 32.0));
  const double trunc_f = scale * std::erfc(window / (std::sqrt(M_PI) * duration));

  // Panels never exceed a quarter of the fastest oscillation period nor a
  // quarter of the switching standard deviation.
  const double sigma = std::sqrt(M_PI / 2.0) * duration;
  const double cap =
      std::min(sigma / 4.0, M_PI / (4.0 * std::max(std::abs(gap), omega_tilde)));
  const long n_panels = static_cast<long>(std::ceil(2.0 * window / cap));
  if (n_panels > kMaxPanels) {
    std::ostringstream msg;
    msg << "defining integral too oscillatory for direct quadrature: "
        << n_panels << " panels needed (omega_tilde*T = "
        << omega_tilde * duration << ", gap*T = " << gap * duration << ")";
    throw QuadratureError(msg.str());
  }

  const auto acceptable = [&](const TierResult& r) {
    const bool ok_m =
        r.err_minus <= std::max(rel_tol * std::abs(r.f_minus), abs_m);
    const bool ok_p =
        r.err_plus <= std::max(rel_tol * std::abs(r.f_plus), abs_p);
    return ok_m && ok_p;
  };

  const auto check_imaginary = [](const std::complex<double>& f, double err) {
    // Both branches are i wt times a real Gaussian integral: any real part
    // beyond the error budget means the evaluation is inconsistent.
    if (std::abs(f.real()) > std::max(1e-8 * std::abs(f.imag()), 4.0 * err)) {
      throw QuadratureError(
          "response integral produced a real part beyond its error budget");
    }
  };

  const auto finish = [&](const TierResult& r, const char* tier) {
    check_imaginary(r.f_minus, r.err_minus);
    check_imaginary(r.f_plus, r.err_plus);
    QuadOutcome out;
    out.f_minus = r.f_minus;
    out.f_plus = r.f_plus;
    out.err_minus = r.err_minus;
    out.err_plus = r.err_plus;
    out.precision = tier;
    out.panels = n_panels;
    return out;
  };

  // Escalate through precision tiers until the self-estimated error meets the
  // target. Tiers whose a-priori roundoff floor is already above the target
  // are skipped outright.
  const double floor_dbl = kFloorSafety * FpTraits<double>::eps * scale;
  if (floor_dbl <= 0.5 * abs_min) {
    const auto r = run_tier_scaled<double>(omega_tilde, gap, duration, fourier,
                                           window, n_panels, trunc_f, abs_m, abs_p);
    if (acceptable(r)) return finish(r, "double");
  }
  const double floor_dd = kFloorSafety * FpTraits<DD>::eps * scale;
  if (floor_dd <= 0.5 * abs_min) {
    const auto r = run_tier_scaled<DD>(omega_tilde, gap, duration, fourier,
                                       window, n_panels, trunc_f, abs_m, abs_p);
    if (acceptable(r)) return finish(r, "double-double");
  }
  const auto r = run_tier_scaled<QD>(omega_tilde, gap, duration, fourier, window,
                                     n_panels, trunc_f, abs_m, abs_p);
  if (acceptable(r)) return finish(r, "quad-double");

  std::ostringstream msg;
  msg << "response quadrature did not converge: omega_tilde = " << omega_tilde
      << ", gap = " << gap << ", T = " << duration
      << ", err_minus = " << r.err_minus << ", err_plus = " << r.err_plus
      << ", abs_tol = (" << abs_m << ", " << abs_p << "), rel_tol = " << rel_tol;
  throw QuadratureError(msg.str());
}

}  // namespace response_detail

ResponsePair response_analytic(const DetectorConfig& cfg, const CoherentAmplitude& amp) {
  const double wt = doppler_frequency(cfg, amp).value;
  const double fr = smearing_fourier(cfg, amp.momentum_ev).real();
  const double om = cfg.energy_gap.value;
  const double t = cfg.duration.value;
  return {response_detail::branch_analytic(wt, om, t, -1, fr),
          response_detail::branch_analytic(wt, om, t, +1, fr),
          ResponseMethod::kAnalytic};
}

ResponsePair response_quadrature(const DetectorConfig& cfg, const CoherentAmplitude& amp,
                                 const ResponseQuadratureOptions& opts) {
  const double wt = doppler_frequency(cfg, amp).value;
  const double fr = smearing_fourier(cfg, amp.momentum_ev).real();
  const auto out = response_detail::quad_pair(wt, cfg.energy_gap.value,
                                              cfg.duration.value, fr,
                                              opts.abs_tol_minus, opts.abs_tol_plus,
                                              opts.rel_tol);
  return {out.f_minus, out.f_plus, ResponseMethod::kQuadrature};
}

}  // namespace axc
