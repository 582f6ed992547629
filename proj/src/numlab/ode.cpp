#include "cpvi/numlab/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cpvi/errors.hpp"

namespace cpvi {

namespace {

// Dormand-Prince tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b_hat
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

// PI controller gains (Hairer-Wanner, Gustafsson).
constexpr double kBeta = 0.04;
constexpr double kExpo = 0.2 - kBeta * 0.75;
constexpr double kSafety = 0.9;
constexpr double kFacMin = 0.2, kFacMax = 10.0;

using Vec = std::vector<double>;

void axpy_into(Vec& out, const Vec& y, double h, std::initializer_list<std::pair<double, const Vec*>> ks) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    double s = 0;
    for (const auto& [c, k] : ks) s += c * (*k)[i];
    out[i] = y[i] + h * s;
  }
}

double initial_step(const OdeRhs& f, double t0, const Vec& y0, const Vec& f0, double dir, const IntegratorConfig& cfg) {
  double d0 = 0, d1 = 0;
  for (std::size_t i = 0; i < y0.size(); ++i) {
    double sk = cfg.atol + cfg.rtol * std::abs(y0[i]);
    d0 += (y0[i] / sk) * (y0[i] / sk);
    d1 += (f0[i] / sk) * (f0[i] / sk);
  }
  d0 = std::sqrt(d0 / y0.size());
  d1 = std::sqrt(d1 / y0.size());
  double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  Vec y1(y0.size()), f1(y0.size());
  for (std::size_t i = 0; i < y0.size(); ++i) y1[i] = y0[i] + dir * h0 * f0[i];
  f(t0 + dir * h0, y1, f1);
  double d2 = 0;
  for (std::size_t i = 0; i < y0.size(); ++i) {
    double sk = cfg.atol + cfg.rtol * std::abs(y0[i]);
    d2 += ((f1[i] - f0[i]) / sk) * ((f1[i] - f0[i]) / sk);
  }
  d2 = std::sqrt(d2 / y0.size()) / h0;
  double h1 = std::max(d1, d2) <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / std::max(d1, d2), 0.2);
  return std::min(100 * h0, h1);
}

}  // namespace

Trajectory integrate_ode(const OdeRhs& f, double t0, double t1, Vec y0, const IntegratorConfig& cfg) {
  if (!(cfg.rtol > 0) || !(cfg.atol > 0)) throw std::invalid_argument("tolerances must be positive");
  const std::size_t n = y0.size();
  const double dir = t1 >= t0 ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);

  Trajectory tr;
  tr.t.push_back(t0);
  tr.y.push_back(y0);
  if (span == 0) return tr;

  Vec k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), ynew(n);
  f(t0, y0, k1);

  double h = cfg.fixed_step > 0 ? cfg.fixed_step
             : cfg.initial_step > 0 ? cfg.initial_step
                                    : initial_step(f, t0, y0, k1, dir, cfg);
  h = std::min(h, span);
  double err_old = 1e-4;
  bool last_rejected = false;
  double t = t0;
  Vec y = std::move(y0);

  while (dir * (t1 - t) > 0) {
    if (tr.steps + tr.rejected >= cfg.max_steps)
      throw StepLimitExceeded("step limit reached at t = " + std::to_string(t), t);
    bool final_step = false;
    if (h >= dir * (t1 - t) * (1 - 1e-12)) {
      h = dir * (t1 - t);
      final_step = true;
    }
    if (h <= 1e-14 * std::max(1.0, std::abs(t)))
      throw StepLimitExceeded("step size underflow at t = " + std::to_string(t), t);
    const double hs = dir * h;

    axpy_into(tmp, y, hs, {{a21, &k1}});
    f(t + c2 * hs, tmp, k2);
    axpy_into(tmp, y, hs, {{a31, &k1}, {a32, &k2}});
    f(t + c3 * hs, tmp, k3);
    axpy_into(tmp, y, hs, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
    f(t + c4 * hs, tmp, k4);
    axpy_into(tmp, y, hs, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
    f(t + c5 * hs, tmp, k5);
    axpy_into(tmp, y, hs, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    f(t + hs, tmp, k6);
    axpy_into(ynew, y, hs, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const double tnew = final_step ? t1 : t + hs;
    f(tnew, ynew, k7);

    double err = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      double sk = cfg.atol + cfg.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (e / sk) * (e / sk);
    }
    err = std::sqrt(err / static_cast<double>(n));
    if (!std::isfinite(err)) err = 1e10;

    if (cfg.fixed_step > 0 || err <= 1.0) {
      for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(ynew[i]) || std::abs(ynew[i]) > cfg.blowup)
          throw BlowUp("solution exceeds " + std::to_string(cfg.blowup) + " near t = " + std::to_string(tnew), tnew);
      ++tr.steps;
      t = tnew;
      y.swap(ynew);
      k1.swap(k7);
      tr.t.push_back(t);
      tr.y.push_back(y);
      if (cfg.fixed_step > 0) continue;
      double fac = kSafety * std::pow(std::max(err, 1e-10), -kExpo) * std::pow(err_old, kBeta);
      fac = std::clamp(fac, kFacMin, last_rejected ? 1.0 : kFacMax);
      err_old = std::max(err, 1e-4);
      last_rejected = false;
      h *= fac;
    } else {
      ++tr.rejected;
      last_rejected = true;
      h *= std::max(kFacMin, kSafety * std::pow(err, -kExpo));
    }
  }
  return tr;
}

}  // namespace cpvi
