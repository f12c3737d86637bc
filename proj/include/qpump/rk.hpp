#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "qpump/types.hpp"

// Dormand-Prince 5(4) embedded pair with PI step control, plus a fixed-step
// driver for convergence studies.  Header-only and deterministic: identical
// inputs produce bit-identical trajectories.
namespace qpump::rk {

template <std::size_t N>
using State = std::array<double, N>;

namespace dp {
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                        a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b_hat, the embedded error weights (k7 = f(t+h, y5), FSAL)
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
}  // namespace dp

// One DP5 step from (t, y) with derivative k1 = f(t, y) already evaluated.
// On return y5 holds the 5th-order solution, err the embedded error vector,
// and k7 = f(t + h, y5) for FSAL reuse.
template <std::size_t N, class F>
void dp54_step(F&& f, double t, const State<N>& y, double h, const State<N>& k1,
               State<N>& y5, State<N>& err, State<N>& k7) {
  using namespace dp;
  State<N> k2, k3, k4, k5, k6, tmp;

  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
  f(t + c2 * h, tmp, k2);
  for (std::size_t i = 0; i < N; ++i)
    tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
  f(t + c3 * h, tmp, k3);
  for (std::size_t i = 0; i < N; ++i)
    tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
  f(t + c4 * h, tmp, k4);
  for (std::size_t i = 0; i < N; ++i)
    tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
  f(t + c5 * h, tmp, k5);
  for (std::size_t i = 0; i < N; ++i)
    tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                         a65 * k5[i]);
  f(t + h, tmp, k6);
  for (std::size_t i = 0; i < N; ++i)
    y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                        b6 * k6[i]);
  f(t + h, y5, k7);
  for (std::size_t i = 0; i < N; ++i)
    err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                  e6 * k6[i] + e7 * k7[i]);
}

struct StepControl {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double max_step = 0.0;  // 0 = unbounded
  double safety = 0.9;
  double fac_min = 0.2;
  double fac_max = 10.0;
};

// Integrate y from t0 to exactly t1.  Returns the step-size suggestion for a
// continuation call.  Throws StiffnessError on step underflow.
template <std::size_t N, class F>
double integrate_adaptive(F&& f, State<N>& y, double t0, double t1,
                          const StepControl& ctrl, double h_init = 0.0) {
  if (t1 <= t0) return h_init;
  const double span = t1 - t0;
  double h = h_init > 0.0 ? h_init : span / 100.0;
  if (ctrl.max_step > 0.0) h = std::min(h, ctrl.max_step);
  h = std::min(h, span);

  State<N> k1, k7, y5, err;
  double t = t0;
  f(t, y, k1);
  double err_prev = 1.0;
  const double h_floor = 1e-14 * span + 1e-300;

  while (t < t1) {
    bool last = false;
    if (t + h >= t1) {
      h = t1 - t;
      last = true;
    }
    if (t + h == t) {
      throw StiffnessError("integrate_adaptive: step vanished against t = " +
                           std::to_string(t));
    }
    dp54_step(f, t, y, h, k1, y5, err, k7);

    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double scale =
          ctrl.abs_tol + ctrl.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      const double r = err[i] / scale;
      sum += r * r;
    }
    const double enorm = std::sqrt(sum / static_cast<double>(N));

    if (enorm <= 1.0) {
      t = last ? t1 : t + h;
      y = y5;
      k1 = k7;  // FSAL
      const double e = std::max(enorm, 1e-10);
      double fac = ctrl.safety * std::pow(e, -0.2) * std::pow(err_prev, 0.08);
      fac = std::clamp(fac, ctrl.fac_min, ctrl.fac_max);
      h *= fac;
      if (ctrl.max_step > 0.0) h = std::min(h, ctrl.max_step);
      err_prev = e;
    } else {
      double fac = ctrl.safety * std::pow(enorm, -0.2);
      h *= std::clamp(fac, ctrl.fac_min, 1.0);
      if (h <= h_floor) {
        throw StiffnessError("integrate_adaptive: step size underflow at t = " +
                             std::to_string(t) + " (error norm " +
                             std::to_string(enorm) + ")");
      }
    }
  }
  return h;
}

// Fixed-step DP5 (5th-order solution only); used for order measurements.
template <std::size_t N, class F>
void integrate_fixed_dp5(F&& f, State<N>& y, double t0, double t1, int n_steps) {
  const double h = (t1 - t0) / n_steps;
  State<N> k1, k7, y5, err;
  double t = t0;
  f(t, y, k1);
  for (int s = 0; s < n_steps; ++s) {
    dp54_step(f, t, y, h, k1, y5, err, k7);
    y = y5;
    k1 = k7;
    t = t0 + (s + 1) * h;
  }
}

}  // namespace qpump::rk
