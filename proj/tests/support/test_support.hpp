#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "qpump/config.hpp"
#include "qpump/rk.hpp"
#include "qpump/types.hpp"

// Shared test utilities: independent brute-force oracles and random
// generators.  Everything here is deliberately written without reusing the
// library's own algebra, so the comparisons stay two-route.
namespace qpump::test {

// classical fixed-step RK4, the brute-force reference integrator
template <std::size_t N, class F>
void rk4_fixed(F&& f, rk::State<N>& y, double t0, double t1, int n_steps) {
  const double h = (t1 - t0) / n_steps;
  rk::State<N> k1, k2, k3, k4, tmp;
  for (int s = 0; s < n_steps; ++s) {
    const double t = t0 + s * h;
    f(t, y, k1);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    f(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    f(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * k3[i];
    f(t + h, tmp, k4);
    for (std::size_t i = 0; i < N; ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  }
}

// singular values of a general complex 2x2 matrix by explicit eigenvalues
// of A^dagger A (quadratic formula); independent of the library path
inline std::array<double, 2> svd2_singular_values(std::complex<double> a,
                                                  std::complex<double> b,
                                                  std::complex<double> c,
                                                  std::complex<double> d) {
  const double p = std::norm(a) + std::norm(c);
  const double q = std::norm(b) + std::norm(d);
  const std::complex<double> r = std::conj(a) * b + std::conj(c) * d;
  const double tr = p + q;
  const double disc = std::sqrt(std::max(0.0, (p - q) * (p - q) + 4.0 * std::norm(r)));
  const double l1 = 0.5 * (tr + disc);
  const double l2 = 0.5 * (tr - disc);
  return {std::sqrt(std::max(0.0, l1)), std::sqrt(std::max(0.0, l2))};
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

struct FrameGen {
  std::mt19937_64 rng;
  explicit FrameGen(unsigned seed) : rng(seed) {}

  double uni(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }

  AdiabaticFrame frame(double w_scale = 1e7) {
    AdiabaticFrame f;
    f.omega0 = uni(1e9, 1e11);
    f.e12 = 0.5 * f.omega0 * uni(0.1, 1.0);
    f.eta = uni(-0.99, 0.99);
    f.gamma = uni(-1.5, 1.5);
    f.m1 = uni(-1.0, 1.0);
    f.m2_re = uni(-1.0, 1.0);
    f.m2_im = uni(-1.0, 1.0);
    f.w_gg = uni(-1.0, 1.0) * w_scale;
    f.w_ee = uni(-1.0, 1.0) * w_scale;
    f.w_ge_re = uni(-1.0, 1.0) * w_scale;
    f.w_ge_im = uni(-1.0, 1.0) * w_scale;
    return f;
  }

  SpectralTriple triple() {
    return {uni(0.0, 1e9), uni(0.0, 1e8), uni(0.0, 1e9)};
  }

  DensityMatrix2 rho() {
    // random valid state: eigenvalues in [0,1]
    const double r = uni(0.0, 0.5);
    const double phase = uni(0.0, 2.0 * 3.141592653589793);
    const double z = uni(-1.0, 1.0) * std::sqrt(std::max(0.0, 0.25 - r * r));
    return {0.5 + z, r * std::cos(phase), r * std::sin(phase)};
  }
};

// reference parameter set (the Fig. 2 caption values)
inline SluiceParams default_params(double f_mhz = 10.0, double g = 0.01) {
  ModelConfig m;
  m.f_MHz = f_mhz;
  m.g = g;
  return make_sluice_params(m);
}

inline OhmicSpectrum default_ohmic(double temperature_K = 0.0) {
  EnvironmentConfig e;
  e.temperature_K = temperature_K;
  return make_spectrum_model(e).ohmic;
}

}  // namespace qpump::test
