#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qpump {

using complexd = std::complex<double>;

struct InvalidFrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateGapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularCoordinateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StiffnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivergingInductanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduced 2x2 density matrix in the instantaneous eigenbasis, stored as
// (rho_gg, Re rho_ge, Im rho_ge).  Trace and hermiticity are structural:
// rho_ee = 1 - rho_gg and rho_eg = conj(rho_ge) by construction.
struct DensityMatrix2 {
  double rho_gg = 1.0;
  double rho_ge_re = 0.0;
  double rho_ge_im = 0.0;

  complexd rho_ge() const { return {rho_ge_re, rho_ge_im}; }
  double rho_ee() const { return 1.0 - rho_gg; }

  double purity() const {
    return rho_gg * rho_gg + rho_ee() * rho_ee() +
           2.0 * (rho_ge_re * rho_ge_re + rho_ge_im * rho_ge_im);
  }

  // smaller eigenvalue of the reconstructed 2x2 matrix; negative values
  // signal loss of positivity (the equations do not guarantee it)
  double min_eigenvalue() const {
    const double d = rho_gg - 0.5;
    return 0.5 - std::sqrt(d * d + rho_ge_re * rho_ge_re + rho_ge_im * rho_ge_im);
  }
};

// Instantaneous adiabatic-basis quantities at one point of the drive.
// All energies are angular frequencies [rad/s]; m1, m2 are the coupling
// matrix elements Y_gg/hbar and Y_ge/hbar (dimensionless for charge noise).
struct AdiabaticFrame {
  double e12 = 0.0;      // gap parameter E12 [rad/s]
  double gamma = 0.0;    // Josephson mixing angle [rad]
  double eta = 0.0;      // charge-axis polar coordinate, |eta| <= 1
  double omega0 = 0.0;   // energy gap between |g> and |e> [rad/s]
  double m1 = 0.0;
  double m2_re = 0.0;
  double m2_im = 0.0;
  double w_gg = 0.0;     // basis-rotation generator elements [rad/s]
  double w_ee = 0.0;
  double w_ge_re = 0.0;
  double w_ge_im = 0.0;

  complexd m2() const { return {m2_re, m2_im}; }
  complexd w_ge() const { return {w_ge_re, w_ge_im}; }
};

// Bath power spectrum evaluated at {+omega0, -omega0, 0}.  Units are 1/s
// (the charge factor e^2 and 1/hbar^2 are absorbed, so S * |m|^2 is a rate).
struct SpectralTriple {
  double s_plus = 0.0;
  double s_minus = 0.0;
  double s_zero = 0.0;
};

struct AdiabaticityReport {
  std::vector<double> times;    // one cycle, [s]
  std::vector<double> alpha_t;  // local adiabatic parameter along the cycle
  double alpha_bar = 0.0;       // hbar / (Delta_min * T_p)
  double delta_min = 0.0;       // minimum gap over the cycle [rad/s]
  double alpha_max = 0.0;
};

inline constexpr double default_pos_tol = 1e-6;

}  // namespace qpump
