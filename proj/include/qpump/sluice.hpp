#pragma once

#include <array>

#include "qpump/types.hpp"

namespace qpump {

// Cooper-pair-sluice control parameters.  Energies in rad/s, phi in rad,
// g = C_E/C_Sigma dimensionless, f the cycle frequency in Hz.
struct SluiceParams {
  double e_c = 0.0;
  double j_l_max = 0.0, j_l_min = 0.0;
  double j_r_max = 0.0, j_r_min = 0.0;
  double dng_max = 0.0, dng_min = 0.0;
  double phi = 0.0;
  double g = 0.0;
  double f = 0.0;

  double period() const { return 1.0 / f; }

  // two-state approximation wants E_C >> J and |dng| < 1/2; returns a list
  // of human-readable warnings (never rejects)
  std::vector<std::string> validate() const;
};

// One point of the periodic control waveform with exact analytic derivatives.
struct ControlPoint {
  double j_l = 0.0, j_r = 0.0, dng = 0.0;
  double dj_l = 0.0, dj_r = 0.0, ddng = 0.0;
};

// Six-segment piecewise-linear pumping cycle, each segment T_p/6:
//   (1) J_L min->max  (2) n_g min->max  (3) J_L max->min
//   (4) J_R min->max  (5) n_g max->min  (6) J_R max->min
// Non-ramping parameters hold their extremal values.  Derivatives at corner
// times follow the right-limit convention.
ControlPoint cycle_waveform(const SluiceParams& p, double t);

// Same waveform evaluated with an explicit segment index (0..5); used by the
// integrator so that stage evaluations at a segment's right corner keep the
// segment's own slope.
ControlPoint cycle_waveform_in_segment(const SluiceParams& p, double t, int segment);

int segment_of(const SluiceParams& p, double t);

// Instantaneous adiabatic-basis quantities from a control point: E12, gamma
// (quadrant-correct via atan2), eta, omega0, coupling elements m1/m2 and the
// w matrix elements with gamma-dot and eta-dot by the chain rule.
AdiabaticFrame frame_at(const SluiceParams& p, const ControlPoint& cp);

struct Eigenstates {
  std::array<complexd, 2> ground;   // amplitudes on {|0>, |1>}
  std::array<complexd, 2> excited;
};

// Instantaneous eigenstates in the charge basis:
//   |g> = (sqrt(1-eta)|0> + e^{-i gamma} sqrt(1+eta)|1>)/sqrt(2)
//   |e> = (sqrt(1+eta)|0> - e^{-i gamma} sqrt(1-eta)|1>)/sqrt(2)
Eigenstates eigenstate_amplitudes(const AdiabaticFrame& frame);

// Two-level Hamiltonian consistent with the eigenstates above, in the charge
// basis {|0>,|1>}, row-major [rad/s]:
//   H = (omega0/2) [eta sigma_z - sqrt(1-eta^2)(e^{+i gamma}|0><1| + h.c.)]
std::array<complexd, 4> two_level_hamiltonian(const AdiabaticFrame& frame);

}  // namespace qpump
