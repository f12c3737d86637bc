#pragma once

#include "qpump/environment.hpp"
#include "qpump/sluice.hpp"
#include "qpump/types.hpp"

// Closed-form quasi-stationary solutions and perturbative charge-asymmetry
// formulas, implemented independently of the integrator; used as test oracles
// and fast predictors.
namespace qpump::oracles {

enum class Regime { AdiabaticGround, NonAdiabaticMixed, SecularZeroT, FiniteT };

struct QuasiStationarySolution {
  double rho_gg = 1.0;
  complexd rho_ge{0.0, 0.0};
  Regime regime = Regime::AdiabaticGround;
  bool in_regime = true;  // false when the preconditions are violated
};

struct SecularCorrection {
  complexd delta_rho{0.0, 0.0};  // rho_ge(ideal) - rho_ge(secular), Eq-21 order
  double gamma_rate = 0.0;       // Gamma = S(w0)|m2|^2 + 4 S(0) m1^2
};

// (1, -w_ge/omega0): environment-free adiabatic ground state.
QuasiStationarySolution qs_ideal(const AdiabaticFrame& frame);

// Finite temperature: rho_gg = 1 - e^{-w0/theta}, rho_ge = -(w_ge/w0)(1 - 2 e^{-w0/theta}).
// Flagged out of regime when omega0/theta < 2.
QuasiStationarySolution qs_finite_t(const AdiabaticFrame& frame, double theta);

// Secular, zero temperature: rho_ge = -2i w_ge / (2i w0 - Gamma).
QuasiStationarySolution qs_secular_zero_t(const AdiabaticFrame& frame,
                                          const SpectralTriple& sp);

// Fast nonadiabatic drive: the fully mixed state (1/2, 0).
QuasiStationarySolution qs_nonadiabatic();

// Weak-coupling expansion of the secular correction:
// delta_rho = (w_ge/w0)(i Gamma/(2 w0) + Gamma^2/(4 w0^2)).
SecularCorrection secular_correction(const AdiabaticFrame& frame,
                                     const SpectralTriple& sp);

// Charge asymmetry Delta Q = Q_L - Q_R of the secular solution at T = 0,
// by quadrature of the explicit integrand over the exact waveforms
// (composite Simpson, n_steps panels per segment).  Units of 2e.
double delta_q_explicit(const SluiceParams& params, const OhmicSpectrum& spec,
                        int n_steps = 20000);

// Same quantity from the correction route: -(2e/hbar) int 2 E12 Im(delta rho) dt
// with Im(delta rho) = Re(w_ge) Gamma/(2 w0^2) + Im(w_ge) Gamma^2/(4 w0^3).
// Algebraically identical to delta_q_explicit; kept as an independent check.
double delta_q_from_correction(const SluiceParams& params, const OhmicSpectrum& spec,
                               int n_steps = 20000);

// The four closed-form leading contributions in the box-function limit
// (A3 = 0 identically).  Valid for phi = pi/2, J^m << J^M << E_C and
// |dng extremes| >> J^M/E_C; out_of_regime reports violations.
struct LeadingTerms {
  double a1 = 0.0, a2 = 0.0, a4 = 0.0, a5 = 0.0;
  bool in_regime = true;
  double total() const { return a1 + a2 + a4 + a5; }
};
LeadingTerms delta_q_leading_terms(const SluiceParams& params, const OhmicSpectrum& spec);

// Ideal (environment-free, adiabatic ground state) pumped charge per cycle,
// by quadrature of the charge integrands at rho_ge = -w_ge/omega0 [2e].
struct IdealCharge {
  double q_left = 0.0, q_right = 0.0;
  double q_avg() const { return 0.5 * (q_left + q_right); }
};
IdealCharge ideal_pumped_charge(const SluiceParams& params, int n_steps = 20000);

}  // namespace qpump::oracles
