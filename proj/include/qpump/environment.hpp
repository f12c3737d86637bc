#pragma once

#include <optional>

#include "qpump/types.hpp"

namespace qpump {

// Ohmic thermal bath S(w) = 2 kappa w / (1 - e^{-w/theta}) in natural units,
// where kappa = e^2 R / hbar is dimensionless, theta = k_B T / hbar and
// theta0 = k_B T0 / hbar are in rad/s.  S(0) = 2 kappa theta0 keeps a finite
// pure-dephasing strength even at T = 0.
struct OhmicSpectrum {
  double kappa = 0.0;   // e^2 R / hbar
  double theta = 0.0;   // bath temperature [rad/s], 0 allowed
  double theta0 = 0.0;  // dephasing effective temperature [rad/s]

  double at(double omega) const;  // S(omega), omega may be negative or zero
};

SpectralTriple ohmic_triple(const OhmicSpectrum& spec, double omega0);

// Flux-tunable SQUID-array filter between the noise resistor and the island.
// The array is m identical parallel-RLC blocks in series; L(phi) is the
// Josephson inductance L0/|cos(pi flux)| (|.| keeps the spectrum exactly
// Phi0-periodic; the sign of cos is a pi-junction gauge).
struct EngineeredEnvironment {
  OhmicSpectrum base;
  int m_squids = 0;
  double c_e = 0.0;       // farad
  double c_s = 0.0;       // farad
  double r_s = 0.0;       // ohm
  double r_series = 0.0;  // ohm, thermal resistor R of the base spectrum
  double l0 = 0.0;        // henry, hbar/(2 pi e I_C)
  double flux = 0.0;      // phi / Phi0
  double flux_guard = 1e-6;

  // |Z_CE / Z_tot|^2, even in omega, equals 1 at omega = 0
  double filter(double omega) const;
};

// S~(omega, phi) = |Z_CE/Z_tot|^2 S(omega).  Throws DivergingInductanceError
// when |cos(pi flux)| <= flux_guard.
double engineered_spectrum(const EngineeredEnvironment& env, double omega);

// Filtered triple: s_plus and s_minus are filtered with the same even factor
// (detailed balance applied to the base spectrum first), s_zero is unchanged
// since the filter is exactly 1 at omega = 0.
SpectralTriple engineered_triple(const EngineeredEnvironment& env, double omega0);

// Bath model used by trajectories: plain ohmic or ohmic behind the filter.
struct SpectrumModel {
  OhmicSpectrum ohmic;
  std::optional<EngineeredEnvironment> engineered;

  SpectralTriple at(double omega0) const {
    return engineered ? engineered_triple(*engineered, omega0)
                      : ohmic_triple(ohmic, omega0);
  }
};

}  // namespace qpump
