#include "qpump/environment.hpp"

#include <cmath>

#include "qpump/units.hpp"

namespace qpump {

double OhmicSpectrum::at(double omega) const {
  if (omega == 0.0) return 2.0 * kappa * theta0;
  if (theta == 0.0) {
    return omega > 0.0 ? 2.0 * kappa * omega : 0.0;
  }
  // 2 kappa w / (1 - e^{-w/theta}); stable for both signs of w
  return 2.0 * kappa * omega / (-std::expm1(-omega / theta));
}

SpectralTriple ohmic_triple(const OhmicSpectrum& spec, double omega0) {
  SpectralTriple t;
  if (spec.theta == 0.0) {
    t.s_plus = 2.0 * spec.kappa * omega0;
    t.s_minus = 0.0;  // no excitation channel at T = 0
  } else {
    const double x = omega0 / spec.theta;
    t.s_plus = 2.0 * spec.kappa * omega0 / (-std::expm1(-x));
    t.s_minus = std::exp(-x) * t.s_plus;  // detailed balance
  }
  t.s_zero = 2.0 * spec.kappa * spec.theta0;
  return t;
}

double EngineeredEnvironment::filter(double omega) const {
  double re_part = 1.0;
  double im_part = r_series * c_e * omega;
  if (m_squids > 0) {
    // fold to the distance from the nearest integer so |cos(pi flux)| is
    // exactly periodic in flux
    const double folded = std::abs(flux - std::round(flux));
    const double cosf = std::cos(units::pi * folded);
    if (cosf <= flux_guard) {
      throw DivergingInductanceError(
          "engineered_spectrum: flux too close to half a flux quantum, "
          "Josephson inductance diverges");
    }
    const double l = l0 / cosf;
    const double w2 = omega * omega;
    const double lc = l * c_s * w2;
    const double den = l * l * w2 + r_s * r_s * (1.0 - lc) * (1.0 - lc);
    if (den > 0.0) {
      const double m = static_cast<double>(m_squids);
      re_part -= m * (l * w2 * r_s * r_s * c_e -
                      m * l * l * w2 * w2 * r_s * r_s * c_s * c_e) / den;
      im_part += m * l * l * r_s * c_e * omega * w2 / den;
    }
  }
  return 1.0 / (re_part * re_part + im_part * im_part);
}

double engineered_spectrum(const EngineeredEnvironment& env, double omega) {
  return env.filter(omega) * env.base.at(omega);
}

SpectralTriple engineered_triple(const EngineeredEnvironment& env, double omega0) {
  SpectralTriple t = ohmic_triple(env.base, omega0);
  const double f = env.filter(omega0);
  t.s_plus *= f;
  t.s_minus *= f;
  // filter(0) == 1: S(0) passes through unchanged
  return t;
}

}  // namespace qpump
