#include "qpump/oracles.hpp"

#include <cmath>
#include <functional>

#include "qpump/observables.hpp"
#include "qpump/units.hpp"

namespace qpump::oracles {

namespace {

double gamma_rate_of(const AdiabaticFrame& f, const SpectralTriple& sp) {
  return sp.s_plus * std::norm(f.m2()) + 4.0 * sp.s_zero * f.m1 * f.m1;
}

// composite Simpson of a time integrand over one cycle, segment by segment
// (the integrands are smooth inside segments, kinked at corners)
double cycle_quadrature(const SluiceParams& p, int n_steps,
                        const std::function<double(const AdiabaticFrame&,
                                                   const ControlPoint&)>& f) {
  const double tp = p.period();
  int n = std::max(6, n_steps / 6);
  if (n % 2) ++n;
  double total = 0.0;
  for (int seg = 0; seg < 6; ++seg) {
    const double a = tp * seg / 6.0;
    const double h = (tp / 6.0) / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double t = a + h * i;
      const ControlPoint cp = cycle_waveform_in_segment(p, t, seg);
      const double v = f(frame_at(p, cp), cp);
      const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      acc += w * v;
    }
    total += acc * h / 3.0;
  }
  return total;
}

}  // namespace

QuasiStationarySolution qs_ideal(const AdiabaticFrame& frame) {
  QuasiStationarySolution s;
  s.rho_gg = 1.0;
  s.rho_ge = -frame.w_ge() / frame.omega0;
  s.regime = Regime::AdiabaticGround;
  return s;
}

QuasiStationarySolution qs_finite_t(const AdiabaticFrame& frame, double theta) {
  QuasiStationarySolution s;
  s.regime = Regime::FiniteT;
  const double boltz = theta > 0.0 ? std::exp(-frame.omega0 / theta) : 0.0;
  s.rho_gg = 1.0 - boltz;
  s.rho_ge = -(frame.w_ge() / frame.omega0) * (1.0 - 2.0 * boltz);
  s.in_regime = theta <= 0.0 || frame.omega0 / theta >= 2.0;
  return s;
}

QuasiStationarySolution qs_secular_zero_t(const AdiabaticFrame& frame,
                                          const SpectralTriple& sp) {
  QuasiStationarySolution s;
  s.regime = Regime::SecularZeroT;
  s.rho_gg = 1.0;
  const double gam = gamma_rate_of(frame, sp);
  s.rho_ge = complexd(0.0, -2.0) * frame.w_ge() /
             (complexd(-gam, 2.0 * frame.omega0));
  s.in_regime = sp.s_minus == 0.0;
  return s;
}

QuasiStationarySolution qs_nonadiabatic() {
  QuasiStationarySolution s;
  s.regime = Regime::NonAdiabaticMixed;
  s.rho_gg = 0.5;
  s.rho_ge = 0.0;
  return s;
}

SecularCorrection secular_correction(const AdiabaticFrame& frame,
                                     const SpectralTriple& sp) {
  SecularCorrection c;
  c.gamma_rate = gamma_rate_of(frame, sp);
  const double w0 = frame.omega0;
  const complexd wge = frame.w_ge();
  c.delta_rho = -(wge / w0) * complexd(c.gamma_rate * c.gamma_rate / (4.0 * w0 * w0),
                                       c.gamma_rate / (2.0 * w0));
  return c;
}

double delta_q_explicit(const SluiceParams& p, const OhmicSpectrum& spec,
                        int n_steps) {
  const double g2 = p.g * p.g;
  const double s0 = 2.0 * spec.kappa * spec.theta0;  // S(0)
  const double kap = spec.kappa;
  return cycle_quadrature(p, n_steps, [&](const AdiabaticFrame& fr, const ControlPoint&) {
    const double eta = fr.eta;
    const double ome2 = 1.0 - eta * eta;
    const double dgamma = -(fr.w_gg + fr.w_ee);                 // gamma-dot
    const double deta = -2.0 * fr.w_ge_im * std::sqrt(ome2);    // eta-dot
    const double e12 = fr.e12;
    const double t_gamma = 0.5 * kap * ome2 * ome2 +
                           std::pow(ome2, 1.5) * s0 * eta * eta / (2.0 * e12);
    const double t_eta = 0.5 * kap * kap * ome2 * ome2 -
                         (eta * eta - 1.0) * s0 * s0 * std::pow(eta, 4) /
                             (2.0 * e12 * e12) +
                         kap * std::pow(ome2, 1.5) * s0 * eta * eta / e12;
    return g2 * (-dgamma * t_gamma + deta * g2 * t_eta);
  });
}

double delta_q_from_correction(const SluiceParams& p, const OhmicSpectrum& spec,
                               int n_steps) {
  return cycle_quadrature(p, n_steps, [&](const AdiabaticFrame& fr, const ControlPoint&) {
    const SpectralTriple sp = ohmic_triple(spec, fr.omega0);
    const double gam = gamma_rate_of(fr, sp);
    const double w0 = fr.omega0;
    const double im_drho = fr.w_ge_re * gam / (2.0 * w0 * w0) +
                           fr.w_ge_im * gam * gam / (4.0 * w0 * w0 * w0);
    const double eta = fr.eta;
    const double deta = -2.0 * fr.w_ge_im * std::sqrt(1.0 - eta * eta);
    return 0.5 * deta - 2.0 * fr.e12 * im_drho;
  });
}

LeadingTerms delta_q_leading_terms(const SluiceParams& p, const OhmicSpectrum& spec) {
  LeadingTerms lt;
  const double g2 = p.g * p.g;
  const double g4 = g2 * g2;
  const double s0 = 2.0 * spec.kappa * spec.theta0;
  const double kap = spec.kappa;
  const double jlM = p.j_l_max, jlm = p.j_l_min;
  const double jrM = p.j_r_max, jrm = p.j_r_min;
  const double dM = p.dng_max, dm = p.dng_min;
  const double ec = p.e_c;

  const double den3 = std::pow(ec * dm * dM, 3);
  const double den4 = std::pow(ec * dm * dM, 4);
  const double den5 = std::pow(ec * dm * dM, 5);

  lt.a1 = (jlm * jrM + jrm * jlM) * (std::pow(dM, 3) - std::pow(std::abs(dm), 3)) *
          g2 * s0 / (16.0 * den3);
  lt.a2 = (jrm * jlM * jlM * jlM + jlm * jrM * jrM * jrM) *
          (std::pow(dM, 4) - std::pow(dm, 4)) * g2 * kap / (96.0 * den4);
  lt.a4 = (jlM * jlM - jrM * jrM) * (std::pow(dm, 4) + std::pow(dM, 4)) * g4 *
          s0 * s0 / (64.0 * den4);
  lt.a5 = (std::pow(jlM, 4) - std::pow(jrM, 4)) *
          (std::pow(dm, 5) + std::pow(std::abs(dM), 5)) * g4 * s0 * s0 /
          (128.0 * den5);

  const double jmax = std::max(jlM, jrM);
  lt.in_regime = std::abs(p.phi - 0.5 * units::pi) < 1e-9 &&
                 jlm <= 0.1 * jlM && jrm <= 0.1 * jrM && jmax <= 0.15 * p.e_c &&
                 std::min(std::abs(dm), std::abs(dM)) >= jmax / p.e_c;
  return lt;
}

IdealCharge ideal_pumped_charge(const SluiceParams& p, int n_steps) {
  IdealCharge q;
  q.q_left = cycle_quadrature(p, n_steps, [&](const AdiabaticFrame& fr, const ControlPoint& cp) {
    DensityMatrix2 rho{1.0, 0.0, 0.0};
    const complexd rge = qs_ideal(fr).rho_ge;
    rho.rho_ge_re = rge.real();
    rho.rho_ge_im = rge.imag();
    return charge_integrands(fr, cp, p, rho).dq_left;
  });
  q.q_right = cycle_quadrature(p, n_steps, [&](const AdiabaticFrame& fr, const ControlPoint& cp) {
    DensityMatrix2 rho{1.0, 0.0, 0.0};
    const complexd rge = qs_ideal(fr).rho_ge;
    rho.rho_ge_re = rge.real();
    rho.rho_ge_im = rge.imag();
    return charge_integrands(fr, cp, p, rho).dq_right;
  });
  return q;
}

}  // namespace qpump::oracles
