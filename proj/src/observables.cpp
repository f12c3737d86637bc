#include "qpump/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "qpump/integrator.hpp"

namespace qpump {

ChargeRates charge_integrands(const AdiabaticFrame& frame, const ControlPoint& cp,
                              const SluiceParams& params, const DensityMatrix2& rho) {
  const double half_phi = 0.5 * params.phi;
  const double re = rho.rho_ge_re;
  const double im = rho.rho_ge_im;
  ChargeRates r;
  r.dq_left = cp.j_l * (frame.eta * re * std::sin(frame.gamma + half_phi) -
                        std::cos(frame.gamma + half_phi) * im);
  r.dq_right = cp.j_r * (std::cos(frame.gamma - half_phi) * im -
                         frame.eta * re * std::sin(frame.gamma - half_phi));
  return r;
}

DiagonalCurrents diagonal_currents(const AdiabaticFrame& frame, const ControlPoint& cp,
                                   const SluiceParams& params, const DensityMatrix2& rho) {
  const double half_phi = 0.5 * params.phi;
  const double sq = std::sqrt(std::max(0.0, 1.0 - frame.eta * frame.eta));
  const double pop = 2.0 * rho.rho_gg - 1.0;  // rho_gg - rho_ee
  DiagonalCurrents c;
  c.i_left = pop * cp.j_l * 0.5 * sq * std::sin(half_phi - frame.gamma);
  c.i_right = pop * cp.j_r * 0.5 * sq * std::sin(half_phi + frame.gamma);
  return c;
}

PumpedCharge pumped_charge_per_cycle(const TrajectoryRecord& record, int cycle) {
  if (cycle < 0 || cycle >= static_cast<int>(record.cycles.size())) {
    throw std::out_of_range("pumped_charge_per_cycle: cycle not in record");
  }
  const CycleSummary& cs = record.cycles[cycle];
  return {cs.q_left, cs.q_right, 0.5 * (cs.q_left + cs.q_right)};
}

double charge_asymmetry(const TrajectoryRecord& record, int cycle) {
  const PumpedCharge q = pumped_charge_per_cycle(record, cycle);
  return q.q_left - q.q_right;
}

double superadiabatic_population(const AdiabaticFrame& frame, const DensityMatrix2& rho) {
  const complexd c = std::conj(frame.w_ge()) / frame.omega0;  // <e| weight
  const double csq = std::norm(c);
  const double n2 = 1.0 / (1.0 + csq);
  const double val = rho.rho_gg - 2.0 * std::real(c * rho.rho_ge()) +
                     csq * (1.0 - rho.rho_gg);
  return n2 * val;
}

}  // namespace qpump
