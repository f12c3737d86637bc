#pragma once

#include "qpump/sluice.hpp"
#include "qpump/types.hpp"

namespace qpump {

struct TrajectoryRecord;  // integrator.hpp

// Geometric pumped-charge integrands through the two SQUIDs, in units of
// 2e per second:
//   dq_L/dt = J_L [ eta Re(rho_ge) sin(gamma + phi/2) - cos(gamma + phi/2) Im(rho_ge) ]
//   dq_R/dt = J_R [ cos(gamma - phi/2) Im(rho_ge) - eta Re(rho_ge) sin(gamma - phi/2) ]
struct ChargeRates {
  double dq_left = 0.0;
  double dq_right = 0.0;
};
ChargeRates charge_integrands(const AdiabaticFrame& frame, const ControlPoint& cp,
                              const SluiceParams& params, const DensityMatrix2& rho);

// Diagonal (dynamical) current expectation (2 e)/s; not part of the pumped
// charge, exposed as a diagnostic.
struct DiagonalCurrents {
  double i_left = 0.0;
  double i_right = 0.0;
};
DiagonalCurrents diagonal_currents(const AdiabaticFrame& frame, const ControlPoint& cp,
                                   const SluiceParams& params, const DensityMatrix2& rho);

struct PumpedCharge {
  double q_left = 0.0;
  double q_right = 0.0;
  double q_avg = 0.0;
};

// Charge pumped during cycle k, integrated inside the ODE state with the
// same error control as the density matrix.  Throws std::out_of_range for a
// cycle not contained in the record.
PumpedCharge pumped_charge_per_cycle(const TrajectoryRecord& record, int cycle);

// Q_L - Q_R for cycle k.
double charge_asymmetry(const TrajectoryRecord& record, int cycle);

// Population of the normalized superadiabatic ground state
// |g'> ~ |g> - (w_ge*/omega0)|e>:
//   P = [rho_gg - 2 Re(w_ge* rho_ge)/omega0 + |w_ge/omega0|^2 (1-rho_gg)] * N^2
double superadiabatic_population(const AdiabaticFrame& frame, const DensityMatrix2& rho);

}  // namespace qpump
