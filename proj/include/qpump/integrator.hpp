#pragma once

#include <utility>
#include <vector>

#include "qpump/environment.hpp"
#include "qpump/master_eq.hpp"
#include "qpump/sluice.hpp"
#include "qpump/types.hpp"

namespace qpump {

struct IntegratorConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double max_step = 0.0;  // 0 -> min(T_p/6, 2 pi / (20 max omega0))
  int n_cycles_max = 256;
  double stationarity_tol = 1e-7;
  double pos_tol = default_pos_tol;
  int samples_per_cycle = 256;
  bool store_all_samples = false;  // default keeps only the last cycle
  bool store_frames = true;
};

struct CycleSummary {
  double q_left = 0.0;       // charge through each SQUID this cycle [2e]
  double q_right = 0.0;
  double dist_prev = 0.0;    // stationarity metric against previous cycle
  double min_pg_prime = 1.0; // superadiabatic ground population, cycle min
  double min_eigenvalue = 0.0;
  double max_alpha = 0.0;
  double rho_gg_mean = 0.0;  // grid average over the cycle
};

struct PositivityEvent {
  double t = 0.0;
  double min_eigenvalue = 0.0;
};

struct TrajectoryRecord {
  double period = 0.0;
  std::vector<double> sample_times;
  std::vector<DensityMatrix2> samples;
  std::vector<AdiabaticFrame> frames;
  std::vector<CycleSummary> cycles;
  std::vector<PositivityEvent> violations;  // beyond pos_tol, capped
  bool converged = false;
  int converged_cycle = -1;
  double stationarity_tol = 0.0;
  DensityMatrix2 final_state;
};

// Evolve rho0 cycle by cycle until the cycle-to-cycle state distance drops
// below stationarity_tol or n_cycles_max is reached.  Steps never cross
// waveform segment corners; the per-cycle sampling grid times are forced
// step boundaries as well.
TrajectoryRecord integrate_cycles(RhsVariant variant, const SluiceParams& params,
                                  const SpectrumModel& model,
                                  const IntegratorConfig& cfg,
                                  const DensityMatrix2& rho0);

// First cycle index whose distance to the previous cycle is below the
// record's stationarity tolerance, and whether it was ever reached.
std::pair<int, bool> reach_quasi_stationary(const TrajectoryRecord& record);

// Scan of the adiabaticity diagnostics over one cycle.
AdiabaticityReport adiabaticity_report(const SluiceParams& params, int n_points = 4096);

}  // namespace qpump
