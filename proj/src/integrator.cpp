#include "qpump/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qpump/observables.hpp"
#include "qpump/qsystem.hpp"
#include "qpump/rk.hpp"
#include "qpump/units.hpp"

namespace qpump {

namespace {

constexpr std::size_t kStateDim = 5;  // rho_gg, Re/Im rho_ge, q_left, q_right
constexpr std::size_t kMaxViolationLog = 64;

struct SluiceRhs {
  const SluiceParams& params;
  const SpectrumModel& model;
  RhsVariant variant;
  int segment = 0;  // set per stop interval; stage times stay inside it

  void operator()(double t, const rk::State<kStateDim>& y,
                  rk::State<kStateDim>& dy) const {
    const ControlPoint cp = cycle_waveform_in_segment(params, t, segment);
    const AdiabaticFrame fr = frame_at(params, cp);
    const DensityMatrix2 rho{y[0], y[1], y[2]};
    StateDerivative d;
    if (variant == RhsVariant::Unitary) {
      d = rhs_unitary(fr, rho);
    } else {
      d = rhs(variant, fr, model.at(fr.omega0), rho);
    }
    const ChargeRates q = charge_integrands(fr, cp, params, rho);
    dy = {d.d_gg, d.d_ge_re, d.d_ge_im, q.dq_left, q.dq_right};
  }
};

double max_omega0_scan(const SluiceParams& p, int n = 1024) {
  const double tp = p.period();
  double peak = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = tp * (i + 0.5) / n;
    peak = std::max(peak, frame_at(p, cycle_waveform(p, t)).omega0);
  }
  return peak;
}

}  // namespace

TrajectoryRecord integrate_cycles(RhsVariant variant, const SluiceParams& params,
                                  const SpectrumModel& model,
                                  const IntegratorConfig& cfg,
                                  const DensityMatrix2& rho0) {
  if (!(params.f > 0.0)) {
    throw ConfigError("integrate_cycles: cycle frequency must be positive");
  }
  const double tp = params.period();
  TrajectoryRecord rec;
  rec.period = tp;
  rec.stationarity_tol = cfg.stationarity_tol;
  rec.final_state = rho0;

  const int n_grid = std::max(2, cfg.samples_per_cycle);

  rk::StepControl ctrl;
  ctrl.rel_tol = cfg.rel_tol;
  ctrl.abs_tol = cfg.abs_tol;
  ctrl.max_step = cfg.max_step > 0.0
                      ? cfg.max_step
                      : std::min(tp / 6.0, 2.0 * units::pi /
                                               (20.0 * max_omega0_scan(params)));

  // mandatory stop offsets within a cycle: sample grid plus segment corners
  std::vector<double> offsets;
  offsets.reserve(n_grid + 7);
  for (int i = 0; i < n_grid; ++i) offsets.push_back(tp * i / n_grid);
  for (int j = 1; j < 6; ++j) offsets.push_back(tp * j / 6.0);
  offsets.push_back(tp);
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end(),
                            [&](double a, double b) { return b - a < 1e-9 * tp / n_grid; }),
                offsets.end());

  SluiceRhs f{params, model, variant};
  rk::State<kStateDim> y{rho0.rho_gg, rho0.rho_ge_re, rho0.rho_ge_im, 0.0, 0.0};

  std::vector<DensityMatrix2> prev_grid, grid;
  std::vector<double> grid_times;
  std::vector<AdiabaticFrame> grid_frames;
  grid.reserve(n_grid);
  double h = 0.0;

  auto sample_state = [&](double t_abs) {
    const DensityMatrix2 rho{y[0], y[1], y[2]};
    grid.push_back(rho);
    grid_times.push_back(t_abs);
    const AdiabaticFrame fr = frame_at(params, cycle_waveform(params, t_abs));
    grid_frames.push_back(fr);
    const double lam = rho.min_eigenvalue();
    if (lam < -cfg.pos_tol && rec.violations.size() < kMaxViolationLog) {
      rec.violations.push_back({t_abs, lam});
    }
  };

  for (int k = 0; k < cfg.n_cycles_max; ++k) {
    const double t_cycle = k * tp;
    y[3] = 0.0;
    y[4] = 0.0;
    grid.clear();
    grid_times.clear();
    grid_frames.clear();

    CycleSummary cs;
    cs.min_eigenvalue = 1.0;

    for (std::size_t j = 0; j + 1 < offsets.size(); ++j) {
      const double t0 = t_cycle + offsets[j];
      const double t1 = t_cycle + offsets[j + 1];
      sample_state(t0);
      f.segment = segment_of(params, 0.5 * (t0 + t1));
      h = rk::integrate_adaptive(f, y, t0, t1, ctrl, h);
    }

    // summarize the cycle on the sampling grid
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const DensityMatrix2& rho = grid[i];
      const AdiabaticFrame& fr = grid_frames[i];
      cs.min_pg_prime = std::min(cs.min_pg_prime, superadiabatic_population(fr, rho));
      cs.min_eigenvalue = std::min(cs.min_eigenvalue, rho.min_eigenvalue());
      cs.max_alpha = std::max(cs.max_alpha, local_alpha(fr));
      cs.rho_gg_mean += rho.rho_gg;
    }
    cs.rho_gg_mean /= static_cast<double>(grid.size());
    cs.q_left = y[3];
    cs.q_right = y[4];

    if (k == 0) {
      cs.dist_prev = std::numeric_limits<double>::infinity();
    } else {
      double d = 0.0;
      for (std::size_t i = 0; i < grid.size() && i < prev_grid.size(); ++i) {
        d = std::max(d, std::abs(grid[i].rho_gg - prev_grid[i].rho_gg));
        d = std::max(d, std::abs(grid[i].rho_ge_re - prev_grid[i].rho_ge_re));
        d = std::max(d, std::abs(grid[i].rho_ge_im - prev_grid[i].rho_ge_im));
      }
      cs.dist_prev = d;
    }
    rec.cycles.push_back(cs);

    const bool is_last_planned = (k + 1 == cfg.n_cycles_max);
    const bool stationary = (k > 0 && cs.dist_prev < cfg.stationarity_tol);
    if (cfg.store_all_samples || stationary || is_last_planned) {
      if (cfg.store_all_samples) {
        rec.sample_times.insert(rec.sample_times.end(), grid_times.begin(),
                                grid_times.end());
        rec.samples.insert(rec.samples.end(), grid.begin(), grid.end());
        if (cfg.store_frames) {
          rec.frames.insert(rec.frames.end(), grid_frames.begin(),
                            grid_frames.end());
        }
      } else {
        rec.sample_times = grid_times;
        rec.samples = grid;
        if (cfg.store_frames) rec.frames = grid_frames;
      }
    }

    if (stationary) {
      rec.converged = true;
      rec.converged_cycle = k;
      rec.final_state = {y[0], y[1], y[2]};
      return rec;
    }
    prev_grid = grid;
  }

  rec.final_state = {y[0], y[1], y[2]};
  return rec;
}

std::pair<int, bool> reach_quasi_stationary(const TrajectoryRecord& record) {
  for (std::size_t k = 1; k < record.cycles.size(); ++k) {
    if (record.cycles[k].dist_prev < record.stationarity_tol) {
      return {static_cast<int>(k), true};
    }
  }
  return {static_cast<int>(record.cycles.size()), false};
}

AdiabaticityReport adiabaticity_report(const SluiceParams& params, int n_points) {
  AdiabaticityReport rep;
  const double tp = params.period();
  rep.times.reserve(n_points);
  rep.alpha_t.reserve(n_points);
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_points; ++i) {
    const double t = tp * (i + 0.5) / n_points;
    const AdiabaticFrame fr = frame_at(params, cycle_waveform(params, t));
    const double a = local_alpha(fr);
    rep.times.push_back(t);
    rep.alpha_t.push_back(a);
    rep.alpha_max = std::max(rep.alpha_max, a);
    min_gap = std::min(min_gap, fr.omega0);
  }
  rep.delta_min = min_gap;
  rep.alpha_bar = 1.0 / (min_gap * tp);
  return rep;
}

}  // namespace qpump
