#pragma once

#include <string>
#include <vector>

#include "qpump/config.hpp"

namespace qpump {

struct SweepRow {
  std::string variant;
  std::string axis;
  double axis_value = 0.0;
  // resolved inputs
  double phi = 0.0, g = 0.0, f_hz = 0.0, flux = 0.0, temperature_k = 0.0;
  // outcome
  bool ok = true;
  std::string message;
  bool converged = false;
  int cycles = 0;
  double q_left = 0.0, q_right = 0.0, q_avg = 0.0, delta_q = 0.0;
  double min_pg_prime = 0.0;
  double max_pos_violation = 0.0;
  double alpha_bar = 0.0;
};

// One trajectory per (grid value, variant), grid-major order; independent
// points run on a bounded worker pool, results gathered in input order.
// A failed trajectory marks its row instead of aborting the sweep.
std::vector<SweepRow> run_sweep(const RunConfig& cfg, int workers = 0);

// Delimiter-separated emit with >= 12 significant digits plus a run manifest
// (config echo, code version, tolerances) written alongside as
// <path>.manifest.json.  format is "csv" or "json".
void emit(const std::vector<SweepRow>& rows, const RunConfig& cfg,
          const std::string& path, const std::string& format);

std::string rows_to_csv(const std::vector<SweepRow>& rows);
std::string rows_to_json(const std::vector<SweepRow>& rows);
std::string manifest_text(const RunConfig& cfg);

int default_workers();

}  // namespace qpump
