#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpump/environment.hpp"
#include "qpump/integrator.hpp"
#include "qpump/sluice.hpp"

namespace qpump {

// Configuration mirrors the experimental captions: SI values with explicit
// unit suffixes in the key names, converted once at this boundary.
struct EngineeredConfig {
  bool enabled = false;
  int m_squids = 100;
  double c_e_fF = 1.0;
  double c_s_fF = 0.3;
  double r_s_ohm = 500.0;
  double i_c_nA = 4.0;
  double flux_over_phi0 = 0.0;
};

struct EnvironmentConfig {
  double r_ohm = 300e3;
  double temperature_K = 0.0;
  double t0_K = 0.1;
  EngineeredConfig engineered;
};

struct ModelConfig {
  double e_c_over_kb_K = 1.0;
  double j_l_max_over_e_c = 0.1;
  double j_l_min_over_j_l_max = 0.03;
  double j_r_max_over_e_c = 0.1;
  double j_r_min_over_j_r_max = 0.03;
  double dng_max = 0.3;
  double dng_min = -0.3;
  double phi_over_pi = 0.5;
  double g = 0.01;
  double f_MHz = 10.0;
};

enum class SweepAxis { PhasePhi, CouplingG, FrequencyF, Flux, Temperature };

// axis units: phase_phi [rad], coupling_g [-], frequency_f [Hz],
// flux [phi/Phi0], temperature [K]
struct SweepConfig {
  SweepAxis axis = SweepAxis::CouplingG;
  std::vector<double> grid;
  std::vector<RhsVariant> variants{RhsVariant::Full};
  std::vector<std::string> outputs;  // informational; standard columns always emitted
};

struct RunConfig {
  ModelConfig model;
  EnvironmentConfig environment;
  IntegratorConfig integrator;
  SweepConfig sweep;
};

SluiceParams make_sluice_params(const ModelConfig& m);
SpectrumModel make_spectrum_model(const EnvironmentConfig& e);

// Apply one sweep-axis value to a copy of the configuration.
RunConfig apply_axis(const RunConfig& cfg, SweepAxis axis, double value);

std::string axis_name(SweepAxis axis);
SweepAxis axis_from_name(const std::string& name);
std::string variant_name(RhsVariant v);
RhsVariant variant_from_name(const std::string& name);

// JSON round trip.  load_config also accepts an emitted run manifest (the
// manifest embeds the full normalized config).
RunConfig config_from_json_text(const std::string& text);
RunConfig load_config(const std::string& path);
std::string config_to_json_text(const RunConfig& cfg);

// Named parameter presets reproducing the reference figures; each preset is
// a list of (series name, config) pairs, one emitted table per series.
std::vector<std::pair<std::string, RunConfig>> preset(const std::string& name);
std::vector<std::string> preset_names();

inline constexpr const char* qpump_version = "0.1.0";

}  // namespace qpump
