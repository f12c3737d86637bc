#include "qpump/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qpump/units.hpp"

namespace qpump {

using nlohmann::json;

SluiceParams make_sluice_params(const ModelConfig& m) {
  SluiceParams p;
  p.e_c = m.e_c_over_kb_K * units::kelvin;
  p.j_l_max = m.j_l_max_over_e_c * p.e_c;
  p.j_l_min = m.j_l_min_over_j_l_max * p.j_l_max;
  p.j_r_max = m.j_r_max_over_e_c * p.e_c;
  p.j_r_min = m.j_r_min_over_j_r_max * p.j_r_max;
  p.dng_max = m.dng_max;
  p.dng_min = m.dng_min;
  p.phi = m.phi_over_pi * units::pi;
  p.g = m.g;
  p.f = m.f_MHz * 1e6;
  return p;
}

SpectrumModel make_spectrum_model(const EnvironmentConfig& e) {
  SpectrumModel model;
  model.ohmic.kappa = e.r_ohm * units::ohm;
  model.ohmic.theta = e.temperature_K * units::kelvin;
  model.ohmic.theta0 = e.t0_K * units::kelvin;
  if (e.engineered.enabled) {
    EngineeredEnvironment env;
    env.base = model.ohmic;
    env.m_squids = e.engineered.m_squids;
    env.c_e = e.engineered.c_e_fF * 1e-15;
    env.c_s = e.engineered.c_s_fF * 1e-15;
    env.r_s = e.engineered.r_s_ohm;
    env.r_series = e.r_ohm;
    env.l0 = units::josephson_l0(e.engineered.i_c_nA * 1e-9);
    env.flux = e.engineered.flux_over_phi0;
    model.engineered = env;
  }
  return model;
}

RunConfig apply_axis(const RunConfig& cfg, SweepAxis axis, double value) {
  RunConfig out = cfg;
  switch (axis) {
    case SweepAxis::PhasePhi: out.model.phi_over_pi = value / units::pi; break;
    case SweepAxis::CouplingG: out.model.g = value; break;
    case SweepAxis::FrequencyF: out.model.f_MHz = value / 1e6; break;
    case SweepAxis::Flux: out.environment.engineered.flux_over_phi0 = value; break;
    case SweepAxis::Temperature: out.environment.temperature_K = value; break;
  }
  return out;
}

std::string axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::PhasePhi: return "phase_phi";
    case SweepAxis::CouplingG: return "coupling_g";
    case SweepAxis::FrequencyF: return "frequency_f";
    case SweepAxis::Flux: return "flux";
    case SweepAxis::Temperature: return "temperature";
  }
  return "?";
}

SweepAxis axis_from_name(const std::string& name) {
  if (name == "phase_phi") return SweepAxis::PhasePhi;
  if (name == "coupling_g") return SweepAxis::CouplingG;
  if (name == "frequency_f") return SweepAxis::FrequencyF;
  if (name == "flux") return SweepAxis::Flux;
  if (name == "temperature") return SweepAxis::Temperature;
  throw ConfigError("unknown sweep axis: " + name);
}

std::string variant_name(RhsVariant v) {
  switch (v) {
    case RhsVariant::Full: return "full";
    case RhsVariant::Secular: return "secular";
    case RhsVariant::Bloch: return "bloch";
    case RhsVariant::Unitary: return "unitary";
  }
  return "?";
}

RhsVariant variant_from_name(const std::string& name) {
  if (name == "full") return RhsVariant::Full;
  if (name == "secular") return RhsVariant::Secular;
  if (name == "bloch") return RhsVariant::Bloch;
  if (name == "unitary") return RhsVariant::Unitary;
  throw ConfigError("unknown equation variant: " + name);
}

namespace {

template <class T>
void get_if(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

json to_json(const RunConfig& c) {
  json j;
  j["model"] = {
      {"e_c_over_kb_K", c.model.e_c_over_kb_K},
      {"j_l_max_over_e_c", c.model.j_l_max_over_e_c},
      {"j_l_min_over_j_l_max", c.model.j_l_min_over_j_l_max},
      {"j_r_max_over_e_c", c.model.j_r_max_over_e_c},
      {"j_r_min_over_j_r_max", c.model.j_r_min_over_j_r_max},
      {"dng_max", c.model.dng_max},
      {"dng_min", c.model.dng_min},
      {"phi_over_pi", c.model.phi_over_pi},
      {"g", c.model.g},
      {"f_MHz", c.model.f_MHz},
  };
  j["environment"] = {
      {"r_ohm", c.environment.r_ohm},
      {"temperature_K", c.environment.temperature_K},
      {"t0_K", c.environment.t0_K},
      {"engineered",
       {{"enabled", c.environment.engineered.enabled},
        {"m_squids", c.environment.engineered.m_squids},
        {"c_e_fF", c.environment.engineered.c_e_fF},
        {"c_s_fF", c.environment.engineered.c_s_fF},
        {"r_s_ohm", c.environment.engineered.r_s_ohm},
        {"i_c_nA", c.environment.engineered.i_c_nA},
        {"flux_over_phi0", c.environment.engineered.flux_over_phi0}}},
  };
  j["integrator"] = {
      {"rel_tol", c.integrator.rel_tol},
      {"abs_tol", c.integrator.abs_tol},
      {"max_step", c.integrator.max_step},
      {"n_cycles_max", c.integrator.n_cycles_max},
      {"stationarity_tol", c.integrator.stationarity_tol},
      {"pos_tol", c.integrator.pos_tol},
      {"samples_per_cycle", c.integrator.samples_per_cycle},
  };
  std::vector<std::string> variants;
  for (RhsVariant v : c.sweep.variants) variants.push_back(variant_name(v));
  j["sweep"] = {
      {"axis", axis_name(c.sweep.axis)},
      {"grid", c.sweep.grid},
      {"variants", variants},
      {"outputs", c.sweep.outputs},
  };
  return j;
}

RunConfig from_json(const json& j) {
  RunConfig c;
  if (j.contains("model")) {
    const json& m = j.at("model");
    get_if(m, "e_c_over_kb_K", c.model.e_c_over_kb_K);
    get_if(m, "j_l_max_over_e_c", c.model.j_l_max_over_e_c);
    get_if(m, "j_l_min_over_j_l_max", c.model.j_l_min_over_j_l_max);
    get_if(m, "j_r_max_over_e_c", c.model.j_r_max_over_e_c);
    get_if(m, "j_r_min_over_j_r_max", c.model.j_r_min_over_j_r_max);
    get_if(m, "dng_max", c.model.dng_max);
    get_if(m, "dng_min", c.model.dng_min);
    get_if(m, "phi_over_pi", c.model.phi_over_pi);
    get_if(m, "g", c.model.g);
    get_if(m, "f_MHz", c.model.f_MHz);
  }
  if (j.contains("environment")) {
    const json& e = j.at("environment");
    get_if(e, "r_ohm", c.environment.r_ohm);
    get_if(e, "temperature_K", c.environment.temperature_K);
    get_if(e, "t0_K", c.environment.t0_K);
    if (e.contains("engineered")) {
      const json& g = e.at("engineered");
      get_if(g, "enabled", c.environment.engineered.enabled);
      get_if(g, "m_squids", c.environment.engineered.m_squids);
      get_if(g, "c_e_fF", c.environment.engineered.c_e_fF);
      get_if(g, "c_s_fF", c.environment.engineered.c_s_fF);
      get_if(g, "r_s_ohm", c.environment.engineered.r_s_ohm);
      get_if(g, "i_c_nA", c.environment.engineered.i_c_nA);
      get_if(g, "flux_over_phi0", c.environment.engineered.flux_over_phi0);
    }
  }
  if (j.contains("integrator")) {
    const json& i = j.at("integrator");
    get_if(i, "rel_tol", c.integrator.rel_tol);
    get_if(i, "abs_tol", c.integrator.abs_tol);
    get_if(i, "max_step", c.integrator.max_step);
    get_if(i, "n_cycles_max", c.integrator.n_cycles_max);
    get_if(i, "stationarity_tol", c.integrator.stationarity_tol);
    get_if(i, "pos_tol", c.integrator.pos_tol);
    get_if(i, "samples_per_cycle", c.integrator.samples_per_cycle);
  }
  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    if (s.contains("axis")) c.sweep.axis = axis_from_name(s.at("axis").get<std::string>());
    get_if(s, "grid", c.sweep.grid);
    if (s.contains("variants")) {
      c.sweep.variants.clear();
      for (const auto& v : s.at("variants")) {
        c.sweep.variants.push_back(variant_from_name(v.get<std::string>()));
      }
    }
    get_if(s, "outputs", c.sweep.outputs);
  }
  if (c.sweep.variants.empty()) throw ConfigError("sweep.variants must not be empty");
  for (std::size_t i = 1; i < c.sweep.grid.size(); ++i) {
    if (!(c.sweep.grid[i] > c.sweep.grid[i - 1])) {
      throw ConfigError("sweep.grid must be strictly increasing");
    }
  }
  return c;
}

}  // namespace

RunConfig config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (j.contains("config")) j = j.at("config");  // emitted manifest
  try {
    return from_json(j);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json_text(ss.str());
}

std::string config_to_json_text(const RunConfig& cfg) {
  return to_json(cfg).dump(2);
}

namespace {

std::vector<double> linspace(double a, double b, int n, bool inclusive = true) {
  std::vector<double> v;
  const int den = inclusive ? n - 1 : n;
  for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / den);
  return v;
}

std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> v;
  const double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i) v.push_back(std::exp(la + (lb - la) * i / (n - 1)));
  return v;
}

RunConfig fig2_base() {
  RunConfig c;  // defaults already carry the reference parameter set
  c.model.f_MHz = 75.0;
  return c;
}

RunConfig fig5_base() {
  RunConfig c;
  c.model.j_l_max_over_e_c = 0.1;
  c.model.j_l_min_over_j_l_max = 0.006;
  c.model.j_r_max_over_e_c = 0.2;
  c.model.j_r_min_over_j_r_max = 0.04;
  c.model.dng_max = 0.4;
  c.model.dng_min = -0.03;
  c.model.f_MHz = 10.0;
  return c;
}

RunConfig fig6_base() {
  RunConfig c;
  c.model.f_MHz = 10.0;
  c.model.g = 0.025;
  c.environment.r_ohm = 1.5e3;
  c.environment.engineered.enabled = true;
  c.environment.engineered.m_squids = 100;
  c.environment.engineered.c_e_fF = 1.0;
  c.environment.engineered.i_c_nA = 4.0;
  c.sweep.axis = SweepAxis::Flux;
  c.sweep.grid = linspace(0.0, 1.0, 33);
  return c;
}

std::string series_tag(const char* stem, double v) {
  std::ostringstream os;
  os << stem << v;
  std::string s = os.str();
  for (char& ch : s) {
    if (ch == '.') ch = 'p';
  }
  return s;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b", "fig5", "fig6"};
}

std::vector<std::pair<std::string, RunConfig>> preset(const std::string& name) {
  std::vector<std::pair<std::string, RunConfig>> out;
  if (name == "fig2a" || name == "fig4a") {
    for (double g : {0.01, 0.0125, 0.015, 0.1}) {
      RunConfig c = fig2_base();
      c.model.g = g;
      if (name == "fig4a") c.environment.temperature_K = 0.03;
      c.sweep.axis = SweepAxis::PhasePhi;
      c.sweep.grid = linspace(0.0, 2.0 * units::pi, 63, false);
      out.emplace_back(name + series_tag("_g", g), c);
    }
  } else if (name == "fig2b" || name == "fig4b") {
    const auto freqs = (name == "fig2b") ? std::vector<double>{10, 25, 50, 65, 75}
                                         : std::vector<double>{10, 50, 75};
    for (double f : freqs) {
      RunConfig c = fig2_base();
      c.model.f_MHz = f;
      c.model.phi_over_pi = 0.5;
      if (name == "fig4b") c.environment.temperature_K = 0.03;
      c.sweep.axis = SweepAxis::CouplingG;
      c.sweep.grid = logspace(0.005, 0.1, 20);
      out.emplace_back(name + series_tag("_f", f), c);
    }
  } else if (name == "fig3a") {
    RunConfig c = fig2_base();
    c.model.g = 0.01;
    c.sweep.axis = SweepAxis::FrequencyF;
    c.sweep.grid = {10e6, 75e6, 100e6};
    out.emplace_back("fig3a", c);
  } else if (name == "fig3b") {
    RunConfig c = fig2_base();
    c.sweep.axis = SweepAxis::CouplingG;
    c.sweep.grid = {0.01, 0.0125, 0.015};
    out.emplace_back("fig3b", c);
  } else if (name == "fig5") {
    RunConfig c = fig5_base();
    c.sweep.axis = SweepAxis::CouplingG;
    c.sweep.grid = logspace(0.01, 0.1, 13);
    c.sweep.variants = {RhsVariant::Full};
    out.emplace_back("fig5_full", c);
    c.sweep.variants = {RhsVariant::Secular};
    out.emplace_back("fig5_secular", c);
  } else if (name == "fig6") {
    RunConfig c = fig6_base();
    c.environment.engineered.r_s_ohm = 500.0;
    c.environment.engineered.c_s_fF = 0.3;
    out.emplace_back("fig6_rs500", c);
    c.environment.engineered.r_s_ohm = 1000.0;
    c.environment.engineered.c_s_fF = 0.1;
    out.emplace_back("fig6_rs1000", c);
  } else {
    throw ConfigError("unknown preset: " + name);
  }
  return out;
}

}  // namespace qpump
