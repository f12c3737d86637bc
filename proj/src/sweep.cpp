#include "qpump/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qpump/observables.hpp"
#include "qpump/units.hpp"

namespace qpump {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

SweepRow run_point(const RunConfig& base, SweepAxis axis, double value,
                   RhsVariant variant) {
  SweepRow row;
  row.variant = variant_name(variant);
  row.axis = axis_name(axis);
  row.axis_value = value;

  const RunConfig cfg = apply_axis(base, axis, value);
  row.phi = cfg.model.phi_over_pi * units::pi;
  row.g = cfg.model.g;
  row.f_hz = cfg.model.f_MHz * 1e6;
  row.flux = cfg.environment.engineered.flux_over_phi0;
  row.temperature_k = cfg.environment.temperature_K;

  try {
    const SluiceParams params = make_sluice_params(cfg.model);
    const SpectrumModel model = make_spectrum_model(cfg.environment);
    const TrajectoryRecord rec = integrate_cycles(
        variant, params, model, cfg.integrator, DensityMatrix2{});

    const int last = static_cast<int>(rec.cycles.size()) - 1;
    const PumpedCharge q = pumped_charge_per_cycle(rec, last);
    row.converged = rec.converged;
    row.cycles = rec.converged ? rec.converged_cycle + 1
                               : static_cast<int>(rec.cycles.size());
    row.q_left = q.q_left;
    row.q_right = q.q_right;
    row.q_avg = q.q_avg;
    row.delta_q = q.q_left - q.q_right;
    row.min_pg_prime = rec.cycles[last].min_pg_prime;
    double min_eig = 0.0;
    for (const CycleSummary& cs : rec.cycles) min_eig = std::min(min_eig, cs.min_eigenvalue);
    row.max_pos_violation = std::max(0.0, -min_eig);
    row.alpha_bar = adiabaticity_report(params, 1024).alpha_bar;
  } catch (const std::exception& e) {
    row.ok = false;
    row.message = e.what();
  }
  return row;
}

}  // namespace

int default_workers() {
  if (const char* env = std::getenv("QPUMP_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 2;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg, int workers) {
  if (cfg.sweep.grid.empty()) return {};
  struct Job {
    double value;
    RhsVariant variant;
  };
  std::vector<Job> jobs;
  for (double v : cfg.sweep.grid) {
    for (RhsVariant variant : cfg.sweep.variants) jobs.push_back({v, variant});
  }
  std::vector<SweepRow> rows(jobs.size());

  if (workers <= 0) workers = default_workers();
  workers = std::min<int>(workers, static_cast<int>(jobs.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      rows[i] = run_point(cfg, cfg.sweep.axis, jobs[i].value, jobs[i].variant);
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return rows;
}

namespace {

const char* const kColumns[] = {
    "variant", "axis", "axis_value", "phi_rad", "g", "f_hz", "flux_over_phi0",
    "temperature_K", "status", "converged", "cycles", "q_left_2e", "q_right_2e",
    "q_avg_2e", "delta_q_2e", "min_pg_prime", "max_pos_violation", "alpha_bar",
    "message"};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < std::size(kColumns); ++i) {
    os << (i ? "," : "") << kColumns[i];
  }
  os << "\n";
  for (const SweepRow& r : rows) {
    os << r.variant << ',' << r.axis << ',' << fmt(r.axis_value) << ','
       << fmt(r.phi) << ',' << fmt(r.g) << ',' << fmt(r.f_hz) << ','
       << fmt(r.flux) << ',' << fmt(r.temperature_k) << ','
       << (r.ok ? "ok" : "failed") << ',' << (r.converged ? 1 : 0) << ','
       << r.cycles << ',' << fmt(r.q_left) << ',' << fmt(r.q_right) << ','
       << fmt(r.q_avg) << ',' << fmt(r.delta_q) << ',' << fmt(r.min_pg_prime)
       << ',' << fmt(r.max_pos_violation) << ',' << fmt(r.alpha_bar) << ','
       << csv_escape(r.message) << "\n";
  }
  return os.str();
}

std::string rows_to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    arr.push_back({{"variant", r.variant},
                   {"axis", r.axis},
                   {"axis_value", r.axis_value},
                   {"phi_rad", r.phi},
                   {"g", r.g},
                   {"f_hz", r.f_hz},
                   {"flux_over_phi0", r.flux},
                   {"temperature_K", r.temperature_k},
                   {"status", r.ok ? "ok" : "failed"},
                   {"converged", r.converged},
                   {"cycles", r.cycles},
                   {"q_left_2e", r.q_left},
                   {"q_right_2e", r.q_right},
                   {"q_avg_2e", r.q_avg},
                   {"delta_q_2e", r.delta_q},
                   {"min_pg_prime", r.min_pg_prime},
                   {"max_pos_violation", r.max_pos_violation},
                   {"alpha_bar", r.alpha_bar},
                   {"message", r.message}});
  }
  return arr.dump(2) + "\n";
}

std::string manifest_text(const RunConfig& cfg) {
  nlohmann::json j;
  j["qpump_manifest"] = 1;
  j["version"] = qpump_version;
  j["tolerances"] = {{"rel_tol", cfg.integrator.rel_tol},
                     {"abs_tol", cfg.integrator.abs_tol},
                     {"stationarity_tol", cfg.integrator.stationarity_tol},
                     {"pos_tol", cfg.integrator.pos_tol}};
  j["config"] = nlohmann::json::parse(config_to_json_text(cfg));
  return j.dump(2) + "\n";
}

void emit(const std::vector<SweepRow>& rows, const RunConfig& cfg,
          const std::string& path, const std::string& format) {
  const std::string body = format == "json" ? rows_to_json(rows) : rows_to_csv(rows);
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit: cannot write " + path);
    out << body;
    if (!out) throw std::runtime_error("emit: write failed for " + path);
  }
  const std::string mpath = path + ".manifest.json";
  std::ofstream mout(mpath, std::ios::binary);
  if (!mout) throw std::runtime_error("emit: cannot write " + mpath);
  mout << manifest_text(cfg);
  if (!mout) throw std::runtime_error("emit: write failed for " + mpath);
}

}  // namespace qpump
