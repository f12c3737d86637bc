#include "qpump/sluice.hpp"

#include <cmath>
#include <string>

namespace qpump {

std::vector<std::string> SluiceParams::validate() const {
  std::vector<std::string> warnings;
  auto check_j = [&](double jmin, double jmax, const char* side) {
    if (!(0.0 < jmin && jmin <= jmax)) {
      warnings.push_back(std::string("josephson couplings on ") + side +
                         " must satisfy 0 < J_min <= J_max");
    }
    if (jmax > 0.3 * e_c) {
      warnings.push_back(std::string("J_") + side +
                         "^max is not small against E_C; two-state "
                         "approximation degrades");
    }
  };
  check_j(j_l_min, j_l_max, "L");
  check_j(j_r_min, j_r_max, "R");
  if (!(dng_min < dng_max)) {
    warnings.push_back("gate offsets must satisfy dng_min < dng_max");
  }
  if (dng_min <= -0.5 || dng_max >= 0.5) {
    warnings.push_back("gate offsets outside (-1/2, 1/2); two-state "
                       "approximation invalid");
  }
  if (!(f > 0.0)) warnings.push_back("cycle frequency must be positive");
  return warnings;
}

int segment_of(const SluiceParams& p, double t) {
  const double tp = p.period();
  double u = std::fmod(t, tp) / tp;
  if (u < 0.0) u += 1.0;
  int seg = static_cast<int>(u * 6.0);
  return seg > 5 ? 5 : seg;
}

ControlPoint cycle_waveform_in_segment(const SluiceParams& p, double t, int segment) {
  const double tp = p.period();
  double u = std::fmod(t, tp) / tp;
  if (u < 0.0) u += 1.0;
  double x = u * 6.0 - segment;  // position in segment, 0..1
  if (x < 0.0) x = 0.0;
  if (x > 1.0) x = 1.0;

  ControlPoint cp;
  cp.j_l = p.j_l_min;
  cp.j_r = p.j_r_min;
  cp.dng = p.dng_min;

  const double rate = 6.0 / tp;
  const double jl_range = p.j_l_max - p.j_l_min;
  const double jr_range = p.j_r_max - p.j_r_min;
  const double ng_range = p.dng_max - p.dng_min;

  switch (segment) {
    case 0:
      cp.j_l = p.j_l_min + jl_range * x;
      cp.dj_l = jl_range * rate;
      break;
    case 1:
      cp.j_l = p.j_l_max;
      cp.dng = p.dng_min + ng_range * x;
      cp.ddng = ng_range * rate;
      break;
    case 2:
      cp.j_l = p.j_l_max - jl_range * x;
      cp.dj_l = -jl_range * rate;
      cp.dng = p.dng_max;
      break;
    case 3:
      cp.j_r = p.j_r_min + jr_range * x;
      cp.dj_r = jr_range * rate;
      cp.dng = p.dng_max;
      break;
    case 4:
      cp.j_r = p.j_r_max;
      cp.dng = p.dng_max - ng_range * x;
      cp.ddng = -ng_range * rate;
      break;
    default:
      cp.j_r = p.j_r_max - jr_range * x;
      cp.dj_r = -jr_range * rate;
      break;
  }
  return cp;
}

ControlPoint cycle_waveform(const SluiceParams& p, double t) {
  return cycle_waveform_in_segment(p, t, segment_of(p, t));
}

AdiabaticFrame frame_at(const SluiceParams& p, const ControlPoint& cp) {
  const double jl = cp.j_l, jr = cp.j_r;
  const double cph = std::cos(p.phi);
  const double e12sq = 0.25 * (jl * jl + jr * jr + 2.0 * jl * jr * cph);
  const double e12 = std::sqrt(e12sq);

  const double sh = std::sin(0.5 * p.phi);
  const double ch = std::cos(0.5 * p.phi);
  const double gamma = std::atan2((jr - jl) * sh, (jr + jl) * ch);

  // gamma-dot from d/dt atan2(...); the denominator is 4 E12^2
  const double cross = cp.dj_r * jl - cp.dj_l * jr;
  const double dgamma = (e12sq > 0.0) ? std::sin(p.phi) * cross / (4.0 * e12sq) : 0.0;

  const double x = e12 / p.e_c;  // gap coordinate in units of E_C
  const double s2 = cp.dng * cp.dng + x * x;
  const double omega0 = 2.0 * p.e_c * std::sqrt(s2);
  if (!(omega0 > 0.0)) {
    throw DegenerateGapError("frame_at: degenerate spectrum (E12 = dng = 0)");
  }
  if (x == 0.0) {
    throw SingularCoordinateError("frame_at: eta^2 = 1 (E12 = 0), "
                                  "eta-dot/sqrt(1-eta^2) undefined");
  }

  const double eta = cp.dng / std::sqrt(s2);
  const double sq1me2 = x / std::sqrt(s2);  // sqrt(1 - eta^2)

  const double de12 =
      (jl * cp.dj_l + jr * cp.dj_r + (cp.dj_l * jr + jl * cp.dj_r) * cph) /
      (4.0 * e12);
  const double dx = de12 / p.e_c;
  const double deta_over_sq = (cp.ddng * x - cp.dng * dx) / s2;  // eta-dot/sqrt(1-eta^2)

  AdiabaticFrame fr;
  fr.e12 = e12;
  fr.gamma = gamma;
  fr.eta = eta;
  fr.omega0 = omega0;
  fr.m1 = -p.g * eta;
  fr.m2_re = p.g * sq1me2;
  fr.m2_im = 0.0;
  fr.w_gg = -0.5 * (1.0 + eta) * dgamma;
  fr.w_ee = -0.5 * (1.0 - eta) * dgamma;
  fr.w_ge_re = 0.5 * sq1me2 * dgamma;
  fr.w_ge_im = -0.5 * deta_over_sq;
  return fr;
}

Eigenstates eigenstate_amplitudes(const AdiabaticFrame& frame) {
  const double eta = frame.eta;
  const double sm = std::sqrt(std::max(0.0, 1.0 - eta));
  const double sp = std::sqrt(std::max(0.0, 1.0 + eta));
  const complexd ph = std::polar(1.0, -frame.gamma);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigenstates es;
  es.ground = {inv_sqrt2 * sm, inv_sqrt2 * ph * sp};
  es.excited = {inv_sqrt2 * sp, -inv_sqrt2 * ph * sm};
  return es;
}

std::array<complexd, 4> two_level_hamiltonian(const AdiabaticFrame& frame) {
  const double half = 0.5 * frame.omega0;
  const double eta = frame.eta;
  const double sq = std::sqrt(std::max(0.0, 1.0 - eta * eta));
  const complexd off = -half * sq * std::polar(1.0, frame.gamma);
  return {complexd(half * eta, 0.0), off, std::conj(off),
          complexd(-half * eta, 0.0)};
}

}  // namespace qpump
