#include "qpump/qsystem.hpp"

#include <cmath>

namespace qpump {

double trace_norm_w(const AdiabaticFrame& frame) {
  const double wgg = frame.w_gg;
  const double wee = frame.w_ee;
  const double wre = frame.w_ge_re;
  const double wim = frame.w_ge_im;
  if (!std::isfinite(wgg) || !std::isfinite(wee) || !std::isfinite(wre) ||
      !std::isfinite(wim)) {
    throw InvalidFrameError("trace_norm_w: non-finite w matrix element");
  }
  // w is hermitian, so the singular values are |eigenvalues|
  const double mean = 0.5 * (wgg + wee);
  const double half = 0.5 * (wgg - wee);
  const double rad = std::sqrt(half * half + wre * wre + wim * wim);
  return std::abs(mean + rad) + std::abs(mean - rad);
}

double local_alpha(const AdiabaticFrame& frame) {
  if (!(frame.omega0 > 0.0)) {
    throw DegenerateGapError("local_alpha: omega0 must be positive");
  }
  return trace_norm_w(frame) / frame.omega0;
}

}  // namespace qpump
