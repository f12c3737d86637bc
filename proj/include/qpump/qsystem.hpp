#pragma once

#include "qpump/types.hpp"

namespace qpump {

// Trace norm ||w|| = sum of singular values of the 2x2 matrix
// [[w_gg, w_ge], [conj(w_ge), w_ee]].  Throws InvalidFrameError on
// non-finite input.
double trace_norm_w(const AdiabaticFrame& frame);

// Local adiabatic parameter alpha(t) = hbar ||w|| / Delta = ||w|| / omega0
// for a two-level system.  Throws DegenerateGapError if omega0 <= 0.
double local_alpha(const AdiabaticFrame& frame);

}  // namespace qpump
