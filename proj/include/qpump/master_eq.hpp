#pragma once

#include "qpump/types.hpp"

namespace qpump {

enum class RhsVariant { Full, Secular, Bloch, Unitary };

struct StateDerivative {
  double d_gg = 0.0;
  double d_ge_re = 0.0;
  double d_ge_im = 0.0;

  complexd d_ge() const { return {d_ge_re, d_ge_im}; }
};

// Full non-secular master equation in the Schroedinger picture, every term
// kept to first order in the drive (w) and second order in the coupling.
// Contains, besides the Bloch relaxation/dephasing rates, the static
// population-coherence and counter-rotating couplings and all drive-bath
// cross terms in [2S(0)-S(-w0)-S(w0)]/w0, [S(0)-S(w0)]/w0, [S(-w0)-S(w0)]/w0.
// Throws DegenerateGapError when omega0 <= 0 (the cross terms divide by it).
StateDerivative rhs_full(const AdiabaticFrame& frame, const SpectralTriple& sp,
                         const DensityMatrix2& rho);

// Secular approximation of the same equation: the surviving terms are the
// Bloch rates plus the drive and the w-proportional secular cross terms.
StateDerivative rhs_secular(const AdiabaticFrame& frame, const SpectralTriple& sp,
                            const DensityMatrix2& rho);

// Bloch equations for a non-driven system (w ignored entirely):
//   d rho_gg = G_down (1 - rho_gg) - G_up rho_gg
//   d rho_ge = i w0 rho_ge - G_ge rho_ge
StateDerivative rhs_bloch(const AdiabaticFrame& frame, const SpectralTriple& sp,
                          const DensityMatrix2& rho);

// von Neumann equations (no environment).
StateDerivative rhs_unitary(const AdiabaticFrame& frame, const DensityMatrix2& rho);

StateDerivative rhs(RhsVariant variant, const AdiabaticFrame& frame,
                    const SpectralTriple& sp, const DensityMatrix2& rho);

// Relaxation, excitation and coherence-decay rates of the Bloch limit.
struct BlochRates {
  double gamma_down = 0.0;
  double gamma_up = 0.0;
  double gamma_ge = 0.0;
};
BlochRates bloch_rates(const AdiabaticFrame& frame, const SpectralTriple& sp);

}  // namespace qpump
