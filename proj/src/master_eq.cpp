#include "qpump/master_eq.hpp"

#include <cmath>

namespace qpump {

namespace {

// sub-expressions shared verbatim between the variants so that the exact
// reduction identities (secular == bloch at w = 0, full == secular == unitary
// at S = 0) hold to the last bit rather than to rounding
struct Shared {
  complexd m2, wge, rge;
  double rgg = 0.0;
  double am2sq = 0.0;   // |m2|^2
  double sig = 0.0;     // S(w0) + S(-w0)
  double cmw = 0.0;     // Re(m2)Re(wge) + Im(m2)Im(wge)
  double cmrho = 0.0;   // Re(m2)Re(rge) + Im(m2)Im(rge)

  Shared(const AdiabaticFrame& f, const SpectralTriple& s, const DensityMatrix2& rho)
      : m2(f.m2()), wge(f.w_ge()), rge(rho.rho_ge()), rgg(rho.rho_gg) {
    am2sq = std::norm(m2);
    sig = s.s_plus + s.s_minus;
    cmw = m2.real() * wge.real() + m2.imag() * wge.imag();
    cmrho = m2.real() * rge.real() + m2.imag() * rge.imag();
  }

  double drive_gg() const { return -2.0 * std::imag(std::conj(wge) * rge); }

  complexd drive_ge(const AdiabaticFrame& f) const {
    return complexd(0.0, 1.0) * wge * (2.0 * rgg - 1.0) +
           complexd(0.0, f.w_ee - f.w_gg) * rge +
           complexd(0.0, f.omega0) * rge;
  }

  double pop_gg(const SpectralTriple& s) const {
    return s.s_plus * am2sq - sig * am2sq * rgg;
  }

  complexd deph_bloch(const SpectralTriple& s, double m1) const {
    const double g_ge =
        0.5 * s.s_minus * am2sq + 0.5 * s.s_plus * am2sq + 2.0 * s.s_zero * m1 * m1;
    return -g_ge * rge;
  }
};

void require_gap(const AdiabaticFrame& f) {
  if (!(f.omega0 > 0.0)) {
    throw DegenerateGapError("master equation: omega0 must be positive "
                             "(cross terms divide by the gap)");
  }
}

}  // namespace

StateDerivative rhs_unitary(const AdiabaticFrame& f, const DensityMatrix2& rho) {
  const Shared c(f, SpectralTriple{}, rho);
  const complexd dge = c.drive_ge(f);
  return {c.drive_gg(), dge.real(), dge.imag()};
}

StateDerivative rhs_bloch(const AdiabaticFrame& f, const SpectralTriple& s,
                          const DensityMatrix2& rho) {
  const Shared c(f, s, rho);
  const double dgg = c.pop_gg(s);
  const complexd dge =
      complexd(0.0, f.omega0) * c.rge + c.deph_bloch(s, f.m1);
  return {dgg, dge.real(), dge.imag()};
}

StateDerivative rhs_secular(const AdiabaticFrame& f, const SpectralTriple& s,
                            const DensityMatrix2& rho) {
  require_gap(f);
  const Shared c(f, s, rho);
  const double m1 = f.m1;
  const double k = (2.0 * s.s_zero - s.s_minus - s.s_plus) / f.omega0;
  const double k1 = (s.s_zero - s.s_plus) / f.omega0;

  const double dgg = c.drive_gg() + c.pop_gg(s)
                     + 2.0 * k * c.cmw * m1 * c.rgg
                     - 2.0 * m1 * k1 * c.cmw;

  const complexd dge = c.drive_ge(f) + c.deph_bloch(s, m1)
                       + k * (2.0 * c.m2 * std::conj(c.wge) + c.wge * std::conj(c.m2))
                             * m1 * c.rge;

  return {dgg, dge.real(), dge.imag()};
}

StateDerivative rhs_full(const AdiabaticFrame& f, const SpectralTriple& s,
                         const DensityMatrix2& rho) {
  require_gap(f);
  const Shared c(f, s, rho);
  const double m1 = f.m1;
  const complexd m2 = c.m2;
  const complexd wge = c.wge;
  const complexd rge = c.rge;
  const double rgg = c.rgg;
  const double k = (2.0 * s.s_zero - s.s_minus - s.s_plus) / f.omega0;
  const double k1 = (s.s_zero - s.s_plus) / f.omega0;
  const double k2 = (s.s_minus - s.s_plus) / f.omega0;
  const complexd iu(0.0, 1.0);

  const double dgg = c.drive_gg() + c.pop_gg(s)
                     + 2.0 * c.cmrho * s.s_zero * m1
                     - 2.0 * k * c.cmw * c.cmrho
                     + 2.0 * k * m1 * c.cmw * rgg
                     - 2.0 * k1 * m1 * c.cmw;

  const complexd dge =
      c.drive_ge(f)
      - s.s_plus * m1 * m2 + c.sig * m1 * m2 * rgg
      - 2.0 * s.s_zero * m1 * m1 * rge
      - iu * c.sig * m2 * (m2.real() * rge.imag() - m2.imag() * rge.real())
      - 2.0 * k * m1 * m1 * wge * rgg
      + 2.0 * k1 * m1 * m1 * wge
      - iu * m2 * k2 * (m2.imag() * wge.real() - m2.real() * wge.imag())
      - 2.0 * k * m1 *
            (iu * m2 * (wge.imag() * rge.real() - wge.real() * rge.imag()) -
             c.cmw * rge);

  return {dgg, dge.real(), dge.imag()};
}

StateDerivative rhs(RhsVariant variant, const AdiabaticFrame& frame,
                    const SpectralTriple& sp, const DensityMatrix2& rho) {
  switch (variant) {
    case RhsVariant::Full: return rhs_full(frame, sp, rho);
    case RhsVariant::Secular: return rhs_secular(frame, sp, rho);
    case RhsVariant::Bloch: return rhs_bloch(frame, sp, rho);
    case RhsVariant::Unitary: return rhs_unitary(frame, rho);
  }
  throw std::logic_error("unknown RhsVariant");
}

BlochRates bloch_rates(const AdiabaticFrame& f, const SpectralTriple& s) {
  const double am2sq = std::norm(f.m2());
  BlochRates r;
  r.gamma_down = s.s_plus * am2sq;
  r.gamma_up = s.s_minus * am2sq;
  r.gamma_ge = 0.5 * s.s_minus * am2sq + 0.5 * s.s_plus * am2sq +
               2.0 * s.s_zero * f.m1 * f.m1;
  return r;
}

}  // namespace qpump
