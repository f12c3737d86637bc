#pragma once

#include <numbers>

// Internal unit system: hbar = 1, energies are angular frequencies [rad/s],
// times in seconds, temperatures converted to rad/s via k_B/hbar, resistances
// to the dimensionless kappa = e^2 R / hbar.  All SI conversions happen once,
// at the configuration boundary.
namespace qpump::units {

inline constexpr double pi = std::numbers::pi;

inline constexpr double hbar_si = 1.054571817e-34;  // J s
inline constexpr double kb_si = 1.380649e-23;       // J / K
inline constexpr double e_si = 1.602176634e-19;     // C

// one kelvin of energy, as angular frequency [rad/s]
inline constexpr double kelvin = kb_si / hbar_si;

// one ohm of environmental resistance, as dimensionless coupling e^2 R / hbar
inline constexpr double ohm = e_si * e_si / hbar_si;

inline constexpr double giga_hz = 2.0 * pi * 1e9;    // GHz -> rad/s
inline constexpr double mega_hz = 2.0 * pi * 1e6;    // MHz -> rad/s

// Josephson inductance scale L0 = hbar / (2 pi e I_C), SI henry
inline constexpr double josephson_l0(double i_c_ampere) {
  return hbar_si / (2.0 * pi * e_si * i_c_ampere);
}

}  // namespace qpump::units
