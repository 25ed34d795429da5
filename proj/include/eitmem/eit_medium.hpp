// eit_medium.hpp - closed-form steady-state EIT response.
//
// Derived from the time-domain coherence equations by assuming a probe
// envelope ~ e^{-i delta tau} and a resonant control field:
//
//   D(delta) = gamma13 - i delta + (Omega^2/4) / (gamma12 - i delta)
//
// The complex response chi = i gamma13 / D is normalized so that Im(chi) is
// the absorption per unit optical depth (Im chi = 1 for a bare two-level
// line at resonance) and Re(chi) the dispersion.  Intensity transmission is
// T(delta) = exp(-OD * Im chi), so the control-off resonant value is the
// exp(-OD) of the intensity-OD convention.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "model.hpp"

namespace eitmem {

struct TransmissionSpectrum {
  std::vector<double> detunings;     // rad/s
  std::vector<double> transmission;  // intensity transmission in [0, 1]
};

namespace detail {
inline Complex response_denominator(const MediumParams& m, double omega_c,
                                    double delta) {
  Complex d(m.gamma13, -delta);
  if (omega_c != 0.0) {
    Complex two_photon(m.gamma12, -delta);
    if (two_photon == Complex{0.0, 0.0}) return Complex{INFINITY, 0.0};
    d += 0.25 * omega_c * omega_c / two_photon;
  }
  return d;
}
}  // namespace detail

/// Complex linear response at probe detuning delta (rad/s); imaginary part
/// is absorption, real part dispersion, both per unit optical depth.
inline Complex susceptibility(const MediumParams& m, double omega_c, double delta) {
  if (omega_c != 0.0 && m.gamma12 == 0.0 && delta == 0.0)
    return {0.0, 0.0};  // ideal-transparency limit of i gamma13 / D
  Complex d = detail::response_denominator(m, omega_c, delta);
  if (std::isinf(d.real())) return {0.0, 0.0};
  return Complex{0.0, m.gamma13} / d;
}

inline double transmission(const MediumParams& m, double omega_c, double delta) {
  return std::exp(-m.od * susceptibility(m, omega_c, delta).imag());
}

inline TransmissionSpectrum transmission_spectrum(const MediumParams& m,
                                                  double omega_c,
                                                  const std::vector<double>& deltas) {
  TransmissionSpectrum s;
  s.detunings = deltas;
  s.transmission.reserve(deltas.size());
  for (double d : deltas) s.transmission.push_back(transmission(m, omega_c, d));
  return s;
}

/// Medium transit delay of a narrowband pulse relative to vacuum, from the
/// analytic slope of the dispersion at line centre.  Algebraically reduced
/// so the gamma12 -> 0 limit is regular:
///
///   delay = (OD gamma13 / 2) (Omega^2 - 4 gamma12^2) / (2 gamma12 gamma13 + Omega^2/2)^2
inline double group_delay(const MediumParams& m, double omega_c) {
  if (!(omega_c > 0.0)) throw ConfigError("group_delay: control must be on");
  const double o2 = omega_c * omega_c;
  const double den = 2.0 * m.gamma12 * m.gamma13 + 0.5 * o2;
  return 0.5 * m.od * m.gamma13 * (o2 - 4.0 * m.gamma12 * m.gamma12) / (den * den);
}

inline double group_velocity(const MediumParams& m, double omega_c) {
  return m.length / (group_delay(m, omega_c) + m.length / kSpeedOfLight);
}

/// Full width of the transparency window at half depth, found by bisection
/// of T(delta) = (T(0) + exp(-OD)) / 2 on the outward-falling flank.
inline double transparency_fwhm(const MediumParams& m, double omega_c) {
  if (!(omega_c > 0.0)) throw ConfigError("transparency_fwhm: control must be on");
  const double level = 0.5 * (transmission(m, omega_c, 0.0) + std::exp(-m.od));
  double hi = 0.5 * omega_c;  // the absorption doublet peaks near +-Omega/2
  int guard = 0;
  while (transmission(m, omega_c, hi) > level) {
    hi *= 2.0;
    if (++guard > 60) throw NumericalError("transparency_fwhm: no bracket", 0);
  }
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (transmission(m, omega_c, mid) > level)
      lo = mid;
    else
      hi = mid;
  }
  return lo + hi;  // 2 * half-width
}

}  // namespace eitmem
