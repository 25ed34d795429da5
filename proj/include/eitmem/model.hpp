// model.hpp - shared domain types, unit conventions and grids.
//
// Unit conventions used across the library:
//   * all rates and Rabi frequencies are angular (rad/s)
//   * times in seconds, positions in meters
//   * waveform samples carry units of s^(-1/2), so that the trapezoidal
//     integral of |psi|^2 over the time grid is a dimensionless probability
//   * optical depth follows the intensity convention: with the control off,
//     resonant intensity transmission is exp(-OD)

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace eitmem {

using Complex = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = std::numbers::pi;

/// Raised on invalid parameters, grids or schedule/config combinations.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the integrator produces non-finite values.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, std::size_t step)
      : std::runtime_error(what + " (step " + std::to_string(step) + ")"),
        step_index(step) {}
  std::size_t step_index;
};

// ---------------------------------------------------------------------------
// Grids

struct TimeGrid {
  double start = 0.0;
  double step = 0.0;
  std::size_t count = 0;

  static TimeGrid make(double start, double step, std::size_t count) {
    if (!(step > 0.0)) throw ConfigError("TimeGrid: step must be > 0");
    if (count < 2) throw ConfigError("TimeGrid: count must be >= 2");
    return TimeGrid{start, step, count};
  }

  double time(std::size_t i) const { return start + step * static_cast<double>(i); }
  double end() const { return time(count - 1); }
  double span() const { return step * static_cast<double>(count - 1); }

  /// Nearest sample index for a time inside the grid.
  std::size_t index_of(double t) const {
    double u = (t - start) / step;
    double c = std::clamp(u, 0.0, static_cast<double>(count - 1));
    return static_cast<std::size_t>(std::llround(c));
  }

  bool contains(double t) const {
    return t >= start - 1e-12 * step && t <= end() + 1e-12 * step;
  }

  bool operator==(const TimeGrid& o) const {
    return start == o.start && step == o.step && count == o.count;
  }
};

/// Uniform spatial grid over the medium, z = 0 at the entrance face.
struct SpatialGrid {
  double start = 0.0;
  double step = 0.0;
  std::size_t count = 0;

  static SpatialGrid over_length(double length, std::size_t count) {
    if (!(length > 0.0)) throw ConfigError("SpatialGrid: length must be > 0");
    if (count < 2) throw ConfigError("SpatialGrid: count must be >= 2");
    return SpatialGrid{0.0, length / static_cast<double>(count - 1), count};
  }

  double position(std::size_t i) const { return start + step * static_cast<double>(i); }
  double end() const { return position(count - 1); }
};

// ---------------------------------------------------------------------------
// Medium

/// Atomic-ensemble constants. Construct through medium_from_od() so that the
/// coupling closes the optical-depth relation  OD = g^2 N L / (gamma13 c0).
struct MediumParams {
  double od = 0.0;           // optical depth (intensity convention)
  double gamma13 = 0.0;      // optical coherence dephasing, rad/s
  double gamma12 = 0.0;      // ground-state coherence dephasing, rad/s
  double length = 0.0;       // medium length, m
  double atom_number = 1.0;  // free scale; only g^2 N enters the dynamics
  double coupling = 0.0;     // photon-atom coupling g, rad/s

  /// Collective coupling g*sqrt(N), the only combination the dynamics see.
  double collective_coupling() const { return coupling * std::sqrt(atom_number); }
};

inline MediumParams medium_from_od(double od, double gamma13, double gamma12,
                                   double length, double atom_number = 1.0) {
  if (!(od > 0.0)) throw ConfigError("medium_from_od: od must be > 0");
  if (!(gamma13 > 0.0)) throw ConfigError("medium_from_od: gamma13 must be > 0");
  if (gamma12 < 0.0) throw ConfigError("medium_from_od: gamma12 must be >= 0");
  if (!(length > 0.0)) throw ConfigError("medium_from_od: length must be > 0");
  if (!(atom_number > 0.0)) throw ConfigError("medium_from_od: atom_number must be > 0");
  MediumParams m;
  m.od = od;
  m.gamma13 = gamma13;
  m.gamma12 = gamma12;
  m.length = length;
  m.atom_number = atom_number;
  m.coupling = std::sqrt(od * gamma13 * kSpeedOfLight / (atom_number * length));
  return m;
}

// ---------------------------------------------------------------------------
// Waveforms

/// Sampled complex envelope psi(tau) on a uniform time grid.
struct ComplexWaveform {
  TimeGrid grid;
  std::vector<Complex> samples;

  static ComplexWaveform zeros(const TimeGrid& g) {
    return ComplexWaveform{g, std::vector<Complex>(g.count, Complex{0.0, 0.0})};
  }

  void validate() const {
    if (samples.size() != grid.count)
      throw ConfigError("ComplexWaveform: samples.size() != grid.count");
  }

  std::size_t peak_index() const {
    std::size_t best = 0;
    double best_v = -1.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      double v = std::norm(samples[i]);
      if (v > best_v) {
        best_v = v;
        best = i;
      }
    }
    return best;
  }

  double peak_time() const { return grid.time(peak_index()); }
};

/// Trapezoidal quadrature of the probability integral of |psi|^2 d tau.
inline double waveform_norm(const ComplexWaveform& w) {
  w.validate();
  double acc = 0.0;
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    double v = std::norm(w.samples[i]);
    acc += (i == 0 || i + 1 == w.samples.size()) ? 0.5 * v : v;
  }
  return acc * w.grid.step;
}

/// Energy of |psi|^2 restricted to [center - width/2, center + width/2],
/// with linear interpolation at the partial end cells.
inline double waveform_energy_in_window(const ComplexWaveform& w, double center,
                                        double width) {
  w.validate();
  const double lo = center - 0.5 * width;
  const double hi = center + 0.5 * width;
  if (lo < w.grid.start - 1e-12 * w.grid.step || hi > w.grid.end() + 1e-12 * w.grid.step)
    throw ConfigError("waveform window exceeds the time grid");
  auto intensity = [&](std::size_t i) { return std::norm(w.samples[i]); };
  auto value_at = [&](double t) {
    double u = (t - w.grid.start) / w.grid.step;
    std::size_t i = std::min(static_cast<std::size_t>(std::max(0.0, std::floor(u))),
                             w.grid.count - 2);
    double f = u - static_cast<double>(i);
    return (1.0 - f) * intensity(i) + f * intensity(i + 1);
  };
  std::size_t i_lo = static_cast<std::size_t>(std::ceil((lo - w.grid.start) / w.grid.step - 1e-12));
  std::size_t i_hi = static_cast<std::size_t>(std::floor((hi - w.grid.start) / w.grid.step + 1e-12));
  i_lo = std::min(i_lo, w.grid.count - 1);
  i_hi = std::min(i_hi, w.grid.count - 1);
  if (i_lo > i_hi) {  // window narrower than one cell
    return 0.5 * (value_at(lo) + value_at(hi)) * (hi - lo);
  }
  double acc = 0.0;
  for (std::size_t i = i_lo; i + 1 <= i_hi; ++i)
    acc += 0.5 * (intensity(i) + intensity(i + 1)) * w.grid.step;
  // partial cells at both ends
  double t_lo_snap = w.grid.time(i_lo);
  if (t_lo_snap > lo) acc += 0.5 * (value_at(lo) + intensity(i_lo)) * (t_lo_snap - lo);
  double t_hi_snap = w.grid.time(i_hi);
  if (hi > t_hi_snap) acc += 0.5 * (intensity(i_hi) + value_at(hi)) * (hi - t_hi_snap);
  return acc;
}

/// Cubic (Catmull-Rom) sample of the envelope at an arbitrary time inside the
/// grid; used by the integrator for stage times between samples.
inline Complex waveform_sample(const ComplexWaveform& w, double t) {
  const auto& s = w.samples;
  const std::size_t n = s.size();
  double u = (t - w.grid.start) / w.grid.step;
  if (u <= 0.0) return s.front();
  if (u >= static_cast<double>(n - 1)) return s.back();
  std::size_t i = static_cast<std::size_t>(u);
  double f = u - static_cast<double>(i);
  if (f == 0.0) return s[i];
  if (i == 0 || i + 2 >= n) {  // linear at the boundary cells
    return (1.0 - f) * s[i] + f * s[i + 1];
  }
  const Complex p0 = s[i - 1], p1 = s[i], p2 = s[i + 1], p3 = s[i + 2];
  return 0.5 * (2.0 * p1 + f * ((p2 - p0) +
                f * ((2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) +
                f * (3.0 * (p1 - p2) + p3 - p0))));
}

// ---------------------------------------------------------------------------
// Control schedule

enum class RampShape { linear, raised_cosine };

/// Piecewise control Rabi frequency. Segments are contiguous and continuous
/// within themselves; evaluation clamps outside the covered interval.
struct ControlSchedule {
  struct Segment {
    double t_begin = 0.0, t_end = 0.0;
    double omega_begin = 0.0, omega_end = 0.0;
    RampShape shape = RampShape::linear;
  };
  std::vector<Segment> segments;

  static ControlSchedule from_segments(std::vector<Segment> segs) {
    if (segs.empty()) throw ConfigError("ControlSchedule: no segments");
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const auto& s = segs[i];
      if (!(s.t_end >= s.t_begin))
        throw ConfigError("ControlSchedule: segment with negative duration");
      if (s.omega_begin < 0.0 || s.omega_end < 0.0)
        throw ConfigError("ControlSchedule: negative Rabi frequency");
      if (i > 0 && std::abs(segs[i - 1].t_end - s.t_begin) >
                       1e-9 * std::max(1.0, std::abs(s.t_begin)))
        throw ConfigError("ControlSchedule: segments must be contiguous");
    }
    return ControlSchedule{std::move(segs)};
  }

  static ControlSchedule constant(double omega, double t_begin, double t_end) {
    return from_segments({Segment{t_begin, t_end, omega, omega, RampShape::linear}});
  }

  /// Write/hold/read profile: constant omega_write, ramp to zero centred on
  /// t_off_mid, zero hold, ramp back up centred on t_on_mid, constant
  /// omega_read.  Ramps take ramp_duration from level to level.
  static ControlSchedule storage(double omega_write, double omega_read,
                                 double t_off_mid, double t_on_mid,
                                 double ramp_duration, RampShape shape,
                                 double t_begin, double t_end) {
    if (t_on_mid < t_off_mid)
      throw ConfigError("ControlSchedule::storage: read before write-off");
    if (t_on_mid - t_off_mid < ramp_duration)
      throw ConfigError("ControlSchedule::storage: off-window shorter than the switching ramps");
    const double h = 0.5 * ramp_duration;
    if (t_off_mid - h < t_begin || t_on_mid + h > t_end)
      throw ConfigError("ControlSchedule::storage: ramps outside schedule span");
    std::vector<Segment> segs;
    segs.push_back({t_begin, t_off_mid - h, omega_write, omega_write, shape});
    segs.push_back({t_off_mid - h, t_off_mid + h, omega_write, 0.0, shape});
    segs.push_back({t_off_mid + h, t_on_mid - h, 0.0, 0.0, shape});
    segs.push_back({t_on_mid - h, t_on_mid + h, 0.0, omega_read, shape});
    segs.push_back({t_on_mid + h, t_end, omega_read, omega_read, shape});
    return from_segments(std::move(segs));
  }

  double value(double t) const {
    if (t <= segments.front().t_begin) return segments.front().omega_begin;
    if (t >= segments.back().t_end) return segments.back().omega_end;
    for (const auto& s : segments) {
      if (t <= s.t_end) {
        if (s.t_end == s.t_begin) return s.omega_end;
        double f = (t - s.t_begin) / (s.t_end - s.t_begin);
        if (s.shape == RampShape::raised_cosine)
          f = 0.5 * (1.0 - std::cos(kPi * f));
        return s.omega_begin + (s.omega_end - s.omega_begin) * f;
      }
    }
    return segments.back().omega_end;
  }

  double max_value() const {
    double m = 0.0;
    for (const auto& s : segments)
      m = std::max({m, s.omega_begin, s.omega_end});
    return m;
  }

  /// The unique maximal interval where the control is exactly zero
  /// (possibly of zero length when the down-ramp meets the up-ramp).
  /// first = end of the down-ramp, second = start of the up-ramp.
  std::pair<double, double> off_window() const {
    bool found = false;
    double w_begin = 0.0, w_end = 0.0;
    std::size_t i = 0;
    while (i < segments.size()) {
      const auto& s = segments[i];
      bool zero_seg = s.omega_begin == 0.0 && s.omega_end == 0.0 && s.t_end > s.t_begin;
      bool zero_joint = s.omega_end == 0.0 &&
                        (i + 1 < segments.size() && segments[i + 1].omega_begin == 0.0);
      if (zero_seg || (zero_joint && !zero_seg)) {
        double b = zero_seg ? s.t_begin : s.t_end;
        double e = b;
        std::size_t j = zero_seg ? i : i + 1;
        while (j < segments.size() && segments[j].omega_begin == 0.0 &&
               segments[j].omega_end == 0.0) {
          e = segments[j].t_end;
          ++j;
        }
        if (found) throw ConfigError("ControlSchedule: multiple off-windows");
        found = true;
        w_begin = b;
        w_end = e;
        i = j + 1;
      } else {
        ++i;
      }
    }
    if (!found) throw ConfigError("ControlSchedule: no off-window");
    return {w_begin, w_end};
  }
};

// ---------------------------------------------------------------------------
// Polarization

/// Point on the Bloch sphere, |S> = cos(theta/2)|H> + e^{i phi} sin(theta/2)|V>.
struct PolarizationState {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  static PolarizationState make(double theta, double phi) {
    if (theta < 0.0 || theta > kPi)
      throw ConfigError("PolarizationState: theta outside [0, pi]");
    double p = std::fmod(phi, 2.0 * kPi);
    if (p < 0.0) p += 2.0 * kPi;
    return PolarizationState{theta, p};
  }

  Complex amp_h() const { return {std::cos(0.5 * theta), 0.0}; }
  Complex amp_v() const { return std::polar(std::sin(0.5 * theta), phi); }

  static PolarizationState from_amplitudes(Complex a, Complex b) {
    double n = std::sqrt(std::norm(a) + std::norm(b));
    if (n == 0.0) throw ConfigError("PolarizationState: zero amplitudes");
    double theta = 2.0 * std::atan2(std::abs(b), std::abs(a));
    double phi = (std::abs(a) == 0.0 || std::abs(b) == 0.0)
                     ? 0.0
                     : std::arg(b * std::conj(a));
    if (phi < 0.0) phi += 2.0 * kPi;
    return make(theta, phi);
  }
};

/// Heralded photon: temporal envelope times a polarization spinor, a product
/// state at the input (the same envelope rides on both rails).
struct QubitPhoton {
  ComplexWaveform waveform;
  PolarizationState polarization;
};

// ---------------------------------------------------------------------------
// Convenience constructors used throughout the toolkit

/// Gaussian envelope with amplitude standard deviation sigma (so the
/// intensity FWHM is 2 sqrt(ln 2) sigma), unit-normalized on the grid.
inline ComplexWaveform gaussian_waveform(const TimeGrid& grid, double t_peak,
                                         double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("gaussian_waveform: sigma must be > 0");
  ComplexWaveform w = ComplexWaveform::zeros(grid);
  for (std::size_t i = 0; i < grid.count; ++i) {
    double x = (grid.time(i) - t_peak) / sigma;
    w.samples[i] = std::exp(-0.5 * x * x);
  }
  double n = waveform_norm(w);
  if (!(n > 0.0)) throw ConfigError("gaussian_waveform: envelope vanishes on grid");
  double scale = 1.0 / std::sqrt(n);
  for (auto& s : w.samples) s *= scale;
  return w;
}

inline ComplexWaveform square_waveform(const TimeGrid& grid, double t_begin,
                                       double t_end) {
  ComplexWaveform w = ComplexWaveform::zeros(grid);
  for (std::size_t i = 0; i < grid.count; ++i) {
    double t = grid.time(i);
    if (t >= t_begin && t <= t_end) w.samples[i] = 1.0;
  }
  double n = waveform_norm(w);
  if (!(n > 0.0)) throw ConfigError("square_waveform: empty support");
  double scale = 1.0 / std::sqrt(n);
  for (auto& s : w.samples) s *= scale;
  return w;
}

}  // namespace eitmem
