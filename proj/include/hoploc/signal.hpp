// Complex-baseband sample buffers and the band-limited delay operator.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hoploc {

using cplx = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// A block of complex-baseband samples. `center_freq_hz` is the absolute RF
// frequency that baseband 0 Hz corresponds to; `start_time_s` is the absolute
// time of samples[0]. Sample k sits at start_time_s + k / sample_rate_hz.
struct SampledSignal {
  std::vector<cplx> samples;
  double sample_rate_hz = 0.0;
  double start_time_s = 0.0;
  double center_freq_hz = 0.0;

  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return sample_rate_hz > 0 ? static_cast<double>(samples.size()) / sample_rate_hz : 0.0;
  }
  double time_at(std::size_t i) const {
    return start_time_s + static_cast<double>(i) / sample_rate_hz;
  }
  // Nearest sample index for absolute time t (may fall outside the buffer).
  std::ptrdiff_t index_at(double t) const;
};

double signal_energy(const SampledSignal& sig);

// Circular band-limited time shift by `delay_s`: a linear phase ramp across
// the full sampled band. Output has the same length, start time and rate;
// integer-sample delays reduce to an exact circular shift. With `rf_phase`
// the passband rotation exp(-j 2 pi center_freq delay) is applied on top,
// modelling a true propagation delay observed at complex baseband.
SampledSignal fractional_delay(const SampledSignal& sig, double delay_s, bool rf_phase);

}  // namespace hoploc
