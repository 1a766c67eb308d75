#include "hoploc/signal.hpp"

#include <cmath>
#include <stdexcept>

#include "hoploc/fft.hpp"

namespace hoploc {

std::ptrdiff_t SampledSignal::index_at(double t) const {
  return static_cast<std::ptrdiff_t>(std::llround((t - start_time_s) * sample_rate_hz));
}

double signal_energy(const SampledSignal& sig) {
  double e = 0.0;
  for (const auto& v : sig.samples) e += std::norm(v);
  return e;
}

SampledSignal fractional_delay(const SampledSignal& sig, double delay_s, bool rf_phase) {
  if (std::abs(delay_s) >= sig.duration_s())
    throw std::invalid_argument("fractional_delay: |delay| must be below the signal duration");

  const std::size_t n = sig.size();
  SampledSignal out = sig;
  if (n == 0 || delay_s == 0.0) {
    if (rf_phase && delay_s != 0.0) {
      const cplx rot = std::polar(1.0, -kTwoPi * sig.center_freq_hz * delay_s);
      for (auto& v : out.samples) v *= rot;
    }
    return out;
  }

  std::vector<cplx> spec(n);
  fft::forward(sig.samples, spec);

  // exp(-j 2 pi f delay) over the DFT grid; bins above n/2 are negative
  // frequencies. The ramp is a geometric sequence, renormalized periodically
  // to hold rounding at the 1e-12 level over long blocks.
  const double df = sig.sample_rate_hz / static_cast<double>(n);
  const std::size_t half = (n + 1) / 2;  // bins [0, half) are nonnegative freqs
  const cplx step = std::polar(1.0, -kTwoPi * df * delay_s);
  cplx ramp{1.0, 0.0};
  for (std::size_t k = 0; k < half; ++k) {
    spec[k] *= ramp;
    ramp *= step;
    if ((k & 511u) == 511u)
      ramp = std::polar(1.0, -kTwoPi * df * delay_s * static_cast<double>(k + 1));
  }
  ramp = std::polar(1.0, -kTwoPi * df * delay_s * (static_cast<double>(half) - static_cast<double>(n)));
  for (std::size_t k = half; k < n; ++k) {
    spec[k] *= ramp;
    ramp *= step;
    if ((k & 511u) == 511u)
      ramp = std::polar(1.0, -kTwoPi * df * delay_s * (static_cast<double>(k + 1) - static_cast<double>(n)));
  }

  fft::inverse(spec, out.samples);

  if (rf_phase) {
    const cplx rot = std::polar(1.0, -kTwoPi * sig.center_freq_hz * delay_s);
    for (auto& v : out.samples) v *= rot;
  }
  return out;
}

}  // namespace hoploc
