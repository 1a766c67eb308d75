#include "hoploc/fhss.hpp"

#include <cmath>
#include <span>
#include <stdexcept>

namespace hoploc {
namespace {

// Continuous-phase 2FSK pulse written into dst. dst[k] corresponds to
// absolute time block_start_s + k/fs; the pulse occupies
// [pulse_start, pulse_start + Tp). The tone frequency within symbol m is
// hop + (bit ? +dev : -dev) relative to center_freq_hz, and the FSK phase
// accumulates across symbol boundaries.
void render_pulse_into(std::span<cplx> dst, const FhssParams& p,
                       const PulseDescriptor& pulse, double fs, double center_freq_hz,
                       double block_start_s) {
  const double pulse_start = pulse.start_time_s(p);
  const double pulse_end = pulse_start + p.pulse_width_s;
  const double f_off = pulse.hop_freq_hz - center_freq_hz;
  const double t_sym = 1.0 / p.symbol_rate_hz;

  std::ptrdiff_t k0 = static_cast<std::ptrdiff_t>(
      std::ceil((pulse_start - block_start_s) * fs - 1e-9));
  std::ptrdiff_t k1 = static_cast<std::ptrdiff_t>(
      std::ceil((pulse_end - block_start_s) * fs - 1e-9));  // exclusive
  k0 = std::max<std::ptrdiff_t>(k0, 0);
  k1 = std::min<std::ptrdiff_t>(k1, static_cast<std::ptrdiff_t>(dst.size()));
  if (k0 >= k1) return;

  // FSK phase at each symbol start, so per-sample phases are computed from a
  // nearby anchor instead of a long-running accumulation.
  const int n_sym = static_cast<int>(pulse.bits.size());
  std::vector<double> sym_phase(n_sym + 1, 0.0);
  for (int m = 0; m < n_sym; ++m) {
    const double fd = pulse.bits[m] ? p.fsk_deviation_hz : -p.fsk_deviation_hz;
    const double dur = std::min(t_sym, std::max(0.0, p.pulse_width_s - m * t_sym));
    sym_phase[m + 1] = sym_phase[m] + kTwoPi * fd * dur;
  }

  std::ptrdiff_t k = k0;
  while (k < k1) {
    const double t = block_start_s + static_cast<double>(k) / fs;  // absolute
    const double u = t - pulse_start;                              // within pulse
    int m = std::min(static_cast<int>(u * p.symbol_rate_hz), n_sym - 1);
    const double sym_end = pulse_start + (m + 1) * t_sym;
    std::ptrdiff_t k_stop = std::min(
        k1, static_cast<std::ptrdiff_t>(std::ceil((sym_end - block_start_s) * fs - 1e-9)));
    if (k_stop <= k) k_stop = k + 1;

    const double fd = pulse.bits[m] ? p.fsk_deviation_hz : -p.fsk_deviation_hz;
    const double phase0 = sym_phase[m] + kTwoPi * fd * (u - m * t_sym) +
                          kTwoPi * f_off * t + pulse.init_phase_rad;
    const double dphi = kTwoPi * (f_off + fd) / fs;
    const cplx step = std::polar(1.0, dphi);
    cplx z = std::polar(1.0, phase0);
    for (std::ptrdiff_t j = k; j < k_stop; ++j) {
      dst[j] = z;
      z *= step;
      if (((j - k) & 255) == 255) z /= std::abs(z);
    }
    k = k_stop;
  }
}

}  // namespace

int FhssParams::symbols_per_pulse() const {
  return std::max(1, static_cast<int>(std::ceil(pulse_width_s * symbol_rate_hz - 1e-9)));
}

void FhssParams::validate() const {
  if (num_pulses < 1) throw std::invalid_argument("fhss: num_pulses must be >= 1");
  if (!(pulse_width_s > 0.0 && pulse_width_s <= pulse_period_s))
    throw std::invalid_argument("fhss: require 0 < pulse_width <= pulse_period");
  if (!(hop_band_lo_hz < hop_band_hi_hz))
    throw std::invalid_argument("fhss: hop band must satisfy f_lo < f_hi");
  if (!(sample_rate_hz > 0.0)) throw std::invalid_argument("fhss: sample_rate must be > 0");
  if (!((hop_band_hi_hz - hop_band_lo_hz) + 2.0 * fsk_deviation_hz < sample_rate_hz))
    throw std::invalid_argument(
        "fhss: hop span plus FSK deviation is not representable at this sample rate");
  if (!(symbol_rate_hz > 0.0 && symbol_rate_hz <= sample_rate_hz))
    throw std::invalid_argument("fhss: require 0 < symbol_rate <= sample_rate");
  if (fsk_deviation_hz < 0.0) throw std::invalid_argument("fhss: fsk_deviation must be >= 0");
}

std::vector<PulseDescriptor> draw_pulse_plan(const FhssParams& params, Rng& rng) {
  params.validate();
  const int n_sym = params.symbols_per_pulse();
  std::vector<PulseDescriptor> plan(params.num_pulses);
  for (int i = 0; i < params.num_pulses; ++i) {
    PulseDescriptor& d = plan[i];
    d.index = i + 1;
    d.hop_freq_hz = rng.uniform(params.hop_band_lo_hz, params.hop_band_hi_hz);
    d.init_phase_rad = rng.uniform(0.0, kTwoPi);
    d.bits.resize(n_sym);
    for (auto& b : d.bits) b = static_cast<std::uint8_t>(rng.next_u64() & 1u);
  }
  return plan;
}

std::vector<PulseDescriptor> draw_pulse_plan(const FhssParams& params) {
  Rng rng(params.seed);
  return draw_pulse_plan(params, rng);
}

SampledSignal render_pulse(const FhssParams& params, const PulseDescriptor& pulse,
                           double sample_rate_hz, double center_freq_hz,
                           double block_start_s, std::size_t block_len) {
  SampledSignal sig;
  sig.sample_rate_hz = sample_rate_hz;
  sig.start_time_s = block_start_s;
  sig.center_freq_hz = center_freq_hz;
  sig.samples.assign(block_len, cplx{0.0, 0.0});
  render_pulse_into(sig.samples, params, pulse, sample_rate_hz, center_freq_hz,
                    block_start_s);
  return sig;
}

PulseTrain generate_pulse_train(const FhssParams& params) {
  params.validate();
  PulseTrain train;
  train.pulses = draw_pulse_plan(params);

  SampledSignal& sig = train.signal;
  sig.sample_rate_hz = params.sample_rate_hz;
  sig.start_time_s = 0.0;
  sig.center_freq_hz = params.center_freq_hz();
  const auto total = static_cast<std::size_t>(
      std::llround(params.train_duration_s() * params.sample_rate_hz));
  sig.samples.assign(total, cplx{0.0, 0.0});
  for (const auto& pulse : train.pulses)
    render_pulse_into(sig.samples, params, pulse, params.sample_rate_hz,
                      sig.center_freq_hz, 0.0);
  return train;
}

}  // namespace hoploc
