// Frequency-hopping pulse-train synthesis: N rectangular pulses of width Tp
// on a period T0, each on its own uniformly drawn carrier with a random
// initial phase, 2FSK (continuous-phase) payload inside the pulse.
#pragma once

#include <cstdint>
#include <vector>

#include "hoploc/rng.hpp"
#include "hoploc/signal.hpp"

namespace hoploc {

struct FhssParams {
  int num_pulses = 10;
  double pulse_period_s = 8e-3;
  double pulse_width_s = 2e-3;
  double hop_band_lo_hz = 2400e6;
  double hop_band_hi_hz = 2480e6;
  double sample_rate_hz = 160e6;
  double symbol_rate_hz = 1e6;
  double fsk_deviation_hz = 250e3;
  std::uint64_t seed = 1;

  double center_freq_hz() const { return 0.5 * (hop_band_lo_hz + hop_band_hi_hz); }
  // Band that holds (well over) 99% of a pulse's energy around its hop.
  double occupied_bandwidth_hz() const {
    return 2.0 * (fsk_deviation_hz + 2.0 * symbol_rate_hz);
  }
  double train_duration_s() const { return num_pulses * pulse_period_s; }
  int symbols_per_pulse() const;

  // Throws std::invalid_argument when the parameter set is inconsistent or
  // not representable at the configured sample rate.
  void validate() const;
};

struct PulseDescriptor {
  int index = 0;  // 1-based
  double hop_freq_hz = 0.0;
  double init_phase_rad = 0.0;
  std::vector<std::uint8_t> bits;

  double start_time_s(const FhssParams& p) const {
    return (index - 1) * p.pulse_period_s;
  }
};

struct PulseTrain {
  SampledSignal signal;
  std::vector<PulseDescriptor> pulses;
};

// Hop frequencies i.i.d. uniform on the hop band, phases uniform on [0, 2pi),
// payload bits fair coin flips. Deterministic in the given stream.
std::vector<PulseDescriptor> draw_pulse_plan(const FhssParams& params, Rng& rng);
std::vector<PulseDescriptor> draw_pulse_plan(const FhssParams& params);  // seeds from params.seed

// Samples one pulse into a block of `block_len` samples starting at
// `block_start_s`, taken at `sample_rate_hz` relative to `center_freq_hz`.
// Samples outside the pulse window are exactly zero. The carrier phase uses
// absolute time, so blocks from the same plan are mutually coherent.
SampledSignal render_pulse(const FhssParams& params, const PulseDescriptor& pulse,
                           double sample_rate_hz, double center_freq_hz,
                           double block_start_s, std::size_t block_len);

// Full train at params.sample_rate_hz around the band center:
// round(N * T0 * fs) samples starting at t = 0.
PulseTrain generate_pulse_train(const FhssParams& params);

}  // namespace hoploc
