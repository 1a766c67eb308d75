// Propagation models: AWGN, two-ray ground reflection, and a WLAN-channel-F
// style Rayleigh tapped delay line with an exponential power-delay profile.
#pragma once

#include <array>
#include <limits>
#include <vector>

#include "hoploc/rng.hpp"
#include "hoploc/signal.hpp"
#include "hoploc/tdoa.hpp"

namespace hoploc {

enum class ChannelKind { kAwgn, kTrgr, kWlanF };

struct ChannelTap {
  double delay_s = 0.0;
  cplx gain{0.0, 0.0};
};

// One realization of an emitter->sensor link, fixed over a coherence block.
struct ChannelRealization {
  std::vector<ChannelTap> taps;  // delays nondecreasing, taps[0].delay == 0
  ChannelKind kind = ChannelKind::kAwgn;
  double coherence_time_s = 80e-3;

  void validate() const;  // throws std::invalid_argument
};

struct LinkGeometry {
  std::array<double, 2> emitter_ground_m{0.0, 0.0};
  std::array<double, 2> sensor_ground_m{0.0, 0.0};
  double emitter_height_m = 1.5;
  double sensor_height_m = 2.0;
  cplx reflection_coeff{-1.0, 0.0};

  double ground_distance_m() const;
  double los_distance_m() const;        // d1
  double reflected_distance_m() const;  // d2, image method
};

ChannelRealization awgn_channel();

// Independent zero-mean circular Gaussian taps at 1/sample_rate spacing with
// P_l proportional to exp(-tau_l / rms_delay_spread), normalized so
// E[sum |h_l|^2] = 1.
ChannelRealization draw_wlan_f(double sample_rate_hz, double rms_delay_spread_s,
                               int num_taps, Rng& rng,
                               double coherence_time_s = 80e-3);

// LOS tap of unit gain at zero delay plus the ground reflection at excess
// delay (d2 - d1)/c; the common 1/d1 path loss is normalized away (absorbed
// into the SNR setting).
ChannelRealization trgr_taps(const LinkGeometry& geom, double carrier_freq_hz);

struct NoiseSpec {
  // Pulse-on-region SNR: signal power inside pulse windows over the noise
  // power falling within signal_bandwidth_hz. +inf disables noise.
  double snr_db = std::numeric_limits<double>::infinity();
  double signal_bandwidth_hz = 0.0;  // 0 -> full sampled band
};

// sum_k gain_k * fractional_delay(sig, tap_delay_k + prop_delay, rf_phase)
// plus complex AWGN, evaluated as one frequency-domain pass. Output has the
// same length/start/rate as the input (circular shift semantics); callers
// provide zero margins large enough for the total delay.
SampledSignal apply_channel(const SampledSignal& sig, const ChannelRealization& chan,
                            double prop_delay_s, const NoiseSpec& noise, Rng& rng);

// Per-sensor clock offsets: adds independent Uniform[-alpha, alpha] to every
// component of the measurement.
TdoaMeasurement inject_sync_error(const TdoaMeasurement& tdoa, double alpha_s, Rng& rng);

}  // namespace hoploc
