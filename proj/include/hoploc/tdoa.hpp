// Cross-ambiguity TDoA estimation over FHSS pulse trains. Hops carry
// unrelated carriers, so per-pulse delay estimates are combined by
// incoherent accumulation (arithmetic mean), never by summing CAFs.
#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "hoploc/fhss.hpp"
#include "hoploc/signal.hpp"

namespace hoploc {

// Sign convention used throughout: a TDoA value is the CAF peak lag, i.e.
// arrival_time(sensor j) - arrival_time(reference), which for an emitter at
// x equals (||x - v_j|| - ||x - v_1||) / c. Positive means sensor j hears
// the pulse later than the reference.
struct TdoaMeasurement {
  int ref_sensor = 1;
  int num_pulses = 0;
  std::vector<double> values_s;                 // index j-2 holds sensor j vs 1
  std::vector<std::vector<double>> per_pulse_s; // [j-2][pulse], diagnostics

  std::size_t num_sensors() const { return values_s.size() + 1; }
};

struct CafResult {
  std::vector<double> lags_s;      // integer-lag grid inside the search window
  std::vector<double> magnitudes;  // |CAF| on that grid
  double peak_lag_s = 0.0;         // sub-sample refined
  double peak_value = 0.0;         // interpolated |CAF| at the refined peak
};

enum class PeakRefinement {
  kParabolic,      // three-point parabola on the integer-lag magnitudes
  kSincParabolic,  // band-limited local upsampling, then parabola (default)
};

struct CafOptions {
  PeakRefinement refinement = PeakRefinement::kSincParabolic;
  int sinc_half_width = 12;  // interpolation kernel taps each side
  double sinc_beta = 9.0;    // Kaiser shape
  int upsample = 64;         // fine-grid factor for the local scan
};

struct CafNoEnergyError : std::runtime_error {
  CafNoEnergyError() : std::runtime_error("caf: pulse segment has no energy") {}
};

struct TdoaEstimationError : std::runtime_error {
  TdoaEstimationError(int sensor_index, int pulse_index);
  int sensor = 0;  // 1-based, as in the measurement
  int pulse = 0;   // 1-based
};

// |CAF| of the pulse segment [pulse_start, pulse_start + pulse_width) of
// `ref` against `other`, over lags within +-search_window. Both signals must
// share the sample rate and lie on a common sample grid.
CafResult caf_single_pulse(const SampledSignal& ref, const SampledSignal& other,
                           double pulse_start_s, double pulse_width_s,
                           double search_window_s, const CafOptions& opts = {});
CafResult caf_single_pulse(const SampledSignal& ref, const SampledSignal& other,
                           const FhssParams& params, int pulse_index,
                           double search_window_s, const CafOptions& opts = {});

// Per-pulse CAF peaks for every sensor against received[0], averaged over
// pulses. received[k] must cover every pulse window (plus search margins).
TdoaMeasurement estimate_tdoa(std::span<const SampledSignal> received,
                              const FhssParams& params,
                              std::span<const PulseDescriptor> pulses,
                              double search_window_s, const CafOptions& opts = {});

// Mean over pulses of an already-computed peak-lag matrix [sensor j-2][pulse].
TdoaMeasurement reduce_per_pulse(std::vector<std::vector<double>> per_pulse_lags);

// Single-pulse TDoA accuracy bound:
//   sigma_t = 1 / (B_s sqrt(B_n T_p gamma)),
//   1/gamma = (1/2) (1/gamma_1 + 1/gamma_j + 1/(gamma_1 gamma_j)).
// B_s is the RMS signal bandwidth in the radian-consistent sense
// (2 pi x the centered second spectral moment), B_n the noise bandwidth at
// the correlator input, the gammas linear SNRs in that bandwidth.
double crlb_single_pulse(double bs_hz, double bn_hz, double tp_s, double gamma1,
                         double gammaj);

// Centered RMS bandwidth (Hz) of a sampled signal; multiply by 2 pi for the
// radian convention used by crlb_single_pulse.
double rms_bandwidth(const SampledSignal& sig);

}  // namespace hoploc
