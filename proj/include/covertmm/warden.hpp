#pragma once

#include "covertmm/channel.hpp"

namespace covertmm {

/// One channel realization as seen by the warden's radiometer, in linear
/// mW: received data-signal power, received jamming power at the maximum
/// jammer level, and the warden's noise power.
struct RealizationInputs {
  double signal_power = 0.0;
  double jam_power = 0.0;
  double noise_power = 0.0;

  /// Largest test statistic under the no-transmission hypothesis.
  double h0_max() const { return jam_power + noise_power; }
  /// Smallest test statistic under the transmission hypothesis.
  double h1_min() const { return signal_power + noise_power; }
  /// Largest test statistic under the transmission hypothesis.
  double h1_max() const { return h1_min() + jam_power; }
};

/// Minimum detection error rate and the threshold interval attaining it.
struct DetectionResult {
  double p_e_star = 0.0;
  double tau_lo = 0.0;
  double tau_hi = 0.0;
};

struct DetectorCurves {
  double p_fa = 0.0;
  double p_md = 0.0;
  double p_e = 0.0;
};

/// Optimal radiometer performance for one realization. The error is zero
/// when the signal statistic can exceed the largest jamming statistic, and
/// 1 - signal_power/jam_power otherwise (path loss cancels in the ratio).
/// Throws std::domain_error when jam_power is zero.
DetectionResult detection_error_star(const RealizationInputs& r);

/// False-alarm, missed-detection and total error of the radiometer at
/// threshold tau >= 0, for a uniformly distributed jammer power.
DetectorCurves detector_curves(const RealizationInputs& r, double tau);

/// Expected minimum detection error rate from the transmitter's
/// perspective: averaged over blockage, the beamsteering gain PMFs and
/// both fading coefficients (the latter in closed form through the
/// exponential CDF bound). Honors willie_in_main_lobe (extra averaging
/// over the data-array gain) and jammer_gain_mode.
double expected_detection_error(const SystemConfig& cfg);

}  // namespace covertmm
