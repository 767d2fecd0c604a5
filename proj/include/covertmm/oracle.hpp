#pragma once

#include <cstdint>

#include "covertmm/channel.hpp"

namespace covertmm {

/// A Monte Carlo estimate. Reproducible: identical (config, n, seed)
/// produce a bit-identical mean regardless of worker count, because
/// samples are partitioned into fixed blocks with per-block substreams
/// and reduced in block order.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Exact-model Monte Carlo of the expected minimum detection error:
/// samples blockage, the gain PMFs and both gamma fading powers, then
/// evaluates the per-realization optimal-detector error directly (no
/// exponential CDF bound anywhere).
McEstimate mc_expected_detection_error(const SystemConfig& cfg, std::int64_t n,
                                       std::uint64_t seed);

/// Exact-model Monte Carlo of the outage probability at rate rb, with the
/// jammer power drawn uniformly on [0, pj_max] per sample.
McEstimate mc_outage(const SystemConfig& cfg, double rb, std::int64_t n, std::uint64_t seed);

/// Exact-model Monte Carlo of the ergodic capacity (bits/channel use).
McEstimate mc_ergodic_capacity(const SystemConfig& cfg, std::int64_t n, std::uint64_t seed);

/// Expected detection error by nested adaptive quadrature of the
/// pre-closed-form expectation, substituting the exponential CDF bound
/// for the data-path fading exactly where the closed form does. Agrees
/// with expected_detection_error to quadrature accuracy.
double alzer_ref_detection(const SystemConfig& cfg, double tol);

/// Outage probability with the uniform jammer-power average done by
/// quadrature instead of in closed form.
double alzer_ref_outage(const SystemConfig& cfg, double rb, double tol);

/// Ergodic capacity by two-level quadrature of the pre-closed-form
/// expression (inner jammer-power integral, outer fading expectation).
double quadrature_ref_capacity(const SystemConfig& cfg, double tol);

}  // namespace covertmm
