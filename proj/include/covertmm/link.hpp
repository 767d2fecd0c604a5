#pragma once

#include "covertmm/channel.hpp"

namespace covertmm {

/// Metrics of the data link at one operating point.
struct LinkMetrics {
  double outage = 0.0;
  double effective_rate = 0.0;    // bits/channel use
  double ergodic_capacity = 0.0;  // bits/channel use
};

/// Outage probability of the data link at target rate rb (bits/use),
/// averaged over blockage, the gain PMFs, both fading coefficients and
/// the uniformly distributed jammer power. The jamming signal reaches the
/// receiver with the deterministic side-lobe gain unless
/// willie_in_main_lobe also puts the receiver in the jamming beam, in
/// which case its gain is averaged over the beamsteering PMF.
double outage_probability(const SystemConfig& cfg, double rb);

/// rb * (1 - outage_probability(cfg, rb)).
double effective_rate(const SystemConfig& cfg, double rb);

/// How the per-shape fading integral inside the ergodic capacity is
/// evaluated: `automatic` takes the shape-2 closed form where it applies
/// and one-dimensional adaptive quadrature elsewhere.
enum class CapacityMethod { automatic, closed_form, quadrature };

/// Ergodic capacity of the data link in bits/channel use.
/// `closed_form` requires every blockage state to have shape 2.
double ergodic_capacity(const SystemConfig& cfg,
                        CapacityMethod method = CapacityMethod::automatic);

/// All three link metrics at target rate rb.
LinkMetrics link_metrics(const SystemConfig& cfg, double rb);

}  // namespace covertmm
