#pragma once

#include "covertmm/channel.hpp"

namespace covertmm {

/// A solved covert operating point: the smallest max jammer power meeting
/// the covertness constraint and the rate maximizing the effective rate
/// at that power.
struct CovertDesign {
  double epsilon = 0.0;
  double pj_opt_mw = 0.0;
  double rb_opt = 0.0;       // bits/channel use
  double outage_opt = 0.0;
  double rate_opt = 0.0;     // bits/channel use
};

/// Solves expected_detection_error(pj) = 1 - epsilon for the max jammer
/// power, exploiting monotonicity: geometric bracket expansion from
/// [1e-6, 1e6] mW, then bisection in log power until the detection error
/// matches the target within 1e-9. Throws NumericalError when no bracket
/// is found after 60 expansions.
double solve_pj_opt(const SystemConfig& cfg, double epsilon);

/// Fixes the jammer power from solve_pj_opt, then maximizes
/// rb * (1 - outage(rb)) over (0, r_cap] with a 0.02-bit coarse grid and
/// golden-section refinement to 1e-4 bits. r_cap is the zero-jamming
/// line-of-sight main-lobe capacity, beyond which the objective vanishes.
CovertDesign max_covert_rate(const SystemConfig& cfg, double epsilon);

}  // namespace covertmm
