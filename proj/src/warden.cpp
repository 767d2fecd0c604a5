#include "covertmm/warden.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covertmm/errors.hpp"
#include "covertmm/specfun.hpp"

namespace covertmm {
namespace {

// l-th building block of the truncated fading-ratio moment
// E[(X/Y) 1{X <= c1 Y}]; c1 is the max jam-to-signal power ratio at the
// warden. The shape-1 case integrates to a logarithm, higher shapes to a
// power difference (written via expm1/log1p so small c1 stays exact).
double truncated_ratio_term(int nu, int l, double rate, double c1) {
  if (nu == 1) return std::log1p(l * c1);
  return specfun::factorial(nu - 2) / std::pow(nu, nu - 1) *
         (-std::expm1((1.0 - nu) * std::log1p(l * rate * c1 / nu)));
}

// Expected optimal-detector error conditioned on blockage state and the
// antenna gains. Assembled as
//   Pr(jam statistic >= signal statistic) - (1/c1) E[(X/Y) 1{X <= c1 Y}],
// which collapses algebraically to 1 + coeff * sum_l. The two-bracket
// product sometimes quoted for this quantity double-counts the event
// probability; the nested-quadrature reference in the oracle module pins
// this form down.
double conditional_detection_error(int nu, double rate, double c1) {
  double sum = 0.0;
  for (int l = 1; l <= nu; ++l) {
    const double sign = (l % 2 != 0) ? -1.0 : 1.0;
    sum += sign * static_cast<double>(specfun::binomial(nu, l)) / l *
           truncated_ratio_term(nu, l, rate, c1);
  }
  const double coeff = std::pow(nu, nu) / (c1 * rate * specfun::factorial(nu - 1));
  return 1.0 + coeff * sum;
}

}  // namespace

DetectionResult detection_error_star(const RealizationInputs& r) {
  if (!(r.jam_power > 0.0)) {
    throw std::domain_error("detection_error_star: jamming power must be positive");
  }
  if (r.signal_power < 0.0 || !(r.noise_power > 0.0)) {
    throw std::domain_error("detection_error_star: invalid realization");
  }
  const double h0 = r.h0_max();
  const double h1 = r.h1_min();
  if (h0 < h1) return {0.0, h0, h1};
  return {1.0 - r.signal_power / r.jam_power, h1, h0};
}

DetectorCurves detector_curves(const RealizationInputs& r, double tau) {
  if (!(r.jam_power > 0.0)) {
    throw std::domain_error("detector_curves: jamming power must be positive");
  }
  if (tau < 0.0) throw std::domain_error("detector_curves: negative threshold");
  DetectorCurves c;
  const double noise = r.noise_power;
  // Upper boundaries closed on the saturated side so the endpoint values
  // are exact; the ramps are continuous there anyway.
  if (tau < noise) {
    c.p_fa = 1.0;
  } else if (tau < r.h0_max()) {
    c.p_fa = 1.0 - (tau - noise) / r.jam_power;
  } else {
    c.p_fa = 0.0;
  }
  if (tau < r.h1_min()) {
    c.p_md = 0.0;
  } else if (tau < r.h1_max()) {
    c.p_md = (tau - r.h1_min()) / r.jam_power;
  } else {
    c.p_md = 1.0;
  }
  c.p_e = c.p_fa + c.p_md;
  return c;
}

double expected_detection_error(const SystemConfig& cfg) {
  cfg.validate();
  if (!(cfg.pj_max_mw > 0.0)) {
    throw std::domain_error("expected_detection_error: max jammer power must be positive");
  }
  // Below any representable jamming level the warden wins almost surely;
  // returning the limit dodges the 0/0 in the 1/c1 coefficient.
  if (cfg.pj_max_mw < 1e-12) return 0.0;

  using Branch = std::pair<double, double>;  // {gain, probability}
  std::vector<Branch> jam_branches;
  if (cfg.jammer_gain_mode == JammerGainMode::deterministic_main) {
    jam_branches = {{cfg.alice_jam.main_gain, 1.0}};
  } else {
    const GainPMF pmf = gain_pmf(cfg.alice_jam);
    jam_branches = {{pmf.gain[0], pmf.prob[0]}, {pmf.gain[1], pmf.prob[1]}};
  }
  std::vector<Branch> data_branches;
  if (cfg.willie_in_main_lobe) {
    const GainPMF pmf = gain_pmf(cfg.alice_data);
    data_branches = {{pmf.gain[0], pmf.prob[0]}, {pmf.gain[1], pmf.prob[1]}};
  } else {
    data_branches = {{cfg.alice_data.side_gain, 1.0}};
  }

  const double pl = p_los(cfg.d_aw_m, cfg.blockage);
  double acc = 0.0;
  for (const LinkState state : {LinkState::los, LinkState::nlos}) {
    const double w = (state == LinkState::los) ? pl : 1.0 - pl;
    const int nu = cfg.fading.nu(state);
    const double rate = alzer_rate(nu);
    for (const auto& [g_jam, b_jam] : jam_branches) {
      for (const auto& [g_data, b_data] : data_branches) {
        const double c1 = cfg.pj_max_mw * g_jam / (cfg.pa_mw * g_data);
        acc += w * b_jam * b_data * conditional_detection_error(nu, rate, c1);
      }
    }
  }
  if (acc < -1e-9 || acc > 1.0 + 1e-9) {
    throw NumericalError("expected_detection_error: result outside [0,1]: " +
                         std::to_string(acc));
  }
  return std::clamp(acc, 0.0, 1.0);
}

}  // namespace covertmm
