#pragma once

#include <array>
#include <vector>

#include "covertmm/rng.hpp"
#include "covertmm/units.hpp"

namespace covertmm {

enum class LinkState { los, nlos };

/// Sectored antenna pattern: constant main-lobe gain over the beamwidth,
/// constant side-lobe gain elsewhere, with a zero-mean Gaussian
/// beamsteering error of standard deviation steer_sigma_rad.
struct AntennaPattern {
  double main_gain = db_to_linear(15.0);
  double side_gain = db_to_linear(-5.0);
  double beamwidth_rad = deg_to_rad(30.0);
  double steer_sigma_rad = deg_to_rad(5.0);

  void validate() const;  // throws std::domain_error
};

/// Two-point PMF of the directivity gain under beamsteering error:
/// main-lobe gain with probability prob[0], side-lobe gain otherwise.
struct GainPMF {
  std::array<double, 2> gain;
  std::array<double, 2> prob;
};

/// Blockage and path-loss parameters. A link of length d is line of sight
/// with probability e^{-d/decay_length_m}; the path loss is then
/// intercept * d^{-exponent} with per-state exponent and intercept.
struct BlockageParams {
  double decay_length_m = 200.0;
  double alpha_los = 2.0;
  double alpha_nlos = 4.0;
  double c_los = 1e-7;
  double c_nlos = 1e-7;

  void validate() const;
};

/// Nakagami shape per blockage state. The squared fading amplitude is
/// Gamma(nu, 1/nu) with unit mean; the closed forms require integer nu.
struct FadingParams {
  int nu_los = 3;
  int nu_nlos = 2;

  int nu(LinkState s) const { return s == LinkState::los ? nu_los : nu_nlos; }
  void validate() const;
};

/// How the jamming-array gain toward the warden is modeled: averaged over
/// the beamsteering PMF, or deterministically equal to the main-lobe gain
/// (the multi-array approximation).
enum class JammerGainMode { averaged, deterministic_main };

/// Full system parameterization, all powers in linear milliwatts and all
/// gains linear. Defaults are the benchmark numerical scenario.
struct SystemConfig {
  double pa_mw = 100.0;                       // 20 dBm
  double pj_max_mw = dbm_to_mw(15.52);        // benchmark design point
  double sigma2_b_mw = dbm_to_mw(-74.0);
  double sigma2_w_mw = dbm_to_mw(-74.0);
  double d_ab_m = 25.0;
  double d_aw_m = 25.0;
  AntennaPattern alice_data;  // array carrying the data beam
  AntennaPattern alice_jam;   // array carrying the jamming beam
  AntennaPattern bob;         // receive array
  BlockageParams blockage;
  FadingParams fading;
  bool willie_in_main_lobe = false;
  JammerGainMode jammer_gain_mode = JammerGainMode::averaged;

  void validate() const;
};

/// Line-of-sight probability of a link of length d >= 0.
double p_los(double d_m, const BlockageParams& bp);

/// Path loss (linear gain) of a link of length d > 0 in the given state.
double path_loss(double d_m, LinkState state, const BlockageParams& bp);

/// Directivity-gain PMF of a pattern under its beamsteering error.
/// Zero steering error puts all mass on the main lobe.
GainPMF gain_pmf(const AntennaPattern& p);

/// Rate constant nu * (nu!)^{-1/nu} of the exponential CDF bound for a
/// normalized gamma variable of integer shape nu.
double alzer_rate(int nu);

/// (1 - e^{-alzer_rate(nu) x})^nu: tight CDF approximation for the
/// normalized gamma law of integer shape nu.
double alzer_cdf(double x, int nu);

/// Binomial expansion of alzer_cdf: sum_l coeff[l] * exp(-rate[l] * x).
struct AlzerExpansion {
  std::vector<double> coeff;
  std::vector<double> rate;
};
AlzerExpansion alzer_expansion(int nu);

/// One draw of the squared fading amplitude, Gamma(nu, 1/nu), mean 1.
double sample_power_gain(int nu, RandomStream& rng);

}  // namespace covertmm
