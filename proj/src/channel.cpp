#include "covertmm/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "covertmm/specfun.hpp"

namespace covertmm {

void AntennaPattern::validate() const {
  if (!(main_gain > 0.0) || !(side_gain > 0.0) || !(main_gain > side_gain)) {
    throw std::domain_error("AntennaPattern: requires main_gain > side_gain > 0");
  }
  if (!(beamwidth_rad > 0.0) || !(beamwidth_rad < 2.0 * std::numbers::pi)) {
    throw std::domain_error("AntennaPattern: beamwidth outside (0, 2*pi)");
  }
  if (!(steer_sigma_rad >= 0.0)) {
    throw std::domain_error("AntennaPattern: negative steering sigma");
  }
}

void BlockageParams::validate() const {
  if (!(decay_length_m > 0.0)) throw std::domain_error("BlockageParams: decay length <= 0");
  if (!(alpha_los > 0.0) || !(alpha_nlos > 0.0)) {
    throw std::domain_error("BlockageParams: path-loss exponents must be positive");
  }
  if (!(c_los > 0.0) || !(c_nlos > 0.0)) {
    throw std::domain_error("BlockageParams: path-loss intercepts must be positive");
  }
}

void FadingParams::validate() const {
  if (nu_los < 1 || nu_los > 30 || nu_nlos < 1 || nu_nlos > 30) {
    throw std::domain_error("FadingParams: shape must be an integer in [1, 30]");
  }
}

void SystemConfig::validate() const {
  if (!(pa_mw > 0.0)) throw std::domain_error("SystemConfig: pa_mw <= 0");
  if (!(sigma2_b_mw > 0.0) || !(sigma2_w_mw > 0.0)) {
    throw std::domain_error("SystemConfig: noise powers must be positive");
  }
  if (!(d_ab_m > 0.0) || !(d_aw_m > 0.0)) {
    throw std::domain_error("SystemConfig: distances must be positive");
  }
  alice_data.validate();
  alice_jam.validate();
  bob.validate();
  blockage.validate();
  fading.validate();
}

double p_los(double d_m, const BlockageParams& bp) {
  if (d_m < 0.0) throw std::domain_error("p_los: negative distance");
  return std::exp(-d_m / bp.decay_length_m);
}

double path_loss(double d_m, LinkState state, const BlockageParams& bp) {
  if (!(d_m > 0.0)) throw std::domain_error("path_loss: requires d > 0");
  return state == LinkState::los ? bp.c_los * std::pow(d_m, -bp.alpha_los)
                                 : bp.c_nlos * std::pow(d_m, -bp.alpha_nlos);
}

GainPMF gain_pmf(const AntennaPattern& p) {
  p.validate();
  double b1 = 1.0;
  if (p.steer_sigma_rad > 0.0) {
    b1 = specfun::erf(0.5 * p.beamwidth_rad / (p.steer_sigma_rad * std::sqrt(2.0)));
  }
  return GainPMF{{p.main_gain, p.side_gain}, {b1, 1.0 - b1}};
}

double alzer_rate(int nu) {
  if (nu < 1) throw std::domain_error("alzer_rate: shape must be >= 1");
  return nu * std::pow(specfun::factorial(nu), -1.0 / nu);
}

double alzer_cdf(double x, int nu) {
  if (x < 0.0) throw std::domain_error("alzer_cdf: negative argument");
  return std::pow(-std::expm1(-alzer_rate(nu) * x), nu);
}

AlzerExpansion alzer_expansion(int nu) {
  const double rate = alzer_rate(nu);
  AlzerExpansion e;
  e.coeff.reserve(nu + 1);
  e.rate.reserve(nu + 1);
  for (int l = 0; l <= nu; ++l) {
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    e.coeff.push_back(sign * static_cast<double>(specfun::binomial(nu, l)));
    e.rate.push_back(l * rate);
  }
  return e;
}

double sample_power_gain(int nu, RandomStream& rng) {
  if (nu < 1) throw std::domain_error("sample_power_gain: shape must be >= 1");
  return rng.gamma(static_cast<double>(nu)) / nu;
}

}  // namespace covertmm
