#include "covertmm/link.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covertmm/errors.hpp"
#include "covertmm/quadrature.hpp"
#include "covertmm/specfun.hpp"

namespace covertmm {
namespace {

using Branch = std::pair<double, double>;  // {gain, probability}

// Jamming gain toward the receiver: deterministic side lobe, or the full
// beamsteering PMF when the warden sits in the data-beam direction (the
// jamming beam then covers the receiver as well).
std::vector<Branch> receiver_jam_branches(const SystemConfig& cfg) {
  if (!cfg.willie_in_main_lobe) return {{cfg.alice_jam.side_gain, 1.0}};
  const GainPMF pmf = gain_pmf(cfg.alice_jam);
  return {{pmf.gain[0], pmf.prob[0]}, {pmf.gain[1], pmf.prob[1]}};
}

// (1/P) int_0^P (1 + b x)^{-nu} dx expressed through t = b P: the
// uniform-jammer average of the interference MGF factor. Limit 1 as
// t -> 0; the expm1/log1p forms keep that limit exact.
double avg_interference_mgf(int nu, double t) {
  if (t <= 0.0) return 1.0;
  if (nu == 1) return std::log1p(t) / t;
  return -std::expm1((1.0 - nu) * std::log1p(t / nu)) * nu / ((nu - 1.0) * t);
}

double gamma_pdf(double y, int nu) {
  return std::pow(nu, nu) * std::pow(y, nu - 1) * std::exp(-nu * y) /
         specfun::factorial(nu - 1);
}

// Capacity kernel: scaled-Ei increment net of the log penalty,
//   eEi(z (1+u)) - eEi(z) - ln(1+u),
// with z the scaled noise argument and u the jamming-to-noise proportion.
// A two-term series takes over for u -> 0 where direct evaluation cancels.
double capacity_bracket(double z, double u) {
  if (u < 1e-6) {
    const double zez = z * specfun::e_ei(z);
    return u * (zez + 0.5 * u * z * (zez + 1.0));
  }
  return specfun::e_ei(z * (1.0 + u)) - specfun::e_ei(z) - std::log1p(u);
}

// One-dimensional fading integral of the capacity kernel against the
// normalized gamma density; uscale = u/y.
double capacity_term_quadrature(int nu, double z, double uscale) {
  return integrate_semi_infinite(
      [=](double y) { return capacity_bracket(z, uscale * y) / y * gamma_pdf(y, nu); },
      1e-8);
}

// Shape-2 closed form of the same integral; a = scaled max jamming ratio.
// Degenerates at a = 2 (removable), handled by the caller.
double capacity_term_shape2(double z, double a) {
  const double arg0 = 2.0 * z / a;
  const double j1 = 4.0 / (a - 2.0) * (specfun::e_ei(arg0) - specfun::e_ei(z));
  const double j2 = 2.0 * specfun::e_ei(z);
  const double j3 = -2.0 * specfun::e_ei(arg0);
  return j1 - j2 - j3;
}

}  // namespace

double outage_probability(const SystemConfig& cfg, double rb) {
  cfg.validate();
  if (!(rb > 0.0)) throw std::domain_error("outage_probability: requires rb > 0");
  if (!(cfg.pj_max_mw > 0.0)) {
    throw std::domain_error("outage_probability: max jammer power must be positive");
  }
  const double sinr_th = std::exp2(rb) - 1.0;
  const GainPMF data_pmf = gain_pmf(cfg.alice_data);
  const GainPMF bob_pmf = gain_pmf(cfg.bob);
  const std::vector<Branch> jam_branches = receiver_jam_branches(cfg);
  const double pl = p_los(cfg.d_ab_m, cfg.blockage);

  double acc = 0.0;
  for (const LinkState state : {LinkState::los, LinkState::nlos}) {
    const double w = (state == LinkState::los) ? pl : 1.0 - pl;
    const int nu = cfg.fading.nu(state);
    const double rate = alzer_rate(nu);
    const double loss = path_loss(cfg.d_ab_m, state, cfg.blockage);
    for (int k1 = 0; k1 < 2; ++k1) {
      for (int k2 = 0; k2 < 2; ++k2) {
        const double g1 = data_pmf.gain[k1];
        const double noise_ratio = sinr_th * cfg.sigma2_b_mw /
                                   (cfg.pa_mw * g1 * bob_pmf.gain[k2] * loss);
        for (const auto& [g_jam, b_jam] : jam_branches) {
          const double jam_ratio = sinr_th * g_jam * cfg.pj_max_mw / (cfg.pa_mw * g1);
          double cond = 1.0;
          for (int l = 1; l <= nu; ++l) {
            const double sign = (l % 2 != 0) ? -1.0 : 1.0;
            cond += sign * static_cast<double>(specfun::binomial(nu, l)) *
                    std::exp(-l * rate * noise_ratio) *
                    avg_interference_mgf(nu, l * rate * jam_ratio);
          }
          acc += w * data_pmf.prob[k1] * bob_pmf.prob[k2] * b_jam * cond;
        }
      }
    }
  }
  if (acc < -1e-9 || acc > 1.0 + 1e-9) {
    throw NumericalError("outage_probability: result outside [0,1]: " + std::to_string(acc));
  }
  return std::clamp(acc, 0.0, 1.0);
}

double effective_rate(const SystemConfig& cfg, double rb) {
  return rb * (1.0 - outage_probability(cfg, rb));
}

LinkMetrics link_metrics(const SystemConfig& cfg, double rb) {
  LinkMetrics m;
  m.outage = outage_probability(cfg, rb);
  m.effective_rate = rb * (1.0 - m.outage);
  m.ergodic_capacity = ergodic_capacity(cfg);
  return m;
}

double ergodic_capacity(const SystemConfig& cfg, CapacityMethod method) {
  cfg.validate();
  if (!(cfg.pj_max_mw > 0.0)) {
    throw std::domain_error("ergodic_capacity: max jammer power must be positive");
  }
  if (method == CapacityMethod::closed_form &&
      (cfg.fading.nu_los != 2 || cfg.fading.nu_nlos != 2)) {
    throw std::domain_error("ergodic_capacity: closed form requires shape 2");
  }
  const GainPMF data_pmf = gain_pmf(cfg.alice_data);
  const GainPMF bob_pmf = gain_pmf(cfg.bob);
  const std::vector<Branch> jam_branches = receiver_jam_branches(cfg);
  const double pl = p_los(cfg.d_ab_m, cfg.blockage);
  const double pj = cfg.pj_max_mw;

  double acc = 0.0;
  for (const LinkState state : {LinkState::los, LinkState::nlos}) {
    const double w = (state == LinkState::los) ? pl : 1.0 - pl;
    const int nu = cfg.fading.nu(state);
    const double rate = alzer_rate(nu);
    const double loss = path_loss(cfg.d_ab_m, state, cfg.blockage);
    const bool want_closed =
        (method == CapacityMethod::closed_form) ||
        (method == CapacityMethod::automatic && nu == 2);
    for (int k1 = 0; k1 < 2; ++k1) {
      const double g1 = data_pmf.gain[k1];
      for (int k2 = 0; k2 < 2; ++k2) {
        const double noise_arg = cfg.sigma2_b_mw / (cfg.pa_mw * g1 * bob_pmf.gain[k2] * loss);
        for (const auto& [g_jam, b_jam] : jam_branches) {
          const double jam_arg = g_jam / (cfg.pa_mw * g1);
          double lsum = 0.0;
          for (int l = 1; l <= nu; ++l) {
            const double z = l * rate * noise_arg;
            const double a = l * rate * jam_arg * pj;
            double term;
            // The shape-2 closed form cancels catastrophically near a = 2;
            // quadrature covers that sliver.
            if (want_closed && std::abs(a - 2.0) > 1e-4 * (a + 2.0)) {
              term = capacity_term_shape2(z, a);
            } else {
              term = capacity_term_quadrature(nu, z, a / z);
            }
            const double sign = (l % 2 != 0) ? -1.0 : 1.0;
            lsum += sign * static_cast<double>(specfun::binomial(nu, l)) / (l * rate) * term;
          }
          acc += w * data_pmf.prob[k1] * bob_pmf.prob[k2] * b_jam *
                 (cfg.pa_mw * g1 / (g_jam * pj * std::numbers::ln2)) * lsum;
        }
      }
    }
  }
  if (acc < -1e-9) {
    throw NumericalError("ergodic_capacity: negative result: " + std::to_string(acc));
  }
  return std::max(acc, 0.0);
}

}  // namespace covertmm
