#include "covertmm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "covertmm/errors.hpp"
#include "covertmm/parallel.hpp"
#include "covertmm/quadrature.hpp"
#include "covertmm/specfun.hpp"
#include "covertmm/warden.hpp"

namespace covertmm {
namespace {

constexpr std::int64_t kBlockSize = 1 << 16;

using Branch = std::pair<double, double>;  // {gain, probability}

std::vector<Branch> warden_jam_branches(const SystemConfig& cfg) {
  if (cfg.jammer_gain_mode == JammerGainMode::deterministic_main) {
    return {{cfg.alice_jam.main_gain, 1.0}};
  }
  const GainPMF pmf = gain_pmf(cfg.alice_jam);
  return {{pmf.gain[0], pmf.prob[0]}, {pmf.gain[1], pmf.prob[1]}};
}

std::vector<Branch> warden_data_branches(const SystemConfig& cfg) {
  if (!cfg.willie_in_main_lobe) return {{cfg.alice_data.side_gain, 1.0}};
  const GainPMF pmf = gain_pmf(cfg.alice_data);
  return {{pmf.gain[0], pmf.prob[0]}, {pmf.gain[1], pmf.prob[1]}};
}

std::vector<Branch> receiver_jam_branches(const SystemConfig& cfg) {
  if (!cfg.willie_in_main_lobe) return {{cfg.alice_jam.side_gain, 1.0}};
  const GainPMF pmf = gain_pmf(cfg.alice_jam);
  return {{pmf.gain[0], pmf.prob[0]}, {pmf.gain[1], pmf.prob[1]}};
}

double pick_gain(const GainPMF& pmf, RandomStream& rng) {
  return rng.uniform() < pmf.prob[0] ? pmf.gain[0] : pmf.gain[1];
}

double gamma_pdf(double y, int nu) {
  return std::pow(nu, nu) * std::pow(y, nu - 1) * std::exp(-nu * y) /
         specfun::factorial(nu - 1);
}

// Density of the exponential CDF bound for shape nu.
double alzer_pdf(double x, int nu, double rate) {
  return nu * rate * std::exp(-rate * x) * std::pow(-std::expm1(-rate * x), nu - 1);
}

template <class SampleFn>
McEstimate mc_run(std::int64_t n, std::uint64_t seed, SampleFn&& sample) {
  if (n < 1) throw std::domain_error("monte carlo: n >= 1 required");
  const std::int64_t blocks = (n + kBlockSize - 1) / kBlockSize;
  struct Sums {
    double s = 0.0;
    double s2 = 0.0;
  };
  std::vector<Sums> partial(static_cast<std::size_t>(blocks));
  parallel_for_index(blocks, [&](std::int64_t b) {
    RandomStream rng = RandomStream::substream(seed, static_cast<std::uint64_t>(b));
    const std::int64_t count = std::min(kBlockSize, n - b * kBlockSize);
    double s = 0.0;
    double s2 = 0.0;
    for (std::int64_t i = 0; i < count; ++i) {
      const double v = sample(rng);
      s += v;
      s2 += v * v;
    }
    partial[static_cast<std::size_t>(b)] = {s, s2};
  });
  double s = 0.0;
  double s2 = 0.0;
  for (const Sums& p : partial) {  // fixed block order
    s += p.s;
    s2 += p.s2;
  }
  const double mean = s / static_cast<double>(n);
  double se = 0.0;
  if (n > 1) {
    const double var = std::max(0.0, (s2 - n * mean * mean) / static_cast<double>(n - 1));
    se = std::sqrt(var / static_cast<double>(n));
  }
  return McEstimate{mean, se, n, seed};
}

// Shared draw of the data-link SINR for the outage and capacity samplers.
double sample_link_sinr(const SystemConfig& cfg, const GainPMF& data_pmf,
                        const GainPMF& bob_pmf, const GainPMF& jam_pmf, double pl,
                        RandomStream& rng) {
  const LinkState state = rng.uniform() < pl ? LinkState::los : LinkState::nlos;
  const int nu = cfg.fading.nu(state);
  const double loss = path_loss(cfg.d_ab_m, state, cfg.blockage);
  const double g_data = pick_gain(data_pmf, rng);
  const double g_bob = pick_gain(bob_pmf, rng);
  const double g_jam =
      cfg.willie_in_main_lobe ? pick_gain(jam_pmf, rng) : cfg.alice_jam.side_gain;
  const double x = sample_power_gain(nu, rng);
  const double y = sample_power_gain(nu, rng);
  const double pj = rng.uniform() * cfg.pj_max_mw;
  return cfg.pa_mw * g_data * g_bob * loss * x /
         (pj * g_jam * g_bob * loss * y + cfg.sigma2_b_mw);
}

}  // namespace

McEstimate mc_expected_detection_error(const SystemConfig& cfg, std::int64_t n,
                                       std::uint64_t seed) {
  cfg.validate();
  if (!(cfg.pj_max_mw >= 0.0)) {
    throw std::domain_error("mc_expected_detection_error: negative max jammer power");
  }
  const GainPMF jam_pmf = gain_pmf(cfg.alice_jam);
  const GainPMF data_pmf = gain_pmf(cfg.alice_data);
  const double pl = p_los(cfg.d_aw_m, cfg.blockage);
  return mc_run(n, seed, [&](RandomStream& rng) {
    const LinkState state = rng.uniform() < pl ? LinkState::los : LinkState::nlos;
    const int nu = cfg.fading.nu(state);
    const double g_jam = cfg.jammer_gain_mode == JammerGainMode::deterministic_main
                             ? cfg.alice_jam.main_gain
                             : pick_gain(jam_pmf, rng);
    const double g_data =
        cfg.willie_in_main_lobe ? pick_gain(data_pmf, rng) : cfg.alice_data.side_gain;
    const double x = sample_power_gain(nu, rng);
    const double y = sample_power_gain(nu, rng);
    const double signal = cfg.pa_mw * g_data * x;
    const double jam = cfg.pj_max_mw * g_jam * y;
    return jam >= signal ? 1.0 - signal / jam : 0.0;
  });
}

McEstimate mc_outage(const SystemConfig& cfg, double rb, std::int64_t n, std::uint64_t seed) {
  cfg.validate();
  if (!(rb > 0.0)) throw std::domain_error("mc_outage: requires rb > 0");
  const double sinr_th = std::exp2(rb) - 1.0;
  const GainPMF data_pmf = gain_pmf(cfg.alice_data);
  const GainPMF bob_pmf = gain_pmf(cfg.bob);
  const GainPMF jam_pmf = gain_pmf(cfg.alice_jam);
  const double pl = p_los(cfg.d_ab_m, cfg.blockage);
  return mc_run(n, seed, [&](RandomStream& rng) {
    return sample_link_sinr(cfg, data_pmf, bob_pmf, jam_pmf, pl, rng) < sinr_th ? 1.0 : 0.0;
  });
}

McEstimate mc_ergodic_capacity(const SystemConfig& cfg, std::int64_t n, std::uint64_t seed) {
  cfg.validate();
  const GainPMF data_pmf = gain_pmf(cfg.alice_data);
  const GainPMF bob_pmf = gain_pmf(cfg.bob);
  const GainPMF jam_pmf = gain_pmf(cfg.alice_jam);
  const double pl = p_los(cfg.d_ab_m, cfg.blockage);
  return mc_run(n, seed, [&](RandomStream& rng) {
    return std::log2(1.0 + sample_link_sinr(cfg, data_pmf, bob_pmf, jam_pmf, pl, rng));
  });
}

double alzer_ref_detection(const SystemConfig& cfg, double tol) {
  cfg.validate();
  if (!(tol >= 1e-10)) throw std::domain_error("alzer_ref_detection: tol >= 1e-10 required");
  if (!(cfg.pj_max_mw > 0.0)) {
    throw std::domain_error("alzer_ref_detection: max jammer power must be positive");
  }
  const double pl = p_los(cfg.d_aw_m, cfg.blockage);
  double acc = 0.0;
  for (const LinkState state : {LinkState::los, LinkState::nlos}) {
    const double w = (state == LinkState::los) ? pl : 1.0 - pl;
    const int nu = cfg.fading.nu(state);
    const double rate = alzer_rate(nu);
    for (const auto& [g_jam, b_jam] : warden_jam_branches(cfg)) {
      for (const auto& [g_data, b_data] : warden_data_branches(cfg)) {
        const double c1 = cfg.pj_max_mw * g_jam / (cfg.pa_mw * g_data);
        // E[(1 - X/(c1 Y)) 1{X <= c1 Y}] with X under the CDF bound and Y
        // exactly gamma: inner integral over X, outer expectation over Y.
        // The inner upper limit is capped where the density has fully
        // decayed so the Kronrod nodes cannot straddle an empty interval.
        auto inner = [&](double y) {
          const double cap = c1 * y;
          const double upper = std::min(cap, 45.0 / rate);
          return integrate(
              [&](double x) { return (1.0 - x / cap) * alzer_pdf(x, nu, rate); }, 0.0,
              upper, tol * 0.1, 30);
        };
        const double value = integrate_semi_infinite(
            [&](double y) { return gamma_pdf(y, nu) * inner(y); }, tol * 0.1, 30);
        acc += w * b_jam * b_data * value;
      }
    }
  }
  return acc;
}

double alzer_ref_outage(const SystemConfig& cfg, double rb, double tol) {
  cfg.validate();
  if (!(tol >= 1e-10)) throw std::domain_error("alzer_ref_outage: tol >= 1e-10 required");
  if (!(rb > 0.0)) throw std::domain_error("alzer_ref_outage: requires rb > 0");
  const double sinr_th = std::exp2(rb) - 1.0;
  const GainPMF data_pmf = gain_pmf(cfg.alice_data);
  const GainPMF bob_pmf = gain_pmf(cfg.bob);
  const double pl = p_los(cfg.d_ab_m, cfg.blockage);
  const double pj = cfg.pj_max_mw;
  double acc = 0.0;
  for (const LinkState state : {LinkState::los, LinkState::nlos}) {
    const double w = (state == LinkState::los) ? pl : 1.0 - pl;
    const int nu = cfg.fading.nu(state);
    const double rate = alzer_rate(nu);
    const double loss = path_loss(cfg.d_ab_m, state, cfg.blockage);
    for (int k1 = 0; k1 < 2; ++k1) {
      for (int k2 = 0; k2 < 2; ++k2) {
        const double g1 = data_pmf.gain[k1];
        const double noise_ratio =
            sinr_th * cfg.sigma2_b_mw / (cfg.pa_mw * g1 * bob_pmf.gain[k2] * loss);
        for (const auto& [g_jam, b_jam] : receiver_jam_branches(cfg)) {
          const double c2 = sinr_th * g_jam / (cfg.pa_mw * g1);
          double cond = 1.0;
          for (int l = 1; l <= nu; ++l) {
            const double sign = (l % 2 != 0) ? -1.0 : 1.0;
            // Uniform jammer-power average taken numerically.
            const double mean_mgf =
                integrate([&](double x) { return std::pow(1.0 + l * rate * c2 * x / nu, -nu); },
                          0.0, pj, tol * 0.1, 30) /
                pj;
            cond += sign * static_cast<double>(specfun::binomial(nu, l)) *
                    std::exp(-l * rate * noise_ratio) * mean_mgf;
          }
          acc += w * data_pmf.prob[k1] * bob_pmf.prob[k2] * b_jam * cond;
        }
      }
    }
  }
  return acc;
}

double quadrature_ref_capacity(const SystemConfig& cfg, double tol) {
  cfg.validate();
  if (!(tol >= 1e-10)) throw std::domain_error("quadrature_ref_capacity: tol >= 1e-10 required");
  if (!(cfg.pj_max_mw > 0.0)) {
    throw std::domain_error("quadrature_ref_capacity: max jammer power must be positive");
  }
  const GainPMF data_pmf = gain_pmf(cfg.alice_data);
  const GainPMF bob_pmf = gain_pmf(cfg.bob);
  const double pl = p_los(cfg.d_ab_m, cfg.blockage);
  const double pj = cfg.pj_max_mw;
  double acc = 0.0;
  for (const LinkState state : {LinkState::los, LinkState::nlos}) {
    const double w = (state == LinkState::los) ? pl : 1.0 - pl;
    const int nu = cfg.fading.nu(state);
    const double rate = alzer_rate(nu);
    const double loss = path_loss(cfg.d_ab_m, state, cfg.blockage);
    for (int k1 = 0; k1 < 2; ++k1) {
      const double g1 = data_pmf.gain[k1];
      for (int k2 = 0; k2 < 2; ++k2) {
        const double noise_arg =
            cfg.sigma2_b_mw / (cfg.pa_mw * g1 * bob_pmf.gain[k2] * loss);
        for (const auto& [g_jam, b_jam] : receiver_jam_branches(cfg)) {
          const double jam_arg = g_jam / (cfg.pa_mw * g1);
          double lsum = 0.0;
          for (int l = 1; l <= nu; ++l) {
            // Inner: scaled-Ei integrand over the jammer power; outer:
            // expectation over the interfering fading power.
            auto inner = [&](double y) {
              // logarithmic knee of width ~noise_arg/(jam_arg*y) at t = 0
              return integrate(
                  [&](double t) {
                    return specfun::e_ei(l * rate * (jam_arg * y * t + noise_arg));
                  },
                  0.0, pj, tol * 0.1, 30);
            };
            const double expect = integrate_semi_infinite(
                [&](double y) { return gamma_pdf(y, nu) * inner(y); }, tol * 0.1, 30);
            const double sign = (l % 2 != 0) ? -1.0 : 1.0;
            lsum += sign * static_cast<double>(specfun::binomial(nu, l)) * expect;
          }
          acc += w * data_pmf.prob[k1] * bob_pmf.prob[k2] * b_jam * lsum /
                 (pj * std::numbers::ln2);
        }
      }
    }
  }
  return acc;
}

}  // namespace covertmm
