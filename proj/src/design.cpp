#include "covertmm/design.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "covertmm/errors.hpp"
#include "covertmm/link.hpp"
#include "covertmm/parallel.hpp"
#include "covertmm/warden.hpp"

namespace covertmm {
namespace {

constexpr double kGridStep = 0.02;     // bits
constexpr double kRefineTol = 1e-4;    // bits

double detection_at(const SystemConfig& cfg, double pj_mw) {
  SystemConfig c = cfg;
  c.pj_max_mw = pj_mw;
  return expected_detection_error(c);
}

}  // namespace

double solve_pj_opt(const SystemConfig& cfg, double epsilon) {
  cfg.validate();
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::domain_error("solve_pj_opt: epsilon must lie in (0, 1)");
  }
  const double target = 1.0 - epsilon;
  double lo = 1e-6;
  double hi = 1e6;
  double e_lo = detection_at(cfg, lo);
  double e_hi = detection_at(cfg, hi);
  int expansions = 0;
  while (e_lo > target && expansions < 60) {
    lo *= 1e-2;
    e_lo = detection_at(cfg, lo);
    ++expansions;
  }
  while (e_hi < target && expansions < 60) {
    hi *= 1e2;
    e_hi = detection_at(cfg, hi);
    ++expansions;
  }
  if (e_lo > target || e_hi < target) {
    throw NumericalError("solve_pj_opt: no bracket after 60 expansions; detection error spans [" +
                         std::to_string(e_lo) + ", " + std::to_string(e_hi) + "]");
  }
  // Bisection in log power: the detection error sweeps many dB decades.
  for (int it = 0; it < 400; ++it) {
    const double mid = std::sqrt(lo * hi);
    const double e_mid = detection_at(cfg, mid);
    if (std::abs(e_mid - target) <= 1e-9) return mid;
    if (e_mid < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw NumericalError("solve_pj_opt: bisection exhausted without meeting tolerance");
}

CovertDesign max_covert_rate(const SystemConfig& cfg, double epsilon) {
  const double pj_opt = solve_pj_opt(cfg, epsilon);
  SystemConfig c = cfg;
  c.pj_max_mw = pj_opt;

  // Search ceiling: zero-jamming line-of-sight main-lobe SNR. Beyond it
  // the outage saturates at 1 and the objective vanishes.
  const double snr_peak = c.pa_mw * c.alice_data.main_gain * c.bob.main_gain *
                          path_loss(c.d_ab_m, LinkState::los, c.blockage) / c.sigma2_b_mw;
  const double r_cap = std::log2(1.0 + snr_peak);

  auto objective = [&c](double rb) { return rb * (1.0 - outage_probability(c, rb)); };

  const int n = std::max(2, static_cast<int>(r_cap / kGridStep));
  std::vector<double> values(n);
  parallel_for_index(n, [&](std::int64_t i) { values[i] = objective((i + 1) * kGridStep); });
  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (values[i] > values[best]) best = i;
  }
  const double center = (best + 1) * kGridStep;

  // Golden-section refinement inside the winning cell and its neighbors.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::max(center - kGridStep, kGridStep * 1e-3);
  double b = std::min(center + kGridStep, r_cap);
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (b - a > kRefineTol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = objective(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = objective(x1);
    }
  }
  const double rb_opt = (f1 > f2) ? x1 : x2;
  const double outage_opt = outage_probability(c, rb_opt);
  return CovertDesign{epsilon, pj_opt, rb_opt, outage_opt, rb_opt * (1.0 - outage_opt)};
}

}  // namespace covertmm
