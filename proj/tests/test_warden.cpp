#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "covertmm/oracle.hpp"
#include "covertmm/units.hpp"
#include "covertmm/warden.hpp"

using namespace covertmm;

namespace {

SystemConfig benchmark_at(double pj_dbm) {
  SystemConfig cfg;
  cfg.pj_max_mw = dbm_to_mw(pj_dbm);
  return cfg;
}

}  // namespace

TEST_CASE("per-realization optimal detector") {
  const double noise = 0.1;
  {
    const DetectionResult r = detection_error_star({2.0, 1.0, noise});
    CHECK(r.p_e_star == 0.0);
    CHECK(r.tau_lo == doctest::Approx(1.1));
    CHECK(r.tau_hi == doctest::Approx(2.1));
  }
  {
    const DetectionResult r = detection_error_star({1.0, 4.0, noise});
    CHECK(r.p_e_star == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(r.tau_lo == doctest::Approx(1.1));
    CHECK(r.tau_hi == doctest::Approx(4.1));
  }
  {
    // boundary: equal statistics, continuous with the zero branch
    const DetectionResult r = detection_error_star({3.0, 3.0, noise});
    CHECK(r.p_e_star == 0.0);
  }
  CHECK_THROWS_AS(detection_error_star({1.0, 0.0, noise}), std::domain_error);
}

TEST_CASE("detector curves piecewise values") {
  const RealizationInputs r{1.0, 4.0, 0.1};
  {
    const DetectorCurves c = detector_curves(r, 0.05);  // below the noise floor
    CHECK(c.p_fa == 1.0);
    CHECK(c.p_md == 0.0);
    CHECK(c.p_e == 1.0);
  }
  {
    const DetectorCurves c = detector_curves(r, r.h1_max());
    CHECK(c.p_fa == 0.0);
    CHECK(c.p_md == 1.0);
    CHECK(c.p_e == 1.0);
  }
  {
    // inside the optimal interval the error sits at the flat minimum
    const DetectorCurves c = detector_curves(r, 0.5 * (r.h1_min() + r.h0_max()));
    CHECK(c.p_e == doctest::Approx(detection_error_star(r).p_e_star).epsilon(1e-15));
  }
  CHECK_THROWS_AS(detector_curves(r, -1.0), std::domain_error);
}

TEST_CASE("grid minimum of the error curve meets the closed-form optimum") {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> power(0.01, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const RealizationInputs r{power(gen), power(gen), power(gen) * 0.1};
    const DetectionResult star = detection_error_star(r);
    CHECK(star.p_e_star >= 0.0);
    CHECK(star.p_e_star <= 1.0);
    CHECK(star.tau_lo <= star.tau_hi);
    // zero error exactly when the signal statistic can top the jamming one
    CHECK((star.p_e_star == 0.0) == (r.signal_power >= r.jam_power));
    const double hi = 1.05 * r.h1_max();
    double min_pe = 2.0;
    double argmin = -1.0;
    double prev_fa = 2.0;
    double prev_md = -1.0;
    const int grid = 2000;
    for (int i = 0; i <= grid; ++i) {
      // include the interval midpoint so the flat region is sampled
      const double tau = (i == grid) ? 0.5 * (star.tau_lo + star.tau_hi)
                                     : hi * static_cast<double>(i) / grid;
      const DetectorCurves c = detector_curves(r, tau);
      if (i < grid && i > 0) {
        CHECK(c.p_fa <= prev_fa + 1e-15);
        CHECK(c.p_md >= prev_md - 1e-15);
      }
      if (i < grid) {
        prev_fa = c.p_fa;
        prev_md = c.p_md;
      }
      if (c.p_e < min_pe) {
        min_pe = c.p_e;
        argmin = tau;
      }
    }
    CAPTURE(r.signal_power);
    CAPTURE(r.jam_power);
    CHECK(std::abs(min_pe - star.p_e_star) <= 1e-12);
    CHECK(argmin >= star.tau_lo - 1e-9 * (1.0 + star.tau_lo));
    CHECK(argmin <= star.tau_hi + 1e-9 * (1.0 + star.tau_hi));
  }
}

TEST_CASE("expected detection error at the benchmark design point") {
  const SystemConfig cfg = benchmark_at(15.52);
  const double e = expected_detection_error(cfg);
  CHECK(e == doctest::Approx(0.95).epsilon(0.0022));       // quoted operating point
  CHECK(e == doctest::Approx(0.949754517).epsilon(1e-8));  // frozen regression value
  // tight tier: matches the nested quadrature of the pre-closed-form
  CHECK(std::abs(e - alzer_ref_detection(cfg, 1e-9)) <= 1e-6);
}

TEST_CASE("expected detection error limits and guards") {
  SystemConfig cfg;
  cfg.pj_max_mw = 1e-13;
  CHECK(expected_detection_error(cfg) == 0.0);  // analytic jam-off limit
  cfg.pj_max_mw = 1e-9;
  CHECK(expected_detection_error(cfg) >= 0.0);
  CHECK(expected_detection_error(cfg) < 1e-9);
  cfg.pj_max_mw = 0.0;
  CHECK_THROWS_AS(expected_detection_error(cfg), std::domain_error);
  cfg.pj_max_mw = dbm_to_mw(60.0);
  CHECK(expected_detection_error(cfg) >= 0.999);
  cfg.pj_max_mw = 1e8;
  CHECK(expected_detection_error(cfg) >= 0.9999);
}

TEST_CASE("expected detection error monotonicity") {
  // nondecreasing in the jammer power cap
  double prev = -1.0;
  for (double dbm = -20.0; dbm <= 60.0; dbm += 5.0) {
    const double e = expected_detection_error(benchmark_at(dbm));
    CHECK(e >= prev - 1e-14);
    CHECK(e >= 0.0);
    CHECK(e <= 1.0);
    prev = e;
  }
  // nonincreasing in the transmit power
  prev = 2.0;
  for (double pa_dbm = 0.0; pa_dbm <= 30.0; pa_dbm += 3.0) {
    SystemConfig cfg = benchmark_at(15.52);
    cfg.pa_mw = dbm_to_mw(pa_dbm);
    const double e = expected_detection_error(cfg);
    CHECK(e <= prev + 1e-14);
    prev = e;
  }
}

TEST_CASE("gain-mode variants move the detection error the right way") {
  for (double dbm = -10.0; dbm <= 40.0; dbm += 10.0) {
    const SystemConfig base = benchmark_at(dbm);
    SystemConfig det = base;
    det.jammer_gain_mode = JammerGainMode::deterministic_main;
    // a guaranteed main-lobe jamming beam can only help covertness
    CHECK(expected_detection_error(det) >= expected_detection_error(base) - 1e-14);
    SystemConfig wml = base;
    wml.willie_in_main_lobe = true;
    // the warden seeing the data main lobe can only hurt covertness
    CHECK(expected_detection_error(wml) <= expected_detection_error(base) + 1e-14);
  }
}

TEST_CASE("variant forms agree with their quadrature references") {
  SystemConfig det = benchmark_at(10.0);
  det.jammer_gain_mode = JammerGainMode::deterministic_main;
  CHECK(std::abs(expected_detection_error(det) - alzer_ref_detection(det, 1e-9)) <= 1e-6);
  SystemConfig wml = benchmark_at(25.0);
  wml.willie_in_main_lobe = true;
  CHECK(std::abs(expected_detection_error(wml) - alzer_ref_detection(wml, 1e-9)) <= 1e-6);
  SystemConfig both = benchmark_at(18.0);
  both.willie_in_main_lobe = true;
  both.jammer_gain_mode = JammerGainMode::deterministic_main;
  CHECK(std::abs(expected_detection_error(both) - alzer_ref_detection(both, 1e-9)) <= 1e-6);
}

TEST_CASE("variant forms agree with exact Monte Carlo") {
  SystemConfig cfg = benchmark_at(20.0);
  cfg.willie_in_main_lobe = true;
  cfg.jammer_gain_mode = JammerGainMode::deterministic_main;
  const McEstimate mc = mc_expected_detection_error(cfg, 300000, 31);
  CHECK(std::abs(expected_detection_error(cfg) - mc.mean) <=
        std::max(0.02, 3.0 * mc.std_error));
}

TEST_CASE("expected detection error against exact Monte Carlo") {
  const SystemConfig cfg = benchmark_at(15.52);
  const McEstimate mc = mc_expected_detection_error(cfg, 200000, 7);
  CHECK(std::abs(expected_detection_error(cfg) - mc.mean) <=
        std::max(0.02, 3.0 * mc.std_error));
}
