#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "covertmm/design.hpp"
#include "covertmm/link.hpp"
#include "covertmm/units.hpp"
#include "covertmm/warden.hpp"

using namespace covertmm;

TEST_CASE("covertness equation solve at the benchmark") {
  const SystemConfig cfg;
  const double pj = solve_pj_opt(cfg, 0.05);
  CHECK(std::abs(mw_to_dbm(pj) - 15.52) <= 0.1);
  // at the solution the constraint binds to solver tolerance
  SystemConfig at = cfg;
  at.pj_max_mw = pj;
  CHECK(std::abs(expected_detection_error(at) - 0.95) <= 1e-6);
}

TEST_CASE("solve_pj_opt is order-preserving in the slack") {
  const SystemConfig cfg;
  double prev = 1e12;
  for (const double eps : {0.01, 0.05, 0.1, 0.2}) {
    const double pj = solve_pj_opt(cfg, eps);
    CHECK(pj <= prev + 1e-9);  // looser covertness never needs more jamming
    prev = pj;
  }
}

TEST_CASE("solve_pj_opt rejects bad slack values") {
  const SystemConfig cfg;
  CHECK_THROWS_AS(solve_pj_opt(cfg, 0.0), std::domain_error);
  CHECK_THROWS_AS(solve_pj_opt(cfg, 1.0), std::domain_error);
  CHECK_THROWS_AS(solve_pj_opt(cfg, -0.5), std::domain_error);
}

TEST_CASE("max_covert_rate invariants at the benchmark") {
  const SystemConfig cfg;
  const CovertDesign d = max_covert_rate(cfg, 0.05);
  CHECK(d.epsilon == 0.05);
  CHECK(std::abs(d.rate_opt - d.rb_opt * (1.0 - d.outage_opt)) <= 1e-9);
  SystemConfig at = cfg;
  at.pj_max_mw = d.pj_opt_mw;
  CHECK(std::abs(expected_detection_error(at) - 0.95) <= 1e-6);
  CHECK(d.outage_opt == doctest::Approx(outage_probability(at, d.rb_opt)).epsilon(1e-12));
  // local optimality: one grid step either way does not beat the optimum
  const double up = effective_rate(at, d.rb_opt + 0.02);
  const double dn = effective_rate(at, d.rb_opt - 0.02);
  CHECK(d.rate_opt >= up - 1e-9);
  CHECK(d.rate_opt >= dn - 1e-9);
}

TEST_CASE("benchmark optimum lands on the published design") {
  const CovertDesign d = max_covert_rate(SystemConfig{}, 0.05);
  CHECK(std::abs(d.rb_opt - 6.42) <= 0.05);
  CHECK(std::abs(d.rate_opt - 5.0743) <= 0.01 * 5.0743);
  CHECK(std::abs(d.outage_opt - 0.2096) <= 0.01);
}

TEST_CASE("looser covertness buys effective rate") {
  const SystemConfig cfg;
  const CovertDesign tight = max_covert_rate(cfg, 0.05);
  const CovertDesign loose = max_covert_rate(cfg, 0.1);
  CHECK(loose.pj_opt_mw <= tight.pj_opt_mw);
  CHECK(loose.rate_opt >= tight.rate_opt - 1e-9);
}
