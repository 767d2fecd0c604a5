#include "covertmm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "covertmm/config_io.hpp"
#include "covertmm/design.hpp"
#include "covertmm/errors.hpp"
#include "covertmm/link.hpp"
#include "covertmm/oracle.hpp"
#include "covertmm/parallel.hpp"
#include "covertmm/warden.hpp"

namespace covertmm {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_hash(std::uint64_t h) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct PointValues {
  std::string row;
};

void apply_variable(SystemConfig& cfg, SweepSpec& local, const std::string& variable,
                    double value) {
  if (variable == "pj_max_dbm") {
    cfg.pj_max_mw = dbm_to_mw(value);
  } else if (variable == "rb") {
    local.rb = value;
  } else if (variable == "pa_dbm") {
    cfg.pa_mw = dbm_to_mw(value);
  } else if (variable == "epsilon") {
    local.epsilon = value;
  } else if (variable == "d_aw") {
    cfg.d_aw_m = value;
  } else if (variable == "d_ab") {
    cfg.d_ab_m = value;
  } else {
    throw std::domain_error("sweep: unknown variable \"" + variable + "\"");
  }
}

std::string variable_column(const std::string& variable) {
  if (variable == "rb") return "rb_bits_per_use";
  if (variable == "d_aw") return "d_aw_m";
  if (variable == "d_ab") return "d_ab_m";
  return variable;  // pj_max_dbm, pa_dbm, epsilon already carry units
}

}  // namespace

std::vector<Metric> parse_metrics(const std::string& csv) {
  std::vector<Metric> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "detect") {
      out.push_back(Metric::detect);
    } else if (item == "outage") {
      out.push_back(Metric::outage);
    } else if (item == "effective_rate") {
      out.push_back(Metric::effective_rate);
    } else if (item == "capacity") {
      out.push_back(Metric::capacity);
    } else if (item == "design") {
      out.push_back(Metric::design);
    } else {
      throw std::domain_error("sweep: unknown metric \"" + item + "\"");
    }
  }
  if (out.empty()) throw std::domain_error("sweep: no metrics requested");
  return out;
}

void run_sweep(const SystemConfig& cfg, const SweepSpec& spec, std::ostream& out) {
  cfg.validate();
  if (spec.steps < 2) throw std::domain_error("sweep: steps >= 2 required");
  if (!(spec.start < spec.stop)) throw std::domain_error("sweep: start < stop required");
  if (spec.metrics.empty()) throw std::domain_error("sweep: no metrics requested");
  {  // reject unknown variables before any work
    SystemConfig probe = cfg;
    SweepSpec probe_spec = spec;
    apply_variable(probe, probe_spec, spec.variable, spec.start);
  }

  std::string header = variable_column(spec.variable);
  for (const Metric m : spec.metrics) {
    switch (m) {
      case Metric::detect: header += ",detect_error_prob"; break;
      case Metric::outage: header += ",outage_prob"; break;
      case Metric::effective_rate: header += ",effective_rate_bits_per_use"; break;
      case Metric::capacity: header += ",capacity_bits_per_use"; break;
      case Metric::design:
        header += ",pj_opt_dbm,rb_opt_bits_per_use,outage_opt_prob,rate_opt_bits_per_use";
        break;
    }
  }

  const int n = spec.steps;
  std::vector<PointValues> rows(n);
  std::vector<std::optional<std::string>> errors(n);
  parallel_for_index(n, [&](std::int64_t i) {
    const double value = spec.start + (spec.stop - spec.start) * i / (n - 1);
    SystemConfig point_cfg = cfg;
    SweepSpec local = spec;
    try {
      apply_variable(point_cfg, local, spec.variable, value);
      std::string row = fmt(value);
      for (const Metric m : spec.metrics) {
        switch (m) {
          case Metric::detect:
            row += "," + fmt(expected_detection_error(point_cfg));
            break;
          case Metric::outage:
            row += "," + fmt(outage_probability(point_cfg, local.rb));
            break;
          case Metric::effective_rate:
            row += "," + fmt(effective_rate(point_cfg, local.rb));
            break;
          case Metric::capacity:
            row += "," + fmt(ergodic_capacity(point_cfg));
            break;
          case Metric::design: {
            const CovertDesign d = max_covert_rate(point_cfg, local.epsilon);
            row += "," + fmt(mw_to_dbm(d.pj_opt_mw)) + "," + fmt(d.rb_opt) + "," +
                   fmt(d.outage_opt) + "," + fmt(d.rate_opt);
            break;
          }
        }
      }
      rows[i].row = std::move(row);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  out << "# covertmm sweep variable=" << spec.variable << "\n";
  out << "# config_hash: " << fmt_hash(config_hash(cfg)) << "\n";
  out << "# seed: " << spec.seed << "\n";
  out << header << "\n";
  for (int i = 0; i < n; ++i) {
    if (errors[i]) {
      out << "# error: point " << i << ": " << *errors[i] << "\n";
      out.flush();
      throw NumericalError("sweep: point " + std::to_string(i) + " failed: " + *errors[i]);
    }
    out << rows[i].row << "\n";
  }
  out.flush();
}

bool run_verify(const SystemConfig& cfg, const VerifyOptions& opt, std::ostream& out) {
  cfg.validate();
  if (opt.tier != "tight" && opt.tier != "loose") {
    throw std::domain_error("verify: tier must be \"tight\" or \"loose\"");
  }
  out << "# covertmm verify tier=" << opt.tier << "\n";
  out << "# config_hash: " << fmt_hash(config_hash(cfg)) << "\n";
  out << "# seed: " << opt.seed << "\n";
  out << "check,closed_form,reference,abs_diff,tolerance,std_error,status\n";
  bool all_ok = true;
  auto report = [&](const std::string& name, double closed, double ref, double tol,
                    double std_error) {
    const double diff = std::abs(closed - ref);
    const bool ok = diff <= tol;
    all_ok = all_ok && ok;
    out << name << "," << fmt(closed) << "," << fmt(ref) << "," << fmt(diff) << ","
        << fmt(tol) << "," << (std_error > 0.0 ? fmt(std_error) : std::string()) << ","
        << (ok ? "pass" : "FAIL") << "\n";
  };

  if (opt.tier == "tight") {
    report("detect_vs_quadrature", expected_detection_error(cfg),
           alzer_ref_detection(cfg, 1e-9), 1e-6, 0.0);
    for (const double rb : {0.1, 0.5, 1.0, 2.5, 5.0, 10.0}) {
      report("outage_rb_" + fmt(rb), outage_probability(cfg, rb),
             alzer_ref_outage(cfg, rb, 1e-10), 1e-8, 0.0);
    }
    const double cap = ergodic_capacity(cfg);
    report("capacity_vs_quadrature", cap, quadrature_ref_capacity(cfg, 1e-9),
           1e-6 * std::max(1.0, std::abs(cap)), 0.0);
    if (cfg.fading.nu_los == 2 || cfg.fading.nu_nlos == 2) {
      const double quad = ergodic_capacity(cfg, CapacityMethod::quadrature);
      report("capacity_shape2_paths", cap, quad, 1e-7 * std::max(1.0, std::abs(quad)), 0.0);
    }
  } else {
    const McEstimate det = mc_expected_detection_error(cfg, opt.samples, opt.seed);
    report("detect_vs_mc", expected_detection_error(cfg), det.mean,
           std::max(0.02, 3.0 * det.std_error), det.std_error);
    const McEstimate ou = mc_outage(cfg, opt.rb, opt.samples, opt.seed);
    report("outage_rb_" + fmt(opt.rb) + "_vs_mc", outage_probability(cfg, opt.rb), ou.mean,
           std::max(0.02, 3.0 * ou.std_error), ou.std_error);
    const McEstimate cap = mc_ergodic_capacity(cfg, opt.samples, opt.seed);
    const double closed_cap = ergodic_capacity(cfg);
    report("capacity_vs_mc", closed_cap, cap.mean,
           std::max(0.02 * std::abs(closed_cap), 3.0 * cap.std_error), cap.std_error);
  }
  out << "# result: " << (all_ok ? "PASS" : "FAIL") << "\n";
  out.flush();
  return all_ok;
}

}  // namespace covertmm
