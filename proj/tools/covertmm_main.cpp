// Command-line front end: closed-form metrics, covert design, parameter
// sweeps and the verification tiers. All output is CSV with #-prefixed
// metadata. Exit codes: 0 ok, 2 config error, 3 numerical failure,
// 4 verification failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "covertmm/config_io.hpp"
#include "covertmm/design.hpp"
#include "covertmm/errors.hpp"
#include "covertmm/link.hpp"
#include "covertmm/sweep.hpp"
#include "covertmm/units.hpp"
#include "covertmm/warden.hpp"

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

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw covertmm::ConfigError("out", "cannot open output file: " + path);
    stream = &file;
  }
};

void print_meta(std::ostream& out, const char* what, const covertmm::SystemConfig& cfg) {
  out << "# covertmm " << what << "\n";
  out << "# config_hash: " << fmt_hash(covertmm::config_hash(cfg)) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covert mmWave link performance: detection error, outage, "
               "capacity, covert design, sweeps and verification"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  double epsilon = 0.05;
  double rb = 1.0;
  std::uint64_t seed = 1;
  std::int64_t samples = 1000000;
  std::string tier = "tight";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "config file (flat-key JSON)");
    sub->add_option("--out", out_path, "output path (default stdout)");
  };

  CLI::App* detect = app.add_subcommand("detect", "expected warden detection error");
  add_common(detect);

  CLI::App* outage = app.add_subcommand("outage", "outage probability and effective rate");
  add_common(outage);
  outage->add_option("--rb", rb, "target rate, bits/channel use")->required();

  CLI::App* capacity = app.add_subcommand("capacity", "ergodic capacity of the data link");
  add_common(capacity);

  CLI::App* design = app.add_subcommand("design", "covert design optimization");
  add_common(design);
  design->add_option("--epsilon", epsilon, "covertness slack in (0,1)");

  CLI::App* sweep = app.add_subcommand("sweep", "one-dimensional parameter sweep");
  add_common(sweep);
  std::string variable;
  std::string metrics_csv;
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
  sweep->add_option("--variable", variable,
                    "one of pj_max_dbm, rb, pa_dbm, epsilon, d_aw, d_ab")->required();
  sweep->add_option("--start", start, "grid start")->required();
  sweep->add_option("--stop", stop, "grid stop")->required();
  sweep->add_option("--steps", steps, "grid size (>= 2)")->required();
  sweep->add_option("--metrics", metrics_csv,
                    "comma list of detect,outage,effective_rate,capacity,design")->required();
  sweep->add_option("--rb", rb, "rate for outage/effective_rate metrics");
  sweep->add_option("--epsilon", epsilon, "slack for the design metric");
  sweep->add_option("--seed", seed, "seed stamped into metadata");

  CLI::App* verify = app.add_subcommand("verify", "closed forms vs quadrature/Monte Carlo");
  add_common(verify);
  verify->add_option("--tier", tier, "tight | loose");
  verify->add_option("--samples", samples, "Monte Carlo samples (loose tier)");
  verify->add_option("--seed", seed, "Monte Carlo seed (loose tier)");
  verify->add_option("--rb", rb, "rate for the loose-tier outage check");

  CLI11_PARSE(app, argc, argv);

  try {
    const covertmm::SystemConfig cfg = covertmm::load_config(config_path);
    Output output;
    output.open(out_path);
    std::ostream& out = *output.stream;

    if (detect->parsed()) {
      const double value = covertmm::expected_detection_error(cfg);
      print_meta(out, "detect", cfg);
      out << "pj_max_dbm,detect_error_prob\n";
      out << fmt(covertmm::mw_to_dbm(cfg.pj_max_mw)) << "," << fmt(value) << "\n";
    } else if (outage->parsed()) {
      const double p = covertmm::outage_probability(cfg, rb);
      print_meta(out, "outage", cfg);
      out << "rb_bits_per_use,outage_prob,effective_rate_bits_per_use\n";
      out << fmt(rb) << "," << fmt(p) << "," << fmt(rb * (1.0 - p)) << "\n";
    } else if (capacity->parsed()) {
      const double c = covertmm::ergodic_capacity(cfg);
      print_meta(out, "capacity", cfg);
      out << "pj_max_dbm,capacity_bits_per_use\n";
      out << fmt(covertmm::mw_to_dbm(cfg.pj_max_mw)) << "," << fmt(c) << "\n";
    } else if (design->parsed()) {
      const covertmm::CovertDesign d = covertmm::max_covert_rate(cfg, epsilon);
      print_meta(out, "design", cfg);
      out << "epsilon,pj_opt_dbm,rb_opt_bits_per_use,outage_opt_prob,"
             "rate_opt_bits_per_use\n";
      out << fmt(d.epsilon) << "," << fmt(covertmm::mw_to_dbm(d.pj_opt_mw)) << ","
          << fmt(d.rb_opt) << "," << fmt(d.outage_opt) << "," << fmt(d.rate_opt) << "\n";
    } else if (sweep->parsed()) {
      covertmm::SweepSpec spec;
      spec.variable = variable;
      spec.start = start;
      spec.stop = stop;
      spec.steps = steps;
      spec.metrics = covertmm::parse_metrics(metrics_csv);
      spec.rb = rb;
      spec.epsilon = epsilon;
      spec.seed = seed;
      covertmm::run_sweep(cfg, spec, out);
    } else if (verify->parsed()) {
      covertmm::VerifyOptions opt;
      opt.tier = tier;
      opt.samples = samples;
      opt.seed = seed;
      opt.rb = rb;
      if (!covertmm::run_verify(cfg, opt, out)) return 4;
    }
  } catch (const covertmm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const covertmm::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
