#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "covertmm/channel.hpp"

namespace covertmm {

enum class Metric { detect, outage, effective_rate, capacity, design };

/// Parses "detect,outage,..."; throws std::domain_error on unknown names.
std::vector<Metric> parse_metrics(const std::string& csv);

/// A one-dimensional parameter sweep. `variable` is one of pj_max_dbm,
/// rb, pa_dbm, epsilon, d_aw, d_ab; the grid is `steps` evenly spaced
/// points over [start, stop]. rb and epsilon feed the metrics that need
/// them when they are not the swept variable.
struct SweepSpec {
  std::string variable;
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
  std::vector<Metric> metrics;
  double rb = 1.0;
  double epsilon = 0.05;
  std::uint64_t seed = 1;
};

/// Evaluates the sweep and writes CSV (metadata comments, then a header
/// with units, one row per grid point, in grid order). Points run
/// concurrently; on failure the completed prefix is flushed, a trailing
/// `# error:` marker is written and NumericalError is thrown.
void run_sweep(const SystemConfig& cfg, const SweepSpec& spec, std::ostream& out);

struct VerifyOptions {
  std::string tier = "tight";  // "tight" | "loose"
  std::int64_t samples = 1000000;
  std::uint64_t seed = 1;
  double rb = 1.0;  // rate used for the loose-tier outage check
};

/// Runs the requested verification tier against the config and writes a
/// per-check CSV table. Returns true iff every tolerance held.
bool run_verify(const SystemConfig& cfg, const VerifyOptions& opt, std::ostream& out);

}  // namespace covertmm
