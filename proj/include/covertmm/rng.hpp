#pragma once

#include <cstdint>
#include <random>

namespace covertmm {

/// Deterministic substream derivation: worker/block i draws from an engine
/// seeded with substream_seed(master, i). The rule is fixed so that results
/// are reproducible independently of scheduling.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index);

/// A seeded random stream owned by exactly one worker at a time.
/// The generator is mt19937_64, so the raw sequence is identical on every
/// standard-conforming platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream substream(std::uint64_t master, std::uint64_t index) {
    return RandomStream(substream_seed(master, index));
  }

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on (0, 1); safe under log().
  double uniform_pos();
  /// Standard normal (Box-Muller).
  double normal();
  /// Gamma(shape, scale 1) for shape >= 1 (Marsaglia-Tsang rejection).
  double gamma(double shape);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace covertmm
