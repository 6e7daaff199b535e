#pragma once

#include <cstdint>
#include <random>

namespace minkarr {

// std::mt19937_64 has a fully specified output sequence, unlike the standard
// distributions, so doubles are built from the top 53 bits by hand to keep
// generated instances identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform in [0, n). Slight modulo bias is irrelevant at these sizes.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace minkarr
