#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "pin13/matrix.hpp"

namespace pin13 {

// Deterministic random source.  The normal deviates are produced by an
// explicit Box-Muller transform instead of std::normal_distribution, whose
// output sequence is implementation-defined; with mt19937_64 underneath the
// whole stream is reproducible for a fixed seed.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Standard complex normal: independent components of variance 1/2.
  cplx complex_normal() {
    const double s = 0.70710678118654752440;
    const double re = normal();
    const double im = normal();
    return cplx(re * s, im * s);
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace pin13
