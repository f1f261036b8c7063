#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace entgeo {

/// Seeded Gaussian sampler over mt19937_64. Uniforms are derived from the
/// top 53 bits of the raw output and Gaussians via Box-Muller, avoiding
/// std::normal_distribution whose output is implementation-defined.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // in [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  std::complex<double> normal_complex() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace entgeo
