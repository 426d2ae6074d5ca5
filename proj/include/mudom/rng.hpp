#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace mudom {

// Seeded generator for samplers and property tests. Doubles are built from
// raw mt19937_64 output, so streams are identical across platforms and
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double angle() { return 2.0 * kPi * uniform(); }

  std::complex<double> unimodular() { return std::polar(1.0, angle()); }

  // Area-uniform draw from the disc of radius rmax.
  std::complex<double> in_disc(double rmax = 1.0) {
    const double r = rmax * std::sqrt(uniform());
    const double t = angle();
    return std::polar(r, t);
  }

  std::uint64_t raw() { return gen_(); }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 gen_;
};

}  // namespace mudom
