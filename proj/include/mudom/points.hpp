#pragma once

#include <complex>
#include <vector>

#include "mudom/errors.hpp"

namespace mudom {

using Complex = std::complex<double>;

// (s, p) = (z1 + z2, z1 z2) coordinates on the symmetrized bidisc.
struct Gamma2Point {
  Complex s{};
  Complex p{};
};

// Elementary symmetric values (c1, ..., cn) of n disc variables; n >= 2 for
// the domain proper, but the operations below accept n >= 1.
struct GammaNPoint {
  std::vector<Complex> coeffs;
  int n() const { return static_cast<int>(coeffs.size()); }
};

// (x1, x2, x3) = (a11, a22, det A) coordinates on the tetrablock.
struct TetraPoint {
  Complex x1{};
  Complex x2{};
  Complex x3{};
};

// (a, s, p) = (a21, tr A, det A) coordinates on the pentablock.
struct PentaPoint {
  Complex a{};
  Complex s{};
  Complex p{};
};

struct Tolerance {
  double eps = 1e-9;
  Tolerance() = default;
  Tolerance(double e) : eps(e) {
    if (!(eps > 0.0)) throw InvalidParameter("tolerance must be positive");
  }
};

}  // namespace mudom
