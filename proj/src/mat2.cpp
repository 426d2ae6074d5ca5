#include "mudom/mat2.hpp"

#include <algorithm>
#include <cmath>

namespace mudom {

Complex trace(const Mat2& A) { return A.a11 + A.a22; }

Complex det(const Mat2& A) { return A.a11 * A.a22 - A.a12 * A.a21; }

double op_norm(const Mat2& A) {
  const double t = std::norm(A.a11) + std::norm(A.a12) +
                   std::norm(A.a21) + std::norm(A.a22);
  const double d = std::norm(det(A));
  const double disc = std::max(t * t - 4.0 * d, 0.0);
  return std::sqrt(0.5 * (t + std::sqrt(disc)));
}

double spectral_radius(const Mat2& A) {
  const Complex t = trace(A);
  const Complex root = std::sqrt(t * t - 4.0 * det(A));
  return 0.5 * std::max(std::abs(t + root), std::abs(t - root));
}

TetraPoint project_tetra(const Mat2& A) { return {A.a11, A.a22, det(A)}; }

PentaPoint project_penta(const Mat2& A) { return {A.a21, trace(A), det(A)}; }

Gamma2Point project_gamma2(const Mat2& A) { return {trace(A), det(A)}; }

}  // namespace mudom
