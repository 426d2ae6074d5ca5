#pragma once

#include "mudom/points.hpp"

namespace mudom {

struct Mat2 {
  Complex a11{}, a12{}, a21{}, a22{};
};

Complex trace(const Mat2& A);
Complex det(const Mat2& A);

// Largest singular value through the closed form
// sigma^2 = (T + sqrt(T^2 - 4 D)) / 2 with T = tr(A* A), D = |det A|^2.
double op_norm(const Mat2& A);

// Largest eigenvalue modulus via the quadratic formula on
// lambda^2 - tr(A) lambda + det(A).
double spectral_radius(const Mat2& A);

TetraPoint project_tetra(const Mat2& A);   // (a11, a22, det A)
PentaPoint project_penta(const Mat2& A);   // (a21, tr A, det A)
Gamma2Point project_gamma2(const Mat2& A); // (tr A, det A)

}  // namespace mudom
