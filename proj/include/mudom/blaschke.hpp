#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mudom/points.hpp"

namespace mudom {

// unimodular * prod_k (z - zeros[k]) / (conj(zeros[k]) z - 1). An empty zero
// list is a unimodular constant (degree 0).
struct BlaschkeProduct {
  Complex unimodular{1.0, 0.0};
  std::vector<Complex> zeros;

  static BlaschkeProduct make(Complex unimodular, std::vector<Complex> zeros);
  static BlaschkeProduct constant(Complex c) { return make(c, {}); }
  // B(z) = z, i.e. the single factor at 0 times -1.
  static BlaschkeProduct identity_map() { return make(Complex{-1.0, 0.0}, {Complex{}}); }

  int degree() const { return static_cast<int>(zeros.size()); }
};

Complex blaschke_eval(const BlaschkeProduct& B, Complex z);

// e^{2 pi i k / n}, k = 0 .. n-1.
std::vector<Complex> roots_of_unity(int n);

// Finds B of degree <= n with B(mu_j) = targets[j] at the n-th roots of
// unity mu_j, all targets unimodular. Degree escalation d = 0..n; each stage
// runs Levenberg-Marquardt from 8 deterministic restarts (zeros seeded on
// radius 0.5) and the first stage reaching max_j |B(mu_j) - t_j| < accept_tol
// wins. Throws InterpolationFailure (carrying the best residual) if every
// stage misses.
BlaschkeProduct interpolate_roots_of_unity(std::span<const Complex> targets,
                                           double accept_tol = 1e-8,
                                           std::uint64_t seed = 0);

// max_j |B(mu_j) - t_j| at the n-th roots of unity.
double interpolation_residual(const BlaschkeProduct& B, std::span<const Complex> targets);

}  // namespace mudom
