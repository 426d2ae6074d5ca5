#pragma once

#include <utility>

#include "mudom/points.hpp"

namespace mudom {

// Disc automorphisms stored in the convention
//
//   v(z) = eta * B_alpha(z),   B_alpha(z) = (z - alpha) / (conj(alpha) z - 1),
//
// with eta unimodular and |alpha| < 1. Mind the denominator sign: with it,
// B_alpha is an involution and the identity map is (eta, alpha) = (-1, 0).
// The textbook normalization u (z - alpha)/(1 - conj(alpha) z) corresponds
// to u = -eta.
struct DiscAutomorphism {
  Complex eta{-1.0, 0.0};
  Complex alpha{0.0, 0.0};

  // Validates and renormalizes eta onto the circle; throws InvalidParameter
  // if eta is off the circle by more than 1e-9 or |alpha| >= 1.
  static DiscAutomorphism make(Complex eta, Complex alpha);

  static DiscAutomorphism identity() { return {}; }

  // The rotation v(z) = t z for unimodular t.
  static DiscAutomorphism rotation(Complex t);
};

// B_alpha(z). Throws DegenerateDenominator when conj(alpha) z is within
// 1e-14 of 1 (only reachable for |z| > 1).
Complex blaschke_factor(Complex alpha, Complex z);

Complex aut_eval(const DiscAutomorphism& v, Complex z);

// v after w, computed through 2x2 Moebius coefficient matrices and
// renormalized to (eta, alpha) form; alpha is recovered as the zero of the
// composite.
DiscAutomorphism aut_compose(const DiscAutomorphism& v, const DiscAutomorphism& w);

DiscAutomorphism aut_inverse(const DiscAutomorphism& v);

// Boundary two-point interpolation: returns v with v(sources.first) =
// targets.first and v(sources.second) = targets.second, all four points on
// the unit circle. Built as the Moebius map through the ordered triples
// (src1, src2, arc midpoint) -> (tgt1, tgt2, +-arc midpoint), keeping the
// midpoint sign that sends 0 inside the disc.
DiscAutomorphism two_point_boundary_aut(std::pair<Complex, Complex> sources,
                                        std::pair<Complex, Complex> targets);

}  // namespace mudom
