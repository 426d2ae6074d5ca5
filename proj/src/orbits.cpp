#include "mudom/orbits.hpp"

#include <algorithm>
#include <cmath>

namespace mudom {

std::string to_string(DecompositionStratum s) {
  switch (s) {
    case DecompositionStratum::RoyalGamma2: return "RoyalGamma2";
    case DecompositionStratum::NonRoyalGamma2: return "NonRoyalGamma2";
    case DecompositionStratum::TriangularE: return "TriangularE";
    case DecompositionStratum::NonTriangularE: return "NonTriangularE";
    case DecompositionStratum::RoyalP: return "RoyalP";
    case DecompositionStratum::NonRoyalP: return "NonRoyalP";
    case DecompositionStratum::BGammaN: return "BGammaN";
  }
  throw InvalidParameter("unreachable decomposition stratum");
}

Gamma2Point canonical_gamma2(bool royal) {
  return royal ? Gamma2Point{2.0, 1.0} : Gamma2Point{0.0, 1.0};
}

TetraPoint canonical_tetra(bool triangular) {
  return triangular ? TetraPoint{1.0, 1.0, 1.0} : TetraPoint{0.0, 0.0, 1.0};
}

PentaPoint canonical_penta(bool royal) {
  return royal ? PentaPoint{0.0, 2.0, 1.0} : PentaPoint{1.0, 0.0, 1.0};
}

GammaNPoint canonical_gamma_n(int n) {
  const auto mu = roots_of_unity(n);
  return symmetrize(mu);
}

namespace {

double coord_error(const Gamma2Point& a, const Gamma2Point& b) {
  return std::max(std::abs(a.s - b.s), std::abs(a.p - b.p));
}

double coord_error(const TetraPoint& a, const TetraPoint& b) {
  return std::max({std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2), std::abs(a.x3 - b.x3)});
}

double coord_error(const PentaPoint& a, const PentaPoint& b) {
  return std::max({std::abs(a.a - b.a), std::abs(a.s - b.s), std::abs(a.p - b.p)});
}

// Two roots of (s, p) on the circle, normalized to exact unit modulus and
// ordered by principal argument (the documented tie-break; either ordering
// is a valid decomposition).
std::pair<Complex, Complex> boundary_roots(const Gamma2Point& q) {
  auto roots = unsymmetrize(GammaNPoint{{q.s, q.p}});
  for (Complex& r : roots) {
    const double m = std::abs(r);
    if (m > 0.0) r /= m;
  }
  if (std::arg(roots[0]) > std::arg(roots[1])) std::swap(roots[0], roots[1]);
  return {roots[0], roots[1]};
}

DiscAutomorphism gamma2_witness(const Gamma2Point& q, bool royal) {
  if (royal) {
    Complex z = 0.5 * q.s;
    const double m = std::abs(z);
    if (m < 1e-12)
      throw InternalInconsistency("royal boundary point with s == 0");
    return DiscAutomorphism::rotation(z / m);
  }
  const auto [z1, z2] = boundary_roots(q);
  return two_point_boundary_aut({Complex{0.0, 1.0}, Complex{0.0, -1.0}}, {z1, z2});
}

}  // namespace

Decomposition decompose_b_gamma2(const Gamma2Point& q, Tolerance tol) {
  const auto cls = classify_gamma2(q, tol);
  if (!cls.on_boundary)
    throw NotOnBoundary("decompose_b_gamma2: point is not on bGamma2");
  const bool royal = royal_gamma2(q, tol);
  const DiscAutomorphism v = gamma2_witness(q, royal);
  const double residual = coord_error(tau_apply(v, canonical_gamma2(royal)), q);
  return {royal ? DecompositionStratum::RoyalGamma2 : DecompositionStratum::NonRoyalGamma2,
          v, residual};
}

Decomposition decompose_b_tetra(const TetraPoint& x, Tolerance tol) {
  const auto cls = classify_b_tetra(x, tol);
  if (cls.label == TetraBoundaryLabel::NotBoundary)
    throw NotOnBoundary("decompose_b_tetra: point is not on bE");
  const bool triangular = cls.label == TetraBoundaryLabel::BoundaryTriangular;
  TetraAutParams params;
  if (triangular) {
    params = TetraAutParams::make(x.x1 / std::abs(x.x1), 0.0, x.x2 / std::abs(x.x2), 0.0);
  } else {
    const Complex xi1 = x.x3 / std::abs(x.x3);
    params = TetraAutParams::make(xi1, -x.x1 * std::conj(xi1), 1.0, 0.0);
  }
  const double residual = coord_error(tetra_apply(params, canonical_tetra(triangular)), x);
  return {triangular ? DecompositionStratum::TriangularE : DecompositionStratum::NonTriangularE,
          params, residual};
}

Decomposition decompose_b_penta(const PentaPoint& q, Tolerance tol) {
  const auto cls = classify_b_penta(q, tol);
  if (cls.label == PentaBoundaryLabel::NotBoundary)
    throw NotOnBoundary("decompose_b_penta: point is not on bP");
  const bool royal = cls.label == PentaBoundaryLabel::BoundaryRoyal;
  const Gamma2Point sp{q.s, q.p};
  PentaAutParams params;
  if (royal) {
    // omega is free on the royal stratum; pinned to 1.
    params = PentaAutParams::make(1.0, gamma2_witness(sp, true));
  } else {
    const DiscAutomorphism v = gamma2_witness(sp, false);
    const Complex a_tilde =
        v.eta * (1.0 - std::norm(v.alpha)) / (1.0 + std::conj(v.alpha) * std::conj(v.alpha));
    if (std::abs(std::abs(a_tilde) - std::abs(q.a)) > 1e-7)
      throw InternalInconsistency("decompose_b_penta: |a~| disagrees with |a|");
    Complex omega = q.a / a_tilde;
    omega /= std::abs(omega);
    params = PentaAutParams::make(omega, v);
  }
  const double residual = coord_error(penta_apply(params, canonical_penta(royal)), q);
  return {royal ? DecompositionStratum::RoyalP : DecompositionStratum::NonRoyalP,
          params, residual};
}

Decomposition decompose_b_gamma_n(const GammaNPoint& c, Tolerance tol) {
  const auto cls = classify_gamma_n(c, tol);
  if (!cls.on_boundary)
    throw NotOnBoundary("decompose_b_gamma_n: point is not on bGamma_n");
  auto targets = unsymmetrize(c);
  for (Complex& t : targets) t /= std::abs(t);
  std::sort(targets.begin(), targets.end(),
            [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
  const BlaschkeProduct B = interpolate_roots_of_unity(targets);
  const GammaNPoint image = tau_blaschke_apply(B, canonical_gamma_n(c.n()));
  double residual = 0.0;
  for (int k = 0; k < c.n(); ++k)
    residual = std::max(residual, std::abs(image.coeffs[k] - c.coeffs[k]));
  return {DecompositionStratum::BGammaN, B, residual};
}

}  // namespace mudom
