#include "mudom/automorphisms.hpp"

#include <cmath>

#include "mudom/domains.hpp"

namespace mudom {

namespace {

constexpr double kDomainSlack = 1e-6;
constexpr double kRootSlack = 1e-7;

Complex unit(Complex w, const char* what) {
  const double m = std::abs(w);
  if (std::abs(m - 1.0) > 1e-9)
    throw InvalidParameter(std::string(what) + ": expected a unimodular value");
  return w / m;
}

// conj . u^{-1} . conj, the involution that conjugating by the flip applies
// to the slot automorphisms: (eta, alpha) -> (eta, conj(eta) conj(alpha)).
DiscAutomorphism tilde(const DiscAutomorphism& u) {
  return DiscAutomorphism::make(u.eta, std::conj(u.eta) * std::conj(u.alpha));
}

}  // namespace

TetraAutParams TetraAutParams::make(Complex xi1, Complex z1, Complex xi2, Complex z2,
                                    bool flip) {
  TetraAutParams t;
  t.xi1 = unit(xi1, "xi1");
  t.xi2 = unit(xi2, "xi2");
  if (!(std::abs(z1) < 1.0) || !(std::abs(z2) < 1.0))
    throw InvalidParameter("TetraAutParams: z1, z2 must lie in the open disc");
  t.z1 = z1;
  t.z2 = z2;
  t.flip = flip;
  return t;
}

PentaAutParams PentaAutParams::make(Complex omega, DiscAutomorphism v) {
  PentaAutParams f;
  f.omega = unit(omega, "omega");
  f.v = v;
  return f;
}

Gamma2Point tau_apply(const DiscAutomorphism& v, const Gamma2Point& q) {
  const auto roots = unsymmetrize(GammaNPoint{{q.s, q.p}});
  for (const Complex r : roots)
    if (std::abs(r) > 1.0 + kRootSlack)
      throw OutsideDomain("tau_apply: point is outside Gamma_2");
  const Complex w1 = aut_eval(v, roots[0]);
  const Complex w2 = aut_eval(v, roots[1]);
  return {w1 + w2, w1 * w2};
}

GammaNPoint tau_blaschke_apply(const BlaschkeProduct& B, const GammaNPoint& c) {
  auto roots = unsymmetrize(c);
  for (Complex& r : roots) {
    if (std::abs(r) > 1.0 + kRootSlack)
      throw OutsideDomain("tau_blaschke_apply: point is outside Gamma_n");
    r = blaschke_eval(B, r);
  }
  return symmetrize(roots);
}

TetraPoint tetra_apply(const TetraAutParams& t, const TetraPoint& input) {
  const TetraPoint x = t.flip ? tetra_flip(input) : input;
  for (const Complex c : {x.x1, x.x2, x.x3})
    if (std::abs(c) > 1.0 + kDomainSlack)
      throw OutsideDomain("tetra_apply: coordinate modulus exceeds 1");

  const Complex z1b = std::conj(t.z1);
  const Complex z2b = std::conj(t.z2);
  const Complex den = (1.0 - z1b * x.x1) - t.xi2 * z2b * (x.x2 - z1b * x.x3);
  if (std::abs(den) < 1e-13)
    throw DegenerateDenominator("tetra_apply: vanishing denominator");

  const Complex t1 = t.xi1 * ((x.x1 - t.z1) + t.xi2 * z2b * (t.z1 * x.x2 - x.x3)) / den;
  const Complex t2 = (t.z2 * (z1b * x.x1 - 1.0) + t.xi2 * (x.x2 - z1b * x.x3)) / den;
  const Complex t3 = t.xi1 * (t.z2 * (t.z1 - x.x1) - t.xi2 * (t.z1 * x.x2 - x.x3)) / den;
  return {t1, t2, t3};
}

TetraPoint tetra_flip(const TetraPoint& x) { return {x.x2, x.x1, x.x3}; }

TetraPoint cyclic_shift(const TetraPoint& x) { return {x.x2, x.x3, x.x1}; }

PentaPoint penta_apply(const PentaAutParams& f, const PentaPoint& q) {
  if (std::abs(q.a) > 1.0 + kDomainSlack)
    throw OutsideDomain("penta_apply: |a| exceeds 1");
  const Gamma2Point image = tau_apply(f.v, {q.s, q.p});
  const Complex ab = std::conj(f.v.alpha);
  const Complex den = 1.0 - ab * q.s + ab * ab * q.p;
  if (std::abs(den) < 1e-13)
    throw DegenerateDenominator("penta_apply: vanishing denominator");
  const Complex a =
      f.omega * f.v.eta * (1.0 - std::norm(f.v.alpha)) * q.a / den;
  return {a, image.s, image.p};
}

DiscAutomorphism tetra_v(const TetraAutParams& t) {
  return DiscAutomorphism::make(-t.xi1, t.z1);
}

DiscAutomorphism tetra_chi(const TetraAutParams& t) {
  return DiscAutomorphism::make(-t.xi2, -std::conj(t.z2));
}

TetraAutParams tetra_params_from(const DiscAutomorphism& v, const DiscAutomorphism& chi,
                                 bool flip) {
  return TetraAutParams::make(-v.eta, v.alpha, -chi.eta, -std::conj(chi.alpha), flip);
}

// T_{v2,c2} F^{k2} T_{v1,c1} F^{k1} = T_{v2,c2} (F^{k2} T_{v1,c1} F^{k2}) F^{k1 xor k2},
// where conjugation by F swaps the slots through tilde, and plain products
// compose as T_{a,b} T_{c,d} = T_{a.c, d.b}.
TetraAutParams tetra_compose(const TetraAutParams& outer, const TetraAutParams& inner) {
  DiscAutomorphism v1 = tetra_v(inner);
  DiscAutomorphism c1 = tetra_chi(inner);
  if (outer.flip) {
    const DiscAutomorphism v1f = tilde(c1);
    c1 = tilde(v1);
    v1 = v1f;
  }
  const DiscAutomorphism v = aut_compose(tetra_v(outer), v1);
  const DiscAutomorphism c = aut_compose(c1, tetra_chi(outer));
  return tetra_params_from(v, c, outer.flip != inner.flip);
}

TetraAutParams tetra_inverse(const TetraAutParams& t) {
  DiscAutomorphism v = aut_inverse(tetra_v(t));
  DiscAutomorphism c = aut_inverse(tetra_chi(t));
  if (t.flip) {
    const DiscAutomorphism vf = tilde(c);
    c = tilde(v);
    v = vf;
  }
  return tetra_params_from(v, c, t.flip);
}

Complex penta_a_factor(const DiscAutomorphism& v, const Gamma2Point& q) {
  const Complex ab = std::conj(v.alpha);
  const Complex den = 1.0 - ab * q.s + ab * ab * q.p;
  if (std::abs(den) < 1e-13)
    throw DegenerateDenominator("penta_a_factor: vanishing denominator");
  return v.eta * (1.0 - std::norm(v.alpha)) / den;
}

// The a-factors compose with a fixed -1 cocycle:
// g_{v2 . v1}(q) = -g_{v2}(tau_{v1} q) g_{v1}(q), so omega composes to
// -omega2 omega1 and the identity element carries omega = -1.
PentaAutParams penta_compose(const PentaAutParams& outer, const PentaAutParams& inner) {
  return PentaAutParams::make(-outer.omega * inner.omega,
                              aut_compose(outer.v, inner.v));
}

PentaAutParams penta_inverse(const PentaAutParams& f) {
  return PentaAutParams::make(std::conj(f.omega), aut_inverse(f.v));
}

}  // namespace mudom
