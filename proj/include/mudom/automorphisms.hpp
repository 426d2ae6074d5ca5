#pragma once

#include "mudom/blaschke.hpp"
#include "mudom/disc_automorphism.hpp"
#include "mudom/points.hpp"

namespace mudom {

// Parameters of the tetrablock automorphism T_{v,chi} (optionally
// precomposed with the flip) in the convention
//   v = -xi1 B_{z1},   chi = -xi2 B_{-conj(z2)}.
struct TetraAutParams {
  Complex xi1{1.0, 0.0};
  Complex z1{};
  Complex xi2{1.0, 0.0};
  Complex z2{};
  bool flip = false;

  static TetraAutParams make(Complex xi1, Complex z1, Complex xi2, Complex z2,
                             bool flip = false);
  static TetraAutParams identity() { return {}; }
};

// Parameters of the pentablock automorphism f_{omega v}.
struct PentaAutParams {
  Complex omega{-1.0, 0.0};
  DiscAutomorphism v;

  static PentaAutParams make(Complex omega, DiscAutomorphism v);
  // f maps (a, s, p) to itself: omega = -1 cancels the eta = -1 of the
  // identity disc automorphism.
  static PentaAutParams identity() { return {}; }
};

// tau_v: unsymmetrize, push both roots through v, re-symmetrize. Requires
// the roots of (s, p) to lie in the closed disc within 1e-7.
Gamma2Point tau_apply(const DiscAutomorphism& v, const Gamma2Point& q);

// tau_B on Gamma_n for a finite Blaschke product (proper, not injective for
// degree >= 2). Same closed-disc requirement on the roots.
GammaNPoint tau_blaschke_apply(const BlaschkeProduct& B, const GammaNPoint& c);

// T_{v,chi}, with the flip applied first when params.flip is set. The
// domain precheck is the cheap necessary one (coordinate moduli <= 1 + 1e-6);
// full membership is the mu oracle's job.
TetraPoint tetra_apply(const TetraAutParams& t, const TetraPoint& x);

// The transposition (x2, x1, x3). This is the Aut(E) generator.
TetraPoint tetra_flip(const TetraPoint& x);

// The cyclic shift (x2, x3, x1). Not a self-map of the tetrablock; kept only
// as a diagnostic so the counterexample stays reproducible.
TetraPoint cyclic_shift(const TetraPoint& x);

PentaPoint penta_apply(const PentaAutParams& f, const PentaPoint& q);

// Group operations, all validated by round-trip contracts in the tests.
// Composition acts as "outer after inner".
TetraAutParams tetra_compose(const TetraAutParams& outer, const TetraAutParams& inner);
TetraAutParams tetra_inverse(const TetraAutParams& t);
PentaAutParams penta_compose(const PentaAutParams& outer, const PentaAutParams& inner);
PentaAutParams penta_inverse(const PentaAutParams& f);

// Parameter encodings of the two disc automorphisms behind T_{v,chi}.
DiscAutomorphism tetra_v(const TetraAutParams& t);
DiscAutomorphism tetra_chi(const TetraAutParams& t);
TetraAutParams tetra_params_from(const DiscAutomorphism& v, const DiscAutomorphism& chi,
                                 bool flip);

// a-scaling factor eta (1 - |alpha|^2) / (1 - conj(alpha) s + conj(alpha)^2 p).
Complex penta_a_factor(const DiscAutomorphism& v, const Gamma2Point& q);

}  // namespace mudom
