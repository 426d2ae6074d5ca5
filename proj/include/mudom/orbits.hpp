#pragma once

#include <string>
#include <variant>

#include "mudom/automorphisms.hpp"
#include "mudom/domains.hpp"

namespace mudom {

enum class DecompositionStratum {
  RoyalGamma2,
  NonRoyalGamma2,
  TriangularE,
  NonTriangularE,
  RoyalP,
  NonRoyalP,
  BGammaN,
};

std::string to_string(DecompositionStratum s);

// Result of an orbit-decomposition solve: stratum, explicit automorphism
// parameters carrying the canonical representative onto the input, and the
// max coordinate error of that round trip.
struct Decomposition {
  DecompositionStratum stratum;
  std::variant<DiscAutomorphism, TetraAutParams, PentaAutParams, BlaschkeProduct> params;
  double residual = 0.0;
};

// Canonical representatives: (2,1) royal / (0,1) non-royal on bGamma2;
// (1,1,1) triangular / (0,0,1) non-triangular on bE; (0,2,1) royal /
// (1,0,1) non-royal on bP; pi_n of the n-th roots of unity on bGamma_n.
Gamma2Point canonical_gamma2(bool royal);
TetraPoint canonical_tetra(bool triangular);
PentaPoint canonical_penta(bool royal);
GammaNPoint canonical_gamma_n(int n);

Decomposition decompose_b_gamma2(const Gamma2Point& q, Tolerance tol = {});
Decomposition decompose_b_tetra(const TetraPoint& x, Tolerance tol = {});
Decomposition decompose_b_penta(const PentaPoint& q, Tolerance tol = {});
Decomposition decompose_b_gamma_n(const GammaNPoint& c, Tolerance tol = {});

}  // namespace mudom
