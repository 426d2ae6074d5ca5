#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mudom/mat2.hpp"
#include "mudom/points.hpp"
#include "mudom/rng.hpp"

namespace mudom {

enum class GammaRegion { Interior, Closure, Outside };

struct GammaClassification {
  GammaRegion region = GammaRegion::Outside;
  bool on_boundary = false;  // all root moduli within tol of 1
  double defect = 0.0;       // max | |root| - 1 |
  double max_modulus = 0.0;
};

enum class TetraBoundaryLabel { NotBoundary, BoundaryNonTriangular, BoundaryTriangular };

struct TetraClassification {
  TetraBoundaryLabel label = TetraBoundaryLabel::NotBoundary;
  double boundary_defect = 0.0;    // max of |x1 - conj(x2) x3|, ||x3|-1|, (|x1|-1)+
  double triangular_defect = 0.0;  // |x1 x2 - x3|
};

enum class PentaBoundaryLabel { NotBoundary, BoundaryRoyal, BoundaryNonRoyal };

struct PentaClassification {
  PentaBoundaryLabel label = PentaBoundaryLabel::NotBoundary;
  double boundary_defect = 0.0;  // max of ||a|^2 + |s|^2/4 - 1| and the bGamma2 defect of (s, p)
  double royal_defect = 0.0;     // |s^2 - 4p|
};

// Elementary symmetric values by incremental polynomial multiplication.
GammaNPoint symmetrize(std::span<const Complex> roots);

// Roots of z^n - c1 z^{n-1} + c2 z^{n-2} - ... + (-1)^n cn. n = 2 uses the
// stabilized quadratic formula; n >= 3 goes through companion-matrix
// eigenvalues with a short Newton polish. Throws SolverFailure when any
// root residual exceeds 1e-7.
std::vector<Complex> unsymmetrize(const GammaNPoint& c);

GammaClassification classify_gamma_n(const GammaNPoint& c, Tolerance tol = {});
GammaClassification classify_gamma2(const Gamma2Point& q, Tolerance tol = {});

// |s^2 - 4p| <= tol: the double-eigenvalue stratum.
bool royal_gamma2(const Gamma2Point& q, Tolerance tol = {});

// Defect of the algebraic boundary test |s| <= 2, s = conj(s) p, |p| = 1.
double b_gamma2_defect(const Gamma2Point& q);
bool on_b_gamma2_algebraic(const Gamma2Point& q, Tolerance tol = {});

TetraClassification classify_b_tetra(const TetraPoint& x, Tolerance tol = {});
PentaClassification classify_b_penta(const PentaPoint& q, Tolerance tol = {});

// ---------------------------------------------------------------------------
// Stratum samplers. Deterministic per seed; one Rng drives a whole batch.

enum class Stratum {
  BGamma2,        // distinct unimodular root pairs (non-royal, with margin)
  BGamma2Royal,   // (2z, z^2), z unimodular
  BGammaN,        // n independent unimodular roots
  BTetraNonTriangular,
  BTetraTriangular,
  BPentaNonRoyal,
  BPentaRoyal,
  Gamma2Interior,
  GammaNInterior,
  TetraInterior,
  PentaInterior,
};

std::string to_string(Stratum s);
Stratum stratum_from_string(const std::string& name);  // case-insensitive

using DomainPoint = std::variant<Gamma2Point, GammaNPoint, TetraPoint, PentaPoint>;

Gamma2Point sample_b_gamma2(Rng& rng, bool royal);
GammaNPoint sample_b_gamma_n(Rng& rng, int n);
TetraPoint sample_b_tetra(Rng& rng, bool triangular);
PentaPoint sample_b_penta(Rng& rng, bool royal);
Gamma2Point sample_gamma2_interior(Rng& rng);
GammaNPoint sample_gamma_n_interior(Rng& rng, int n);
TetraPoint sample_tetra_interior(Rng& rng);
PentaPoint sample_penta_interior(Rng& rng);

// Random 2x2 contraction with op_norm strictly below norm_cap.
Mat2 sample_contraction(Rng& rng, double norm_cap = 0.95);

DomainPoint sample_stratum(Stratum stratum, int n, std::uint64_t seed);
std::vector<DomainPoint> sample_stratum(Stratum stratum, int n, std::uint64_t seed, int count);

}  // namespace mudom
