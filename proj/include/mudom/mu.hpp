#pragma once

#include <string>

#include "mudom/mat2.hpp"
#include "mudom/points.hpp"

namespace mudom {

// Perturbation structures E for mu_E on 2x2 matrices: all of M_2, scalar
// multiples of I, diagonal matrices, and span{I, E_12}.
enum class MuStructure { Full, Scalar, Diag, PentaSpan };

std::string to_string(MuStructure s);
MuStructure mu_structure_from_string(const std::string& name);

// lower comes from the best singularizing certificate found (a genuine X
// with det(I - AX) = 0), upper from the grid coverage heuristic; the search
// is uncertified, which is exactly why in_tetra / in_penta keep a
// BoundaryBand verdict. lower == upper == 0 encodes "no perturbation in E
// makes I - AX singular" (the inf over the empty set), and exact closed-form
// structures give zero-width brackets.
struct MuBracket {
  double lower = 0.0;
  double upper = 0.0;
  MuStructure structure = MuStructure::Full;
};

struct MuOptions {
  double resolution = 1e-4;
  int angles = 64;  // polar grid size per refinement level
  int radii = 64;
  int levels = 5;
};

MuBracket mu(const Mat2& A, MuStructure structure, const MuOptions& opt = {});

enum class Membership { Inside, BoundaryBand, Outside };

std::string to_string(Membership m);

// Matrix with a11 = x1, a22 = x2, det = x3 and the off-diagonal defect
// split evenly: a12 = a21 = sqrt(x1 x2 - x3).
Mat2 realize_tetra(const TetraPoint& x);

// Matrix with a21 = a, tr = s, det = p; equal diagonal s/2 when |a| > 1e-9,
// otherwise the diagonal matrix of the roots of lambda^2 - s lambda + p.
Mat2 realize_penta(const PentaPoint& q);

Membership in_tetra(const TetraPoint& x, double tol = 1e-3, const MuOptions& opt = {});
Membership in_penta(const PentaPoint& q, double tol = 1e-3, const MuOptions& opt = {});

}  // namespace mudom
