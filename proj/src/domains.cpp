#include "mudom/domains.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cctype>
#include <cmath>

namespace mudom {

GammaNPoint symmetrize(std::span<const Complex> roots) {
  // Appending a root z updates each elementary value: e_k += z * e_{k-1}.
  std::vector<Complex> e(roots.size() + 1, Complex{0.0, 0.0});
  e[0] = 1.0;
  std::size_t used = 0;
  for (const Complex z : roots) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] += z * e[k - 1];
  }
  return GammaNPoint{std::vector<Complex>(e.begin() + 1, e.end())};
}

namespace {

// Monic coefficients of z^n - c1 z^{n-1} + ... + (-1)^n cn, high to low:
// {1, -c1, +c2, ...}.
std::vector<Complex> monic_coeffs(const GammaNPoint& c) {
  std::vector<Complex> b(c.coeffs.size() + 1);
  b[0] = 1.0;
  double sign = -1.0;
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    b[k + 1] = sign * c.coeffs[k];
    sign = -sign;
  }
  return b;
}

Complex horner(const std::vector<Complex>& b, Complex z) {
  Complex acc = b[0];
  for (std::size_t k = 1; k < b.size(); ++k) acc = acc * z + b[k];
  return acc;
}

Complex horner_deriv(const std::vector<Complex>& b, Complex z) {
  const int n = static_cast<int>(b.size()) - 1;
  Complex acc = static_cast<double>(n) * b[0];
  for (int k = 1; k < n; ++k) acc = acc * z + static_cast<double>(n - k) * b[k];
  return acc;
}

std::vector<Complex> quadratic_roots(Complex s, Complex p) {
  const Complex d = std::sqrt(s * s - 4.0 * p);
  const Complex q = (std::abs(s + d) >= std::abs(s - d)) ? (s + d) : (s - d);
  std::vector<Complex> r(2);
  r[0] = 0.5 * q;
  r[1] = (std::abs(r[0]) > 1e-300) ? p / r[0] : 0.5 * (s - d);
  return r;
}

}  // namespace

std::vector<Complex> unsymmetrize(const GammaNPoint& c) {
  const int n = c.n();
  if (n == 0) return {};
  std::vector<Complex> roots;
  if (n == 1) {
    roots = {c.coeffs[0]};
  } else if (n == 2) {
    roots = quadratic_roots(c.coeffs[0], c.coeffs[1]);
  } else {
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    const auto b = monic_coeffs(c);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -b[n - i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    if (es.info() != Eigen::Success)
      throw SolverFailure("unsymmetrize: eigenvalue iteration failed");
    roots.resize(n);
    const auto mono = monic_coeffs(c);
    for (int i = 0; i < n; ++i) {
      Complex r = es.eigenvalues()(i);
      for (int it = 0; it < 3; ++it) {  // Newton polish
        const Complex dp = horner_deriv(mono, r);
        if (std::abs(dp) < 1e-14) break;
        r -= horner(mono, r) / dp;
      }
      roots[i] = r;
    }
  }
  const auto mono = monic_coeffs(c);
  for (const Complex r : roots)
    if (std::abs(horner(mono, r)) > 1e-7)
      throw SolverFailure("unsymmetrize: root residual exceeds 1e-7");
  return roots;
}

GammaClassification classify_gamma_n(const GammaNPoint& c, Tolerance tol) {
  const auto roots = unsymmetrize(c);
  GammaClassification out;
  for (const Complex r : roots) {
    const double m = std::abs(r);
    out.max_modulus = std::max(out.max_modulus, m);
    out.defect = std::max(out.defect, std::abs(m - 1.0));
  }
  if (out.max_modulus < 1.0 - tol.eps) out.region = GammaRegion::Interior;
  else if (out.max_modulus <= 1.0 + tol.eps) out.region = GammaRegion::Closure;
  else out.region = GammaRegion::Outside;
  out.on_boundary = out.defect <= tol.eps;
  return out;
}

GammaClassification classify_gamma2(const Gamma2Point& q, Tolerance tol) {
  GammaClassification out = classify_gamma_n(GammaNPoint{{q.s, q.p}}, tol);
  // Double roots of s^2 = 4p cost the root route sqrt(eps) of accuracy; the
  // displayed algebraic boundary test |s| <= 2, s = conj(s) p, |p| = 1 has
  // no such loss, so it decides the boundary flag for n = 2.
  out.defect = b_gamma2_defect(q);
  out.on_boundary = out.defect <= tol.eps;
  if (out.on_boundary) out.region = GammaRegion::Closure;
  return out;
}

bool royal_gamma2(const Gamma2Point& q, Tolerance tol) {
  return std::abs(q.s * q.s - 4.0 * q.p) <= tol.eps;
}

double b_gamma2_defect(const Gamma2Point& q) {
  return std::max({std::abs(q.s - std::conj(q.s) * q.p),
                   std::abs(std::abs(q.p) - 1.0),
                   std::max(std::abs(q.s) - 2.0, 0.0)});
}

bool on_b_gamma2_algebraic(const Gamma2Point& q, Tolerance tol) {
  return b_gamma2_defect(q) <= tol.eps;
}

TetraClassification classify_b_tetra(const TetraPoint& x, Tolerance tol) {
  TetraClassification out;
  out.boundary_defect = std::max({std::abs(x.x1 - std::conj(x.x2) * x.x3),
                                  std::abs(std::abs(x.x3) - 1.0),
                                  std::max(std::abs(x.x1) - 1.0, 0.0)});
  out.triangular_defect = std::abs(x.x1 * x.x2 - x.x3);
  if (out.boundary_defect <= tol.eps)
    out.label = (out.triangular_defect <= tol.eps)
                    ? TetraBoundaryLabel::BoundaryTriangular
                    : TetraBoundaryLabel::BoundaryNonTriangular;
  return out;
}

PentaClassification classify_b_penta(const PentaPoint& q, Tolerance tol) {
  PentaClassification out;
  const double norm_defect =
      std::abs(std::norm(q.a) + 0.25 * std::norm(q.s) - 1.0);
  out.boundary_defect = std::max(norm_defect, b_gamma2_defect({q.s, q.p}));
  out.royal_defect = std::abs(q.s * q.s - 4.0 * q.p);
  if (out.boundary_defect <= tol.eps)
    out.label = (out.royal_defect <= tol.eps) ? PentaBoundaryLabel::BoundaryRoyal
                                              : PentaBoundaryLabel::BoundaryNonRoyal;
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::BGamma2: return "bGamma2";
    case Stratum::BGamma2Royal: return "bGamma2Royal";
    case Stratum::BGammaN: return "bGammaN";
    case Stratum::BTetraNonTriangular: return "bTetraNonTriangular";
    case Stratum::BTetraTriangular: return "bTetraTriangular";
    case Stratum::BPentaNonRoyal: return "bPentaNonRoyal";
    case Stratum::BPentaRoyal: return "bPentaRoyal";
    case Stratum::Gamma2Interior: return "gamma2Interior";
    case Stratum::GammaNInterior: return "gammaNInterior";
    case Stratum::TetraInterior: return "tetraInterior";
    case Stratum::PentaInterior: return "pentaInterior";
  }
  throw InvalidParameter("unreachable stratum value");
}

Stratum stratum_from_string(const std::string& name) {
  auto lower = [](std::string t) {
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return t;
  };
  const std::string key = lower(name);
  for (const Stratum s :
       {Stratum::BGamma2, Stratum::BGamma2Royal, Stratum::BGammaN,
        Stratum::BTetraNonTriangular, Stratum::BTetraTriangular,
        Stratum::BPentaNonRoyal, Stratum::BPentaRoyal, Stratum::Gamma2Interior,
        Stratum::GammaNInterior, Stratum::TetraInterior, Stratum::PentaInterior})
    if (key == lower(to_string(s))) return s;
  throw UnknownStratum("unknown stratum: " + name);
}

Gamma2Point sample_b_gamma2(Rng& rng, bool royal) {
  if (royal) {
    const Complex z = rng.unimodular();
    return {2.0 * z, z * z};
  }
  // Resample nearly coincident pairs so |s^2 - 4p| = |z1 - z2|^2 >= 1e-4,
  // a margin that survives the worst Moebius contraction of the
  // automorphism draws used in the invariance suites.
  for (;;) {
    const Complex z1 = rng.unimodular();
    const Complex z2 = rng.unimodular();
    if (std::abs(z1 - z2) < 1e-2) continue;
    return {z1 + z2, z1 * z2};
  }
}

GammaNPoint sample_b_gamma_n(Rng& rng, int n) {
  if (n < 1) throw InvalidParameter("sample_b_gamma_n: n must be >= 1");
  std::vector<Complex> roots(n);
  for (auto& r : roots) r = rng.unimodular();
  return symmetrize(roots);
}

TetraPoint sample_b_tetra(Rng& rng, bool triangular) {
  if (triangular) {
    const Complex x1 = rng.unimodular();
    const Complex x2 = rng.unimodular();
    return {x1, x2, x1 * x2};
  }
  // |x1| <= 0.999 keeps the triangular defect (1 - |x1|^2) clearly nonzero.
  const Complex x1 = rng.in_disc(0.999);
  const Complex x3 = rng.unimodular();
  return {x1, std::conj(x1) * x3, x3};
}

PentaPoint sample_b_penta(Rng& rng, bool royal) {
  if (royal) {
    const Complex z = rng.unimodular();
    return {Complex{0.0, 0.0}, 2.0 * z, z * z};
  }
  const Gamma2Point q = sample_b_gamma2(rng, false);
  const double mag = std::sqrt(std::max(1.0 - 0.25 * std::norm(q.s), 0.0));
  const Complex a = std::polar(mag, rng.angle());
  return {a, q.s, q.p};
}

Gamma2Point sample_gamma2_interior(Rng& rng) {
  const Complex z1 = rng.in_disc(0.97);
  const Complex z2 = rng.in_disc(0.97);
  return {z1 + z2, z1 * z2};
}

GammaNPoint sample_gamma_n_interior(Rng& rng, int n) {
  if (n < 1) throw InvalidParameter("sample_gamma_n_interior: n must be >= 1");
  std::vector<Complex> roots(n);
  for (auto& r : roots) r = rng.in_disc(0.97);
  return symmetrize(roots);
}

Mat2 sample_contraction(Rng& rng, double norm_cap) {
  Mat2 A{rng.in_disc(), rng.in_disc(), rng.in_disc(), rng.in_disc()};
  const double s = op_norm(A);
  const double target = norm_cap * (0.05 + 0.95 * rng.uniform());
  if (s > 1e-12) {
    const double f = target / s;
    A.a11 *= f; A.a12 *= f; A.a21 *= f; A.a22 *= f;
  }
  return A;
}

TetraPoint sample_tetra_interior(Rng& rng) {
  return project_tetra(sample_contraction(rng));
}

PentaPoint sample_penta_interior(Rng& rng) {
  return project_penta(sample_contraction(rng));
}

std::vector<DomainPoint> sample_stratum(Stratum stratum, int n, std::uint64_t seed,
                                        int count) {
  if (count < 1) throw InvalidParameter("sample count must be positive");
  if ((stratum == Stratum::BGammaN || stratum == Stratum::GammaNInterior) && n < 1)
    throw InvalidParameter("gammaN strata need n >= 1");
  Rng rng(seed);
  std::vector<DomainPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    switch (stratum) {
      case Stratum::BGamma2: out.emplace_back(sample_b_gamma2(rng, false)); break;
      case Stratum::BGamma2Royal: out.emplace_back(sample_b_gamma2(rng, true)); break;
      case Stratum::BGammaN: out.emplace_back(sample_b_gamma_n(rng, n)); break;
      case Stratum::BTetraNonTriangular: out.emplace_back(sample_b_tetra(rng, false)); break;
      case Stratum::BTetraTriangular: out.emplace_back(sample_b_tetra(rng, true)); break;
      case Stratum::BPentaNonRoyal: out.emplace_back(sample_b_penta(rng, false)); break;
      case Stratum::BPentaRoyal: out.emplace_back(sample_b_penta(rng, true)); break;
      case Stratum::Gamma2Interior: out.emplace_back(sample_gamma2_interior(rng)); break;
      case Stratum::GammaNInterior: out.emplace_back(sample_gamma_n_interior(rng, n)); break;
      case Stratum::TetraInterior: out.emplace_back(sample_tetra_interior(rng)); break;
      case Stratum::PentaInterior: out.emplace_back(sample_penta_interior(rng)); break;
    }
  }
  return out;
}

DomainPoint sample_stratum(Stratum stratum, int n, std::uint64_t seed) {
  return sample_stratum(stratum, n, seed, 1).front();
}

}  // namespace mudom
